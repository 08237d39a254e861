// Benchmark of the parallel kernels against their serial reference
// implementations. The two routes must agree exactly; the table reports
// wall times and speedup.

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "logcurves/betti.hpp"
#include "logcurves/trees.hpp"

namespace lc = logcurves;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Row {
    std::string kernel;
    double serial = 0;
    double parallel = 0;
    bool agree = false;
};

void print_row(const Row& r) {
    std::cout << std::left << std::setw(34) << r.kernel << std::right << std::fixed << std::setprecision(3)
              << std::setw(10) << r.serial << "s" << std::setw(10) << r.parallel << "s" << std::setw(9)
              << std::setprecision(2) << (r.parallel > 0 ? r.serial / r.parallel : 0.0) << "x   "
              << (r.agree ? "agree" : "DISAGREE") << "\n";
}

} // namespace

int main(int argc, char** argv) {
    int n = 8;
    lc::i64 q = 29;
    int tree_arity = 7;
    for (int k = 1; k < argc; k += 2) {
        std::string flag = argv[k];
        const bool has_value = k + 1 < argc;
        if (flag == "--n" && has_value) n = std::atoi(argv[k + 1]);
        else if (flag == "--q" && has_value) q = std::atoll(argv[k + 1]);
        else if (flag == "--tree-arity" && has_value) tree_arity = std::atoi(argv[k + 1]);
        else {
            std::cerr << "usage: bench [--n N] [--q Q] [--tree-arity A]\n";
            return 2;
        }
    }

#ifdef _OPENMP
    std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "OpenMP disabled in this build\n";
#endif
    std::cout << std::left << std::setw(34) << "kernel" << std::right << std::setw(11) << "serial"
              << std::setw(11) << "parallel" << std::setw(10) << "speedup" << "\n";

    bool all_agree = true;

    {
        Row r;
        r.kernel = "count_open(n=" + std::to_string(n) + ", q=" + std::to_string(q) + ")";
        auto t0 = std::chrono::steady_clock::now();
        lc::i64 serial = lc::count_open_serial(n, q);
        r.serial = seconds_since(t0);
        t0 = std::chrono::steady_clock::now();
        lc::i64 parallel = lc::count_open(n, q);
        r.parallel = seconds_since(t0);
        r.agree = serial == parallel;
        all_agree = all_agree && r.agree;
        print_row(r);
    }

    for (int c = 1; c <= tree_arity - 2; ++c) {
        Row r;
        r.kernel = "enumerate_trees(" + std::to_string(tree_arity) + ", " + std::to_string(c) + ")";
        auto t0 = std::chrono::steady_clock::now();
        auto serial = lc::enumerate_trees_serial(tree_arity, c);
        r.serial = seconds_since(t0);
        t0 = std::chrono::steady_clock::now();
        const auto& parallel = lc::enumerate_trees(tree_arity, c);
        r.parallel = seconds_since(t0);
        r.agree = serial.size() == parallel.size() && std::equal(serial.begin(), serial.end(), parallel.begin());
        all_agree = all_agree && r.agree;
        print_row(r);
    }

    if (!all_agree) {
        std::cerr << "serial and parallel kernels disagree\n";
        return 1;
    }
    std::cout << "all kernels agree\n";
    return 0;
}
