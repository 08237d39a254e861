#include "logcurves/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <sstream>

#include "logcurves/betti.hpp"
#include "logcurves/bv.hpp"
#include "logcurves/flc.hpp"
#include "logcurves/logspace.hpp"
#include "logcurves/trees.hpp"
#include "logcurves/weights.hpp"

namespace logcurves {

namespace {

i64 factorial(int n) {
    i64 f = 1;
    for (int k = 2; k <= n; ++k) f = checked_mul(f, k);
    return f;
}

// f[v] = number of stable rooted trees with marks 1..n and v internal
// vertices. The root vertex induces a set partition of the marks; blocks of
// size one are leaf children, larger blocks head their own subtree. Set
// partitions are counted by block-size type, subtree structures convolve.
const std::vector<i64>& census_vector(int n) {
    static std::map<int, std::vector<i64>> memo;
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;

    std::vector<i64> f(static_cast<size_t>(std::max(n, 2)), 0);

    std::vector<int> parts;
    auto sweep = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            if (parts.size() < 2) return;
            i64 ways = factorial(n);
            for (int p : parts) ways /= factorial(p);
            int run = 1;
            for (size_t k = 1; k <= parts.size(); ++k) {
                if (k < parts.size() && parts[k] == parts[k - 1]) { ++run; continue; }
                ways /= factorial(run);
                run = 1;
            }
            // convolution over the non-singleton blocks, each needing >= 1
            // internal vertex of its own
            std::vector<i64> g{1};
            for (int p : parts) {
                if (p < 2) continue;
                const auto& sub = census_vector(p);
                std::vector<i64> next(g.size() + sub.size(), 0);
                for (size_t a = 0; a < g.size(); ++a) {
                    if (g[a] == 0) continue;
                    for (size_t b = 1; b < sub.size(); ++b)
                        next[a + b] = checked_add(next[a + b], checked_mul(g[a], sub[b]));
                }
                g = std::move(next);
            }
            for (size_t used = 0; used < g.size(); ++used) {
                if (g[used] == 0) continue;
                size_t v = used + 1;
                if (v >= f.size()) f.resize(v + 1, 0);
                f[v] = checked_add(f[v], checked_mul(ways, g[used]));
            }
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            parts.push_back(p);
            self(self, remaining - p, p);
            parts.pop_back();
        }
    };
    if (n >= 2) sweep(sweep, n, n - 1); // the one-block partition is unstable
    return memo.emplace(n, std::move(f)).first->second;
}

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (cond) return;
        ok = false;
        if (detail.tellp() > 0) detail << "; ";
        detail << what;
    }
    void note(const std::string& what) {
        if (detail.tellp() > 0) detail << "; ";
        detail << what;
    }
};

std::string join_counts(const std::vector<i64>& v) {
    std::ostringstream os;
    for (size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
    return os.str();
}

int cap(int full, int depth) { return depth > 0 ? std::min(full, depth) : full; }

void criterion_operad_axioms(Check& c, int depth) {
    AxiomReport trees = check_graft_axioms(std::max(2, cap(5, depth)));
    c.require(trees.ok(), "tree grafting axioms: " + (trees.failures.empty() ? "?" : trees.failures.front()));
    AxiomReport flc = check_flc_axioms(cap(4, depth));
    c.require(flc.ok(), "log family axioms: " + (flc.failures.empty() ? "?" : flc.failures.front()));
    if (c.ok)
        c.note("tree grafting: " + std::to_string(trees.cases) + " cases, log families: " +
               std::to_string(flc.cases) + " cases");
}

void criterion_stratum_census(Check& c, int depth) {
    const int nmax = cap(7, depth);
    i64 total_cases = 0;
    for (int n = 2; n <= nmax; ++n) {
        for (int codim = 0; codim <= n - 2; ++codim) {
            const auto& fast = enumerate_trees(n, codim);
            auto slow = enumerate_trees_serial(n, codim);
            c.require(fast.size() == slow.size() && std::equal(fast.begin(), fast.end(), slow.begin()),
                      "parallel and serial enumerations disagree at n=" + std::to_string(n) +
                          " codim=" + std::to_string(codim));
            i64 indep = census_independent(n, codim);
            c.require(static_cast<i64>(fast.size()) == indep,
                      "partition census disagrees at n=" + std::to_string(n) + " codim=" + std::to_string(codim) +
                          ": " + std::to_string(fast.size()) + " vs " + std::to_string(indep));
            total_cases += static_cast<i64>(fast.size());
        }
        if (n >= 3)
            c.require(static_cast<i64>(enumerate_trees(n, 1).size()) == codim_one_census(n),
                      "enumeration disagrees with the bipartition formula at n=" + std::to_string(n));
    }
    auto frozen = [&](int n, int codim, i64 expect) {
        if (n > nmax) return;
        c.require(static_cast<i64>(enumerate_trees(n, codim).size()) == expect,
                  "census (" + std::to_string(n) + "," + std::to_string(codim) + ") != " + std::to_string(expect));
    };
    frozen(3, 1, 3);
    frozen(4, 1, 10);
    frozen(4, 2, 15);
    frozen(5, 1, 25);
    frozen(5, 2, 105);
    frozen(5, 3, 105);
    if (c.ok) c.note(std::to_string(total_cases) + " strata matched across three enumeration routes, n <= " + std::to_string(nmax));
}

void criterion_purity(Check& c, int depth) {
    const int nmax = cap(7, depth);
    for (int n = 4; n <= nmax; ++n) {
        PurityReport r = purity_check(n);
        c.require(r.primes.size() >= 3, "fewer than three primes sampled at n=" + std::to_string(n));
        c.require(r.counts_match, "point counts stray from the Betti prediction at n=" + std::to_string(n));
        c.require(r.rows_match, "alternating row sums disagree at n=" + std::to_string(n));
        c.require(r.stable_column_match, "stable column disagrees at n=" + std::to_string(n));
        c.require(r.euler_match, "Euler characteristics disagree at n=" + std::to_string(n));
    }
    if (c.ok) c.note("exact at every sampled prime for n = 4.." + std::to_string(nmax));
}

void criterion_weight_rows(Check& c, int depth) {
    const int nmax = cap(7, depth);
    for (int n = 4; n <= nmax; ++n) {
        E1Page page = build_e1(n);
        Poly open = betti_open(n);
        c.require(static_cast<int>(page.alternating.size()) == open.degree() + 1,
                  "row count mismatch at n=" + std::to_string(n));
        for (size_t q = 0; q < page.alternating.size(); ++q)
            c.require(page.alternating[q] == open.coeff(static_cast<int>(q)),
                      "alternating sum of row " + std::to_string(q) + " misses the open Betti number at n=" +
                          std::to_string(n));
    }
    if (c.ok) c.note("alternating row sums recover the open Betti numbers for n = 4.." + std::to_string(nmax));
}

void criterion_acyclicity(Check& c, int depth) {
    for (int d = 1; d <= 10; ++d) {
        AcyclicityCertificate cert = acyclicity_p1(d);
        c.require(cert.pass, "marked line certificate fails at d=" + std::to_string(d));
    }
    const int nmax = cap(5, depth);
    for (int n = 1; n <= nmax; ++n) {
        AcyclicityCertificate cert = acyclicity_flc(n);
        c.require(cert.pass, "framed-curve certificate fails at n=" + std::to_string(n));
    }
    if (c.ok) c.note("marked line d = 1..10 and framed-curve spaces n = 1.." + std::to_string(nmax));
}

void criterion_bv_structure(Check& c, int depth) {
    const int nmax = cap(5, depth);
    for (int n = 1; n <= nmax; ++n) {
        FormalModel m = assemble_formal_model(n);
        c.require(m.matches, "graded dimensions stray from the framed row at arity " + std::to_string(n) +
                                 ": got [" + join_counts(m.dims) + "], expected [" + join_counts(m.expected) + "]");
        c.require(m.zero_differential, "differential does not vanish at arity " + std::to_string(n));
    }
    AxiomReport rel = check_bv_relations(std::max(2, cap(3, depth)));
    c.require(rel.ok(), "relation suite: " + (rel.failures.empty() ? "?" : rel.failures.front()));
    if (c.ok)
        c.note("graded dimensions match for arity 1.." + std::to_string(nmax) + "; " +
               std::to_string(rel.cases) + " relation instances hold");
}

void criterion_decorated_pushout(Check& c, int depth) {
    const int nmax = std::max(2, cap(7, depth));
    for (int n = 2; n <= nmax; ++n) {
        PushoutReport r = ld_pushout(n);
        c.require(r.exact, "pushout rows disagree at n=" + std::to_string(n) + ": " + r.from_framed.str() +
                               " vs " + r.from_open.str());
    }
    if (c.ok) c.note("both routes give the decorated row exactly for n = 2.." + std::to_string(nmax));
}

void criterion_ptlog_composition(Check& c, int depth) {
    (void)depth;
    std::mt19937 rng(12345);
    auto draw = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1)); };

    int checked = 0;
    for (int rep = 0; rep < 100; ++rep) {
        int d1 = draw(1, 4), d2 = draw(1, 4), d3 = draw(1, 4);
        IntMatrix a(d1, d2), b(d2, d3);
        for (auto& v : a.data) v = draw(1, 3);
        for (auto& v : b.data) v = draw(1, 3);
        IntMatrix prod = matmul(a, b);

        // substitution oracle: expand the pullback of each target generator
        // into an explicit multiset of source generators and count
        bool agree = true;
        for (int j = 0; j < d3 && agree; ++j) {
            std::vector<int> multiset;
            for (int k = 0; k < d2; ++k)
                for (i64 rep_b = 0; rep_b < b.at(k, j); ++rep_b)
                    for (int r = 0; r < d1; ++r)
                        for (i64 rep_a = 0; rep_a < a.at(r, k); ++rep_a) multiset.push_back(r);
            for (int r = 0; r < d1; ++r) {
                i64 count = static_cast<i64>(std::count(multiset.begin(), multiset.end(), r));
                if (count != prod.at(r, j)) agree = false;
            }
        }
        c.require(agree, "substitution oracle disagrees with the exponent product at rep " + std::to_string(rep));

        auto fam = classify_maps(pt_log_power(d1), pt_log_power(d3));
        c.require(std::holds_alternative<MapFamily>(fam), "log point family unexpectedly empty");
        if (std::holds_alternative<MapFamily>(fam)) {
            const auto& mf = std::get<MapFamily>(fam);
            c.require(mf.positivity_required, "log point maps must require positive exponents");
            c.require(matrix_in_family(mf, prod), "composite exponents left the family at rep " + std::to_string(rep));
            IntMatrix zero(d1, d3);
            c.require(!matrix_in_family(mf, zero), "degenerate exponents admitted at rep " + std::to_string(rep));
        }
        ++checked;
    }

    {
        IntMatrix two(1, 1), three(1, 1);
        two.at(0, 0) = 2;
        three.at(0, 0) = 3;
        c.require(matmul(two, three).at(0, 0) == 6, "1x1 composite is not the exponent product");
    }

    // containment: a map may forget divisor components but never acquire them
    auto empty_case = classify_maps(p1_with_points(1), p1_with_points(2));
    c.require(std::holds_alternative<EmptyFamily>(empty_case),
              "family into a larger divisor should be empty");
    auto forget_case = classify_maps(p1_with_points(2), p1_with_points(1));
    c.require(std::holds_alternative<MapFamily>(forget_case),
              "family forgetting a divisor component should be nonempty");
    if (c.ok) c.note(std::to_string(checked) + " random composites match the substitution oracle; containment tests pass");
}

} // namespace

i64 census_independent(int n, int codim) {
    if (n < 2 || codim < 0) throw std::invalid_argument("census_independent requires n >= 2, codim >= 0");
    const auto& f = census_vector(n);
    size_t v = static_cast<size_t>(codim) + 1;
    return v < f.size() ? f[v] : 0;
}

VerifySummary run_verification(int depth, const std::function<void(const CriterionResult&)>& on_result) {
    struct Entry {
        const char* name;
        void (*body)(Check&, int);
    };
    const Entry entries[] = {
        {"operad-axioms", criterion_operad_axioms},
        {"stratum-census", criterion_stratum_census},
        {"purity", criterion_purity},
        {"weight-rows", criterion_weight_rows},
        {"acyclicity", criterion_acyclicity},
        {"bv-structure", criterion_bv_structure},
        {"decorated-pushout", criterion_decorated_pushout},
        {"ptlog-composition", criterion_ptlog_composition},
    };

    VerifySummary summary;
    int index = 0;
    for (const auto& entry : entries) {
        CriterionResult result;
        result.index = ++index;
        result.name = entry.name;
        auto t0 = std::chrono::steady_clock::now();
        Check check;
        try {
            entry.body(check, depth);
        } catch (const std::exception& e) {
            check.require(false, std::string("exception: ") + e.what());
        }
        auto t1 = std::chrono::steady_clock::now();
        result.pass = check.ok;
        result.detail = check.detail.str();
        result.seconds = std::chrono::duration<double>(t1 - t0).count();
        if (on_result) on_result(result);
        summary.results.push_back(std::move(result));
    }
    return summary;
}

} // namespace logcurves
