#include "logcurves/logspace.hpp"

#include <algorithm>
#include <set>

namespace logcurves {

const Stratum& NCLogDescriptor::stratum(const std::string& tag) const {
    for (const auto& s : strata)
        if (s.tag == tag) return s;
    throw std::invalid_argument("unknown stratum tag: " + tag);
}

bool NCLogDescriptor::has_stratum(const std::string& tag) const {
    for (const auto& s : strata)
        if (s.tag == tag) return true;
    return false;
}

std::vector<std::string> NCLogDescriptor::divisor_tags() const {
    std::set<std::string> tags;
    for (const auto& s : strata)
        for (const auto& d : s.divisors) tags.insert(d);
    return {tags.begin(), tags.end()};
}

NCLogDescriptor pt_log() {
    NCLogDescriptor d;
    d.base = "pt";
    d.base_dim = 0;
    d.strata.push_back({"pt", 0, {}});
    d.bundles = {"L"};
    return d;
}

NCLogDescriptor pt_log_power(int k) {
    if (k < 0) throw std::invalid_argument("negative power of the log point");
    NCLogDescriptor d;
    d.base = "pt";
    d.base_dim = 0;
    d.strata.push_back({"pt", 0, {}});
    for (int j = 1; j <= k; ++j) d.bundles.push_back("L" + std::to_string(j));
    return d;
}

NCLogDescriptor p1_with_points(int n) {
    if (n < 0) throw std::invalid_argument("negative number of marked points");
    NCLogDescriptor d;
    d.base = "P1";
    d.base_dim = 1;
    d.strata.push_back({"U", 0, {}});
    for (int j = 1; j <= n; ++j) {
        std::string tag = "p" + std::to_string(j);
        d.strata.push_back({tag, 1, {tag}});
    }
    return d;
}

NCLogDescriptor moduli_descriptor(int n) {
    if (n == 1) return pt_log();
    if (n < 1) throw std::invalid_argument("moduli descriptor requires arity >= 1");
    NCLogDescriptor d;
    d.base = "Mbar(0," + std::to_string(n + 1) + ")";
    d.base_dim = n - 2;
    for (const auto& t : all_trees(n)) {
        Stratum s;
        s.tag = t.key();
        s.codim = t.codim();
        for (const auto& block : t.edge_leafsets()) s.divisors.push_back(StableTree::divisor(n, block).key());
        std::sort(s.divisors.begin(), s.divisors.end());
        d.strata.push_back(std::move(s));
    }
    for (int j = 0; j <= n; ++j) d.bundles.push_back("L" + std::to_string(j));
    return d;
}

ClassifyResult classify_maps(const NCLogDescriptor& src, const NCLogDescriptor& dst) {
    if (src.base != dst.base) throw std::invalid_argument("classify_maps requires a common base tag");
    auto sd = src.divisor_tags();
    auto dd = dst.divisor_tags();
    for (const auto& tag : dd) {
        if (!std::binary_search(sd.begin(), sd.end(), tag))
            return EmptyFamily{"target divisor component " + tag + " is not contained in the source divisor"};
    }
    MapFamily fam;
    fam.source_bundles = src.fiber_dim();
    fam.target_bundles = dst.fiber_dim();
    fam.positivity_required = src.base_dim == 0 && dst.base_dim == 0 && sd.empty() && dd.empty();
    return fam;
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int k = 0; k < n; ++k) m.at(k, k) = 1;
    return m;
}

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("matrix shape mismatch in composition");
    IntMatrix r(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            i64 v = a.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < b.cols; ++j)
                r.at(i, j) = checked_add(r.at(i, j), checked_mul(v, b.at(k, j)));
        }
    return r;
}

bool matrix_in_family(const MapFamily& fam, const IntMatrix& m) {
    if (m.rows != fam.source_bundles || m.cols != fam.target_bundles) return false;
    for (i64 v : m.data)
        if (v < 0 || (fam.positivity_required && v < 1)) return false;
    return true;
}

std::string normal_label(const std::string& divisor_tag) { return "N(" + divisor_tag + ")"; }

NCLogDescriptor pullback_along_stratum(const NCLogDescriptor& desc, const std::string& stratum_tag) {
    const Stratum& y = desc.stratum(stratum_tag);
    if (y.codim == 0) return desc;
    std::vector<std::string> branches = y.divisors;
    std::sort(branches.begin(), branches.end());
    if (static_cast<int>(branches.size()) != y.codim)
        throw consistency_error("stratum codimension disagrees with its branch count");

    NCLogDescriptor out;
    out.base = desc.base + "|" + y.tag;
    out.base_dim = desc.base_dim - y.codim;
    out.bundles = desc.bundles;
    for (const auto& b : branches) out.bundles.push_back(normal_label(b));

    // strata inside the closure of Y: branch sets contain Y's; codimensions
    // and branch lists are measured relative to Y afterwards
    for (const auto& z : desc.strata) {
        std::vector<std::string> zs = z.divisors;
        std::sort(zs.begin(), zs.end());
        if (!std::includes(zs.begin(), zs.end(), branches.begin(), branches.end())) continue;
        Stratum r;
        r.tag = z.tag;
        r.codim = z.codim - y.codim;
        std::set_difference(zs.begin(), zs.end(), branches.begin(), branches.end(), std::back_inserter(r.divisors));
        out.strata.push_back(std::move(r));
    }
    return out;
}

} // namespace logcurves
