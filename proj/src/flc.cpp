#include "logcurves/flc.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>

namespace logcurves {

namespace {

void validate_factor(const FlcFactor& f) {
    if (f.arity < 1) throw std::invalid_argument("factor arity must be >= 1");
    if ((f.arity == 1) == f.stratum.has_value())
        throw std::invalid_argument("arity-1 factors carry no stratum tree; higher arities require one");
    if (f.stratum && f.stratum->arity() != f.arity)
        throw std::invalid_argument("stratum tree arity disagrees with factor arity");
}

std::vector<int> coord_offsets(const std::vector<FlcFactor>& factors) {
    std::vector<int> off(factors.size() + 1, 0);
    for (size_t f = 0; f < factors.size(); ++f) off[f + 1] = off[f] + factors[f].coord_count();
    return off;
}

int label_index(const std::vector<int>& off, const std::vector<FlcFactor>&, int f, int k) {
    return off[f] + k;
}

int normal_index(const std::vector<int>& off, const std::vector<FlcFactor>& factors, int f,
                 const std::vector<int>& leafset) {
    auto edges = factors[f].edges();
    for (size_t e = 0; e < edges.size(); ++e)
        if (edges[e] == leafset) return off[f] + factors[f].label_count() + static_cast<int>(e);
    throw consistency_error("edge is not part of the stratum tree of factor " + std::to_string(f));
}

std::string set_name(const std::vector<int>& leafset) {
    std::string s = "N{";
    for (size_t k = 0; k < leafset.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(leafset[k]);
    }
    return s + "}";
}

std::string factor_coord_name(const FlcFactor& f, int coord) {
    if (f.arity == 1) return "L";
    if (coord <= f.arity) return "L" + std::to_string(coord);
    return set_name(f.edges()[coord - f.arity - 1]);
}

} // namespace

std::string FlcFactor::key() const { return stratum ? stratum->key() : "pt"; }

std::vector<std::vector<int>> FlcFactor::edges() const {
    return stratum ? stratum->edge_leafsets() : std::vector<std::vector<int>>{};
}

FlcFactor open_factor(int arity) {
    FlcFactor f;
    f.arity = arity;
    if (arity >= 2) f.stratum = StableTree::corolla(arity);
    validate_factor(f);
    return f;
}

FlcFactor factor_at(const StableTree& t) {
    FlcFactor f;
    f.arity = t.arity();
    f.stratum = t;
    validate_factor(f);
    return f;
}

std::string coord_name(const std::vector<FlcFactor>& factors, int factor, int coord) {
    std::string inner = factor_coord_name(factors[factor], coord);
    if (factors.size() == 1) return inner;
    std::string s;
    for (size_t f = 0; f < factors.size(); ++f) {
        if (f) s += "&";
        s += (static_cast<int>(f) == factor) ? inner : "O";
    }
    return s;
}

std::vector<std::string> coord_names(const std::vector<FlcFactor>& factors) {
    std::vector<std::string> names;
    for (size_t f = 0; f < factors.size(); ++f)
        for (int c = 0; c < factors[f].coord_count(); ++c)
            names.push_back(coord_name(factors, static_cast<int>(f), c));
    return names;
}

int total_coords(const std::vector<FlcFactor>& factors) {
    int n = 0;
    for (const auto& f : factors) n += f.coord_count();
    return n;
}

std::string tuple_key(const std::vector<FlcFactor>& factors) {
    std::string s;
    for (size_t f = 0; f < factors.size(); ++f) {
        if (f) s += " x ";
        s += factors[f].key();
    }
    return s;
}

FlcMap identity_map(const std::vector<FlcFactor>& factors) {
    for (const auto& f : factors) validate_factor(f);
    FlcMap m;
    m.source = factors;
    m.target = factors;
    m.exponents = IntMatrix::identity(total_coords(factors));
    return m;
}

FlcMap comp_map(int n, int m, int i, const FlcFactor& outer, const FlcFactor& inner) {
    validate_factor(outer);
    validate_factor(inner);
    if (outer.arity != n || inner.arity != m) throw std::invalid_argument("factor arity mismatch in comp_map");
    if (i < 1 || i > n) throw std::invalid_argument("composition slot out of range");
    const int N = n + m - 1;

    FlcMap r;
    r.source = {outer, inner};
    FlcFactor img;
    img.arity = N;
    if (n >= 2 && m >= 2) img.stratum = StableTree::graft(*outer.stratum, *inner.stratum, i);
    else if (n >= 2) img.stratum = outer.stratum;
    else if (m >= 2) img.stratum = inner.stratum;
    r.target = {img};

    auto soff = coord_offsets(r.source);
    auto toff = coord_offsets(r.target);
    IntMatrix E(total_coords(r.source), total_coords(r.target));
    auto slbl = [&](int f, int k) { return label_index(soff, r.source, f, k); };
    auto tlbl = [&](int k) { return label_index(toff, r.target, 0, k); };
    auto snrm = [&](int f, const std::vector<int>& b) { return normal_index(soff, r.source, f, b); };
    auto tnrm = [&](const std::vector<int>& b) { return normal_index(toff, r.target, 0, b); };

    if (n == 1 && m == 1) {
        E.at(slbl(0, 0), tlbl(0)) = 1;
        E.at(slbl(1, 0), tlbl(0)) = 1;
    } else if (m == 1) {
        // right action: the generator multiplies into label i, everything
        // else is carried across unchanged
        for (int k = 0; k <= n; ++k) E.at(slbl(0, k), tlbl(k)) = 1;
        E.at(slbl(1, 0), tlbl(i)) = 1;
        for (const auto& b : outer.edges()) E.at(snrm(0, b), tnrm(b)) = 1;
    } else if (n == 1) {
        // left action: the generator multiplies into the output label
        E.at(slbl(0, 0), tlbl(0)) = 1;
        for (int k = 0; k <= m; ++k) E.at(slbl(1, k), tlbl(k)) = 1;
        for (const auto& b : inner.edges()) E.at(snrm(1, b), tnrm(b)) = 1;
    } else {
        auto shift = [&](int j) { return j < i ? j : j + m - 1; };
        E.at(slbl(0, 0), tlbl(0)) = 1;
        for (int k = 1; k <= N; ++k) {
            if (k < i) E.at(slbl(0, k), tlbl(k)) = 1;
            else if (k <= i + m - 1) E.at(slbl(1, k - i + 1), tlbl(k)) = 1;
            else E.at(slbl(0, k - m + 1), tlbl(k)) = 1;
        }
        size_t mapped = 0;
        for (const auto& b : outer.edges()) {
            std::vector<int> img_set;
            if (std::binary_search(b.begin(), b.end(), i)) {
                for (int j : b)
                    if (j != i) img_set.push_back(shift(j));
                for (int k = i; k <= i + m - 1; ++k) img_set.push_back(k);
            } else {
                for (int j : b) img_set.push_back(shift(j));
            }
            std::sort(img_set.begin(), img_set.end());
            E.at(snrm(0, b), tnrm(img_set)) = 1;
            ++mapped;
        }
        for (const auto& b : inner.edges()) {
            std::vector<int> img_set;
            for (int k : b) img_set.push_back(i + k - 1);
            E.at(snrm(1, b), tnrm(img_set)) = 1;
            ++mapped;
        }
        std::vector<int> fresh;
        for (int k = i; k <= i + m - 1; ++k) fresh.push_back(k);
        E.at(slbl(0, i), tnrm(fresh)) = 1;
        E.at(slbl(1, 0), tnrm(fresh)) = 1;
        if (mapped + 1 != img.edges().size())
            throw consistency_error("grafted stratum tree has an unexpected edge count");
    }
    r.exponents = std::move(E);
    return r;
}

FlcMap sigma_map(const std::vector<int>& sigma, const FlcFactor& f) {
    validate_factor(f);
    const int n = f.arity;
    if (static_cast<int>(sigma.size()) != n) throw std::invalid_argument("permutation size mismatch");
    std::vector<int> inv(n + 1, 0);
    for (int k = 1; k <= n; ++k) {
        int v = sigma[k - 1];
        if (v < 1 || v > n || inv[v]) throw std::invalid_argument("not a permutation");
        inv[v] = k;
    }
    if (n == 1) return identity_map({f});

    FlcMap r;
    r.source = {f};
    r.target = {factor_at(StableTree::sigma_act(sigma, *f.stratum))};
    auto soff = coord_offsets(r.source);
    auto toff = coord_offsets(r.target);
    IntMatrix E(total_coords(r.source), total_coords(r.target));
    E.at(label_index(soff, r.source, 0, 0), label_index(toff, r.target, 0, 0)) = 1;
    for (int j = 1; j <= n; ++j)
        E.at(label_index(soff, r.source, 0, inv[j]), label_index(toff, r.target, 0, j)) = 1;
    for (const auto& b : f.edges()) {
        std::vector<int> img;
        for (int x : b) img.push_back(sigma[x - 1]);
        std::sort(img.begin(), img.end());
        E.at(normal_index(soff, r.source, 0, b), normal_index(toff, r.target, 0, img)) = 1;
    }
    r.exponents = std::move(E);
    return r;
}

FlcMap theta_map(int i, const FlcFactor& f) {
    validate_factor(f);
    const int n = f.arity;
    if (i < 1 || i > n) throw std::invalid_argument("residue index out of range");
    FlcMap r;
    r.source = {f};
    r.target = {open_factor(1)};
    auto soff = coord_offsets(r.source);
    IntMatrix E(total_coords(r.source), 1);
    if (n == 1) {
        E.at(0, 0) = 1;
    } else {
        E.at(label_index(soff, r.source, 0, 0), 0) = 1;
        E.at(label_index(soff, r.source, 0, i), 0) = 1;
        for (const auto& b : f.edges())
            if (std::binary_search(b.begin(), b.end(), i)) E.at(normal_index(soff, r.source, 0, b), 0) = 1;
    }
    r.exponents = std::move(E);
    return r;
}

FlcMap theta_all(const FlcFactor& f) {
    validate_factor(f);
    const int n = f.arity;
    FlcMap r;
    r.source = {f};
    r.target = std::vector<FlcFactor>(n, open_factor(1));
    IntMatrix E(total_coords(r.source), n);
    for (int i = 1; i <= n; ++i) {
        FlcMap one = theta_map(i, f);
        for (int row = 0; row < E.rows; ++row) E.at(row, i - 1) = one.exponents.at(row, 0);
    }
    r.exponents = std::move(E);
    return r;
}

FlcMap comm_insert(int n, int m, int i) {
    if (n < 1 || m < 1 || i < 1 || i > n) throw std::invalid_argument("bad insertion data");
    const int N = n + m - 1;
    FlcMap r;
    r.source = std::vector<FlcFactor>(n + m, open_factor(1));
    r.target = std::vector<FlcFactor>(N, open_factor(1));
    IntMatrix E(n + m, N);
    for (int j = 1; j <= N; ++j) {
        if (j < i) E.at(j - 1, j - 1) = 1;
        else if (j <= i + m - 1) {
            E.at(i - 1, j - 1) = 1;
            E.at(n + (j - i), j - 1) = 1;
        } else E.at(j - m, j - 1) = 1;
    }
    r.exponents = std::move(E);
    return r;
}

FlcMap product_map(const FlcMap& a, const FlcMap& b) {
    FlcMap r;
    r.source = a.source;
    r.source.insert(r.source.end(), b.source.begin(), b.source.end());
    r.target = a.target;
    r.target.insert(r.target.end(), b.target.begin(), b.target.end());
    IntMatrix E(total_coords(r.source), total_coords(r.target));
    for (int i = 0; i < a.exponents.rows; ++i)
        for (int j = 0; j < a.exponents.cols; ++j) E.at(i, j) = a.exponents.at(i, j);
    for (int i = 0; i < b.exponents.rows; ++i)
        for (int j = 0; j < b.exponents.cols; ++j)
            E.at(a.exponents.rows + i, a.exponents.cols + j) = b.exponents.at(i, j);
    r.exponents = std::move(E);
    return r;
}

FlcMap compose_maps(const FlcMap& f, const FlcMap& g) {
    if (!(f.target == g.source))
        throw std::invalid_argument("compose_maps requires the second source to match the first target");
    FlcMap r;
    r.source = f.source;
    r.target = g.target;
    r.exponents = matmul(f.exponents, g.exponents);
    return r;
}

FlcMap factor_permute_map(const std::vector<FlcFactor>& source, const std::vector<int>& perm) {
    const int k = static_cast<int>(source.size());
    if (static_cast<int>(perm.size()) != k) throw std::invalid_argument("factor permutation size mismatch");
    std::vector<int> seen(k, 0);
    FlcMap r;
    r.source = source;
    for (int j = 0; j < k; ++j) {
        if (perm[j] < 0 || perm[j] >= k || seen[perm[j]]++) throw std::invalid_argument("not a factor permutation");
        r.target.push_back(source[perm[j]]);
    }
    auto soff = coord_offsets(r.source);
    auto toff = coord_offsets(r.target);
    IntMatrix E(total_coords(r.source), total_coords(r.target));
    for (int j = 0; j < k; ++j)
        for (int c = 0; c < source[perm[j]].coord_count(); ++c) E.at(soff[perm[j]] + c, toff[j] + c) = 1;
    r.exponents = std::move(E);
    return r;
}

// ---------------------------------------------------------------------------

FLCSpace flc_space(int n) {
    if (n < 1) throw std::invalid_argument("flc_space requires arity >= 1");
    return {n, moduli_descriptor(n)};
}

namespace {

NCLogDescriptor presentation_descriptor(const std::vector<FlcFactor>& factors) {
    NCLogDescriptor d;
    for (size_t f = 0; f < factors.size(); ++f) {
        if (f) d.base += " x ";
        d.base += factors[f].arity == 1 ? "pt" : "Mbar(0," + std::to_string(factors[f].arity + 1) + ")";
        if (factors[f].stratum) d.base_dim += factors[f].arity - 2 - factors[f].stratum->codim();
    }
    bool deep = false;
    for (const auto& f : factors)
        if (f.stratum && f.stratum->codim() > 0) deep = true;
    if (deep) d.base += "|" + tuple_key(factors);
    d.strata.push_back({tuple_key(factors), 0, {}});
    d.bundles = coord_names(factors);
    return d;
}

} // namespace

LogStructureMap materialize(const FlcMap& f, const std::vector<std::pair<std::string, std::string>>& extra_pairs) {
    LogStructureMap m;
    m.source = presentation_descriptor(f.source);
    m.target = presentation_descriptor(f.target);
    m.exponents = f.exponents;
    std::pair<std::string, std::string> designated{tuple_key(f.source), tuple_key(f.target)};
    m.stratum_map.push_back(designated);
    for (const auto& p : extra_pairs)
        if (p != designated) m.stratum_map.push_back(p);
    auto src_names = coord_names(f.source);
    auto tgt_names = coord_names(f.target);
    for (int j = 0; j < f.exponents.cols; ++j) {
        std::string mono;
        for (int i = 0; i < f.exponents.rows; ++i) {
            i64 e = f.exponents.at(i, j);
            if (e == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += src_names[i];
            if (e > 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty()) mono = "1";
        m.bundle_matching.emplace_back(tgt_names[j], mono);
    }
    return m;
}

namespace {

std::vector<FlcFactor> strata_below(int arity, const FlcFactor& f) {
    std::vector<FlcFactor> out;
    if (arity == 1) {
        out.push_back(open_factor(1));
        return out;
    }
    for (const auto& t : all_trees(arity))
        if (t.refines(*f.stratum)) out.push_back(factor_at(t));
    return out;
}

} // namespace

LogStructureMap flc_comp(int m, int n, int i) {
    if (n < 1 || m < 1) throw std::invalid_argument("flc_comp requires arities >= 1");
    if (i < 1 || i > n) throw std::invalid_argument("composition slot out of range");
    FlcFactor outer = open_factor(n), inner = open_factor(m);
    FlcMap f = comp_map(n, m, i, outer, inner);

    std::vector<std::pair<std::string, std::string>> pairs;
    auto below_outer = strata_below(n, outer);
    auto below_inner = strata_below(m, inner);
    if (below_outer.size() * below_inner.size() <= 4096) {
        for (const auto& s : below_outer)
            for (const auto& t : below_inner) {
                std::string img;
                if (n >= 2 && m >= 2) img = StableTree::graft(*s.stratum, *t.stratum, i).key();
                else if (n >= 2) img = s.key();
                else if (m >= 2) img = t.key();
                else img = "pt";
                pairs.emplace_back(s.key() + " x " + t.key(), img);
            }
    }
    return materialize(f, pairs);
}

LogStructureMap theta_log(int n, int i, const std::string& stratum_key) {
    if (n < 1) throw std::invalid_argument("theta_log requires arity >= 1");
    FlcFactor f = open_factor(n);
    if (!stratum_key.empty() && n >= 2 && stratum_key != f.key()) {
        bool found = false;
        for (const auto& t : all_trees(n))
            if (t.key() == stratum_key) {
                f = factor_at(t);
                found = true;
                break;
            }
        if (!found) throw std::invalid_argument("unknown stratum: " + stratum_key);
    }
    std::vector<std::pair<std::string, std::string>> pairs;
    auto below = strata_below(n, f);
    if (below.size() <= 4096)
        for (const auto& s : below) pairs.emplace_back(s.key(), "pt");
    return materialize(theta_map(i, f), pairs);
}

// ---------------------------------------------------------------------------

std::string monoid_name(MonoidTag tag) {
    switch (tag) {
        case MonoidTag::trivial: return "trivial";
        case MonoidTag::circle: return "circle";
        case MonoidTag::reals: return "nonnegative reals";
        case MonoidTag::log_point: return "log point";
    }
    throw std::invalid_argument("unknown monoid tag");
}

CommGOperad comm_g_operad(MonoidTag tag, int arity) {
    if (arity < 1) throw std::invalid_argument("operad arity must be >= 1");
    CommGOperad op;
    op.tag = tag;
    op.arity = arity;
    if (tag == MonoidTag::log_point) op.descriptor = pt_log_power(arity);
    return op;
}

std::vector<Word> comm_compose(const std::vector<Word>& a, const std::vector<Word>& b, int i) {
    const int n = static_cast<int>(a.size()), m = static_cast<int>(b.size());
    if (n < 1 || m < 1 || i < 1 || i > n) throw std::invalid_argument("bad insertion data");
    std::vector<Word> out;
    for (int j = 1; j <= n + m - 1; ++j) {
        if (j < i) out.push_back(a[j - 1]);
        else if (j <= i + m - 1) {
            Word w = a[i - 1];
            w.insert(w.end(), b[j - i].begin(), b[j - i].end());
            out.push_back(std::move(w));
        } else out.push_back(a[j - m]);
    }
    return out;
}

std::vector<i64> comm_compose_exp(const std::vector<i64>& a, const std::vector<i64>& b, int i) {
    const int n = static_cast<int>(a.size()), m = static_cast<int>(b.size());
    if (n < 1 || m < 1 || i < 1 || i > n) throw std::invalid_argument("bad insertion data");
    std::vector<i64> out;
    for (int j = 1; j <= n + m - 1; ++j) {
        if (j < i) out.push_back(a[j - 1]);
        else if (j <= i + m - 1) out.push_back(checked_add(a[i - 1], b[j - i]));
        else out.push_back(a[j - m]);
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

struct Collector {
    std::mutex mu;
    i64 cases = 0;
    std::vector<std::string> failures;

    void add(i64 n) {
        std::lock_guard<std::mutex> lk(mu);
        cases += n;
    }
    void fail(const std::string& s) {
        std::lock_guard<std::mutex> lk(mu);
        if (failures.size() < 32) failures.push_back(s);
    }
};

std::vector<int> identity_perm(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    return p;
}

} // namespace

AxiomReport check_flc_axioms(int max_arity) {
    if (max_arity < 1) throw std::invalid_argument("max_arity must be >= 1");
    Collector col;
    const int A = max_arity;

    // sequential associativity: (a o_i b) o_{i-1+j} c == a o_i (b o_j c)
    {
        struct Case { int n, m, p, i, j; };
        std::vector<Case> cs;
        for (int n = 1; n <= A; ++n)
            for (int m = 1; m <= A; ++m)
                for (int p = 1; p <= A; ++p)
                    for (int i = 1; i <= n; ++i)
                        for (int j = 1; j <= m; ++j) cs.push_back({n, m, p, i, j});
#pragma omp parallel for schedule(dynamic)
        for (size_t idx = 0; idx < cs.size(); ++idx) {
            const auto [n, m, p, i, j] = cs[idx];
            FlcFactor fn = open_factor(n), fm = open_factor(m), fp = open_factor(p);
            FlcMap inner_first = comp_map(n, m, i, fn, fm);
            FlcMap lhs = compose_maps(product_map(inner_first, identity_map({fp})),
                                      comp_map(n + m - 1, p, i - 1 + j, inner_first.target[0], fp));
            FlcMap second = comp_map(m, p, j, fm, fp);
            FlcMap rhs = compose_maps(product_map(identity_map({fn}), second),
                                      comp_map(n, m + p - 1, i, fn, second.target[0]));
            col.add(1);
            if (!(lhs == rhs))
                col.fail("sequential associativity fails at n=" + std::to_string(n) + " m=" + std::to_string(m) +
                         " p=" + std::to_string(p) + " i=" + std::to_string(i) + " j=" + std::to_string(j));
        }
    }

    // parallel associativity: (a o_i b) o_{j+m-1} c == swap . ((a o_j c) o_i b)
    {
        struct Case { int n, m, p, i, j; };
        std::vector<Case> cs;
        for (int n = 2; n <= A; ++n)
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    for (int m = 1; m <= A; ++m)
                        for (int p = 1; p <= A; ++p) cs.push_back({n, m, p, i, j});
#pragma omp parallel for schedule(dynamic)
        for (size_t idx = 0; idx < cs.size(); ++idx) {
            const auto [n, m, p, i, j] = cs[idx];
            FlcFactor fn = open_factor(n), fm = open_factor(m), fp = open_factor(p);
            FlcMap left_first = comp_map(n, m, i, fn, fm);
            FlcMap lhs = compose_maps(product_map(left_first, identity_map({fp})),
                                      comp_map(n + m - 1, p, j + m - 1, left_first.target[0], fp));
            FlcMap right_first = comp_map(n, p, j, fn, fp);
            FlcMap chain = compose_maps(product_map(right_first, identity_map({fm})),
                                        comp_map(n + p - 1, m, i, right_first.target[0], fm));
            FlcMap rhs = compose_maps(factor_permute_map({fn, fm, fp}, {0, 2, 1}), chain);
            col.add(1);
            if (!(lhs == rhs))
                col.fail("parallel associativity fails at n=" + std::to_string(n) + " m=" + std::to_string(m) +
                         " p=" + std::to_string(p) + " i=" + std::to_string(i) + " j=" + std::to_string(j));
        }
    }

    // equivariance: comp(sigma a, tau b, sigma(i)) == block(sigma, tau, i) . comp(a, b, i)
    {
        struct Case { int n, m; std::vector<int> sigma, tau; };
        std::vector<Case> cs;
        for (int n = 1; n <= A; ++n)
            for (int m = 1; m <= A; ++m) {
                auto sigma = identity_perm(n);
                do {
                    auto tau = identity_perm(m);
                    do cs.push_back({n, m, sigma, tau});
                    while (std::next_permutation(tau.begin(), tau.end()));
                } while (std::next_permutation(sigma.begin(), sigma.end()));
            }
#pragma omp parallel for schedule(dynamic)
        for (size_t idx = 0; idx < cs.size(); ++idx) {
            const auto& c = cs[idx];
            FlcFactor fn = open_factor(c.n), fm = open_factor(c.m);
            for (int i = 1; i <= c.n; ++i) {
                FlcMap lhs = compose_maps(product_map(sigma_map(c.sigma, fn), sigma_map(c.tau, fm)),
                                          comp_map(c.n, c.m, c.sigma[i - 1], fn, fm));
                FlcMap base = comp_map(c.n, c.m, i, fn, fm);
                FlcMap rhs = compose_maps(base, sigma_map(block_compose(c.sigma, c.tau, i), base.target[0]));
                col.add(1);
                if (!(lhs == rhs))
                    col.fail("equivariance fails at n=" + std::to_string(c.n) + " m=" + std::to_string(c.m) +
                             " i=" + std::to_string(i));
            }
        }
    }

    // residue weights intertwine composition with the monoid insertion law
    {
        for (int n = 1; n <= A; ++n)
            for (int m = 1; m <= A; ++m)
                for (int i = 1; i <= n; ++i) {
                    FlcFactor fn = open_factor(n), fm = open_factor(m);
                    FlcMap base = comp_map(n, m, i, fn, fm);
                    FlcMap lhs = compose_maps(base, theta_all(base.target[0]));
                    FlcMap rhs = compose_maps(product_map(theta_all(fn), theta_all(fm)), comm_insert(n, m, i));
                    col.add(1);
                    if (!(lhs == rhs))
                        col.fail("residue compatibility fails at n=" + std::to_string(n) +
                                 " m=" + std::to_string(m) + " i=" + std::to_string(i));
                }
    }

    AxiomReport rep;
    rep.cases = col.cases;
    rep.failures = std::move(col.failures);
    return rep;
}

} // namespace logcurves
