#include "logcurves/trees.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <set>

#include <omp.h>

namespace logcurves {

namespace {

void canonicalize(StableTree::Node& node) {
    if (node.leaf >= 0) {
        node.min_mark = node.leaf;
        return;
    }
    for (auto& k : node.kids) canonicalize(k);
    std::sort(node.kids.begin(), node.kids.end(),
              [](const StableTree::Node& a, const StableTree::Node& b) { return a.min_mark < b.min_mark; });
    node.min_mark = node.kids.front().min_mark;
}

void validate(const StableTree::Node& node, std::vector<int>& marks) {
    if (node.leaf >= 0) {
        marks.push_back(node.leaf);
        return;
    }
    if (node.kids.size() < 2) throw std::invalid_argument("unstable vertex: valence below 3");
    for (const auto& k : node.kids) validate(k, marks);
}

void render(const StableTree::Node& node, std::string& out) {
    if (node.leaf >= 0) {
        out += std::to_string(node.leaf);
        return;
    }
    out += '(';
    for (size_t k = 0; k < node.kids.size(); ++k) {
        if (k) out += ',';
        render(node.kids[k], out);
    }
    out += ')';
}

int count_internal(const StableTree::Node& node) {
    if (node.leaf >= 0) return 0;
    int c = 1;
    for (const auto& k : node.kids) c += count_internal(k);
    return c;
}

void collect_valences(const StableTree::Node& node, std::vector<int>& out) {
    if (node.leaf >= 0) return;
    out.push_back(static_cast<int>(node.kids.size()) + 1);
    for (const auto& k : node.kids) collect_valences(k, out);
}

void collect_marks(const StableTree::Node& node, std::vector<int>& out) {
    if (node.leaf >= 0) {
        out.push_back(node.leaf);
        return;
    }
    for (const auto& k : node.kids) collect_marks(k, out);
}

void collect_leafsets(const StableTree::Node& node, bool is_root, std::vector<std::vector<int>>& out) {
    if (node.leaf >= 0) return;
    if (!is_root) {
        std::vector<int> marks;
        collect_marks(node, marks);
        std::sort(marks.begin(), marks.end());
        out.push_back(std::move(marks));
    }
    for (const auto& k : node.kids) collect_leafsets(k, false, out);
}

StableTree::Node relabel(const StableTree::Node& node, const std::vector<int>& image) {
    StableTree::Node r;
    if (node.leaf >= 0) {
        r.leaf = image[node.leaf];
        return r;
    }
    r.kids.reserve(node.kids.size());
    for (const auto& k : node.kids) r.kids.push_back(relabel(k, image));
    return r;
}

// Replace the leaf carrying `slot` by `plug` (already relabeled).
StableTree::Node substitute(const StableTree::Node& node, int slot, const StableTree::Node& plug,
                            const std::vector<int>& image) {
    StableTree::Node r;
    if (node.leaf >= 0) {
        if (node.leaf == slot) return plug;
        r.leaf = image[node.leaf];
        return r;
    }
    r.kids.reserve(node.kids.size());
    for (const auto& k : node.kids) r.kids.push_back(substitute(k, slot, plug, image));
    return r;
}

} // namespace

StableTree::StableTree(Node root, int arity) : root_(std::move(root)), arity_(arity) {
    canonicalize(root_);
    std::vector<int> marks;
    validate(root_, marks);
    std::sort(marks.begin(), marks.end());
    if (static_cast<int>(marks.size()) != arity_) throw std::invalid_argument("mark count does not match arity");
    for (int k = 0; k < arity_; ++k)
        if (marks[k] != k + 1) throw std::invalid_argument("input marks must be exactly 1..n");
    render(root_, key_);
}

StableTree StableTree::corolla(int n) {
    if (n < 2) throw std::invalid_argument("corolla requires arity >= 2");
    Node root;
    root.kids.resize(n);
    for (int k = 0; k < n; ++k) root.kids[k].leaf = k + 1;
    return StableTree(std::move(root), n);
}

StableTree StableTree::graft(const StableTree& s, const StableTree& t, int i) {
    const int n = s.arity(), m = t.arity();
    if (i < 1 || i > n) throw std::invalid_argument("graft slot out of range");
    // marks of s: j < i fixed, j > i shifted by m-1; marks of t: k -> i+k-1
    std::vector<int> s_image(n + 1, 0);
    for (int j = 1; j <= n; ++j) s_image[j] = j < i ? j : j + m - 1;
    std::vector<int> t_image(m + 1, 0);
    for (int k = 1; k <= m; ++k) t_image[k] = i + k - 1;
    Node plug = relabel(t.root_, t_image);
    Node root = substitute(s.root_, i, plug, s_image);
    return StableTree(std::move(root), n + m - 1);
}

StableTree StableTree::divisor(int n, const std::vector<int>& block) {
    if (static_cast<int>(block.size()) < 2 || static_cast<int>(block.size()) > n - 1)
        throw std::invalid_argument("divisor block size out of range");
    std::set<int> inner(block.begin(), block.end());
    if (static_cast<int>(inner.size()) != static_cast<int>(block.size()))
        throw std::invalid_argument("divisor block has repeated marks");
    Node lower;
    for (int b : inner) {
        if (b < 1 || b > n) throw std::invalid_argument("divisor block mark out of range");
        Node leaf;
        leaf.leaf = b;
        lower.kids.push_back(leaf);
    }
    Node root;
    for (int j = 1; j <= n; ++j) {
        if (inner.count(j)) continue;
        Node leaf;
        leaf.leaf = j;
        root.kids.push_back(leaf);
    }
    root.kids.push_back(std::move(lower));
    return StableTree(std::move(root), n);
}

StableTree StableTree::assemble(Node root, int n) { return StableTree(std::move(root), n); }

StableTree StableTree::sigma_act(const std::vector<int>& p, const StableTree& t) {
    const int n = t.arity();
    if (static_cast<int>(p.size()) != n) throw std::invalid_argument("permutation size mismatch");
    std::vector<int> image(n + 1, 0);
    std::vector<bool> seen(n + 1, false);
    for (int k = 1; k <= n; ++k) {
        int v = p[k - 1];
        if (v < 1 || v > n || seen[v]) throw std::invalid_argument("not a permutation of 1..n");
        seen[v] = true;
        image[k] = v;
    }
    return StableTree(relabel(t.root_, image), n);
}

int StableTree::codim() const { return count_internal(root_) - 1; }

int StableTree::num_vertices() const { return count_internal(root_); }

std::vector<int> StableTree::valences() const {
    std::vector<int> out;
    collect_valences(root_, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> StableTree::edge_leafsets() const {
    std::vector<std::vector<int>> out;
    collect_leafsets(root_, true, out);
    std::sort(out.begin(), out.end());
    return out;
}

bool StableTree::refines(const StableTree& s) const {
    if (s.arity() != arity_) return false;
    auto mine = edge_leafsets();
    auto theirs = s.edge_leafsets();
    // a tree is determined by its edge bipartitions, so containment of the
    // leafset families decides contractibility
    return std::includes(mine.begin(), mine.end(), theirs.begin(), theirs.end());
}

namespace {

std::vector<StableTree> expand_once(int n, const std::vector<const std::vector<StableTree>*>& sources,
                                    bool parallel) {
    // Every tree with c >= 1 edges has a vertex all of whose children are
    // leaves; removing it leaves a tree on n-b+1 marks with one fewer edge.
    // So T(n, c) is the dedup, over block size b, block content B, parent
    // tree s in T(n-b+1, c-1), and parent slot i, of "expand leaf i of s
    // into the corolla on B", the other marks of s going onto {1..n} - B in
    // increasing order.
    std::vector<std::pair<int, const StableTree*>> jobs; // (b, parent)
    for (int b = 2; b <= n - 1; ++b) {
        const auto* src = sources[b];
        if (!src) continue;
        for (const auto& s : *src) jobs.emplace_back(b, &s);
    }
    std::vector<StableTree> found;
    std::mutex sink;
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (size_t j = 0; j < jobs.size(); ++j) {
        const int b = jobs[j].first;
        const StableTree& s = *jobs[j].second;
        const int k = s.arity();
        std::vector<StableTree> local;
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            if (std::popcount(mask) != b) continue;
            StableTree::Node plug;
            std::vector<int> complement;
            for (int v = 1; v <= n; ++v) {
                if (mask >> (v - 1) & 1u) {
                    StableTree::Node leaf;
                    leaf.leaf = v;
                    plug.kids.push_back(std::move(leaf));
                } else {
                    complement.push_back(v);
                }
            }
            for (int i = 1; i <= k; ++i) {
                std::vector<int> image(k + 1, 0);
                int next = 0;
                for (int q = 1; q <= k; ++q)
                    if (q != i) image[q] = complement[next++];
                local.push_back(StableTree::assemble(substitute(s.root(), i, plug, image), n));
            }
        }
        std::lock_guard<std::mutex> hold(sink);
        for (auto& t : local) found.push_back(std::move(t));
    }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

std::vector<StableTree> build_census(int n, int c, bool parallel) {
    if (n < 2) throw std::invalid_argument("census requires arity >= 2");
    if (c < 0 || c > n - 2) return {};
    if (c == 0) return {StableTree::corolla(n)};
    std::vector<std::vector<StableTree>> lower(n + 1);
    std::vector<const std::vector<StableTree>*> sources(n + 1, nullptr);
    for (int b = 2; b <= n - 1; ++b) {
        int k = n - b + 1;
        if (k < 2) continue;
        lower[b] = build_census(k, c - 1, parallel);
        sources[b] = &lower[b];
    }
    return expand_once(n, sources, parallel);
}

} // namespace

const std::vector<StableTree>& enumerate_trees(int n, int c) {
    static std::map<std::pair<int, int>, std::vector<StableTree>> cache;
    static std::mutex guard;
    {
        std::lock_guard<std::mutex> hold(guard);
        auto it = cache.find({n, c});
        if (it != cache.end()) return it->second;
    }
    auto built = build_census(n, c, true);
    std::lock_guard<std::mutex> hold(guard);
    return cache.emplace(std::make_pair(n, c), std::move(built)).first->second;
}

std::vector<StableTree> enumerate_trees_serial(int n, int c) { return build_census(n, c, false); }

std::vector<StableTree> all_trees(int n) {
    std::vector<StableTree> out;
    for (int c = 0; c <= n - 2; ++c) {
        const auto& layer = enumerate_trees(n, c);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

i64 codim_one_census(int n) {
    i64 subsets = (1LL << (n + 1)) - 2 - 2 * (n + 1);
    return subsets / 2;
}

std::vector<int> block_compose(const std::vector<int>& sigma, const std::vector<int>& tau, int i) {
    const int n = static_cast<int>(sigma.size());
    const int m = static_cast<int>(tau.size());
    if (i < 1 || i > n) throw std::invalid_argument("block_compose slot out of range");
    const int si = sigma[i - 1];
    auto shift = [&](int x) { return x < si ? x : x + m - 1; };
    std::vector<int> rho(n + m - 1, 0);
    for (int j = 1; j <= n; ++j) {
        if (j == i) continue;
        int pos = j < i ? j : j + m - 1;
        rho[pos - 1] = shift(sigma[j - 1]);
    }
    for (int k = 1; k <= m; ++k) rho[i + k - 2] = si + tau[k - 1] - 1;
    return rho;
}

namespace {

std::vector<std::vector<int>> all_perms(int n) {
    std::vector<int> p(n);
    for (int k = 0; k < n; ++k) p[k] = k + 1;
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

struct FailureSink {
    AxiomReport report;
    std::mutex guard;
    void count(i64 k) {
        std::lock_guard<std::mutex> hold(guard);
        report.cases += k;
    }
    void fail(const std::string& what) {
        std::lock_guard<std::mutex> hold(guard);
        if (report.failures.size() < 32) report.failures.push_back(what);
    }
};

} // namespace

AxiomReport check_graft_axioms(int max_arity) {
    if (max_arity < 2) throw std::invalid_argument("axiom sweep requires max_arity >= 2");
    const int deep = std::min(max_arity, 4); // iso-class triples stay in the thousands
    std::vector<StableTree> classes;
    for (int n = 2; n <= deep; ++n) {
        auto layer = all_trees(n);
        classes.insert(classes.end(), layer.begin(), layer.end());
    }
    std::vector<StableTree> corollas;
    for (int n = 2; n <= max_arity; ++n) corollas.push_back(StableTree::corolla(n));

    FailureSink sink;

    auto check_triple = [&](const StableTree& s, const StableTree& t, const StableTree& u) {
        const int n = s.arity(), m = t.arity();
        i64 done = 0;
        for (int i = 1; i <= n; ++i) {
            StableTree st = StableTree::graft(s, t, i);
            // sequential: (s o_i t) o_{i-1+j} u == s o_i (t o_j u)
            for (int j = 1; j <= m; ++j) {
                StableTree lhs = StableTree::graft(st, u, i - 1 + j);
                StableTree rhs = StableTree::graft(s, StableTree::graft(t, u, j), i);
                ++done;
                if (lhs != rhs)
                    sink.fail("sequential associativity: s=" + s.key() + " t=" + t.key() + " u=" + u.key() +
                              " i=" + std::to_string(i) + " j=" + std::to_string(j));
            }
            // parallel: (s o_i t) o_{j+m-1} u == (s o_j u) o_i t for i < j
            for (int j = i + 1; j <= n; ++j) {
                StableTree lhs = StableTree::graft(st, u, j + m - 1);
                StableTree rhs = StableTree::graft(StableTree::graft(s, u, j), t, i);
                ++done;
                if (lhs != rhs)
                    sink.fail("parallel associativity: s=" + s.key() + " t=" + t.key() + " u=" + u.key() +
                              " i=" + std::to_string(i) + " j=" + std::to_string(j));
            }
        }
        sink.count(done);
    };

    const i64 triples = static_cast<i64>(classes.size()) * classes.size() * classes.size();
#pragma omp parallel for schedule(dynamic)
    for (i64 q = 0; q < triples; ++q) {
        size_t a = q % classes.size();
        size_t b = (q / classes.size()) % classes.size();
        size_t c = q / (classes.size() * classes.size());
        check_triple(classes[a], classes[b], classes[c]);
    }
    for (const auto& s : corollas)
        for (const auto& t : corollas)
            for (const auto& u : corollas) check_triple(s, t, u);

    // equivariance: graft(sigma.s, tau.t, sigma(i)) == block_compose(sigma,tau,i).graft(s,t,i)
    std::vector<std::vector<std::vector<int>>> perms(max_arity + 1);
    for (int n = 2; n <= max_arity; ++n) perms[n] = all_perms(n);
    std::vector<std::pair<const StableTree*, const StableTree*>> pairs;
    for (const auto& s : classes)
        for (const auto& t : classes) pairs.emplace_back(&s, &t);
#pragma omp parallel for schedule(dynamic)
    for (size_t p = 0; p < pairs.size(); ++p) {
        const StableTree& s = *pairs[p].first;
        const StableTree& t = *pairs[p].second;
        i64 done = 0;
        for (const auto& sigma : perms[s.arity()]) {
            StableTree ss = StableTree::sigma_act(sigma, s);
            for (const auto& tau : perms[t.arity()]) {
                StableTree tt = StableTree::sigma_act(tau, t);
                for (int i = 1; i <= s.arity(); ++i) {
                    StableTree lhs = StableTree::graft(ss, tt, sigma[i - 1]);
                    StableTree rhs = StableTree::sigma_act(block_compose(sigma, tau, i), StableTree::graft(s, t, i));
                    ++done;
                    if (lhs != rhs)
                        sink.fail("equivariance: s=" + s.key() + " t=" + t.key() + " i=" + std::to_string(i));
                }
            }
        }
        sink.count(done);
    }

    // group law of the action over every class up to max_arity
    for (int n = 2; n <= max_arity; ++n) {
        const auto layer = all_trees(n);
        const auto& pn = perms[n];
#pragma omp parallel for schedule(dynamic)
        for (size_t a = 0; a < pn.size(); ++a) {
            i64 done = 0;
            for (const auto& tau : pn) {
                std::vector<int> comp(n);
                for (int k = 0; k < n; ++k) comp[k] = pn[a][tau[k] - 1];
                for (const auto& t : layer) {
                    StableTree lhs = StableTree::sigma_act(pn[a], StableTree::sigma_act(tau, t));
                    StableTree rhs = StableTree::sigma_act(comp, t);
                    ++done;
                    if (lhs != rhs) sink.fail("group law: t=" + t.key());
                }
            }
            sink.count(done);
        }
    }

    return sink.report;
}

} // namespace logcurves
