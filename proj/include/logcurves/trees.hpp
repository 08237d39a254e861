#pragma once

#include <string>
#include <vector>

#include "logcurves/util.hpp"

namespace logcurves {

// Stable rooted tree with leaves marked 0..n, mark 0 being the root (output)
// leg. Invariants: every internal vertex has at least two children (valence
// counting the parent/output edge is >= 3), leaf marks are a bijection onto
// {0..n}, and children are kept in canonical order (sorted by the minimal
// mark of their subtree). Instances are immutable values; all constructors
// canonicalize.
class StableTree {
public:
    struct Node {
        int leaf = -1;           // >= 1: leaf mark; -1: internal vertex
        int min_mark = 0;        // minimal mark in this subtree (cached)
        std::vector<Node> kids;  // empty for leaves, >= 2 entries otherwise
    };

    // One internal vertex, inputs 1..n hanging from it. Requires n >= 2.
    static StableTree corolla(int n);

    // Plug the output of t into input slot i of s (1 <= i <= s.arity()).
    // Inputs of t occupy slots i..i+m-1 of the result; inputs of s above i
    // shift up by m-1. Adds exactly one internal edge.
    static StableTree graft(const StableTree& s, const StableTree& t, int i);

    // Tree with a single internal edge whose lower vertex carries exactly the
    // marks in `block` (2 <= |block| <= n-1, block within {1..n}).
    static StableTree divisor(int n, const std::vector<int>& block);

    // Relabel input marks by the permutation p of {1..n} (p[k-1] = image of k)
    // and recanonicalize.
    static StableTree sigma_act(const std::vector<int>& p, const StableTree& t);

    // Build from an explicit node structure carrying marks 1..n; validates
    // stability and canonicalizes. Throws on any invariant violation.
    static StableTree assemble(Node root, int n);

    int arity() const { return arity_; }
    int codim() const;          // number of internal edges
    int num_vertices() const;   // internal vertices
    const Node& root() const { return root_; }

    // Valences (children + parent leg) of all internal vertices, sorted.
    std::vector<int> valences() const;

    // Mark sets below each internal edge, one sorted set per edge, the list
    // itself sorted lexicographically. Mark 0 never appears in these sets.
    std::vector<std::vector<int>> edge_leafsets() const;

    // s is obtained from *this by contracting internal edges, possibly none.
    bool refines(const StableTree& s) const;

    // Canonical serialization, e.g. "((1,2),3)". Equal keys iff equal trees.
    const std::string& key() const { return key_; }

    bool operator==(const StableTree& o) const { return key_ == o.key_; }
    bool operator!=(const StableTree& o) const { return key_ != o.key_; }
    bool operator<(const StableTree& o) const { return key_ < o.key_; }

private:
    StableTree(Node root, int arity);
    Node root_;
    int arity_ = 0;
    std::string key_;
};

// All isomorphism classes of stable trees with arity n and exactly c internal
// edges, sorted by key. Parallel generation with a deterministic merge.
const std::vector<StableTree>& enumerate_trees(int n, int c);
// Independent un-memoized single-thread reference of the same census.
std::vector<StableTree> enumerate_trees_serial(int n, int c);
// All codimensions 0..n-2 flattened, sorted by (codim, key).
std::vector<StableTree> all_trees(int n);

// Number of one-edge trees of arity n by bipartition counting:
// (2^{n+1} - 2 - 2(n+1)) / 2.
i64 codim_one_census(int n);

// Block substitution of permutations: the unique rho with
// graft(sigma.s, tau.t, sigma(i)) == rho.graft(s, t, i).
std::vector<int> block_compose(const std::vector<int>& sigma, const std::vector<int>& tau, int i);

struct AxiomReport {
    i64 cases = 0;
    std::vector<std::string> failures; // capped at 32 entries
    bool ok() const { return failures.empty(); }
};

// Exhaustive operad-axiom sweep for graft/sigma_act: sequential and parallel
// associativity over all iso-class triples of arity <= min(max_arity, 4) plus
// corolla triples up to max_arity, and equivariance/group-law sweeps over all
// classes up to max_arity. Runs the checks in parallel.
AxiomReport check_graft_axioms(int max_arity);

} // namespace logcurves
