#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "logcurves/logspace.hpp"
#include "logcurves/trees.hpp"

namespace logcurves {

// One factor of a product of framed-curve spaces, presented at a closed
// stratum. Arity 1 is the log point (unique stratum, one bundle); arity >= 2
// carries a stable tree naming the stratum of its moduli space. Coordinates
// of a factor are its bundle labels (the single generator for arity 1,
// L0..Ln otherwise) followed by one normal coordinate per edge of the
// stratum tree, in the order of edge_leafsets().
struct FlcFactor {
    int arity = 1;
    std::optional<StableTree> stratum;

    std::string key() const;
    int label_count() const { return arity == 1 ? 1 : arity + 1; }
    std::vector<std::vector<int>> edges() const;
    int coord_count() const { return label_count() + static_cast<int>(edges().size()); }
    bool operator==(const FlcFactor& o) const { return arity == o.arity && key() == o.key(); }
};

FlcFactor open_factor(int arity);
FlcFactor factor_at(const StableTree& t);

// The name of a coordinate of a k-fold product, boxed with O placeholders,
// e.g. "L2&O" for label 2 of the first of two factors. Normal coordinates
// are named by the mark set under the edge, e.g. "N{1,2}".
std::string coord_name(const std::vector<FlcFactor>& factors, int factor, int coord);
std::vector<std::string> coord_names(const std::vector<FlcFactor>& factors);
int total_coords(const std::vector<FlcFactor>& factors);
std::string tuple_key(const std::vector<FlcFactor>& factors);

// A map between products of framed-curve spaces presented at strata, in
// explicit coordinates: column j of `exponents` gives the monomial in the
// source coordinates that pulls back from target coordinate j. Composition
// of maps is matrix product of exponent data.
struct FlcMap {
    std::vector<FlcFactor> source;
    std::vector<FlcFactor> target;
    IntMatrix exponents;

    bool operator==(const FlcMap& o) const {
        return source == o.source && target == o.target && exponents == o.exponents;
    }
};

FlcMap identity_map(const std::vector<FlcFactor>& factors);

// Operadic composition presented at source strata (t1, t2): plug an arity-m
// space into slot i of an arity-n space. The image stratum is the graft of
// the stratum trees; labels follow the slot relabeling, the normal
// coordinate of the new edge pulls back to L_i of the outer factor times
// L_0 of the inner factor, and every source normal coordinate maps to the
// normal coordinate of its image edge. Arity-1 factors act by multiplying
// their generator into the matching label.
FlcMap comp_map(int n, int m, int i, const FlcFactor& outer, const FlcFactor& inner);

// Relabeling action of a permutation sigma (1-indexed images, size n) on the
// arity-n space presented at stratum t; the image stratum is sigma . t and
// label L_j pulls back to L_{sigma^{-1}(j)}.
FlcMap sigma_map(const std::vector<int>& sigma, const FlcFactor& f);

// Residue weight map to the log point: the generator pulls back to
// L_0 * L_i times the normal coordinate of every edge separating mark i
// from the root output.
FlcMap theta_map(int i, const FlcFactor& f);
// All residue weights at once: target is the arity-fold power of the log
// point (identity for arity 1).
FlcMap theta_all(const FlcFactor& f);

// Composition law of the commutative monoid operad on powers of the log
// point: slot j of the target multiplies g_i into g'_{j-i+1} on the middle
// block and reindexes the rest.
FlcMap comm_insert(int n, int m, int i);

FlcMap product_map(const FlcMap& a, const FlcMap& b);
FlcMap compose_maps(const FlcMap& f, const FlcMap& g); // g after f; requires g.source == f.target
FlcMap factor_permute_map(const std::vector<FlcFactor>& source, const std::vector<int>& perm);

// ---------------------------------------------------------------------------
// Public presentation

struct FLCSpace {
    int arity = 1;
    NCLogDescriptor descriptor;

    int base_dim() const { return descriptor.base_dim; }
    int fiber_dim() const { return descriptor.fiber_dim(); }
    int log_dim() const { return descriptor.log_dim(); }
};

// The framed-curve space of arity n: the log point for n == 1, the moduli
// descriptor of arity n with bundles L0..Ln otherwise. Dimensions
// (n-2, n+1, 2n-1) for n >= 2 and (0, 1, 1) for n == 1.
FLCSpace flc_space(int n);

// Operadic composition as a fully materialized map: inner arity m into slot
// i of outer arity n, presented at the open strata. The stratum assignment
// sends a pair of source strata to their graft; it is listed in full when
// small, and always starts with the designated pair.
LogStructureMap flc_comp(int m, int n, int i);

// Residue weight i of the arity-n space as a materialized map to the log
// point, presented at the stratum named by `stratum_key` (open stratum when
// empty).
LogStructureMap theta_log(int n, int i, const std::string& stratum_key = "");

// Materialize an explicit-coordinates map; extra_pairs, when given, extends
// the stratum assignment beyond the designated pair.
LogStructureMap materialize(const FlcMap& f,
                            const std::vector<std::pair<std::string, std::string>>& extra_pairs = {});

// ---------------------------------------------------------------------------
// Commutative monoid operads

enum class MonoidTag { trivial, circle, reals, log_point };
std::string monoid_name(MonoidTag tag);

struct CommGOperad {
    MonoidTag tag = MonoidTag::trivial;
    int arity = 1;
    std::optional<NCLogDescriptor> descriptor; // the log-point power for MonoidTag::log_point
};
CommGOperad comm_g_operad(MonoidTag tag, int arity);

// Operadic composition of monoid-element tuples: words in free generators,
// or additive exponents. Middle-block entries multiply (concatenate / add).
using Word = std::vector<std::string>;
std::vector<Word> comm_compose(const std::vector<Word>& a, const std::vector<Word>& b, int i);
std::vector<i64> comm_compose_exp(const std::vector<i64>& a, const std::vector<i64>& b, int i);

// ---------------------------------------------------------------------------
// Axiom sweeps

// Checks, over all arities up to max_arity (including arity 1), that
// composition maps satisfy sequential and parallel associativity, that the
// symmetric-group action is compatible with composition via block
// permutations, and that residue weights intertwine composition with the
// commutative monoid insertion law. Map equality here is equality of source
// and target presentations together with exponent matrices.
AxiomReport check_flc_axioms(int max_arity);

} // namespace logcurves
