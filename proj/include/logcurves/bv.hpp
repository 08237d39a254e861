#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "logcurves/poly.hpp"
#include "logcurves/trees.hpp"
#include "logcurves/util.hpp"

namespace logcurves {

// A generator x_i, optionally decorated by the odd operator (degree 1).
struct DecGen {
    int gen = 0;
    bool dec = false;
    auto operator<=>(const DecGen&) const = default;
};

// Left-normed bracket word [[..[g1,g2],g3]..,gk] on decorated generators; a
// word of length one is a bare decorated generator. Basis words have their
// minimal generator index first.
using BlockWord = std::vector<DecGen>;

// Basis monomial: a product of bracket words on pairwise disjoint generator
// sets, blocks sorted by minimal generator index. Degree = number of
// decorations + sum over blocks of (length - 1).
struct BVMonomial {
    std::vector<BlockWord> blocks;

    int degree() const;
    std::vector<int> support() const; // sorted generator indices, throws on repeats
    std::string str() const;
    auto operator<=>(const BVMonomial&) const = default;
};

// Finite rational linear combination of basis monomials; the zero element
// has no terms.
struct BVElement {
    std::map<BVMonomial, Rational> terms;

    static BVElement zero() { return {}; }
    static BVElement generator(int i);
    static BVElement monomial(BVMonomial m, const Rational& c = 1);

    bool is_zero() const { return terms.empty(); }
    void add_term(BVMonomial m, const Rational& c);
    BVElement operator+(const BVElement& o) const;
    BVElement operator-(const BVElement& o) const;
    BVElement scaled(const Rational& c) const;
    bool operator==(const BVElement& o) const { return terms == o.terms; }
    std::string str() const;
};

// Graded-commutative product, degree-1 bracket, and the odd operator. All
// three return normal forms; Koszul signs come out of the normalization.
BVElement bv_mul(const BVElement& a, const BVElement& b);
BVElement bv_bracket(const BVElement& a, const BVElement& b);
BVElement bv_delta(const BVElement& a);

// Relabeling action of a permutation (1-indexed images) on generators.
BVElement bv_sigma(const std::vector<int>& sigma, const BVElement& a);

// Operadic substitution: plug the arity-m element b into slot i of the
// arity-n element a (supports must be exactly 1..n and 1..m); a's
// generators above i shift by m-1, b's land on i..i+m-1, and a decorated
// slot receives the odd operator applied to b.
BVElement bv_compose(const BVElement& a, const BVElement& b, int i);

// The full multilinear basis on generators 1..n, and its dimension counts
// by degree (length 2n). ger_dims counts the undecorated sub-basis.
std::vector<BVMonomial> bv_basis(int n);
std::vector<i64> bv_dims(int n);
std::vector<i64> ger_dims(int n);

// Projection to circle classes: monomials whose blocks all have length one
// survive as their decoration tuple; everything else dies. circle_insert is
// the induced substitution on tuples (decorated into decorated is zero).
using CircleElement = std::map<std::vector<int>, Rational>;
CircleElement circle_classes(const BVElement& e, int n);
CircleElement circle_insert(const CircleElement& a, const CircleElement& b, int i);

// Formality bookkeeping: the multilinear dimensions of the free model
// against the framed-curve row, the undecorated dimensions against the
// decorated row, and the zero-differential consistency flag (dimensions
// match and the odd operator squares to zero on the whole basis).
struct FormalModel {
    int arity = 0;
    std::vector<i64> dims;
    std::vector<i64> expected;
    std::vector<i64> lie_dims;
    std::vector<i64> lie_expected;
    bool matches = false;
    bool zero_differential = false;
    std::string certificate_level;
};
FormalModel assemble_formal_model(int n);

// The decorated row as a pushout: divide the framed row by the frame torus
// factor and compare with (1+t) times the open row at one more mark. Exact
// polynomial arithmetic; divide_exact throws on any remainder.
struct PushoutReport {
    int n = 0;
    Poly ld;
    Poly from_framed;
    Poly from_open;
    bool exact = false;
};
PushoutReport ld_pushout(int n);

// Relation sweep over basis elements with disjoint supports of total arity
// <= max_arity: graded commutativity, shifted antisymmetry, graded Jacobi,
// Leibniz, the defining relation of the odd operator on products, its
// derivation property over the bracket, its square vanishing, and the
// seven-term identity on triple products.
AxiomReport check_bv_relations(int max_arity);

// Expression trees, for operator-level input (e.g. parsed from JSON).
struct BVExpr;
using BVExprPtr = std::shared_ptr<const BVExpr>;
struct BVExpr {
    enum class Kind { gen, prod, bracket, delta, sum, scale };
    Kind kind = Kind::gen;
    int gen = 0;
    Rational coef = 1;
    std::vector<BVExprPtr> args;
};
BVExprPtr make_gen(int i);
BVExprPtr make_prod(std::vector<BVExprPtr> args);
BVExprPtr make_bracket(BVExprPtr a, BVExprPtr b);
BVExprPtr make_delta(BVExprPtr a);
BVExprPtr make_sum(std::vector<BVExprPtr> args);
BVExprPtr make_scale(const Rational& c, BVExprPtr a);
BVElement bv_eval(const BVExprPtr& e);

} // namespace logcurves
