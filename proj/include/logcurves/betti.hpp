#pragma once

#include <vector>

#include "logcurves/poly.hpp"
#include "logcurves/trees.hpp"
#include "logcurves/util.hpp"

namespace logcurves {

// Number of n-mark genus-zero configurations over F_q: ordered (n-3)-tuples
// of pairwise distinct elements of F_q - {0,1}. Brute-force enumeration;
// count_open runs the sweep in parallel, count_open_serial is the serial
// reference. n >= 3.
i64 count_open(int n, i64 q);
i64 count_open_serial(int n, i64 q);

// Point count of the n-mark stable compactification: sum over stable trees
// of products of open counts at the vertex valences.
i64 count_bar(int n, i64 q);

// Configuration count behind the arity-n decorated space: (n-1)-tuples of
// pairwise distinct nonzero scalars, (q-1)(q-2)...(q-n+1). The _brute
// variant enumerates tuples directly and is kept for small-n cross-checks.
i64 count_ld(int n, i64 q);
i64 count_ld_brute(int n, i64 q);

// First `count` primes >= floor_value.
std::vector<i64> sample_primes(int count, i64 floor_value);

// Interpolate a degree-`degree` integer polynomial in q through the first
// degree+1 samples; any further samples must match the result exactly.
// Throws consistency_error on non-integrality or mismatch.
Poly interpolate_counts(const std::vector<i64>& qs, const std::vector<i64>& counts, int degree);

// Invert a point-count polynomial into Betti numbers. For a smooth open
// space of dimension dim with alternating weights, count(q) =
// sum_j (-1)^j b_j q^{dim-j}; for a smooth proper space, count(q) =
// sum_k b_{2k} q^k. Both validate nonnegativity; the proper form returns the
// polynomial in t with only even coefficients.
Poly betti_from_counts_alternating(const Poly& count_poly, int dim);
Poly betti_from_counts_proper(const Poly& count_poly, int dim);

// Betti numbers of the n-mark open moduli space as a polynomial in t, by two
// routes (product formula and point-count interpolation) that must agree.
Poly betti_open(int n);

// Betti numbers of the n-mark stable compactification (even degrees only),
// from point-count interpolation; palindromic with unit ends.
Poly betti_mbar(int n);

// Poincare polynomial rows. The mbar row is indexed by mark count (n >= 3);
// the decorated rows by arity (n >= 1).
Poly poincare_mbar(int n);
Poly poincare_ld(int n);
Poly poincare_fld(int n);
Poly poincare_flc_top(int n);

struct PoincareTables {
    int n = 0;
    Poly mbar;     // marks convention
    Poly flc_top;  // arity convention
    Poly fld;      // arity convention
    Poly ld;       // arity convention
};

// The four rows at once; mbar uses n as mark count, the rest use n as arity.
PoincareTables poincare_tables(int n);

} // namespace logcurves
