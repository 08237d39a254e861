#pragma once

#include <string>
#include <vector>

#include "logcurves/betti.hpp"
#include "logcurves/poly.hpp"
#include "logcurves/util.hpp"

namespace logcurves {

// First page of the weight filtration bookkeeping for the n-mark open
// moduli space inside its stable compactification. Row q (0 <= q <= n-3)
// lists, from j = q down to j = 0, the dimension of H^{2(q-j)} of the
// disjoint union of codimension-j boundary closures (products of smaller
// stable moduli, dimensions via point counts). The alternating sum of row q
// recovers the q-th Betti number of the open space.
struct E1Page {
    int n = 0;
    std::vector<std::vector<i64>> rows;
    std::vector<i64> alternating;
};

E1Page build_e1(int n); // 4 <= n <= 8

// Purity report: the sampled point counts match the Betti prediction
// exactly at every prime, the alternating row sums match the open Betti
// numbers, the j = 0 column matches the stable Betti numbers, and the
// alternating Euler characteristics of the boundary unions recover the open
// Euler characteristic. This validates numerical consistency of the tables,
// not a proof of the underlying statement.
struct PurityReport {
    int n = 0;
    std::vector<i64> primes;
    bool counts_match = false;
    bool rows_match = false;
    bool stable_column_match = false;
    bool euler_match = false;
    E1Page page;
    Poly open_betti;
    std::string certificate_level;

    bool pass() const { return counts_match && rows_match && stable_column_match && euler_match; }
};

PurityReport purity_check(int n); // 4 <= n <= 8

// Acyclicity certificates: the cohomology table of the log space is
// concentrated as predicted, checked through point counts and closed-form
// dimension bookkeeping. Consistency-level, not a proof.
struct AcyclicityCertificate {
    std::string family;
    int parameter = 0;
    std::vector<i64> hodge;
    std::vector<i64> primes;
    bool pass = false;
    std::string certificate_level;
};

// Projective line with d marked points (d >= 1): table (1, d-1), checked
// against brute-force point counts over >= 3 primes.
AcyclicityCertificate acyclicity_p1(int d);

// Framed-curve space of arity n: table = top-weight row, length 2n, checked
// against the framed decorated row and its closed-form total 2^n * n!.
AcyclicityCertificate acyclicity_flc(int n);

} // namespace logcurves
