#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "logcurves/betti.hpp"

using namespace logcurves;

TEST_CASE("open configuration counts") {
    CHECK(count_open(3, 7) == 1);
    CHECK(count_open(3, 23) == 1);
    CHECK(count_open(4, 7) == 5);
    CHECK(count_open(5, 7) == 20);
    CHECK(count_open(6, 7) == 60);
    CHECK(count_open(4, 5) == 3);
    CHECK_THROWS_AS(count_open(2, 7), std::invalid_argument);
    CHECK_THROWS_AS(count_open(4, 63), std::invalid_argument);
}

TEST_CASE("parallel and serial open counts agree") {
    for (int n = 3; n <= 7; ++n)
        for (i64 q : {5, 7, 11, 13})
            CHECK(count_open(n, q) == count_open_serial(n, q));
}

TEST_CASE("stable counts") {
    CHECK(count_bar(3, 7) == 1);
    CHECK(count_bar(4, 7) == 8);
    CHECK(count_bar(4, 11) == 12);
    CHECK(count_bar(5, 7) == 85);
    CHECK(count_bar(5, 11) == 177);
}

TEST_CASE("decorated counts, closed form against brute enumeration") {
    for (int n = 1; n <= 4; ++n)
        for (i64 q : {5, 7, 11})
            CHECK(count_ld(n, q) == count_ld_brute(n, q));
    CHECK(count_ld(3, 7) == 30); // (7-1)(7-2)
    CHECK(count_ld(1, 5) == 1);
}

TEST_CASE("prime sampling") {
    CHECK(sample_primes(3, 5) == std::vector<i64>{5, 7, 11});
    CHECK(sample_primes(4, 6) == std::vector<i64>{7, 11, 13, 17});
    CHECK(sample_primes(1, 2) == std::vector<i64>{2});
}

TEST_CASE("interpolation recovers integer polynomials and validates holdouts") {
    // q(q-1) through 4 samples, degree 2
    std::vector<i64> qs{5, 7, 11, 13};
    std::vector<i64> counts{20, 42, 110, 156};
    Poly p = interpolate_counts(qs, counts, 2);
    CHECK(p.coeffs() == std::vector<i64>{0, -1, 1});

    std::vector<i64> bad = counts;
    bad[3] = 157; // violate the held-out sample
    CHECK_THROWS_AS(interpolate_counts(qs, bad, 2), consistency_error);
    CHECK_THROWS_AS(interpolate_counts({5, 7}, {1, 2}, 2), std::invalid_argument);

    // fractional divided difference: no integer line passes through these
    CHECK_THROWS_AS(interpolate_counts({5, 7}, {2, 3}, 1), consistency_error);
}

TEST_CASE("count inversion") {
    // alternating: q^2 - 3q + 2 in dimension 2 -> betti (1, 3, 2)
    Poly counts({2, -3, 1});
    CHECK(betti_from_counts_alternating(counts, 2).coeffs() == std::vector<i64>{1, 3, 2});
    // proper: 1 + 5q + q^2 -> betti in even degrees (1,0,5,0,1)
    Poly proper({1, 5, 1});
    CHECK(betti_from_counts_proper(proper, 2).coeffs() == std::vector<i64>{1, 0, 5, 0, 1});
    Poly negative({-1, 1});
    CHECK_THROWS_AS(betti_from_counts_proper(negative, 1), consistency_error);
}

TEST_CASE("open Betti rows") {
    CHECK(betti_open(3).coeffs() == std::vector<i64>{1});
    CHECK(betti_open(4).coeffs() == std::vector<i64>{1, 2});
    CHECK(betti_open(5).coeffs() == std::vector<i64>{1, 5, 6});
    CHECK(betti_open(6).coeffs() == std::vector<i64>{1, 9, 26, 24});
}

TEST_CASE("stable Betti rows") {
    CHECK(poincare_mbar(4).coeffs() == std::vector<i64>{1, 0, 1});
    CHECK(poincare_mbar(5).coeffs() == std::vector<i64>{1, 0, 5, 0, 1});
    CHECK(poincare_mbar(6).coeffs() == std::vector<i64>{1, 0, 16, 0, 16, 0, 1});
    CHECK(poincare_mbar(6).palindromic());
}

TEST_CASE("decorated and framed rows") {
    CHECK(poincare_ld(1).coeffs() == std::vector<i64>{1});
    CHECK(poincare_ld(2).coeffs() == std::vector<i64>{1, 1});
    CHECK(poincare_ld(3).coeffs() == std::vector<i64>{1, 3, 2});
    CHECK(poincare_fld(1).coeffs() == std::vector<i64>{1, 1});
    CHECK(poincare_fld(2).coeffs() == std::vector<i64>{1, 3, 3, 1});
    // the framed row is the decorated row twisted by one line per mark
    for (int n = 1; n <= 5; ++n) {
        Poly expect = Poly::binomial_power(1, n) * poincare_ld(n);
        CHECK(poincare_fld(n) == expect);
        CHECK(poincare_fld(n).degree() == 2 * n - 1);
    }
}

TEST_CASE("top-weight row equals the framed decorated row") {
    for (int n = 1; n <= 5; ++n) CHECK(poincare_flc_top(n) == poincare_fld(n));
}

TEST_CASE("table bundle") {
    PoincareTables t = poincare_tables(5);
    CHECK(t.n == 5);
    CHECK(t.mbar.coeffs() == std::vector<i64>{1, 0, 5, 0, 1});
    CHECK(t.ld.coeffs() == std::vector<i64>{1, 10, 35, 50, 24});
    CHECK(t.fld == Poly::binomial_power(1, 5) * t.ld);
    CHECK(t.flc_top == t.fld);
    CHECK_THROWS_AS(poincare_tables(2), std::invalid_argument);
}
