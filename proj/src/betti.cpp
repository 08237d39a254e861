#include "logcurves/betti.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>

namespace logcurves {

namespace {

constexpr i64 kMaxQ = 62; // value bitmasks live in a 64-bit word

void validate_q(i64 q) {
    if (q < 2 || q > kMaxQ) throw std::invalid_argument("point-count sweeps support 2 <= q <= 62");
}

// ordered tuples of `remaining` further values from the allowed set
// {low, ..., q-1} minus the ones marked used
i64 tuples_from(int remaining, i64 q, i64 low, unsigned long long used) {
    if (remaining == 0) return 1;
    i64 total = 0;
    for (i64 v = low; v < q; ++v)
        if (!(used >> v & 1ULL)) total += tuples_from(remaining - 1, q, low, used | (1ULL << v));
    return total;
}

} // namespace

i64 count_open(int n, i64 q) {
    if (n < 3) throw std::invalid_argument("open count needs at least three marks");
    validate_q(q);
    const int k = n - 3;
    if (k == 0) return 1;
    i64 total = 0;
#pragma omp parallel for reduction(+ : total) schedule(static)
    for (i64 v = 2; v < q; ++v) total += tuples_from(k - 1, q, 2, 1ULL << v);
    return total;
}

i64 count_open_serial(int n, i64 q) {
    if (n < 3) throw std::invalid_argument("open count needs at least three marks");
    validate_q(q);
    const int k = n - 3;
    if (k == 0) return 1;
    // odometer over ordered k-tuples with entries in {2, ..., q-1}
    std::vector<i64> x(k, 2);
    i64 total = 0;
    while (true) {
        bool distinct = true;
        for (int a = 0; a < k && distinct; ++a)
            for (int b = a + 1; b < k; ++b)
                if (x[a] == x[b]) { distinct = false; break; }
        if (distinct) ++total;
        int pos = k - 1;
        while (pos >= 0 && x[pos] == q - 1) x[pos--] = 2;
        if (pos < 0) break;
        ++x[pos];
    }
    return total;
}

i64 count_bar(int n, i64 q) {
    if (n < 3) throw std::invalid_argument("stable count needs at least three marks");
    validate_q(q);
    std::map<int, i64> open_memo;
    const auto& trees = all_trees(n - 1);
    for (const auto& t : trees)
        for (int v : t.valences())
            if (!open_memo.count(v)) open_memo[v] = count_open(v, q);
    i64 total = 0;
    for (const auto& t : trees) {
        i64 prod = 1;
        for (int v : t.valences()) prod = checked_mul(prod, open_memo.at(v));
        total = checked_add(total, prod);
    }
    return total;
}

i64 count_ld(int n, i64 q) {
    if (n < 1) throw std::invalid_argument("decorated count needs arity >= 1");
    validate_q(q);
    i64 total = 1;
    for (i64 k = 1; k <= n - 1; ++k) total = checked_mul(total, q - k);
    return total;
}

i64 count_ld_brute(int n, i64 q) {
    if (n < 1) throw std::invalid_argument("decorated count needs arity >= 1");
    validate_q(q);
    const int k = n - 1;
    if (k == 0) return 1;
    i64 total = 0;
    for (i64 v = 1; v < q; ++v) total += tuples_from(k - 1, q, 1, 1ULL << v);
    return total;
}

std::vector<i64> sample_primes(int count, i64 floor_value) {
    std::vector<i64> out;
    for (i64 p = std::max<i64>(2, floor_value); static_cast<int>(out.size()) < count; ++p)
        if (is_prime_u64(p)) out.push_back(p);
    return out;
}

Poly interpolate_counts(const std::vector<i64>& qs, const std::vector<i64>& counts, int degree) {
    if (degree < 0) throw std::invalid_argument("negative degree");
    const int k = degree + 1;
    if (static_cast<int>(qs.size()) < k || qs.size() != counts.size())
        throw std::invalid_argument("not enough samples to interpolate");

    // Newton divided differences on the first degree+1 samples
    std::vector<Rational> dd(counts.begin(), counts.begin() + k);
    for (int level = 1; level < k; ++level)
        for (int i = k - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / Rational(qs[i] - qs[i - level]);

    // expand the Newton form into monomial coefficients
    std::vector<Rational> acc(1, dd[k - 1]);
    for (int i = k - 2; i >= 0; --i) {
        std::vector<Rational> next(acc.size() + 1, Rational(0));
        for (size_t j = 0; j < acc.size(); ++j) {
            next[j + 1] += acc[j];
            next[j] -= acc[j] * Rational(qs[i]);
        }
        next[0] += dd[i];
        acc = std::move(next);
    }

    std::vector<i64> coeffs;
    for (const auto& r : acc) {
        if (boost::multiprecision::denominator(r) != 1)
            throw consistency_error("point counts do not interpolate an integer polynomial");
        BigInt num = boost::multiprecision::numerator(r);
        if (num > std::numeric_limits<i64>::max() || num < std::numeric_limits<i64>::min())
            throw std::overflow_error("interpolated coefficient exceeds 64 bits");
        coeffs.push_back(num.convert_to<i64>());
    }
    Poly p(std::move(coeffs));
    for (size_t i = k; i < qs.size(); ++i)
        if (p.eval(qs[i]) != counts[i])
            throw consistency_error("interpolated count polynomial fails on a held-out prime");
    return p;
}

Poly betti_from_counts_alternating(const Poly& count_poly, int dim) {
    if (count_poly.degree() > dim) throw consistency_error("count polynomial degree exceeds the dimension");
    std::vector<i64> b(dim + 1, 0);
    for (int j = 0; j <= dim; ++j) {
        i64 v = count_poly.coeff(dim - j);
        b[j] = (j % 2 == 0) ? v : -v;
        if (b[j] < 0) throw consistency_error("count polynomial has a sign pattern incompatible with purity");
    }
    return Poly(std::move(b));
}

Poly betti_from_counts_proper(const Poly& count_poly, int dim) {
    if (count_poly.degree() > dim) throw consistency_error("count polynomial degree exceeds the dimension");
    std::vector<i64> b(2 * dim + 1, 0);
    for (int k = 0; k <= dim; ++k) {
        i64 v = count_poly.coeff(k);
        if (v < 0) throw consistency_error("proper count polynomial has a negative coefficient");
        b[2 * k] = v;
    }
    return Poly(std::move(b));
}

Poly betti_open(int n) {
    if (n < 3) throw std::invalid_argument("open moduli need at least three marks");
    Poly closed = Poly::one();
    for (i64 k = 2; k <= n - 2; ++k) closed = closed * Poly::binomial_power(k, 1);

    const int dim = n - 3;
    auto qs = sample_primes(dim + 2, std::max<i64>(5, n - 1));
    std::vector<i64> counts;
    for (i64 q : qs) counts.push_back(count_open(n, q));
    Poly counted = betti_from_counts_alternating(interpolate_counts(qs, counts, dim), dim);
    if (!(closed == counted))
        throw consistency_error("open Betti numbers disagree between the product formula and point counts");
    return closed;
}

Poly betti_mbar(int n) {
    if (n < 3) throw std::invalid_argument("stable moduli need at least three marks");
    const int dim = n - 3;
    auto qs = sample_primes(dim + 2, std::max<i64>(5, n - 1));
    std::vector<i64> counts;
    for (i64 q : qs) counts.push_back(count_bar(n, q));
    Poly p = betti_from_counts_proper(interpolate_counts(qs, counts, dim), dim);
    if (!p.palindromic() || p.coeff(0) != 1)
        throw consistency_error("stable Betti numbers fail Poincare duality checks");
    return p;
}

Poly poincare_mbar(int n) { return betti_mbar(n); }

Poly poincare_ld(int n) {
    if (n < 1) throw std::invalid_argument("decorated row needs arity >= 1");
    Poly closed = Poly::one();
    for (i64 k = 1; k <= n - 1; ++k) closed = closed * Poly::binomial_power(k, 1);

    const int dim = n - 1;
    auto qs = sample_primes(dim + 2, std::max<i64>(5, n));
    std::vector<i64> counts;
    for (i64 q : qs) counts.push_back(count_ld(n, q));
    if (n <= 4)
        for (i64 q : qs)
            if (count_ld_brute(n, q) != count_ld(n, q))
                throw consistency_error("decorated configuration counts disagree with brute enumeration");
    Poly counted = betti_from_counts_alternating(interpolate_counts(qs, counts, dim), dim);
    if (!(closed == counted))
        throw consistency_error("decorated Betti numbers disagree between the product formula and point counts");
    return closed;
}

Poly poincare_fld(int n) {
    Poly p = Poly::binomial_power(1, n) * poincare_ld(n);
    if (p.degree() != 2 * n - 1) throw consistency_error("framed decorated row has the wrong degree");
    return p;
}

Poly poincare_flc_top(int n) {
    if (n < 1) throw std::invalid_argument("top-weight row needs arity >= 1");
    Poly p = n == 1 ? Poly::binomial_power(1, 1) : Poly::binomial_power(1, n + 1) * betti_open(n + 1);
    if (!(p == poincare_fld(n)))
        throw consistency_error("top-weight row disagrees with the framed decorated row");
    return p;
}

PoincareTables poincare_tables(int n) {
    if (n < 3) throw std::invalid_argument("tables need n >= 3");
    PoincareTables t;
    t.n = n;
    t.mbar = poincare_mbar(n);
    t.flc_top = poincare_flc_top(n);
    t.fld = poincare_fld(n);
    t.ld = poincare_ld(n);
    return t;
}

} // namespace logcurves
