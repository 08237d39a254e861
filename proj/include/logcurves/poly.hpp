#pragma once

#include <string>
#include <vector>

#include "logcurves/util.hpp"

namespace logcurves {

// Polynomial in one variable t with integer coefficients, coefficient of t^k
// at index k. Used for Poincare polynomials and point-count polynomials, so
// arithmetic is exact and overflow-checked.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<i64> coeffs);
    static Poly one();
    static Poly binomial_power(i64 a, int e); // (1 + a*t)^e

    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero poly
    i64 coeff(int k) const;
    const std::vector<i64>& coeffs() const { return c_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Exact division; throws consistency_error when the remainder is nonzero.
    Poly divide_exact(const Poly& divisor) const;

    i64 eval(i64 x) const;
    bool palindromic() const;
    bool nonnegative() const;
    bool odd_coeffs_vanish() const;
    std::string str(const std::string& var = "t") const;

private:
    void trim();
    std::vector<i64> c_;
};

} // namespace logcurves
