#include "logcurves/poly.hpp"

#include <algorithm>

namespace logcurves {

Poly::Poly(std::vector<i64> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::one() { return Poly({1}); }

Poly Poly::binomial_power(i64 a, int e) {
    Poly r = one();
    Poly base({1, a});
    for (int k = 0; k < e; ++k) r = r * base;
    return r;
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

i64 Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
    return c_[k];
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<i64> r(std::max(c_.size(), o.c_.size()), 0);
    for (size_t k = 0; k < r.size(); ++k)
        r[k] = checked_add(coeff(static_cast<int>(k)), o.coeff(static_cast<int>(k)));
    return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
    std::vector<i64> r(std::max(c_.size(), o.c_.size()), 0);
    for (size_t k = 0; k < r.size(); ++k)
        r[k] = checked_add(coeff(static_cast<int>(k)), -o.coeff(static_cast<int>(k)));
    return Poly(std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
    if (c_.empty() || o.c_.empty()) return Poly();
    std::vector<i64> r(c_.size() + o.c_.size() - 1, 0);
    for (size_t a = 0; a < c_.size(); ++a)
        for (size_t b = 0; b < o.c_.size(); ++b)
            r[a + b] = checked_add(r[a + b], checked_mul(c_[a], o.c_[b]));
    return Poly(std::move(r));
}

Poly Poly::divide_exact(const Poly& divisor) const {
    if (divisor.c_.empty()) throw std::invalid_argument("division by zero polynomial");
    std::vector<i64> rem = c_;
    std::vector<i64> quot(rem.size() > divisor.c_.size() - 1 ? rem.size() - divisor.c_.size() + 1 : 0, 0);
    const i64 lead = divisor.c_.back();
    for (int k = static_cast<int>(rem.size()) - 1; k >= static_cast<int>(divisor.c_.size()) - 1; --k) {
        if (rem[k] == 0) continue;
        if (rem[k] % lead != 0) throw consistency_error("polynomial division is not exact");
        i64 q = rem[k] / lead;
        int shift = k - (static_cast<int>(divisor.c_.size()) - 1);
        quot[shift] = q;
        for (size_t j = 0; j < divisor.c_.size(); ++j)
            rem[shift + j] = checked_add(rem[shift + j], -checked_mul(q, divisor.c_[j]));
    }
    for (i64 v : rem)
        if (v != 0) throw consistency_error("polynomial division leaves a remainder");
    return Poly(std::move(quot));
}

i64 Poly::eval(i64 x) const {
    i64 acc = 0;
    for (int k = degree(); k >= 0; --k) acc = checked_add(checked_mul(acc, x), c_[k]);
    return acc;
}

bool Poly::palindromic() const {
    int d = degree();
    for (int k = 0; k <= d; ++k)
        if (coeff(k) != coeff(d - k)) return false;
    return true;
}

bool Poly::nonnegative() const {
    for (i64 v : c_)
        if (v < 0) return false;
    return true;
}

bool Poly::odd_coeffs_vanish() const {
    for (int k = 1; k <= degree(); k += 2)
        if (coeff(k) != 0) return false;
    return true;
}

std::string Poly::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::string s;
    for (int k = 0; k <= degree(); ++k) {
        i64 v = coeff(k);
        if (v == 0) continue;
        if (!s.empty()) s += v > 0 ? " + " : " - ";
        else if (v < 0) s += "-";
        i64 a = v > 0 ? v : -v;
        if (k == 0) s += std::to_string(a);
        else {
            if (a != 1) s += std::to_string(a) + "*";
            s += var;
            if (k > 1) s += "^" + std::to_string(k);
        }
    }
    return s;
}

} // namespace logcurves
