#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace logcurves {

using i64 = long long;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// All counting paths stay in 64 bits; anything that could leave them throws.
inline i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
    return r;
}

inline i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
    return r;
}

inline bool is_prime_u64(i64 q) {
    if (q < 2) return false;
    for (i64 d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

// Raised when a cross-checked identity that must hold fails to hold.
struct consistency_error : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace logcurves
