#pragma once

// Exact integer arithmetic. All combinatorial accumulation in this library
// goes through the checked_* helpers: fixed-width 64-bit values with overflow
// detection that throws instead of wrapping.

#include <cstdint>

#include "esp/errors.hpp"

namespace esp {

using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("overflow in addition");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("overflow in subtraction");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("overflow in multiplication");
    return r;
}

inline Int checked_pow(Int base, Int exp) {
    Int r = 1;
    for (Int i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

/// Binomial coefficient with the combinatorial convention: 0 when n < 0,
/// k < 0 or k > n. Exact at every intermediate step.
inline Int binom(Int n, Int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (Int i = 1; i <= k; ++i) {
        r = checked_mul(r, n - k + i);
        r /= i; // exact: r is a running binomial coefficient
    }
    return r;
}

/// Largest s with s*s <= n (n >= 0).
inline Int isqrt(Int n) {
    if (n < 0) return -1;
    Int s = static_cast<Int>(__builtin_sqrt(static_cast<double>(n)));
    while (s > 0 && s * s > n) --s;
    while ((s + 1) * (s + 1) <= n) ++s;
    return s;
}

} // namespace esp
