#pragma once

// Truncated formal power series with exact integer coefficients, plus a
// catalog builder with one entry per generating function used by the
// verification suites. Everything is numeric-truncated: no symbolic q, no
// rational normal forms.

#include <string>
#include <vector>

#include "esp/ints.hpp"

namespace esp {

class TruncatedSeries {
public:
    /// Zero series truncated at order N (coefficients c_0..c_N).
    explicit TruncatedSeries(Int order = 0);
    /// Takes the coefficients c_0..c_N directly (must be nonempty).
    explicit TruncatedSeries(std::vector<Int> coeffs);
    static TruncatedSeries monomial(Int coeff, Int degree, Int order);
    static TruncatedSeries one(Int order) { return monomial(1, 0, order); }

    Int order() const { return static_cast<Int>(coeffs_.size()) - 1; }
    Int coeff(Int n) const; // 0 outside range, throws beyond truncation
    const std::vector<Int>& coeffs() const { return coeffs_; }

    /// Re-truncates to a smaller order.
    TruncatedSeries truncated(Int order) const;

    /// Dump in b-file layout: one `n c_n` line per coefficient.
    std::string dump() const;

private:
    std::vector<Int> coeffs_;
};

/// Operations on mismatched orders truncate to the smaller one.
TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
/// Cauchy product truncated at the minimum order.
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries pow(const TruncatedSeries& a, Int e);
/// Multiply by q^k (shifting coefficients up, same order).
TruncatedSeries shift(const TruncatedSeries& a, Int k);

/// (1 - q^m)^{-exponent} for sign = -1, (1 + q^m)^{exponent} for sign = +1.
TruncatedSeries geom_factor(Int m, int sign, Int exponent, Int order);

/// Named generating functions. The infinite products include exactly the
/// factors whose lowest nonconstant monomial degree is <= N.
enum class Gf {
    A,         // q^2/(1-q)^2 * prod 1/(1-q^{2^i})
    B,         // q^3/((1-q)(1-q^2)) * prod 1/(1-q^{2^i})
    C,         // q^4(1+q+2q^2)/((1-q^2)(1-q^4)) * prod 1/(1-q^{2^i})
    A_D,       // q^2/(1-q)^2 * prod 1/(1-q^{d^i})
    B_D,       // q^{d+1}/((1-q)(1-q^d)) * prod 1/(1-q^{d^i})
    COLOR,     // q^2 * prod (1+q^{2^i})^{i+3}
    Q,         // prod (1+q^{2^i})^{i+3}
    COLOR_POW, // q^2 * prod (1+q^{2^i})^{floor(i/d)+3}
    COLOR_ODD, // q^2 * prod (1+q^{2^i})^2 * prod_{i,j} (1+q^{2^i (2d+1)^j})
};

TruncatedSeries gf(Gf name, Int order, Int d = 2);
/// Binary (or d-ary) partition generating function prod 1/(1-q^{d^i}).
TruncatedSeries gf_partitions(Int order, Int d = 2);

/// Checks 1/(1-q) = prod (1+q^{2^i}) through q^N together with its
/// q -> q^{2^n} substitutions for all n with 2^n <= N.
bool identity_check_euler(Int order);
/// Single substituted form 1/(1-q^{2^n}) = prod (1+q^{2^{i+n}}).
bool identity_check_euler_substituted(Int n, Int order);

/// Parses a catalog name like "A", "B_D", "COLOR_ODD" (case-insensitive).
Gf parse_gf(const std::string& name);

} // namespace esp
