#include "esp/series.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace esp {

TruncatedSeries::TruncatedSeries(Int order) {
    if (order < 0) throw std::invalid_argument("truncation order must be >= 0");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, 0);
}

TruncatedSeries::TruncatedSeries(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("a series needs at least c_0");
}

TruncatedSeries TruncatedSeries::monomial(Int coeff, Int degree, Int order) {
    if (degree < 0) throw std::invalid_argument("degree must be >= 0");
    TruncatedSeries s(order);
    if (degree <= order) s.coeffs_[static_cast<std::size_t>(degree)] = coeff;
    return s;
}

Int TruncatedSeries::coeff(Int n) const {
    if (n < 0) return 0;
    if (n > order()) throw std::out_of_range("coefficient beyond truncation order");
    return coeffs_[static_cast<std::size_t>(n)];
}

TruncatedSeries TruncatedSeries::truncated(Int order) const {
    if (order > this->order()) throw std::out_of_range("cannot extend a truncated series");
    std::vector<Int> c(coeffs_.begin(), coeffs_.begin() + order + 1);
    return TruncatedSeries(std::move(c));
}

std::string TruncatedSeries::dump() const {
    std::string out;
    for (std::size_t n = 0; n < coeffs_.size(); ++n)
        out += std::to_string(n) + " " + std::to_string(coeffs_[n]) + "\n";
    return out;
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
    const Int order = std::min(a.order(), b.order());
    std::vector<Int> c(static_cast<std::size_t>(order) + 1);
    for (Int n = 0; n <= order; ++n)
        c[static_cast<std::size_t>(n)] = checked_add(a.coeff(n), b.coeff(n));
    return TruncatedSeries(std::move(c));
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    const Int order = std::min(a.order(), b.order());
    std::vector<Int> c(static_cast<std::size_t>(order) + 1);
    for (Int n = 0; n <= order; ++n)
        c[static_cast<std::size_t>(n)] = checked_sub(a.coeff(n), b.coeff(n));
    return TruncatedSeries(std::move(c));
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    const Int order = std::min(a.order(), b.order());
    std::vector<Int> c(static_cast<std::size_t>(order) + 1, 0);
    for (Int i = 0; i <= order; ++i) {
        const Int ai = a.coeff(i);
        if (ai == 0) continue;
        for (Int j = 0; i + j <= order; ++j) {
            const Int bj = b.coeff(j);
            if (bj == 0) continue;
            auto& slot = c[static_cast<std::size_t>(i + j)];
            slot = checked_add(slot, checked_mul(ai, bj));
        }
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries pow(const TruncatedSeries& a, Int e) {
    if (e < 0) throw std::invalid_argument("exponent must be >= 0");
    TruncatedSeries r = TruncatedSeries::one(a.order());
    for (Int i = 0; i < e; ++i) r = mul(r, a);
    return r;
}

TruncatedSeries shift(const TruncatedSeries& a, Int k) {
    if (k < 0) throw std::invalid_argument("shift must be >= 0");
    std::vector<Int> c(static_cast<std::size_t>(a.order()) + 1, 0);
    for (Int n = k; n <= a.order(); ++n)
        c[static_cast<std::size_t>(n)] = a.coeff(n - k);
    return TruncatedSeries(std::move(c));
}

TruncatedSeries geom_factor(Int m, int sign, Int exponent, Int order) {
    if (m < 1) throw std::invalid_argument("monomial degree must be >= 1");
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    TruncatedSeries base(order);
    if (sign == -1) {
        // 1/(1-q^m) = sum q^{jm}
        std::vector<Int> c(static_cast<std::size_t>(order) + 1, 0);
        for (Int n = 0; n <= order; n += m) c[static_cast<std::size_t>(n)] = 1;
        base = TruncatedSeries(std::move(c));
    } else {
        base = add(TruncatedSeries::one(order), TruncatedSeries::monomial(1, m, order));
    }
    return pow(base, exponent);
}

TruncatedSeries gf_partitions(Int order, Int d) {
    if (d < 2) throw std::invalid_argument("d must be >= 2");
    TruncatedSeries r = TruncatedSeries::one(order);
    for (Int p = 1; p <= order; p = checked_mul(p, d)) r = mul(r, geom_factor(p, -1, 1, order));
    return r;
}

TruncatedSeries gf(Gf name, Int order, Int d) {
    const Int N = order;
    switch (name) {
        case Gf::A:
            return mul(shift(geom_factor(1, -1, 2, N), 2), gf_partitions(N, 2));
        case Gf::B:
            return mul(shift(mul(geom_factor(1, -1, 1, N), geom_factor(2, -1, 1, N)), 3),
                       gf_partitions(N, 2));
        case Gf::C: {
            TruncatedSeries num = add(add(TruncatedSeries::one(N), TruncatedSeries::monomial(1, 1, N)),
                                      TruncatedSeries::monomial(2, 2, N));
            TruncatedSeries head = shift(mul(num, mul(geom_factor(2, -1, 1, N), geom_factor(4, -1, 1, N))), 4);
            return mul(head, gf_partitions(N, 2));
        }
        case Gf::A_D:
            return mul(shift(geom_factor(1, -1, 2, N), 2), gf_partitions(N, d));
        case Gf::B_D:
            return mul(shift(mul(geom_factor(1, -1, 1, N), geom_factor(d, -1, 1, N)), d + 1),
                       gf_partitions(N, d));
        case Gf::COLOR:
            return shift(gf(Gf::Q, N, d), 2);
        case Gf::Q: {
            TruncatedSeries r = TruncatedSeries::one(N);
            Int i = 0;
            for (Int p = 1; p <= N; p = checked_mul(p, 2), ++i) r = mul(r, geom_factor(p, 1, i + 3, N));
            return r;
        }
        case Gf::COLOR_POW: {
            if (d < 1) throw std::invalid_argument("d must be >= 1");
            TruncatedSeries r = TruncatedSeries::one(N);
            Int i = 0;
            for (Int p = 1; p <= N; p = checked_mul(p, 2), ++i) r = mul(r, geom_factor(p, 1, i / d + 3, N));
            return shift(r, 2);
        }
        case Gf::COLOR_ODD: {
            if (d < 1) throw std::invalid_argument("d must be >= 1");
            const Int odd = 2 * d + 1;
            TruncatedSeries r = TruncatedSeries::one(N);
            for (Int p = 1; p <= N; p = checked_mul(p, 2)) r = mul(r, geom_factor(p, 1, 2, N));
            for (Int two = 1; two <= N; two = checked_mul(two, 2))
                for (Int mixed = two; mixed <= N; mixed = checked_mul(mixed, odd))
                    r = mul(r, geom_factor(mixed, 1, 1, N));
            return shift(r, 2);
        }
    }
    throw std::invalid_argument("unknown generating function");
}

bool identity_check_euler(Int order) {
    for (Int n = 0; (Int{1} << n) <= std::max<Int>(order, 1); ++n)
        if (!identity_check_euler_substituted(n, order)) return false;
    return true;
}

bool identity_check_euler_substituted(Int n, Int order) {
    const Int step = Int{1} << n;
    TruncatedSeries lhs = geom_factor(step, -1, 1, order);
    TruncatedSeries rhs = TruncatedSeries::one(order);
    for (Int p = step; p <= order; p = checked_mul(p, 2)) rhs = mul(rhs, geom_factor(p, 1, 1, order));
    return lhs.coeffs() == rhs.coeffs();
}

Gf parse_gf(const std::string& name) {
    std::string u;
    for (char ch : name) u += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    if (u == "A" || u == "GF_A") return Gf::A;
    if (u == "B" || u == "GF_B") return Gf::B;
    if (u == "C" || u == "GF_C") return Gf::C;
    if (u == "A_D" || u == "GF_A_D") return Gf::A_D;
    if (u == "B_D" || u == "GF_B_D") return Gf::B_D;
    if (u == "COLOR" || u == "GF_COLOR") return Gf::COLOR;
    if (u == "Q" || u == "GF_Q") return Gf::Q;
    if (u == "COLOR_POW" || u == "GF_COLOR_POW") return Gf::COLOR_POW;
    if (u == "COLOR_ODD" || u == "GF_COLOR_ODD") return Gf::COLOR_ODD;
    throw std::invalid_argument("unknown generating function '" + name + "'");
}

} // namespace esp
