#include "esp/colors.hpp"

#include <algorithm>
#include <map>

namespace esp {

namespace {

bool is_pow2(Int v) { return v >= 1 && (v & (v - 1)) == 0; }

Int log2_exact(Int v) {
    Int e = 0;
    while (v > 1) v >>= 1, ++e;
    return e;
}

void require(bool cond, const char* what) {
    if (!cond) throw MalformedInput(what);
}

} // namespace

Int ColorAlphabet::palette(Int value) const {
    if (value < 1) return 0;
    switch (family) {
        case ColorFamily::plain:
            return is_pow2(value) ? log2_exact(value) + 3 : 0;
        case ColorFamily::pow:
            if (d < 1) throw std::invalid_argument("pow family needs d >= 1");
            return is_pow2(value) ? log2_exact(value) / d + 3 : 0;
        case ColorFamily::odd: {
            if (d < 1) throw std::invalid_argument("odd family needs d >= 1");
            const Int odd = 2 * d + 1;
            Int rest = value;
            while (rest % 2 == 0) rest /= 2;
            if (rest == 1) return 3; // pure power of two
            while (rest % odd == 0) rest /= odd;
            return rest == 1 ? 1 : 0; // mixed 2^i (2d+1)^j, j >= 1
        }
    }
    return 0;
}

std::vector<ColoredPart> ColorAlphabet::parts_upto(Int cap) const {
    std::vector<ColoredPart> parts;
    for (Int v = 1; v <= cap; ++v)
        for (Int c = 1, p = palette(v); c <= p; ++c) parts.push_back({v, c});
    return parts;
}

ColoredPartition::ColoredPartition(std::vector<ColoredPart> parts) : parts_(std::move(parts)) {
    std::sort(parts_.begin(), parts_.end(), std::greater<>{});
    for (std::size_t i = 0; i + 1 < parts_.size(); ++i)
        if (parts_[i] == parts_[i + 1])
            throw std::invalid_argument("colored parts must be distinct");
    for (const ColoredPart& p : parts_) {
        if (p.value < 1 || p.color < 1) throw std::invalid_argument("bad colored part");
        weight_ = checked_add(weight_, p.value);
    }
}

std::string ColoredPartition::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += parts_[i].str();
    }
    s += ')';
    return s;
}

ColoredPartition parse_colored(std::string_view text) {
    if (text.size() < 2 || text.front() != '(' || text.back() != ')')
        throw ParseError("bad colored partition '" + std::string(text) + "'");
    std::string_view body = text.substr(1, text.size() - 2);
    std::vector<ColoredPart> parts;
    std::size_t pos = 0;
    while (pos < body.size()) {
        std::size_t comma = body.find(',', pos);
        std::string tok(body.substr(pos, comma == std::string_view::npos ? comma : comma - pos));
        auto us = tok.find('_');
        if (us == std::string::npos)
            throw ParseError("colored part '" + tok + "' needs value_color");
        try {
            parts.push_back({std::stoll(tok.substr(0, us)), std::stoll(tok.substr(us + 1))});
        } catch (const std::exception&) {
            throw ParseError("bad colored part '" + tok + "'");
        }
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return ColoredPartition(std::move(parts));
}

namespace {

void enumerate_Q_rec(const std::vector<ColoredPart>& alphabet, const std::vector<Int>& value_prefix_sum,
                     std::size_t next_below, Int remaining, std::vector<ColoredPart>& acc,
                     const std::function<void(const ColoredPartition&)>& visit) {
    if (remaining == 0) {
        visit(ColoredPartition(acc));
        return;
    }
    // parts available below `next_below` cannot cover the remaining weight
    if (next_below == 0 || value_prefix_sum[next_below] < remaining) return;
    for (std::size_t i = next_below; i-- > 0;) {
        if (alphabet[i].value > remaining) continue;
        if (value_prefix_sum[i + 1] < remaining) break; // even taking everything smaller fails
        acc.push_back(alphabet[i]);
        enumerate_Q_rec(alphabet, value_prefix_sum, i, remaining - alphabet[i].value, acc, visit);
        acc.pop_back();
    }
}

} // namespace

std::vector<ColoredPartition> enumerate_Q(ColorFamily family, Int d, Int m) {
    std::vector<ColoredPartition> out;
    if (m < 0) return out;
    ColorAlphabet alphabet{family, d};
    std::vector<ColoredPart> parts = alphabet.parts_upto(m);
    std::vector<Int> prefix(parts.size() + 1, 0);
    for (std::size_t i = 0; i < parts.size(); ++i)
        prefix[i + 1] = checked_add(prefix[i], parts[i].value);
    std::vector<ColoredPart> acc;
    enumerate_Q_rec(parts, prefix, parts.size(), m, acc,
                    [&](const ColoredPartition& q) { out.push_back(q); });
    return out;
}

Int count_Q(ColorFamily family, Int d, Int m) {
    if (m < 0) return 0;
    // subset-sum DP over the alphabet; each colored part used at most once
    ColorAlphabet alphabet{family, d};
    std::vector<ColoredPart> parts = alphabet.parts_upto(m);
    std::vector<Int> ways(static_cast<std::size_t>(m) + 1, 0);
    ways[0] = 1;
    for (const ColoredPart& p : parts)
        for (Int r = m; r >= p.value; --r)
            ways[static_cast<std::size_t>(r)] =
                checked_add(ways[static_cast<std::size_t>(r)], ways[static_cast<std::size_t>(r - p.value)]);
    return ways[static_cast<std::size_t>(m)];
}

Int count_Q_via_binomials(Int m) {
    if (m < 0) return 0;
    Int total = 0;
    enumerate(PartitionFamily::binary(m), [&](const Partition& lam) {
        Int prod = 1;
        for (auto [v, c] : lam.runs()) prod = checked_mul(prod, binom(log2_exact(v) + 3, c));
        total = checked_add(total, prod);
    });
    return total;
}

Int count_Q_via_binomials_pow(Int d, Int m) {
    if (d < 1) throw std::invalid_argument("d must be >= 1");
    if (m < 0) return 0;
    Int total = 0;
    enumerate(PartitionFamily::binary(m), [&](const Partition& lam) {
        Int prod = 1;
        for (auto [v, c] : lam.runs()) prod = checked_mul(prod, binom(log2_exact(v) / d + 3, c));
        total = checked_add(total, prod);
    });
    return total;
}

namespace {

// Digits of s in base 2: appends a colored part value_of(r) with the given
// color for every set bit r of s.
template <typename ValueOf>
void binary_recode(Int s, Int color, ValueOf value_of, std::vector<ColoredPart>& out) {
    for (Int r = 0; (Int{1} << r) <= s; ++r)
        if (s & (Int{1} << r)) out.push_back({value_of(r), color});
}

// Shared decomposition for the color bijections: mu = everything before the
// first rooted 1 (here: parts >= 2 plus the leading 1's), k / p = sizes of
// the 1-runs strictly between and strictly after the roots.
struct ColorSplit {
    Partition mu;
    Int k = 0;
    Int p = 0;
};

ColorSplit split_two_rooted_ones(const RootedPartition& rp) {
    if (rp.roots().size() != 2 || rp.roots()[0].value != 1 || rp.roots()[1].value != 1)
        throw MalformedInput("expected two rooted 1's");
    const Int s1 = rp.roots()[0].slot, s2 = rp.roots()[1].slot;
    ColorSplit sp;
    sp.mu = rp.base();
    sp.mu.remove(1, rp.base().mult(1) - s1);
    sp.k = s2 - s1 - 1;
    sp.p = rp.base().mult(1) - s2 - 1;
    return sp;
}

} // namespace

ColoredPartition br11_to_colored(const RootedPartition& rp) {
    for (auto [v, c] : rp.base().runs()) require(is_pow2(v), "expected a binary partition");
    ColorSplit sp = split_two_rooted_ones(rp);
    std::vector<ColoredPart> parts;
    for (auto [v, s] : sp.mu.runs()) {
        const Int t = log2_exact(v);
        // s copies of 2^t re-encode as the binary digits of s*2^t, color t+3
        binary_recode(checked_mul(s, v), t + 3, [](Int r) { return Int{1} << r; }, parts);
    }
    binary_recode(sp.k, 2, [](Int r) { return Int{1} << r; }, parts);
    binary_recode(sp.p, 1, [](Int r) { return Int{1} << r; }, parts);
    return ColoredPartition(std::move(parts));
}

RootedPartition colored_to_br11(const ColoredPartition& cp) {
    ColorAlphabet alphabet{ColorFamily::plain, 1};
    std::map<Int, Int> sums; // color t+3 -> sum of values
    Int between = 0, after = 0;
    for (const ColoredPart& p : cp.parts()) {
        require(is_pow2(p.value), "part values must be powers of two");
        require(p.color >= 1 && p.color <= alphabet.palette(p.value), "color outside the palette");
        if (p.color == 1)
            after = checked_add(after, p.value);
        else if (p.color == 2)
            between = checked_add(between, p.value);
        else
            sums[p.color] = checked_add(sums[p.color], p.value);
    }
    Partition base;
    for (auto [color, sum] : sums) {
        const Int t = color - 3;
        const Int value = Int{1} << t;
        // palette validity forces every digit of the sum to sit at 2^t or above
        base.add(value, sum / value);
    }
    const Int lead = base.mult(1);
    base.add(1, 2 + between + after);
    return RootedPartition(std::move(base), {{1, lead}, {1, lead + 1 + between}});
}

ColoredPartition pr11_to_colored_odd(const RootedPartition& rp, Int d) {
    if (d < 1) throw std::invalid_argument("d must be >= 1");
    const Int odd = 2 * d + 1;
    for (auto [v, c] : rp.base().runs()) {
        Int rest = v;
        while (rest % odd == 0) rest /= odd;
        require(rest == 1, "expected a (2d+1)-ary partition");
    }
    ColorSplit sp = split_two_rooted_ones(rp);
    std::vector<ColoredPart> parts;
    for (auto [v, s] : sp.mu.runs())
        binary_recode(s, 1, [v](Int r) { return checked_mul(Int{1} << r, v); }, parts);
    binary_recode(sp.k, 2, [](Int r) { return Int{1} << r; }, parts);
    binary_recode(sp.p, 3, [](Int r) { return Int{1} << r; }, parts);
    return ColoredPartition(std::move(parts));
}

RootedPartition colored_odd_to_pr11(const ColoredPartition& cp, Int d) {
    if (d < 1) throw std::invalid_argument("d must be >= 1");
    const Int odd = 2 * d + 1;
    ColorAlphabet alphabet{ColorFamily::odd, d};
    std::map<Int, Int> mult; // (2d+1)^t -> multiplicity
    Int between = 0, after = 0;
    for (const ColoredPart& p : cp.parts()) {
        require(p.color >= 1 && p.color <= alphabet.palette(p.value), "color outside the palette");
        if (p.color == 2) {
            between = checked_add(between, p.value);
        } else if (p.color == 3) {
            after = checked_add(after, p.value);
        } else {
            Int two_part = 1, rest = p.value;
            while (rest % 2 == 0) rest /= 2, two_part *= 2;
            mult[rest] = checked_add(mult[rest], two_part);
        }
    }
    Partition base;
    for (auto [v, s] : mult) base.add(v, s);
    const Int lead = base.mult(1);
    base.add(1, 2 + between + after);
    return RootedPartition(std::move(base), {{1, lead}, {1, lead + 1 + between}});
}

} // namespace esp
