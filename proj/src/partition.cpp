#include "esp/partition.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace esp {

Partition Partition::from_parts(std::span<const Int> parts) {
    std::map<Int, Int, std::greater<>> m;
    for (Int v : parts) {
        if (v < 1) throw std::invalid_argument("partition parts must be >= 1");
        ++m[v];
    }
    Partition p;
    for (auto [v, c] : m) p.add(v, c);
    return p;
}

Partition Partition::from_parts(std::initializer_list<Int> parts) {
    return from_parts(std::span<const Int>(parts.begin(), parts.size()));
}

Partition Partition::from_runs(std::vector<Run> runs) {
    std::sort(runs.begin(), runs.end(), std::greater<>{});
    Partition p;
    for (auto [v, c] : runs) {
        if (!p.runs_.empty() && p.runs_.back().first == v)
            throw std::invalid_argument("duplicate value in runs");
        p.add(v, c);
    }
    return p;
}

Int Partition::mult(Int value) const {
    auto it = std::lower_bound(runs_.begin(), runs_.end(), value,
                               [](const Run& r, Int v) { return r.first > v; });
    if (it != runs_.end() && it->first == value) return it->second;
    return 0;
}

std::vector<Int> Partition::sequence() const {
    std::vector<Int> seq;
    seq.reserve(static_cast<std::size_t>(length_));
    for (auto [v, c] : runs_)
        for (Int i = 0; i < c; ++i) seq.push_back(v);
    return seq;
}

void Partition::add(Int value, Int count) {
    if (count == 0) return;
    if (value < 1 || count < 0) throw std::invalid_argument("bad part or multiplicity");
    auto it = std::lower_bound(runs_.begin(), runs_.end(), value,
                               [](const Run& r, Int v) { return r.first > v; });
    if (it != runs_.end() && it->first == value)
        it->second = checked_add(it->second, count);
    else
        runs_.insert(it, {value, count});
    weight_ = checked_add(weight_, checked_mul(value, count));
    length_ = checked_add(length_, count);
}

void Partition::remove(Int value, Int count) {
    if (count == 0) return;
    auto it = std::lower_bound(runs_.begin(), runs_.end(), value,
                               [](const Run& r, Int v) { return r.first > v; });
    if (it == runs_.end() || it->first != value || it->second < count)
        throw std::invalid_argument("removing parts that are not present");
    it->second -= count;
    if (it->second == 0) runs_.erase(it);
    weight_ -= value * count;
    length_ -= count;
}

std::strong_ordering Partition::operator<=>(const Partition& o) const {
    // Run-wise comparison equivalent to lexicographic comparison of the
    // sequence views: at the first differing run, a larger value wins; at
    // equal values a larger multiplicity wins (what follows is smaller).
    std::size_t i = 0, j = 0;
    while (i < runs_.size() && j < o.runs_.size()) {
        if (runs_[i].first != o.runs_[j].first)
            return runs_[i].first <=> o.runs_[j].first;
        if (runs_[i].second != o.runs_[j].second)
            return runs_[i].second <=> o.runs_[j].second;
        ++i, ++j;
    }
    return (runs_.size() - i) <=> (o.runs_.size() - j);
}

std::string Partition::str() const {
    std::string s = "(";
    bool first = true;
    for (auto [v, c] : runs_)
        for (Int k = 0; k < c; ++k) {
            if (!first) s += ',';
            s += std::to_string(v);
            first = false;
        }
    s += ')';
    return s;
}

Partition parse_partition(std::string_view text) {
    auto fail = [&](const std::string& why) -> ParseError {
        return ParseError("bad partition '" + std::string(text) + "': " + why);
    };
    if (text.size() < 2 || text.front() != '(' || text.back() != ')') throw fail("missing parentheses");
    std::string_view body = text.substr(1, text.size() - 2);
    Partition p;
    if (body.empty()) return p;
    Int prev = 0;
    std::size_t pos = 0;
    while (pos <= body.size()) {
        std::size_t comma = body.find(',', pos);
        std::string_view tok = body.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
        std::size_t parsed = 0;
        Int v = 0;
        try {
            v = std::stoll(std::string(tok), &parsed);
        } catch (const std::exception&) {
            throw fail("not an integer: '" + std::string(tok) + "'");
        }
        if (parsed != tok.size() || v < 1) throw fail("parts must be positive integers");
        if (prev != 0 && v > prev) throw fail("parts must be weakly decreasing");
        p.add(v, 1);
        prev = v;
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return p;
}

Partition direct_sum(const Partition& a, const Partition& b) {
    Partition r = a;
    for (auto [v, c] : b.runs()) r.add(v, c);
    return r;
}

Partition scale(const Partition& p, Int m) {
    if (m < 1) throw std::invalid_argument("scale factor must be >= 1");
    Partition r;
    for (auto [v, c] : p.runs()) r.add(checked_mul(v, m), c);
    return r;
}

Partition unscale(const Partition& p, Int m) {
    if (m < 1) throw std::invalid_argument("scale factor must be >= 1");
    Partition r;
    for (auto [v, c] : p.runs()) {
        if (v % m != 0)
            throw NotDivisible("part " + std::to_string(v) + " not divisible by " + std::to_string(m));
        r.add(v / m, c);
    }
    return r;
}

std::size_t hash_value(const Partition& p) {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    auto mix = [&h](std::size_t x) {
        h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    };
    for (auto [v, c] : p.runs()) {
        mix(static_cast<std::size_t>(v));
        mix(static_cast<std::size_t>(c));
    }
    return h;
}

std::vector<Int> PartitionFamily::allowed_parts(Int cap) const {
    std::vector<Int> parts;
    if (cap < 1) return parts;
    switch (kind) {
        case Kind::all:
            for (Int v = cap; v >= 1; --v) parts.push_back(v);
            break;
        case Kind::binary:
            for (Int v = 1; v <= cap; v = checked_mul(v, 2)) parts.push_back(v);
            std::reverse(parts.begin(), parts.end());
            break;
        case Kind::dary: {
            if (d < 2) throw std::invalid_argument("d-ary families need d >= 2");
            for (Int v = 1; v <= cap; v = checked_mul(v, d)) parts.push_back(v);
            std::reverse(parts.begin(), parts.end());
            break;
        }
    }
    return parts;
}

std::string PartitionFamily::str() const {
    std::string s;
    switch (kind) {
        case Kind::all: s = "P"; break;
        case Kind::binary: s = "B"; break;
        case Kind::dary: s = "P[d=" + std::to_string(d) + "]"; break;
    }
    s += "(" + std::to_string(n) + ")";
    if (min_length > 0) s += " len>=" + std::to_string(min_length);
    return s;
}

namespace {

void enumerate_rec(const std::vector<Int>& parts, std::size_t idx, Int remaining,
                   Int min_length, Partition& acc,
                   const std::function<void(const Partition&)>& visit) {
    if (remaining == 0) {
        if (acc.length() >= min_length) visit(acc);
        return;
    }
    // All families allow part 1, so the longest completion has `remaining`
    // extra parts.
    if (acc.length() + remaining < min_length) return;
    for (std::size_t i = idx; i < parts.size(); ++i) {
        if (parts[i] > remaining) continue;
        acc.add(parts[i], 1);
        enumerate_rec(parts, i, remaining - parts[i], min_length, acc, visit);
        acc.remove(parts[i], 1);
    }
}

} // namespace

void enumerate(const PartitionFamily& family, const std::function<void(const Partition&)>& visit) {
    if (family.n < 0) return;
    if (family.n == 0) {
        if (family.min_length <= 0) visit(Partition{});
        return;
    }
    std::vector<Int> parts = family.allowed_parts(family.n);
    Partition acc;
    enumerate_rec(parts, 0, family.n, family.min_length, acc, visit);
}

std::vector<Partition> enumerate_list(const PartitionFamily& family) {
    std::vector<Partition> out;
    enumerate(family, [&](const Partition& p) { out.push_back(p); });
    return out;
}

Int count(const PartitionFamily& family) {
    if (family.n < 0) return 0;
    if (family.n == 0) return family.min_length <= 0 ? 1 : 0;
    const Int n = family.n;
    std::vector<Int> parts = family.allowed_parts(n);
    if (family.min_length <= 0) {
        // plain coin-count DP
        std::vector<Int> ways(static_cast<std::size_t>(n) + 1, 0);
        ways[0] = 1;
        for (Int p : parts)
            for (Int r = p; r <= n; ++r)
                ways[r] = checked_add(ways[r], ways[r - p]);
        return ways[static_cast<std::size_t>(n)];
    }
    // DP over (weight, number of parts); lengths never exceed the weight.
    std::vector<std::vector<Int>> ways(static_cast<std::size_t>(n) + 1,
                                       std::vector<Int>(static_cast<std::size_t>(n) + 1, 0));
    ways[0][0] = 1;
    for (Int p : parts)
        for (Int r = p; r <= n; ++r)
            for (Int l = 1; l <= r; ++l)
                ways[r][l] = checked_add(ways[r][l], ways[r - p][l - 1]);
    Int total = 0;
    for (Int l = family.min_length; l <= n; ++l)
        total = checked_add(total, ways[static_cast<std::size_t>(n)][static_cast<std::size_t>(l)]);
    return total;
}

std::vector<Int> count_table(PartitionFamily::Kind kind, Int d, Int n_max) {
    if (n_max < 0) return {};
    PartitionFamily proto{kind, d, n_max, 0};
    std::vector<Int> parts = proto.allowed_parts(n_max);
    std::vector<Int> ways(static_cast<std::size_t>(n_max) + 1, 0);
    ways[0] = 1;
    for (Int p : parts)
        for (Int r = p; r <= n_max; ++r)
            ways[r] = checked_add(ways[r], ways[r - p]);
    return ways;
}

} // namespace esp
