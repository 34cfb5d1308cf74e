#include "esp/rooted.hpp"

#include <algorithm>

namespace esp {

namespace {

bool is_binary_value(Int v) { return v >= 1 && (v & (v - 1)) == 0; }

bool is_binary(const Partition& p) {
    for (auto [v, c] : p.runs())
        if (!is_binary_value(v)) return false;
    return true;
}

void require(bool cond, const char* what) {
    if (!cond) throw MalformedInput(what);
}

/// Parts of `p` that are >= 2, i.e. the partition minus its 1-run.
Partition strip_ones(const Partition& p) {
    Partition r = p;
    if (Int m1 = p.mult(1); m1 > 0) r.remove(1, m1);
    return r;
}

Partition ones(Int count) {
    Partition r;
    r.add(1, count);
    return r;
}

} // namespace

RootedPartition::RootedPartition(Partition base, std::vector<Root> roots)
    : base_(std::move(base)), roots_(std::move(roots)) {
    if (roots_.empty() || roots_.size() > 2)
        throw std::invalid_argument("rooted partitions carry one or two roots");
    // sequence order: larger value first, then smaller slot
    std::sort(roots_.begin(), roots_.end(), [](const Root& a, const Root& b) {
        if (a.value != b.value) return a.value > b.value;
        return a.slot < b.slot;
    });
    for (const Root& r : roots_) {
        if (r.slot < 0 || r.slot >= base_.mult(r.value))
            throw std::invalid_argument("root slot out of range");
    }
    if (roots_.size() == 2 && roots_[0] == roots_[1])
        throw std::invalid_argument("roots occupy the same (value, slot)");
}

std::string RootedPartition::str() const {
    std::string s = "(";
    bool first = true;
    for (auto [v, c] : base_.runs()) {
        for (Int slot = 0; slot < c; ++slot) {
            if (!first) s += ',';
            first = false;
            for (const Root& r : roots_)
                if (r.value == v && r.slot == slot) {
                    s += '^';
                    break;
                }
            s += std::to_string(v);
        }
    }
    s += ')';
    return s;
}

RootedPartition parse_rooted(std::string_view text) {
    if (text.size() < 2 || text.front() != '(' || text.back() != ')')
        throw ParseError("bad rooted partition '" + std::string(text) + "'");
    std::string_view body = text.substr(1, text.size() - 2);
    Partition base;
    std::vector<Root> roots;
    Int prev = 0;
    std::size_t pos = 0;
    while (pos < body.size()) {
        std::size_t comma = body.find(',', pos);
        std::string_view tok = body.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
        bool rooted = !tok.empty() && tok.front() == '^';
        if (rooted) tok.remove_prefix(1);
        Int v = 0;
        std::size_t parsed = 0;
        try {
            v = std::stoll(std::string(tok), &parsed);
        } catch (const std::exception&) {
            throw ParseError("bad rooted partition part '" + std::string(tok) + "'");
        }
        if (parsed != tok.size() || v < 1)
            throw ParseError("bad rooted partition part '" + std::string(tok) + "'");
        if (prev != 0 && v > prev)
            throw ParseError("rooted partition parts must be weakly decreasing");
        if (rooted) roots.push_back({v, base.mult(v)});
        base.add(v, 1);
        prev = v;
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return RootedPartition(std::move(base), std::move(roots));
}

std::size_t hash_value(const RootedPartition& rp) {
    std::size_t h = hash_value(rp.base());
    for (const Root& r : rp.roots()) {
        h ^= static_cast<std::size_t>(r.value) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h ^= static_cast<std::size_t>(r.slot) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

std::vector<RootedPartition> enumerate_rooted(const PartitionFamily& family, std::vector<Int> root_values) {
    if (root_values.empty() || root_values.size() > 2)
        throw std::invalid_argument("one or two root values required");
    std::sort(root_values.begin(), root_values.end(), std::greater<>{});
    std::vector<RootedPartition> out;
    enumerate(family, [&](const Partition& base) {
        if (root_values.size() == 1) {
            Int m = base.mult(root_values[0]);
            for (Int s = 0; s < m; ++s) out.emplace_back(base, std::vector<Root>{{root_values[0], s}});
        } else if (root_values[0] != root_values[1]) {
            Int mi = base.mult(root_values[0]), mj = base.mult(root_values[1]);
            for (Int si = 0; si < mi; ++si)
                for (Int sj = 0; sj < mj; ++sj)
                    out.emplace_back(base, std::vector<Root>{{root_values[0], si}, {root_values[1], sj}});
        } else {
            Int m = base.mult(root_values[0]);
            for (Int s1 = 0; s1 < m; ++s1)
                for (Int s2 = s1 + 1; s2 < m; ++s2)
                    out.emplace_back(base, std::vector<Root>{{root_values[0], s1}, {root_values[0], s2}});
        }
    });
    return out;
}

Int count_rooted(const PartitionFamily& family, std::vector<Int> root_values) {
    if (root_values.empty() || root_values.size() > 2)
        throw std::invalid_argument("one or two root values required");
    Int total = 0;
    enumerate(family, [&](const Partition& base) {
        Int ways = 0;
        if (root_values.size() == 1)
            ways = base.mult(root_values[0]);
        else if (root_values[0] != root_values[1])
            ways = checked_mul(base.mult(root_values[0]), base.mult(root_values[1]));
        else
            ways = binom(base.mult(root_values[0]), 2);
        total = checked_add(total, ways);
    });
    return total;
}

// --- BR_1(n) <-> B(2n-2) ----------------------------------------------------

Partition br1_to_binary(const RootedPartition& rp) {
    require(rp.roots().size() == 1 && rp.roots()[0].value == 1, "expected a single rooted 1");
    require(is_binary(rp.base()), "expected a binary partition");
    const Int s = rp.roots()[0].slot;
    const Int j = rp.base().mult(1) - s; // rooted 1 and everything after it
    Partition mu = rp.base();
    mu.remove(1, j);
    Partition out = scale(mu, 2);
    out.add(1, 2 * j - 2);
    return out;
}

RootedPartition binary_to_br1(const Partition& p) {
    require(is_binary(p), "expected a binary partition");
    const Int k = p.mult(1);
    require(k % 2 == 0, "number of 1's must be even");
    Partition half = unscale(strip_ones(p), 2); // parts >= 2 are even powers of 2
    const Int slot = half.mult(1);              // rooted 1 goes after the halved 2's
    Partition base = direct_sum(half, ones(k / 2 + 1));
    return RootedPartition(std::move(base), {{1, slot}});
}

// --- BR_1(n) -> BR_{1,1} (split at the rooted 1) ----------------------------

RootedPartition br1_to_br11(const RootedPartition& rp) {
    require(rp.roots().size() == 1 && rp.roots()[0].value == 1, "expected a single rooted 1");
    require(is_binary(rp.base()), "expected a binary partition");
    const Int i = rp.roots()[0].slot;                    // 1's before the rooted 1
    const Int j = rp.base().mult(1) - i - 1;             // 1's after it
    Partition half = unscale(strip_ones(rp.base()), 2);  // may contain 1's (from 2's)
    const Int lead = half.mult(1);
    Partition base = direct_sum(half, ones(2 + i / 2 + j / 2));
    return RootedPartition(std::move(base), {{1, lead}, {1, lead + 1 + i / 2}});
}

namespace {

// Shared decomposition of an element of BR_{1,1}: mu' = everything before the
// first rooted 1 (all parts >= 2 plus s1 leading 1's), k = 1's strictly
// between the roots, l = 1's after the second root.
struct Br11Split {
    Partition mu;
    Int k = 0;
    Int l = 0;
};

Br11Split split_br11(const RootedPartition& rp) {
    require(rp.roots().size() == 2 && rp.roots()[0].value == 1 && rp.roots()[1].value == 1,
            "expected two rooted 1's");
    const Int s1 = rp.roots()[0].slot, s2 = rp.roots()[1].slot;
    Br11Split sp;
    sp.mu = rp.base();
    sp.mu.remove(1, rp.base().mult(1) - s1);
    sp.k = s2 - s1 - 1;
    sp.l = rp.base().mult(1) - s2 - 1;
    return sp;
}

} // namespace

RootedPartition br11_to_br1_odd(const RootedPartition& image, Int n) {
    require(n % 2 == 1, "n must be odd");
    require(is_binary(image.base()), "expected a binary partition");
    Br11Split sp = split_br11(image);
    const Int m = image.weight();
    Partition doubled = scale(sp.mu, 2);
    Int before, after;
    if (m == (n + 1) / 2) {
        before = 2 * sp.k + 1;
        after = 2 * sp.l + 1;
    } else if (m == (n + 3) / 2) {
        before = 2 * sp.k;
        after = 2 * sp.l;
    } else {
        throw MalformedInput("image weight matches neither branch");
    }
    Partition base = direct_sum(doubled, ones(before + 1 + after));
    return RootedPartition(std::move(base), {{1, before}});
}

std::array<RootedPartition, 2> br11_to_br1_even_fiber(const RootedPartition& image, Int n) {
    require(n % 2 == 0, "n must be even");
    require(is_binary(image.base()), "expected a binary partition");
    Br11Split sp = split_br11(image);
    require(image.weight() == (n + 2) / 2, "image weight does not match (n+2)/2");
    Partition base = direct_sum(scale(sp.mu, 2), ones(2 * sp.k + 2 * sp.l + 2));
    // the two preimages differ only in which side of the rooted 1 got the odd run
    return {RootedPartition(base, {{1, 2 * sp.k}}), RootedPartition(base, {{1, 2 * sp.k + 1}})};
}

// --- BR_2(n) <-> BR_{1,1}(floor(n/2)+1) -------------------------------------

RootedPartition br2_to_br11(const RootedPartition& rp) {
    require(rp.roots().size() == 1 && rp.roots()[0].value == 2, "expected a single rooted 2");
    require(is_binary(rp.base()), "expected a binary partition");
    const Int t = rp.roots()[0].slot;
    const Int i = rp.base().mult(1);
    Partition half = unscale(strip_ones(rp.base()), 2); // the rooted 2 at slot t becomes a rooted 1
    const Int lead = half.mult(1);                      // = m_2 of the original
    Partition base = direct_sum(half, ones(1 + i / 2));
    return RootedPartition(std::move(base), {{1, t}, {1, lead}});
}

RootedPartition br11_to_br2(const RootedPartition& image, Int n) {
    require(is_binary(image.base()), "expected a binary partition");
    require(image.roots().size() == 2 && image.roots()[0].value == 1 && image.roots()[1].value == 1,
            "expected two rooted 1's");
    require(image.weight() == n / 2 + 1, "image weight does not match floor(n/2)+1");
    const Int s1 = image.roots()[0].slot, s2 = image.roots()[1].slot;
    // everything before the second root doubles back; the first root becomes the 2
    Partition mu = image.base();
    const Int tail = image.base().mult(1) - s2; // second rooted 1 and the 1's after it
    mu.remove(1, tail);
    Partition base = direct_sum(scale(mu, 2), ones(n % 2 == 0 ? 2 * (tail - 1) : 2 * (tail - 1) + 1));
    return RootedPartition(std::move(base), {{2, s1}});
}

// --- BR_{1,1}(n) <-> BR_{1,2}(n) + BR_{1,2}(n+1) ----------------------------

RootedPartition br11_to_br12(const RootedPartition& rp) {
    require(is_binary(rp.base()), "expected a binary partition");
    require(rp.roots().size() == 2 && rp.roots()[0].value == 1 && rp.roots()[1].value == 1,
            "expected two rooted 1's");
    const Int s1 = rp.roots()[0].slot, s2 = rp.roots()[1].slot;
    const Int k = s2 - s1;                      // first rooted 1 plus the 1's up to the second
    const Int p = rp.base().mult(1) - s2;       // second rooted 1 and the 1's after it
    Partition base = rp.base();
    base.remove(1, k + p);
    const Int two_slot = base.mult(2);          // new 2's go after the existing ones
    base.add(2, (k + 1) / 2);
    base.add(1, s1 + p);
    return RootedPartition(std::move(base), {{2, two_slot}, {1, s1}});
}

RootedPartition br12_to_br11(const RootedPartition& image, Int n) {
    require(is_binary(image.base()), "expected a binary partition");
    require(image.roots().size() == 2 && image.roots()[0].value == 2 && image.roots()[1].value == 1,
            "expected a rooted 2 and a rooted 1");
    const Int t2 = image.roots()[0].slot, t1 = image.roots()[1].slot;
    const Int c = image.base().mult(2) - t2;    // rooted 2 and the 2's after it
    const Int p = image.base().mult(1) - t1;    // rooted 1 and the 1's after it
    Int k;
    if (image.weight() == n)
        k = 2 * c;
    else if (image.weight() == n + 1)
        k = 2 * c - 1;
    else
        throw MalformedInput("image weight matches neither branch");
    Partition base = image.base();
    base.remove(2, c);
    base.remove(1, p);
    base.add(1, k + p);
    return RootedPartition(std::move(base), {{1, t1}, {1, t1 + k}});
}

} // namespace esp
