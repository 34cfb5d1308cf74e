#pragma once

// Canonical integer partitions and exhaustive enumerators for the families
// P(n), B(n), P(n,d) with minimum-length filtering.
//
// The canonical representation is the multiplicity map (value -> multiplicity,
// stored as runs in decreasing value order); the weakly decreasing sequence is
// a derived view. Multiplicity lookups dominate everything downstream, the
// sequence view only matters for ordering and text I/O.

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "esp/ints.hpp"

namespace esp {

class Partition {
public:
    /// (value, multiplicity), strictly decreasing by value, multiplicities >= 1.
    using Run = std::pair<Int, Int>;

    Partition() = default;

    /// Builds from parts in any order. Values must be >= 1.
    static Partition from_parts(std::span<const Int> parts);
    static Partition from_parts(std::initializer_list<Int> parts);
    /// Builds from (value, mult) runs in any order; values distinct, mults >= 1.
    static Partition from_runs(std::vector<Run> runs);

    Int weight() const { return weight_; }
    Int length() const { return length_; }
    bool empty() const { return runs_.empty(); }

    /// m_i: multiplicity of `value` (0 when absent).
    Int mult(Int value) const;
    Int distinct_values() const { return static_cast<Int>(runs_.size()); }
    Int max_part() const { return runs_.empty() ? 0 : runs_.front().first; }

    const std::vector<Run>& runs() const { return runs_; }
    /// Weakly decreasing sequence view.
    std::vector<Int> sequence() const;

    /// Adds `count` copies of `value` (count may be 0). Keeps canonical form.
    void add(Int value, Int count);
    /// Removes `count` copies of `value`; they must be present.
    void remove(Int value, Int count);

    bool operator==(const Partition& o) const { return runs_ == o.runs_; }
    /// Lexicographic order on the weakly decreasing sequence views.
    std::strong_ordering operator<=>(const Partition& o) const;

    /// Text form: comma separated parts in parentheses, e.g. "(4,2,2,1)";
    /// the empty partition prints as "()".
    std::string str() const;

private:
    std::vector<Run> runs_; // decreasing by value
    Int weight_ = 0;
    Int length_ = 0;
};

/// Parses the text form produced by Partition::str(). Requires weakly
/// decreasing positive parts; throws ParseError otherwise.
Partition parse_partition(std::string_view text);

/// Multiset union: multiplicities add.
Partition direct_sum(const Partition& a, const Partition& b);
/// All parts multiplied by m (m >= 1).
Partition scale(const Partition& p, Int m);
/// All parts divided by m; throws NotDivisible unless every part is a multiple.
Partition unscale(const Partition& p, Int m);

std::size_t hash_value(const Partition& p);

/// A family of partitions of n: unrestricted, binary (parts = powers of 2) or
/// d-ary (parts = powers of d, d >= 2), filtered to length >= min_length.
/// n < 0 denotes the empty family.
struct PartitionFamily {
    enum class Kind { all, binary, dary };

    Kind kind = Kind::all;
    Int d = 2; // part base for dary; ignored otherwise
    Int n = 0;
    Int min_length = 0;

    static PartitionFamily all(Int n, Int min_length = 0) { return {Kind::all, 2, n, min_length}; }
    static PartitionFamily binary(Int n, Int min_length = 0) { return {Kind::binary, 2, n, min_length}; }
    static PartitionFamily dary(Int d, Int n, Int min_length = 0) { return {Kind::dary, d, n, min_length}; }

    /// Allowed part values <= cap, in decreasing order.
    std::vector<Int> allowed_parts(Int cap) const;
    std::string str() const;
};

/// Visits every partition of the family exactly once, in decreasing
/// lexicographic order of the sequence view.
void enumerate(const PartitionFamily& family, const std::function<void(const Partition&)>& visit);
std::vector<Partition> enumerate_list(const PartitionFamily& family);

/// |family| by a dynamic program over (weight, length); never materializes
/// the list. Overflow raises OverflowError.
Int count(const PartitionFamily& family);

/// Counts |family(m)| with no length filter for every m in 0..n_max in one
/// pass (shared kernel for the closed-form sums).
std::vector<Int> count_table(PartitionFamily::Kind kind, Int d, Int n_max);

} // namespace esp

template <> struct std::hash<esp::Partition> {
    std::size_t operator()(const esp::Partition& p) const { return esp::hash_value(p); }
};
