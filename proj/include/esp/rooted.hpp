#pragma once

// Rooted partitions: a partition with one or two distinguished parts whose
// position among equal parts matters. Roots are stored as (value, slot) pairs
// where slot is the 0-based index among the copies of that value; this
// realizes the positional semantics of the direct sum without storing full
// sequences. Includes the executable bijections between the rooted families
// BR_1, BR_2, BR_{1,1}, BR_{1,2} and plain binary partitions.

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "esp/partition.hpp"

namespace esp {

struct Root {
    Int value = 0;
    Int slot = 0; // 0-based among equal parts
    bool operator==(const Root&) const = default;
    auto operator<=>(const Root&) const = default;
};

class RootedPartition {
public:
    RootedPartition() = default;
    /// Validates: each root's value is a part, slot < multiplicity, no two
    /// roots on the same (value, slot). Roots are normalized to sequence
    /// order (decreasing value, then increasing slot), so equal-value root
    /// pairs are stored with the smaller slot first.
    RootedPartition(Partition base, std::vector<Root> roots);

    const Partition& base() const { return base_; }
    const std::vector<Root>& roots() const { return roots_; }
    Int weight() const { return base_.weight(); }

    bool operator==(const RootedPartition&) const = default;

    /// Text form: sequence view with roots marked by a leading '^',
    /// e.g. "(4,2,2,1,^1,1,1)".
    std::string str() const;

private:
    Partition base_;
    std::vector<Root> roots_;
};

RootedPartition parse_rooted(std::string_view text);
std::size_t hash_value(const RootedPartition& rp);

/// All placements of the given root values (one or two) on the members of the
/// family. For a repeated root value the two slots form an unordered pair.
std::vector<RootedPartition> enumerate_rooted(const PartitionFamily& family, std::vector<Int> root_values);

/// |enumerate_rooted(family, root_values)| without materializing placements:
/// sums m_i, m_i*m_j or C(m_i, 2) over the family.
Int count_rooted(const PartitionFamily& family, std::vector<Int> root_values);

// --- Executable maps -------------------------------------------------------
//
// Domain/codomain naming: br1 = rooted binary, single root 1; br2 = single
// root 2; br11 / br12 = two roots (1,1) / (1,2). Every forward map documents
// its split rule at the definition.

/// BR_1(n) -> B(2n-2). Split off the rooted 1 and the 1's after it (j of
/// them); double the rest and append 2j-2 ones.
Partition br1_to_binary(const RootedPartition& rp);
/// Inverse: requires a binary partition with an even number of 1's.
RootedPartition binary_to_br1(const Partition& p);

/// BR_1(n) -> BR_{1,1}((n+1)/2) or BR_{1,1}((n+3)/2) for odd n (a bijection
/// onto the disjoint union); BR_{1,1}((n+2)/2) for even n (exactly 2-to-1).
RootedPartition br1_to_br11(const RootedPartition& rp);
/// Inverse for odd n; the branch is chosen by the weight of `image`.
RootedPartition br11_to_br1_odd(const RootedPartition& image, Int n);
/// The 2-element fiber over `image` for even n.
std::array<RootedPartition, 2> br11_to_br1_even_fiber(const RootedPartition& image, Int n);

/// BR_2(n) -> BR_{1,1}(floor(n/2)+1). Halve the non-1 prefix (the rooted 2
/// becomes a rooted 1) and append a rooted 1 plus floor(m_1/2) ones.
RootedPartition br2_to_br11(const RootedPartition& rp);
/// Inverse; n (the domain weight) selects the parity of the restored 1-run.
RootedPartition br11_to_br2(const RootedPartition& image, Int n);

/// BR_{1,1}(n) -> BR_{1,2}(n) + BR_{1,2}(n+1). The block from the first
/// rooted 1 up to (excluding) the second rooted 1, of size k, is replaced by
/// ceil(k/2) copies of 2 with the first one rooted.
RootedPartition br11_to_br12(const RootedPartition& rp);
/// Inverse; n (the domain weight) picks which half of the disjoint union the
/// image belongs to, i.e. the parity of k.
RootedPartition br12_to_br11(const RootedPartition& image, Int n);

} // namespace esp

template <> struct std::hash<esp::RootedPartition> {
    std::size_t operator()(const esp::RootedPartition& rp) const { return esp::hash_value(rp); }
};
