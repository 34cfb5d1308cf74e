#pragma once

// The map pre_k: evaluate the k-th elementary symmetric polynomial at the
// parts of a partition and collect the summands as a new partition. Includes
// image statistics, the multiplicity recursion for pre_2, injectivity
// checking over whole families, and the complete homogeneous variant.

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "esp/partition.hpp"

namespace esp {

/// pre_k(lambda): the partition whose parts are the products over all k-subsets
/// of positions of lambda (equal values at distinct positions count
/// separately). Empty when length < k. Computed from the multiplicity runs:
/// for each way of drawing c_v copies of value v with sum(c_v) = k, the
/// product prod v^{c_v} enters with multiplicity prod C(m_v, c_v).
Partition pre_k(const Partition& lambda, Int k);

/// Complete homogeneous variant: all degree-k monomials with repetition in the
/// positions of lambda. A group of m_v equal positions hosting total degree
/// c_v contributes C(m_v + c_v - 1, c_v) monomials.
Partition pre_h(const Partition& lambda, Int k);

struct ImageRecord {
    Partition source;
    Partition image; // pre_k(source)
};

/// One record per source partition of the family with length >= k, in
/// enumeration order. The image side is a multiset over sources; no
/// deduplication happens here.
std::vector<ImageRecord> image_multiset(const PartitionFamily& family, Int k);

/// m_i summed over the image side of the records.
Int m_total(std::span<const ImageRecord> records, Int i);

/// m_j(pre_2(lambda)) computed without building the image:
///   sum over factorizations j = e*f with e < f of m_e(lambda)*m_f(lambda),
///   plus C(m_sqrt(j), 2) when j is a square.
Int image_mult_rec(const Partition& lambda, Int j);

struct InjectivityReport {
    bool pass = true;
    Int sources_checked = 0;
    // first collision, when one exists
    std::optional<Partition> source_a, source_b, image;
};

/// Hashes all images of the family under pre_k and reports either PASS or the
/// first colliding source pair. An optional predicate restricts the sources
/// (e.g. partitions with at least two 1's). A collision is a report outcome,
/// not an error.
InjectivityReport check_injectivity(const PartitionFamily& family, Int k,
                                    const std::function<bool(const Partition&)>& source_filter = {});

/// Deduplicated image set with collision flagging; `images` keeps first-seen
/// (enumeration) order so downstream output is deterministic.
struct ImageSet {
    std::vector<Partition> images;
    std::vector<std::pair<Partition, Partition>> collisions; // (earlier source, later source)
};
ImageSet image_set(const PartitionFamily& family, Int k);

} // namespace esp
