#include "esp/esp_map.hpp"

#include <map>
#include <unordered_map>

namespace esp {

namespace {

// Walks all ways of distributing degree k over the runs and accumulates
// (product value, count) into `image`. `count_for` gives the number of
// monomials a run of multiplicity m contributes at degree c: C(m, c) for the
// elementary case, C(m + c - 1, c) for the homogeneous case.
void distribute(const std::vector<Partition::Run>& runs, std::size_t idx, Int degree_left,
                Int value_acc, Int count_acc, bool square_free,
                std::map<Int, Int, std::greater<>>& image) {
    if (degree_left == 0) {
        auto [it, inserted] = image.try_emplace(value_acc, count_acc);
        if (!inserted) it->second = checked_add(it->second, count_acc);
        return;
    }
    if (idx == runs.size()) return;
    auto [v, m] = runs[idx];
    Int c_max = square_free ? std::min(m, degree_left) : degree_left;
    Int value_pow = 1;
    for (Int c = 0; c <= c_max; ++c) {
        Int ways = square_free ? binom(m, c) : binom(m + c - 1, c);
        if (ways != 0)
            distribute(runs, idx + 1, degree_left - c, checked_mul(value_acc, value_pow),
                       checked_mul(count_acc, ways), square_free, image);
        if (c < c_max) value_pow = checked_mul(value_pow, v);
    }
}

Partition evaluate(const Partition& lambda, Int k, bool square_free) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    std::map<Int, Int, std::greater<>> image;
    distribute(lambda.runs(), 0, k, 1, 1, square_free, image);
    Partition out;
    for (auto [v, c] : image) out.add(v, c);
    return out;
}

} // namespace

Partition pre_k(const Partition& lambda, Int k) {
    if (lambda.length() < k) return {}; // empty sum
    return evaluate(lambda, k, /*square_free=*/true);
}

Partition pre_h(const Partition& lambda, Int k) {
    if (lambda.empty()) return {};
    return evaluate(lambda, k, /*square_free=*/false);
}

std::vector<ImageRecord> image_multiset(const PartitionFamily& family, Int k) {
    PartitionFamily domain = family;
    domain.min_length = std::max(domain.min_length, k);
    std::vector<ImageRecord> records;
    enumerate(domain, [&](const Partition& src) { records.push_back({src, pre_k(src, k)}); });
    return records;
}

Int m_total(std::span<const ImageRecord> records, Int i) {
    Int total = 0;
    for (const ImageRecord& r : records) total = checked_add(total, r.image.mult(i));
    return total;
}

Int image_mult_rec(const Partition& lambda, Int j) {
    if (j < 1) return 0;
    Int total = 0;
    for (Int e = 1; e * e < j; ++e) {
        if (j % e != 0) continue;
        total = checked_add(total, checked_mul(lambda.mult(e), lambda.mult(j / e)));
    }
    Int s = isqrt(j);
    if (s * s == j) total = checked_add(total, binom(lambda.mult(s), 2));
    return total;
}

InjectivityReport check_injectivity(const PartitionFamily& family, Int k,
                                    const std::function<bool(const Partition&)>& source_filter) {
    PartitionFamily domain = family;
    domain.min_length = std::max(domain.min_length, k);
    InjectivityReport report;
    std::unordered_map<Partition, Partition> seen; // image -> first source
    enumerate(domain, [&](const Partition& src) {
        if (report.image.has_value()) return;
        if (source_filter && !source_filter(src)) return;
        ++report.sources_checked;
        Partition img = pre_k(src, k);
        auto [it, inserted] = seen.try_emplace(img, src);
        if (!inserted) {
            report.pass = false;
            report.source_a = it->second;
            report.source_b = src;
            report.image = img;
        }
    });
    return report;
}

ImageSet image_set(const PartitionFamily& family, Int k) {
    PartitionFamily domain = family;
    domain.min_length = std::max(domain.min_length, k);
    ImageSet out;
    std::unordered_map<Partition, Partition> seen; // image -> first source
    enumerate(domain, [&](const Partition& src) {
        Partition img = pre_k(src, k);
        auto [it, inserted] = seen.try_emplace(img, src);
        if (inserted)
            out.images.push_back(std::move(img));
        else
            out.collisions.emplace_back(it->second, src);
    });
    return out;
}

} // namespace esp
