#pragma once

// Image-set statistics (d-regular counts, distinct-part and total-part
// counts), windowed multiplicity sums, and the machine checks of the
// conjectured identities at desk scale. Image sets are deduplicated with
// collision logging so nothing silently assumes injectivity.

#include <map>
#include <span>
#include <string>
#include <vector>

#include "esp/esp_map.hpp"
#include "esp/report.hpp"

namespace esp {

/// Cache of deduplicated image sets ImP_k(n) (kind all) keyed by (k, n).
class ImageSetCache {
public:
    const ImageSet& get(Int k, Int n);
    /// Total collisions seen across every set built so far.
    Int collisions() const { return collisions_; }

private:
    std::map<std::pair<Int, Int>, ImageSet> cache_;
    Int collisions_ = 0;
};

/// Number of d-regular partitions (no part divisible by d) in the image set
/// ImP_k(n).
Int r_dk(Int d, Int k, Int n, ImageSetCache& cache);

enum class ChiMode { per_partition, global };

/// Distinct-part statistic over a set of partitions: per_partition sums the
/// number of distinct values in each member; global counts distinct values
/// across the whole set.
Int chi(std::span<const Partition> set, ChiMode mode);
/// Total number of parts counted with multiplicity.
Int tau(std::span<const Partition> set);
/// m_j summed over the set.
Int m_stat(std::span<const Partition> set, Int j);

struct WindowStat {
    enum class Kind { m_j, r_dk, chi, tau } stat;
    Int k = 2;
    Int lo = 0, hi = 0; // window [lo, hi]
    Int value = 0;
};

/// m_j(ImP_k[lo, hi]) = sum of the per-n stats over the window.
WindowStat window_m_stat(Int j, Int k, Int lo, Int hi, ImageSetCache& cache);

// --- Conjecture table (data-driven) -----------------------------------------

/// One row of the floor-formula table: for n with n mod `modulus` ==
/// `residue`, r_{d,2}(n) - r_{d,3}(n) should equal `formula` evaluated at n.
struct TableEntry {
    Int d = 0;
    Int modulus = 0;
    Int residue = 0;
    std::string formula;
};

/// Config lines `d modulus residue formula`; '#' comments and blank lines
/// ignored.
std::vector<TableEntry> parse_conjecture_table(const std::string& text);
std::vector<TableEntry> load_conjecture_table(const std::string& data_dir);

/// Tiny expression grammar over n: sums of terms, each an integer constant or
/// [coeff *] fl((n [+ offset]) / den). Examples: "0", "fl((n+2)/4)",
/// "2*fl(n/6)+1".
Int eval_formula(const std::string& formula, Int n);

// --- Conjecture checks -------------------------------------------------------

enum class ConjectureId { C9_table, C10_prime, C11_deltas, C12_oeis };
ConjectureId parse_conjecture(const std::string& name);

struct ConjectureOptions {
    Int n_max = 30;        // per-k defaults applied on top (k = 4 capped at 24)
    std::vector<Int> ds = {2, 3, 4, 5};     // C9 columns
    std::vector<Int> ps = {2, 3, 5, 7};     // C10 primes
    std::vector<Int> ks = {2, 3, 4};        // C11 k range
    std::string data_dir;                   // fixtures + table config
};

/// Runs one conjecture over its default ranges. Failures are report rows and
/// come with a counterexample note (sources, images, stats) — falsification
/// is a first-class outcome, never an exception.
VerificationReport verify_conjecture(ConjectureId id, const ConjectureOptions& opts,
                                     ImageSetCache& cache);

} // namespace esp
