#pragma once

// The scalar sequences attached to pre_2 images: a_n, b_n, c_n over binary
// partitions and a_n(d), b_n(d) over d-ary ones. Every sequence is computable
// by several independent routes (exhaustive image statistics, rooted
// counting, series coefficients, closed forms, recurrences) and the identity
// verifier cross-checks the published relations between them.

#include <map>
#include <string>
#include <vector>

#include "esp/partition.hpp"
#include "esp/report.hpp"
#include "esp/series.hpp"

namespace esp {

/// Sum of the divisors of n that are powers of two, including 1.
Int beta(Int n);
/// Sum of the divisors of n that are powers of d, including 1.
Int beta_d(Int n, Int d);

struct BetaValues {
    Int n;
    Int beta;
    Int beta_d;
};
BetaValues beta_values(Int n, Int d);

enum class SeqId { a, b, c, a_d, b_d };
enum class Route { brute_image, rooted_count, series_coeff, closed_form_b, closed_form_c, recurrence };

SeqId parse_seq_id(const std::string& name);
Route parse_route(const std::string& name);
std::string route_name(Route r);
std::string seq_id_name(SeqId id);

/// Computes sequence values with per-route caching. d is the part base for
/// the d-ary sequences (fixed at construction; plain binary ids ignore it).
class Sequences {
public:
    explicit Sequences(Int d = 2, Int series_order = 64);

    Int d() const { return d_; }
    std::vector<Route> routes(SeqId id) const;

    /// Value by an explicit route; throws std::invalid_argument when the
    /// route does not apply to the sequence.
    Int value(SeqId id, Route route, Int n);

    /// Cheapest exact route (series coefficient), used as the reference by
    /// the identity verifier. Grows the cached series as needed.
    Int reference(SeqId id, Int n);

    /// Forward difference of the reference values.
    Int delta(SeqId id, Int n) { return checked_sub(reference(id, n + 1), reference(id, n)); }
    Int delta_iter(SeqId id, Int k, Int n);

    /// |B(m)| (d = 2) or |P(m,d)|, 0 for m < 0.
    Int family_count(Int m, Int d);
    /// Rooted-family cardinalities |BR_{i}(n)| / |BR_{i,j}(n)| over d-ary bases.
    Int rooted_count_cached(Int n, std::vector<Int> root_values);

private:
    Int d_;
    Int series_order_;
    std::map<std::pair<SeqId, Int>, TruncatedSeries> series_; // (id, d) -> gf
    std::map<Int, std::vector<Int>> count_tables_;            // d -> counts (d=1 means kind all)
    std::map<std::pair<SeqId, Int>, Int> brute_cache_;
    std::map<std::pair<std::vector<Int>, Int>, Int> rooted_cache_;
    std::map<std::pair<SeqId, Int>, Int> recurrence_cache_;

    const TruncatedSeries& series_for(SeqId id, Int min_order);
    Int brute(SeqId id, Int n);
    Int rooted_route(SeqId id, Int n);
    Int closed_b(SeqId id, Int n);
    Int closed_c(SeqId id, Int n);
    Int recurrence_route(SeqId id, Int n);
};

/// Forward difference helpers over arbitrary integer sequences.
Int delta_of(const std::vector<Int>& values, std::size_t n);
Int delta_iter_of(const std::vector<Int>& values, Int k, std::size_t n);

// --- Identity catalog -------------------------------------------------------

/// Identity ids accepted by the verifier and the CLI. The T3*/T4*/T5* block
/// covers the binary sequences; TD* are the d-ary analogues (parameterized by
/// d); the TDd/TDe entries run all candidate readings of the published
/// relations and report the surviving one.
enum class IdentityId {
    T3b, T3c, T3d, T3e, T3f, T3g,
    T4b, T4c, T4d, T4e, T4f,
    T5b, T5c,
    TDa, TDb, TDc, TDd, TDe,
    L1,  // m_{2^k} of the image vs doubly rooted counts
    L6,  // multiplicity recursion vs direct expansion
};

IdentityId parse_identity(const std::string& name);
std::string identity_name(IdentityId id);
std::vector<IdentityId> all_identities();

struct VerifyOptions {
    Int n_max = 40;
    Int d = 2;                 // used by TD*
    Int rooted_n_max = 25;     // cap for checks that enumerate rooted partitions
    std::string data_dir;      // bundled OEIS fixtures (T3e); default when empty
};

/// Runs one identity over 0..n_max and reports per-n rows. Failures are
/// report rows, never exceptions.
VerificationReport verify_identity(IdentityId id, const VerifyOptions& opts);

} // namespace esp
