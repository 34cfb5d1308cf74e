#pragma once

// OEIS b-file ingestion and diffing. Offline-first: the bundled fixtures in
// data/oeis are the source of truth for every test; fetch() is an opt-in
// convenience that must agree with the bundled prefix on overlap.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "esp/ints.hpp"

namespace esp {

struct BFileEntry {
    Int index = 0;
    Int value = 0;
    bool operator==(const BFileEntry&) const = default;
};

struct BFile {
    enum class Source { bundled, fetched };

    std::string sequence_id; // e.g. "A131205"
    std::vector<BFileEntry> entries; // indices strictly increasing
    Source source = Source::bundled;

    std::optional<Int> at(Int index) const;
    Int first_index() const { return entries.empty() ? 0 : entries.front().index; }
    Int last_index() const { return entries.empty() ? -1 : entries.back().index; }
};

/// Standard b-file layout: `index value` per line, '#' comments and blank
/// lines ignored. Malformed lines raise ParseError with the line number.
BFile parse_bfile(const std::string& text, std::string sequence_id,
                  BFile::Source source = BFile::Source::bundled);
std::string render_bfile(const BFile& bfile);

/// Loads data_dir/oeis/b<number>.txt.
BFile load_bundled(const std::string& a_number, const std::string& data_dir);

struct DiffMismatch {
    Int n = 0;        // computed-side index
    Int computed = 0;
    Int reference = 0; // already shifted
};

struct DiffReport {
    Int overlap = 0;
    std::vector<DiffMismatch> mismatches;
    bool pass() const { return mismatches.empty(); }
};

/// Compares computed (n, value) pairs against reference entries at index
/// n + index_offset; a pair matches when value == reference + value_shift.
/// Indices without a reference entry are skipped (and not counted as overlap).
DiffReport diff(std::span<const std::pair<Int, Int>> computed, const BFile& reference,
                Int index_offset, Int value_shift = 0);

struct FetchOptions {
    bool network_enabled = false; // must be set explicitly by a CLI flag
    std::string base_url = "https://oeis.org";
    std::string cache_dir;        // defaults to $ESP_OEIS_CACHE
    std::string bundled_data_dir; // integrity check against bundled data when nonempty
};

/// Retrieves the b-file for the given A-number, caches it on disk and parses
/// it. Refuses (NetworkError) when the network flag is off; raises
/// IntegrityError when the fetched prefix disagrees with the bundled one.
/// At most one request per sequence is in flight at a time.
BFile fetch(const std::string& a_number, const FetchOptions& options);

} // namespace esp
