#pragma once

#include <functional>
#include <string>

#include "esp/ints.hpp"

namespace esp {

/// Bundled-data directory: $ESP_DATA_DIR when set, otherwise the path baked
/// in at configure time.
std::string default_data_dir();

/// Runs fn(i) for i in 0..count-1 on `jobs` threads. Work items must be
/// independent; callers collect results into pre-sized slots indexed by i so
/// output stays deterministic regardless of scheduling.
void parallel_for(Int count, Int jobs, const std::function<void(Int)>& fn);

/// Parses "lo..hi" or a single value "n" (meaning n..n).
std::pair<Int, Int> parse_range(const std::string& text);

} // namespace esp
