#include "esp/util.hpp"

#include <cstdlib>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

#ifndef ESP_DATA_DIR
#define ESP_DATA_DIR "data"
#endif

namespace esp {

std::string default_data_dir() {
    if (const char* env = std::getenv("ESP_DATA_DIR"); env && *env) return env;
    return ESP_DATA_DIR;
}

void parallel_for(Int count, Int jobs, const std::function<void(Int)>& fn) {
    if (count <= 0) return;
    if (jobs <= 1 || count == 1) {
        for (Int i = 0; i < count; ++i) fn(i);
        return;
    }
    jobs = std::min(jobs, count);
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mu;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (Int t = 0; t < jobs; ++t)
        pool.emplace_back([&, t] {
            try {
                for (Int i = t; i < count; i += jobs) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mu);
                if (!error) error = std::current_exception();
            }
        });
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

std::pair<Int, Int> parse_range(const std::string& text) {
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            Int v = std::stoll(text);
            return {v, v};
        }
        Int lo = std::stoll(text.substr(0, dots));
        Int hi = std::stoll(text.substr(dots + 2));
        if (hi < lo) throw std::invalid_argument("empty range");
        return {lo, hi};
    } catch (const std::exception&) {
        throw std::invalid_argument("bad range '" + text + "' (expected lo..hi)");
    }
}

} // namespace esp
