#pragma once

#include <stdexcept>
#include <string>

namespace esp {

/// Raised whenever exact integer arithmetic would wrap. Silent wraparound is
/// forbidden everywhere in this library.
struct OverflowError : std::runtime_error {
    explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised by unscale() when a part is not a multiple of the divisor.
struct NotDivisible : std::runtime_error {
    explicit NotDivisible(const std::string& what) : std::runtime_error(what) {}
};

/// Raised by inverse maps when the input is not in the codomain.
struct MalformedInput : std::runtime_error {
    explicit MalformedInput(const std::string& what) : std::runtime_error(what) {}
};

/// Raised by text parsers; `line` is 1-based (0 when not line oriented).
struct ParseError : std::runtime_error {
    int line;
    explicit ParseError(const std::string& what, int line_no = 0)
        : std::runtime_error(line_no > 0 ? what + " (line " + std::to_string(line_no) + ")" : what),
          line(line_no) {}
};

struct NetworkError : std::runtime_error {
    explicit NetworkError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when fetched reference data disagrees with bundled data.
struct IntegrityError : std::runtime_error {
    explicit IntegrityError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace esp
