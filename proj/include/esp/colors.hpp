#pragma once

// Color partition families: partitions into distinct colored parts where the
// palette size of each part value depends on the family.
//
//   plain:    parts 2^i, palette i+3
//   pow(d):   parts 2^i, palette floor(i/d)+3
//   odd(d):   parts 2^i (2d+1)^j; three colors for pure powers of two (j = 0),
//             one color for every mixed part
//
// Parts are totally ordered lexicographically by (value, color); a colored
// partition stores its parts strictly decreasing in that order.

#include <string>
#include <string_view>
#include <vector>

#include "esp/partition.hpp"
#include "esp/rooted.hpp"

namespace esp {

struct ColoredPart {
    Int value = 0;
    Int color = 0; // 1-based subscript
    bool operator==(const ColoredPart&) const = default;
    auto operator<=>(const ColoredPart&) const = default; // (value, color) lex
    std::string str() const { return std::to_string(value) + "_" + std::to_string(color); }
};

enum class ColorFamily { plain, pow, odd };

/// Palette rules of one family; d is ignored by `plain`.
struct ColorAlphabet {
    ColorFamily family = ColorFamily::plain;
    Int d = 1;

    /// Number of colors available for `value`; 0 when the value is not an
    /// allowed part shape for this family.
    Int palette(Int value) const;
    /// Every allowed colored part with value <= cap, ascending in the total
    /// order.
    std::vector<ColoredPart> parts_upto(Int cap) const;
};

class ColoredPartition {
public:
    ColoredPartition() = default;
    /// Parts in any order; validated distinct, sorted decreasing.
    explicit ColoredPartition(std::vector<ColoredPart> parts);

    const std::vector<ColoredPart>& parts() const { return parts_; }
    Int weight() const { return weight_; }
    bool empty() const { return parts_.empty(); }

    bool operator==(const ColoredPartition&) const = default;
    /// Lexicographic on the decreasing part lists.
    auto operator<=>(const ColoredPartition& o) const { return parts_ <=> o.parts_; }

    /// Text form "(4_4,2_3,1_2)"; empty prints as "()".
    std::string str() const;

private:
    std::vector<ColoredPart> parts_; // strictly decreasing
    Int weight_ = 0;
};

ColoredPartition parse_colored(std::string_view text);

/// Every partition of m into distinct colored parts of the family, exactly
/// once, in decreasing lexicographic order.
std::vector<ColoredPartition> enumerate_Q(ColorFamily family, Int d, Int m);
Int count_Q(ColorFamily family, Int d, Int m);

/// Binomial-product count: sum over binary partitions of m of
/// prod_i C(i+3, m_{2^i}); equals |Q(m)|.
Int count_Q_via_binomials(Int m);
/// Same with palette floor(i/d)+3; equals |Q(m, 2^d)|.
Int count_Q_via_binomials_pow(Int d, Int m);

/// BR_{1,1}(n+2) -> Q(n): per part value 2^t with multiplicity s in the
/// prefix, recode s*2^t in binary with color t+3; the 1-runs beside the two
/// roots become binary parts with colors 2 and 1.
ColoredPartition br11_to_colored(const RootedPartition& rp);
RootedPartition colored_to_br11(const ColoredPartition& cp);

/// (2d+1)-ary analogue PR_{1,1}(n+2, 2d+1) -> Q(n, 2d+1): multiplicities of
/// (2d+1)^t recode through binary digits as parts 2^r (2d+1)^t with color 1;
/// the 1-runs beside the roots get colors 2 and 3.
ColoredPartition pr11_to_colored_odd(const RootedPartition& rp, Int d);
RootedPartition colored_odd_to_pr11(const ColoredPartition& cp, Int d);

} // namespace esp
