// Bundled reference threshold grids (published values, 4 decimals) used
// by the table command for side-by-side comparison.  The data is
// compiled in and never modified at run time.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "ghzdist/yields.hpp"

namespace ghzdist {

struct ReferenceGrid {
    std::string_view id;  // "ss-q2", "ms-q2", "cl-q2", "ss-q3", "ms-q3", "cl-q3"
    Protocol protocol;
    uint32_t q;
    std::span<const uint32_t> ns;          // row labels
    std::span<const uint32_t> ms;          // column labels
    std::span<const std::string_view> values;  // row-major, 4-decimal strings

    std::string_view value(uint32_t m, uint32_t n) const;  // "" when absent
};

std::span<const ReferenceGrid> reference_grids();
const ReferenceGrid* reference_grid(std::string_view id);

// Reference lower bounds for q = 2, m = 2..4.
struct ReferenceBound {
    uint32_t m;
    std::string_view value;
};
std::span<const ReferenceBound> reference_bounds();

}  // namespace ghzdist
