#pragma once

// Explicit optimal [n,2] LCD codes. Columns are laid out as interleaved
// I_2 blocks followed by (1,1) columns; apply standard_form() for [I_2 | A].

#include "lcd/code.hpp"

namespace lcd {

/// (2r+1) copies of I_2, then 2r+s-2 all-ones columns. n = 6r+s, d = 4r+2.
/// Requires r >= 0 and s in {3,4,5}.
[[nodiscard]] LinearCode construct_family_a(int r, int s);

/// (2r+3) copies of I_2, then 2r+s-6 all-ones columns. n = 6r+s, d = 4r+s-3.
/// Requires r >= 0 and s in {6,7,8}.
[[nodiscard]] LinearCode construct_family_b(int r, int s);

/// An LCD [n,2] code attaining lcd_n2_formula(n); I_2 for n = 2.
[[nodiscard]] LinearCode construct_optimal(int n);

}  // namespace lcd
