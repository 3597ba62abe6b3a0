#pragma once

// Closed form for LCD[n,2], the largest minimum distance of a binary
// [n,2] LCD code.

namespace lcd {

/// n = 6r + s with s in {3..8}. Unique for n >= 2; r = -1 only for n = 2.
struct NDecomposition {
    int r = 0;
    int s = 0;
    int n = 0;

    friend bool operator==(const NDecomposition&, const NDecomposition&) = default;
};

/// Throws DomainError for n < 2.
[[nodiscard]] NDecomposition decompose(int n);

/// 4r + floor(s/6) * (1 + (s mod 6)) + 2 evaluated on decompose(n).
[[nodiscard]] int lcd_n2_formula(int n);

}  // namespace lcd
