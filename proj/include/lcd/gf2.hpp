#pragma once

// Bit-packed vectors and matrices over GF(2).
//
// A BitWord of length n stores position i in block i / 64 at bit i % 64.
// Storage past position n-1 is always zero, so equality, weight and
// inner products can work block-wise without masking.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lcd {

class BitWord {
public:
    using Block = std::uint64_t;
    static constexpr std::size_t kBlockBits = 64;

    BitWord() = default;
    /// All-zero word of the given length.
    explicit BitWord(std::size_t length);
    BitWord(std::initializer_list<int> bits);

    /// Parses a string over {'0','1'}; position 0 is the first character.
    static BitWord from_string(std::string_view text);
    static BitWord ones(std::size_t length);

    [[nodiscard]] std::size_t length() const noexcept { return length_; }
    [[nodiscard]] bool get(std::size_t i) const;
    void set(std::size_t i, bool value = true);
    void flip(std::size_t i);

    [[nodiscard]] std::size_t weight() const noexcept;
    [[nodiscard]] bool is_zero() const noexcept;
    [[nodiscard]] std::span<const Block> blocks() const noexcept { return blocks_; }

    BitWord& operator^=(const BitWord& other);
    BitWord& operator&=(const BitWord& other);

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const BitWord&, const BitWord&) = default;

private:
    std::size_t length_ = 0;
    std::vector<Block> blocks_;
};

[[nodiscard]] BitWord operator^(BitWord lhs, const BitWord& rhs);
[[nodiscard]] BitWord operator&(BitWord lhs, const BitWord& rhs);
std::ostream& operator<<(std::ostream& os, const BitWord& w);

/// Componentwise sum; throws DimensionError on length mismatch.
[[nodiscard]] BitWord word_add(const BitWord& u, const BitWord& v);
/// Standard inner product, i.e. parity of the shared ones.
[[nodiscard]] bool word_dot(const BitWord& u, const BitWord& v);
[[nodiscard]] std::size_t weight(const BitWord& u) noexcept;

class Gf2Matrix {
public:
    Gf2Matrix() = default;
    /// Zero matrix.
    Gf2Matrix(std::size_t rows, std::size_t cols);
    /// All rows must share the same length. An empty row list yields 0x0.
    explicit Gf2Matrix(std::vector<BitWord> rows);
    /// Empty row list with an explicit column count (k = 0).
    Gf2Matrix(std::vector<BitWord> rows, std::size_t cols);
    Gf2Matrix(std::initializer_list<std::initializer_list<int>> rows);

    static Gf2Matrix identity(std::size_t k);
    static Gf2Matrix from_strings(std::span<const std::string_view> rows);

    [[nodiscard]] std::size_t row_count() const noexcept { return rows_.size(); }
    [[nodiscard]] std::size_t col_count() const noexcept { return cols_; }
    [[nodiscard]] bool is_square() const noexcept { return rows_.size() == cols_; }

    [[nodiscard]] bool get(std::size_t r, std::size_t c) const { return rows_.at(r).get(c); }
    void set(std::size_t r, std::size_t c, bool value = true) { rows_.at(r).set(c, value); }

    [[nodiscard]] const BitWord& row(std::size_t r) const { return rows_.at(r); }
    [[nodiscard]] const std::vector<BitWord>& rows() const noexcept { return rows_; }

    void swap_rows(std::size_t a, std::size_t b);
    /// row[dst] += row[src]
    void add_row(std::size_t dst, std::size_t src);

    [[nodiscard]] BitWord column(std::size_t c) const;

    friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

private:
    std::vector<BitWord> rows_;
    std::size_t cols_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Gf2Matrix& m);

[[nodiscard]] Gf2Matrix mat_mul(const Gf2Matrix& a, const Gf2Matrix& b);
[[nodiscard]] Gf2Matrix mat_transpose(const Gf2Matrix& a);
/// G * G^T, always k x k and symmetric.
[[nodiscard]] Gf2Matrix gram(const Gf2Matrix& g);

struct RrefResult {
    Gf2Matrix matrix;
    /// Strictly increasing; one entry per nonzero row of `matrix`.
    std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form. Pivots are taken at the leftmost column that
/// still has a nonzero entry below the current row; zero rows sink to the
/// bottom.
[[nodiscard]] RrefResult rref(const Gf2Matrix& a);
[[nodiscard]] std::size_t rank(const Gf2Matrix& a);
/// 1 iff nonsingular; throws DimensionError on non-square input.
[[nodiscard]] bool det(const Gf2Matrix& a);

}  // namespace lcd
