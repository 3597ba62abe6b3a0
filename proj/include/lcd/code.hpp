#pragma once

#include <cstddef>
#include <vector>

#include "lcd/gf2.hpp"

namespace lcd {

/// Largest dimension min_distance will enumerate (2^k - 1 codewords).
inline constexpr std::size_t kMaxEnumerableDimension = 24;

/// A binary [n,k] code given by a full-rank generator matrix.
class LinearCode {
public:
    /// Throws DegenerateCodeError unless 1 <= k <= n and rank(generator) == k.
    explicit LinearCode(Gf2Matrix generator);

    [[nodiscard]] const Gf2Matrix& generator() const noexcept { return generator_; }
    [[nodiscard]] std::size_t length() const noexcept { return generator_.col_count(); }
    [[nodiscard]] std::size_t dimension() const noexcept { return generator_.row_count(); }

    friend bool operator==(const LinearCode&, const LinearCode&) = default;

private:
    Gf2Matrix generator_;
};

/// Bijection on column indices. Applying it to a matrix puts old column
/// `mapping()[j]` at position j.
class ColumnPermutation {
public:
    /// Throws InvalidTransformError if `mapping` is not a permutation.
    explicit ColumnPermutation(std::vector<std::size_t> mapping);

    static ColumnPermutation identity(std::size_t n);

    [[nodiscard]] std::size_t size() const noexcept { return mapping_.size(); }
    [[nodiscard]] const std::vector<std::size_t>& mapping() const noexcept { return mapping_; }
    [[nodiscard]] std::size_t operator[](std::size_t j) const { return mapping_.at(j); }
    [[nodiscard]] bool is_identity() const noexcept;
    [[nodiscard]] ColumnPermutation inverse() const;

    friend bool operator==(const ColumnPermutation&, const ColumnPermutation&) = default;

private:
    std::vector<std::size_t> mapping_;
};

/// Minimum weight over all nonzero codewords, by Gray-code enumeration.
/// Throws InfeasibleError when k > kMaxEnumerableDimension.
[[nodiscard]] std::size_t min_distance(const LinearCode& code);

/// Distance of the [n,2] code spanned by u and v.
[[nodiscard]] std::size_t k2_distance(const BitWord& u, const BitWord& v);

/// Massey criterion: the code is LCD iff G G^T is nonsingular.
[[nodiscard]] bool is_lcd(const LinearCode& code);

struct StandardForm {
    LinearCode code;  ///< generator is [I_k | A]
    ColumnPermutation permutation;
};

/// Permutation-equivalent code with generator [I_k | A]. Row operations
/// are applied first; columns move only when a pivot is not already in
/// place.
[[nodiscard]] StandardForm standard_form(const LinearCode& code);

[[nodiscard]] Gf2Matrix permute_columns(const Gf2Matrix& m, const ColumnPermutation& p);
[[nodiscard]] LinearCode permute_columns(const LinearCode& code, const ColumnPermutation& p);

/// Replaces G by M G. Throws InvalidTransformError if M is singular.
[[nodiscard]] LinearCode row_transform(const LinearCode& code, const Gf2Matrix& m);

}  // namespace lcd
