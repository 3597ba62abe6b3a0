#include "lcd/code.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <utility>

#include "lcd/errors.hpp"

namespace lcd {

LinearCode::LinearCode(Gf2Matrix generator) : generator_(std::move(generator)) {
    const auto k = generator_.row_count();
    const auto n = generator_.col_count();
    if (k == 0 || k > n) {
        throw DegenerateCodeError("generator must satisfy 1 <= k <= n (got k=" + std::to_string(k) +
                                  ", n=" + std::to_string(n) + ")");
    }
    if (const auto r = rank(generator_); r != k) {
        throw DegenerateCodeError("generator has rank " + std::to_string(r) + " but " + std::to_string(k) +
                                  " rows");
    }
}

ColumnPermutation::ColumnPermutation(std::vector<std::size_t> mapping) : mapping_(std::move(mapping)) {
    std::vector<bool> seen(mapping_.size(), false);
    for (auto j : mapping_) {
        if (j >= mapping_.size() || seen[j]) {
            throw InvalidTransformError("column mapping is not a permutation");
        }
        seen[j] = true;
    }
}

ColumnPermutation ColumnPermutation::identity(std::size_t n) {
    std::vector<std::size_t> m(n);
    std::iota(m.begin(), m.end(), std::size_t{0});
    return ColumnPermutation(std::move(m));
}

bool ColumnPermutation::is_identity() const noexcept {
    for (std::size_t j = 0; j < mapping_.size(); ++j) {
        if (mapping_[j] != j) {
            return false;
        }
    }
    return true;
}

ColumnPermutation ColumnPermutation::inverse() const {
    std::vector<std::size_t> inv(mapping_.size());
    for (std::size_t j = 0; j < mapping_.size(); ++j) {
        inv[mapping_[j]] = j;
    }
    return ColumnPermutation(std::move(inv));
}

std::size_t min_distance(const LinearCode& code) {
    const auto& g = code.generator();
    const auto k = code.dimension();
    if (k > kMaxEnumerableDimension) {
        throw InfeasibleError("min_distance: dimension " + std::to_string(k) + " exceeds enumeration limit " +
                              std::to_string(kMaxEnumerableDimension));
    }
    // Gray code: step i flips message bit countr_zero(i), i.e. one row XOR.
    BitWord word(code.length());
    std::size_t best = code.length();
    const std::uint64_t steps = std::uint64_t{1} << k;
    for (std::uint64_t i = 1; i < steps; ++i) {
        word ^= g.row(static_cast<std::size_t>(std::countr_zero(i)));
        best = std::min(best, word.weight());
    }
    return best;
}

std::size_t k2_distance(const BitWord& u, const BitWord& v) {
    const BitWord sum = word_add(u, v);
    if (u.is_zero() || v.is_zero() || sum.is_zero()) {
        throw DegenerateCodeError("k2_distance: basis words are linearly dependent");
    }
    return std::min({u.weight(), v.weight(), sum.weight()});
}

bool is_lcd(const LinearCode& code) { return det(gram(code.generator())); }

Gf2Matrix permute_columns(const Gf2Matrix& m, const ColumnPermutation& p) {
    if (p.size() != m.col_count()) {
        throw DimensionError("permutation of size " + std::to_string(p.size()) + " applied to " +
                             std::to_string(m.col_count()) + " columns");
    }
    std::vector<BitWord> rows;
    rows.reserve(m.row_count());
    for (const auto& src : m.rows()) {
        BitWord dst(m.col_count());
        for (std::size_t j = 0; j < p.size(); ++j) {
            if (src.get(p[j])) {
                dst.set(j);
            }
        }
        rows.push_back(std::move(dst));
    }
    return Gf2Matrix(std::move(rows), m.col_count());
}

LinearCode permute_columns(const LinearCode& code, const ColumnPermutation& p) {
    return LinearCode(permute_columns(code.generator(), p));
}

LinearCode row_transform(const LinearCode& code, const Gf2Matrix& m) {
    const auto k = code.dimension();
    if (m.row_count() != k || m.col_count() != k) {
        throw DimensionError("row transform must be " + std::to_string(k) + "x" + std::to_string(k));
    }
    if (!det(m)) {
        throw InvalidTransformError("row transform matrix is singular");
    }
    return LinearCode(mat_mul(m, code.generator()));
}

StandardForm standard_form(const LinearCode& code) {
    auto reduced = rref(code.generator());
    const auto n = code.length();
    // rank == k, so there are exactly k pivots, strictly increasing with
    // pivots[i] >= i. Swapping column i with pivots[i] never disturbs an
    // earlier or later pivot.
    std::vector<std::size_t> mapping(n);
    std::iota(mapping.begin(), mapping.end(), std::size_t{0});
    for (std::size_t i = 0; i < reduced.pivots.size(); ++i) {
        std::swap(mapping[i], mapping[reduced.pivots[i]]);
    }
    ColumnPermutation perm(std::move(mapping));
    return {LinearCode(permute_columns(reduced.matrix, perm)), std::move(perm)};
}

}  // namespace lcd
