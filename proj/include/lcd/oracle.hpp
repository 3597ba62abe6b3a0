#pragma once

// Brute-force computation of LCD[n,k], independent of the closed form.
//
//  * oracle_profile    - k = 2 only; scans column-type censuses (a,b,c,e).
//                        O(n^3), good to n in the hundreds.
//  * oracle_exhaustive - any k; visits every k-dimensional subspace of
//                        GF(2)^n once through its RREF generator.
//  * oracle_pairs      - k = 2 only; scans unordered pairs of words.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "lcd/code.hpp"
#include "lcd/gf2.hpp"

namespace lcd {

enum class Method { formula, profile, exhaustive, pairs, construction };

[[nodiscard]] std::string_view method_name(Method m) noexcept;
/// Throws DomainError on an unknown name.
[[nodiscard]] Method parse_method(std::string_view name);

/// Column census of a 2-row generator: a columns (1,0), b columns (0,1),
/// c columns (1,1) and e columns (0,0).
struct WeightProfile {
    int a = 0;
    int b = 0;
    int c = 0;
    int e = 0;

    [[nodiscard]] int length() const noexcept { return a + b + c + e; }
    /// Nonnegative counts and both rows nonzero and distinct.
    [[nodiscard]] bool valid() const noexcept;

    friend bool operator==(const WeightProfile&, const WeightProfile&) = default;
};

/// min(a+c, b+c, a+b). Throws DomainError on an invalid profile.
[[nodiscard]] int profile_distance(const WeightProfile& p);
/// det of the Gram matrix: (a+c)(b+c) + c is odd.
[[nodiscard]] bool profile_is_lcd(const WeightProfile& p);
/// (1,0) columns, then (0,1), then (1,1), then (0,0).
[[nodiscard]] LinearCode profile_to_matrix(const WeightProfile& p);

struct OracleResult {
    int n = 0;
    int k = 0;
    /// 0 when no LCD code was found.
    int d = 0;
    Method method = Method::exhaustive;
    std::optional<Gf2Matrix> witness;
    /// Set by oracle_profile only.
    std::optional<WeightProfile> profile;
    /// Number of candidate codes examined.
    std::uint64_t visited = 0;

    [[nodiscard]] bool found() const noexcept { return witness.has_value(); }
};

/// Best LCD profile; witness is the first optimum in ascending (a,b,c).
[[nodiscard]] OracleResult oracle_profile(int n);

/// Default budget admits k = 2 up to n = 16 and k = 3 up to n = 12.
inline constexpr std::uint64_t kDefaultExhaustiveBudget = 1'000'000'000;

struct ExhaustiveOptions {
    /// Maximum number of RREF generators the oracle may visit.
    std::uint64_t budget = kDefaultExhaustiveBudget;
    /// Worker threads; 0 selects std::thread::hardware_concurrency().
    unsigned workers = 0;
};

/// Number of k-dimensional subspaces of GF(2)^n, saturating at UINT64_MAX.
[[nodiscard]] std::uint64_t gaussian_binomial(int n, int k);

/// Calls `visit` on each RREF k x n generator, pivot sets in ascending
/// combinatorial order and free entries in ascending integer order (the
/// first free entry of row 0 is the most significant bit). Throws
/// InfeasibleError when the count exceeds `budget`.
void for_each_rref_generator(int n, int k, const std::function<void(const Gf2Matrix&)>& visit,
                             std::uint64_t budget = kDefaultExhaustiveBudget);

/// Best LCD [n,k] code over all subspaces. Witness is the first optimum in
/// for_each_rref_generator order regardless of worker count.
[[nodiscard]] OracleResult oracle_exhaustive(int n, int k, const ExhaustiveOptions& options = {});

/// Largest pair-scan limit for oracle_pairs.
inline constexpr int kMaxPairsLength = 16;

/// LCD[n,2] by scanning unordered pairs of distinct nonzero words.
[[nodiscard]] int oracle_pairs(int n);

}  // namespace lcd
