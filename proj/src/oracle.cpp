#include "lcd/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "lcd/errors.hpp"

namespace lcd {

std::string_view method_name(Method m) noexcept {
    switch (m) {
        case Method::formula:
            return "formula";
        case Method::profile:
            return "profile";
        case Method::exhaustive:
            return "exhaustive";
        case Method::pairs:
            return "pairs";
        case Method::construction:
            return "construction";
    }
    return "unknown";
}

Method parse_method(std::string_view name) {
    for (auto m : {Method::formula, Method::profile, Method::exhaustive, Method::pairs, Method::construction}) {
        if (method_name(m) == name) {
            return m;
        }
    }
    throw DomainError("unknown method '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// Weight profiles

bool WeightProfile::valid() const noexcept {
    return a >= 0 && b >= 0 && c >= 0 && e >= 0 && a + c >= 1 && b + c >= 1 && a + b >= 1;
}

namespace {

void require_valid(const WeightProfile& p) {
    if (!p.valid()) {
        throw DomainError("invalid weight profile (a,b,c,e)=(" + std::to_string(p.a) + "," + std::to_string(p.b) +
                          "," + std::to_string(p.c) + "," + std::to_string(p.e) + ")");
    }
}

}  // namespace

int profile_distance(const WeightProfile& p) {
    require_valid(p);
    return std::min({p.a + p.c, p.b + p.c, p.a + p.b});
}

// Gram entries: u.u = a+c, v.v = b+c, u.v = c (mod 2). Over GF(2) the
// determinant uu*vv - uv^2 reduces to uu*vv + uv.
bool profile_is_lcd(const WeightProfile& p) {
    require_valid(p);
    return (((p.a + p.c) * (p.b + p.c) + p.c) & 1) != 0;
}

LinearCode profile_to_matrix(const WeightProfile& p) {
    require_valid(p);
    const auto n = static_cast<std::size_t>(p.length());
    BitWord u(n);
    BitWord v(n);
    std::size_t col = 0;
    for (int i = 0; i < p.a; ++i) {
        u.set(col++);
    }
    for (int i = 0; i < p.b; ++i) {
        v.set(col++);
    }
    for (int i = 0; i < p.c; ++i) {
        u.set(col);
        v.set(col++);
    }
    return LinearCode(Gf2Matrix({std::move(u), std::move(v)}));
}

OracleResult oracle_profile(int n) {
    if (n < 2) {
        throw DomainError("oracle_profile needs n >= 2 (got " + std::to_string(n) + ")");
    }
    OracleResult result;
    result.n = n;
    result.k = 2;
    result.method = Method::profile;
    for (int a = 0; a <= n; ++a) {
        for (int b = 0; a + b <= n; ++b) {
            if (a + b == 0) {
                continue;
            }
            for (int c = 0; a + b + c <= n; ++c) {
                const WeightProfile p{a, b, c, n - a - b - c};
                if (!p.valid()) {
                    continue;
                }
                ++result.visited;
                if (!profile_is_lcd(p)) {
                    continue;
                }
                if (const int d = profile_distance(p); d > result.d) {
                    result.d = d;
                    result.profile = p;
                }
            }
        }
    }
    if (result.profile) {
        result.witness = profile_to_matrix(*result.profile).generator();
    }
    return result;
}

// ---------------------------------------------------------------------------
// Subspace enumeration

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t x, std::uint64_t y) { return x > kSaturated - y ? kSaturated : x + y; }

std::uint64_t sat_shift(std::uint64_t x, int k) {
    if (x == 0) {
        return 0;
    }
    if (k >= 64 || x > (kSaturated >> k)) {
        return kSaturated;
    }
    return x << k;
}

void require_shape(int n, int k) {
    if (k < 1 || n < k) {
        throw DomainError("need n >= k >= 1 (got n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
    }
}

void require_budget(int n, int k, std::uint64_t budget) {
    const auto count = gaussian_binomial(n, k);
    if (count > budget) {
        throw InfeasibleError("enumerating [" + std::to_string(n) + "," + std::to_string(k) + "] codes needs " +
                              (count == kSaturated ? std::string("> 2^64") : std::to_string(count)) +
                              " generators, budget is " + std::to_string(budget));
    }
}

/// Advances `cols` to the next k-subset of {0..n-1} in lexicographic order.
bool next_combination(std::vector<int>& cols, int n) {
    const int k = static_cast<int>(cols.size());
    int i = k - 1;
    while (i >= 0 && cols[static_cast<std::size_t>(i)] == n - k + i) {
        --i;
    }
    if (i < 0) {
        return false;
    }
    ++cols[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
        cols[static_cast<std::size_t>(j)] = cols[static_cast<std::size_t>(j - 1)] + 1;
    }
    return true;
}

}  // namespace

std::uint64_t gaussian_binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    // q-Pascal rule: [m, j] = [m-1, j-1] + 2^j [m-1, j].
    std::vector<std::uint64_t> row(static_cast<std::size_t>(k) + 1, 0);
    row[0] = 1;
    for (int m = 1; m <= n; ++m) {
        for (int j = std::min(m, k); j >= 1; --j) {
            const auto uj = static_cast<std::size_t>(j);
            row[uj] = sat_add(row[uj - 1], sat_shift(row[uj], j));
        }
    }
    return row[static_cast<std::size_t>(k)];
}

void for_each_rref_generator(int n, int k, const std::function<void(const Gf2Matrix&)>& visit,
                             std::uint64_t budget) {
    require_shape(n, k);
    require_budget(n, k, budget);
    const auto un = static_cast<std::size_t>(n);
    const auto uk = static_cast<std::size_t>(k);

    std::vector<int> pivots(uk);
    for (std::size_t i = 0; i < uk; ++i) {
        pivots[i] = static_cast<int>(i);
    }
    do {
        // Free entries in row-major order: row i, columns after its pivot
        // that are not pivot columns themselves.
        std::vector<std::pair<std::size_t, std::size_t>> free_entries;
        for (std::size_t i = 0; i < uk; ++i) {
            for (auto c = static_cast<std::size_t>(pivots[i]) + 1; c < un; ++c) {
                if (std::find(pivots.begin(), pivots.end(), static_cast<int>(c)) == pivots.end()) {
                    free_entries.emplace_back(i, c);
                }
            }
        }
        const auto f = free_entries.size();
        const std::uint64_t combos = std::uint64_t{1} << f;  // f < 64 under any budget
        for (std::uint64_t x = 0; x < combos; ++x) {
            Gf2Matrix g(uk, un);
            for (std::size_t i = 0; i < uk; ++i) {
                g.set(i, static_cast<std::size_t>(pivots[i]));
            }
            for (std::size_t idx = 0; idx < f; ++idx) {
                if (((x >> (f - 1 - idx)) & 1U) != 0) {
                    g.set(free_entries[idx].first, free_entries[idx].second);
                }
            }
            visit(g);
        }
    } while (next_combination(pivots, n));
}

// ---------------------------------------------------------------------------
// Exhaustive oracle
//
// For n <= 64 each row is one machine word with column j at bit n-1-j, so
// the first column is the most significant bit. Free-entry values then
// ascend in the same order as for_each_rref_generator.

namespace {

using Row = std::uint64_t;

struct PivotLayout {
    std::vector<Row> pivot_bit;  // per row
    std::vector<Row> free_mask;  // per row
    std::uint64_t tasks = 0;     // 2^popcount(free_mask[0])
};

struct ChunkBest {
    int d = 0;
    std::vector<Row> rows;
    std::uint64_t visited = 0;
};

/// Software pdep: bit i of `value` goes to the i-th lowest set bit of `mask`.
Row deposit(std::uint64_t value, Row mask) {
    Row out = 0;
    for (Row m = mask; m != 0 && value != 0; m &= m - 1, value >>= 1) {
        if ((value & 1U) != 0) {
            out |= m & (~m + 1);
        }
    }
    return out;
}

/// Next subset of `mask` in ascending numeric order; 0 after the last.
Row next_subset(Row s, Row mask) { return (s - mask) & mask; }

bool gram_nonsingular(const Row* rows, int k) {
    if (k == 2) {
        const int uu = std::popcount(rows[0]) & 1;
        const int vv = std::popcount(rows[1]) & 1;
        const int uv = std::popcount(rows[0] & rows[1]) & 1;
        return ((uu & vv) ^ uv) != 0;
    }
    std::uint64_t g[64];
    for (int i = 0; i < k; ++i) {
        g[i] = 0;
        for (int j = 0; j < k; ++j) {
            g[i] |= static_cast<std::uint64_t>(std::popcount(rows[i] & rows[j]) & 1) << j;
        }
    }
    for (int col = 0; col < k; ++col) {
        int sel = col;
        while (sel < k && ((g[sel] >> col) & 1U) == 0) {
            ++sel;
        }
        if (sel == k) {
            return false;
        }
        std::swap(g[sel], g[col]);
        for (int r = col + 1; r < k; ++r) {
            if (((g[r] >> col) & 1U) != 0) {
                g[r] ^= g[col];
            }
        }
    }
    return true;
}

/// Distance if it beats `floor`, otherwise 0 (the Gray walk stops as soon
/// as a codeword of weight <= floor shows up).
int distance_above(const Row* rows, int k, int floor) {
    if (k == 2) {
        const int d = std::min({std::popcount(rows[0]), std::popcount(rows[1]), std::popcount(rows[0] ^ rows[1])});
        return d > floor ? d : 0;
    }
    Row word = 0;
    int best = 64;
    const std::uint64_t steps = std::uint64_t{1} << k;
    for (std::uint64_t i = 1; i < steps; ++i) {
        word ^= rows[std::countr_zero(i)];
        const int w = std::popcount(word);
        if (w <= floor) {
            return 0;
        }
        best = std::min(best, w);
    }
    return best;
}

Gf2Matrix rows_to_matrix(const std::vector<Row>& rows, int n) {
    Gf2Matrix g(rows.size(), static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (int j = 0; j < n; ++j) {
            if (((rows[i] >> (n - 1 - j)) & 1U) != 0) {
                g.set(i, static_cast<std::size_t>(j));
            }
        }
    }
    return g;
}

void scan_chunk(const std::vector<PivotLayout>& layouts, const std::vector<std::uint64_t>& prefix, int k,
                std::uint64_t lo, std::uint64_t hi, ChunkBest& out) {
    const auto uk = static_cast<std::size_t>(k);
    Row rows[64];
    auto ps = static_cast<std::size_t>(std::upper_bound(prefix.begin(), prefix.end(), lo) - prefix.begin()) - 1;
    for (std::uint64_t t = lo; t < hi; ++t) {
        while (t >= prefix[ps + 1]) {
            ++ps;
        }
        const auto& layout = layouts[ps];
        rows[0] = layout.pivot_bit[0] | deposit(t - prefix[ps], layout.free_mask[0]);
        // Odometer over the remaining rows, last row fastest.
        Row sub[64] = {};
        for (std::size_t i = 1; i < uk; ++i) {
            rows[i] = layout.pivot_bit[i];
        }
        bool more = true;
        while (more) {
            ++out.visited;
            if (gram_nonsingular(rows, k)) {
                if (const int d = distance_above(rows, k, out.d); d > 0) {
                    out.d = d;
                    out.rows.assign(rows, rows + k);
                }
            }
            more = false;
            for (std::size_t i = uk; i > 1 && !more;) {
                --i;
                sub[i] = next_subset(sub[i], layout.free_mask[i]);
                rows[i] = layout.pivot_bit[i] | sub[i];
                more = sub[i] != 0;
            }
        }
    }
}

OracleResult exhaustive_generic(int n, int k, std::uint64_t budget) {
    OracleResult result;
    result.n = n;
    result.k = k;
    result.method = Method::exhaustive;
    for_each_rref_generator(
        n, k,
        [&](const Gf2Matrix& g) {
            ++result.visited;
            const LinearCode code(g);
            if (!is_lcd(code)) {
                return;
            }
            if (const auto d = static_cast<int>(min_distance(code)); d > result.d) {
                result.d = d;
                result.witness = g;
            }
        },
        budget);
    return result;
}

}  // namespace

OracleResult oracle_exhaustive(int n, int k, const ExhaustiveOptions& options) {
    require_shape(n, k);
    require_budget(n, k, options.budget);
    if (static_cast<std::size_t>(k) > kMaxEnumerableDimension) {
        throw InfeasibleError("oracle_exhaustive: dimension " + std::to_string(k) + " exceeds enumeration limit " +
                              std::to_string(kMaxEnumerableDimension));
    }
    if (n > 64) {
        return exhaustive_generic(n, k, options.budget);
    }

    const auto uk = static_cast<std::size_t>(k);
    std::vector<PivotLayout> layouts;
    std::vector<std::uint64_t> prefix{0};
    std::vector<int> pivots(uk);
    for (std::size_t i = 0; i < uk; ++i) {
        pivots[i] = static_cast<int>(i);
    }
    const auto bit_of = [n](int col) { return Row{1} << (n - 1 - col); };
    do {
        Row pivot_cols = 0;
        for (int p : pivots) {
            pivot_cols |= bit_of(p);
        }
        PivotLayout layout;
        for (std::size_t i = 0; i < uk; ++i) {
            layout.pivot_bit.push_back(bit_of(pivots[i]));
            // Columns strictly right of the pivot are the lower bits.
            const Row right = bit_of(pivots[i]) - 1;
            layout.free_mask.push_back(right & ~pivot_cols);
        }
        layout.tasks = std::uint64_t{1} << std::popcount(layout.free_mask[0]);
        prefix.push_back(prefix.back() + layout.tasks);
        layouts.push_back(std::move(layout));
    } while (next_combination(pivots, n));

    const std::uint64_t total = prefix.back();
    constexpr std::uint64_t kTargetChunks = 4096;
    const std::uint64_t chunk = std::max<std::uint64_t>(1, (total + kTargetChunks - 1) / kTargetChunks);
    const std::uint64_t chunk_count = (total + chunk - 1) / chunk;
    std::vector<ChunkBest> bests(static_cast<std::size_t>(chunk_count));

    unsigned workers = options.workers != 0 ? options.workers : std::max(1U, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, chunk_count));
    std::atomic<std::uint64_t> next{0};
    const auto work = [&] {
        for (std::uint64_t c = next.fetch_add(1); c < chunk_count; c = next.fetch_add(1)) {
            scan_chunk(layouts, prefix, k, c * chunk, std::min(total, (c + 1) * chunk),
                       bests[static_cast<std::size_t>(c)]);
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(work);
        }
    }

    // Chunks are contiguous in enumeration order, so the first chunk holding
    // the maximum also holds the globally first optimum.
    OracleResult result;
    result.n = n;
    result.k = k;
    result.method = Method::exhaustive;
    const ChunkBest* winner = nullptr;
    for (const auto& b : bests) {
        result.visited += b.visited;
        if (b.d > result.d) {
            result.d = b.d;
            winner = &b;
        }
    }
    if (winner != nullptr) {
        result.witness = rows_to_matrix(winner->rows, n);
    }
    return result;
}

// ---------------------------------------------------------------------------
// Pair scan

int oracle_pairs(int n) {
    if (n < 2) {
        throw DomainError("oracle_pairs needs n >= 2 (got " + std::to_string(n) + ")");
    }
    if (n > kMaxPairsLength) {
        throw InfeasibleError("oracle_pairs: n=" + std::to_string(n) + " exceeds limit " +
                              std::to_string(kMaxPairsLength));
    }
    const std::uint32_t top = std::uint32_t{1} << n;
    int best = 0;
    for (std::uint32_t u = 1; u < top; ++u) {
        const int wu = std::popcount(u);
        if (wu <= best) {
            continue;
        }
        const unsigned uu = static_cast<unsigned>(wu) & 1U;
        for (std::uint32_t v = u + 1; v < top; ++v) {
            const int wv = std::popcount(v);
            if (wv <= best) {
                continue;
            }
            const int wsum = std::popcount(u ^ v);
            if (wsum <= best) {
                continue;
            }
            // det [[u.u, u.v], [u.v, v.v]] over GF(2)
            const unsigned vv = static_cast<unsigned>(wv) & 1U;
            const unsigned uv = static_cast<unsigned>(std::popcount(u & v)) & 1U;
            if (((uu & vv) ^ uv) != 0) {
                best = std::min({wu, wv, wsum});
            }
        }
    }
    return best;
}

}  // namespace lcd
