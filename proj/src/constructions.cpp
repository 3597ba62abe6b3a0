#include "lcd/constructions.hpp"

#include <string>
#include <utility>

#include "lcd/errors.hpp"
#include "lcd/formula.hpp"

namespace lcd {

namespace {

LinearCode blocks_then_ones(int identity_blocks, int ones_columns) {
    const auto n = static_cast<std::size_t>(2 * identity_blocks + ones_columns);
    BitWord u(n);
    BitWord v(n);
    std::size_t col = 0;
    for (int b = 0; b < identity_blocks; ++b) {
        u.set(col++);
        v.set(col++);
    }
    for (int c = 0; c < ones_columns; ++c) {
        u.set(col);
        v.set(col);
        ++col;
    }
    return LinearCode(Gf2Matrix({std::move(u), std::move(v)}));
}

}  // namespace

LinearCode construct_family_a(int r, int s) {
    if (r < 0 || s < 3 || s > 5) {
        throw DomainError("family a needs r >= 0 and s in {3,4,5} (got r=" + std::to_string(r) +
                          ", s=" + std::to_string(s) + ")");
    }
    return blocks_then_ones(2 * r + 1, 2 * r + s - 2);
}

LinearCode construct_family_b(int r, int s) {
    if (r < 0 || s < 6 || s > 8) {
        throw DomainError("family b needs r >= 0 and s in {6,7,8} (got r=" + std::to_string(r) +
                          ", s=" + std::to_string(s) + ")");
    }
    return blocks_then_ones(2 * r + 3, 2 * r + s - 6);
}

LinearCode construct_optimal(int n) {
    const auto [r, s, _] = decompose(n);
    if (n == 2) {
        return LinearCode(Gf2Matrix::identity(2));
    }
    return s <= 5 ? construct_family_a(r, s) : construct_family_b(r, s);
}

}  // namespace lcd
