#include "lcd/formula.hpp"

#include <string>

#include "lcd/errors.hpp"

namespace lcd {

NDecomposition decompose(int n) {
    if (n < 2) {
        throw DomainError("no [n,2] code exists for n=" + std::to_string(n));
    }
    if (n == 2) {
        return {-1, 8, 2};
    }
    const int r = (n - 3) / 6;
    return {r, n - 6 * r, n};
}

int lcd_n2_formula(int n) {
    const auto [r, s, _] = decompose(n);
    return 4 * r + (s / 6) * (1 + s % 6) + 2;
}

}  // namespace lcd
