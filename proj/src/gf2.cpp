#include "lcd/gf2.hpp"

#include <bit>
#include <utility>

#include "lcd/errors.hpp"

namespace lcd {

namespace {

std::size_t blocks_for(std::size_t length) {
    return (length + BitWord::kBlockBits - 1) / BitWord::kBlockBits;
}

void require_same_length(const BitWord& u, const BitWord& v, const char* op) {
    if (u.length() != v.length()) {
        throw DimensionError(std::string(op) + ": word lengths differ (" + std::to_string(u.length()) +
                             " vs " + std::to_string(v.length()) + ")");
    }
}

}  // namespace

BitWord::BitWord(std::size_t length) : length_(length), blocks_(blocks_for(length), 0) {}

BitWord::BitWord(std::initializer_list<int> bits) : BitWord(bits.size()) {
    std::size_t i = 0;
    for (int b : bits) {
        if (b != 0 && b != 1) {
            throw DomainError("bit values must be 0 or 1");
        }
        if (b != 0) {
            set(i);
        }
        ++i;
    }
}

BitWord BitWord::from_string(std::string_view text) {
    BitWord w(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (text[i]) {
            case '0':
                break;
            case '1':
                w.set(i);
                break;
            default:
                throw DomainError("illegal character '" + std::string(1, text[i]) + "' in bit string");
        }
    }
    return w;
}

BitWord BitWord::ones(std::size_t length) {
    BitWord w(length);
    for (auto& b : w.blocks_) {
        b = ~Block{0};
    }
    if (const auto tail = length % kBlockBits; tail != 0) {
        w.blocks_.back() = (Block{1} << tail) - 1;
    }
    return w;
}

bool BitWord::get(std::size_t i) const {
    if (i >= length_) {
        throw DimensionError("bit index " + std::to_string(i) + " out of range for length " + std::to_string(length_));
    }
    return ((blocks_[i / kBlockBits] >> (i % kBlockBits)) & 1U) != 0;
}

void BitWord::set(std::size_t i, bool value) {
    if (i >= length_) {
        throw DimensionError("bit index " + std::to_string(i) + " out of range for length " + std::to_string(length_));
    }
    const Block mask = Block{1} << (i % kBlockBits);
    if (value) {
        blocks_[i / kBlockBits] |= mask;
    } else {
        blocks_[i / kBlockBits] &= ~mask;
    }
}

void BitWord::flip(std::size_t i) { set(i, !get(i)); }

std::size_t BitWord::weight() const noexcept {
    std::size_t total = 0;
    for (Block b : blocks_) {
        total += static_cast<std::size_t>(std::popcount(b));
    }
    return total;
}

bool BitWord::is_zero() const noexcept {
    for (Block b : blocks_) {
        if (b != 0) {
            return false;
        }
    }
    return true;
}

BitWord& BitWord::operator^=(const BitWord& other) {
    require_same_length(*this, other, "xor");
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        blocks_[i] ^= other.blocks_[i];
    }
    return *this;
}

BitWord& BitWord::operator&=(const BitWord& other) {
    require_same_length(*this, other, "and");
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        blocks_[i] &= other.blocks_[i];
    }
    return *this;
}

std::string BitWord::to_string() const {
    std::string s(length_, '0');
    for (std::size_t i = 0; i < length_; ++i) {
        if (get(i)) {
            s[i] = '1';
        }
    }
    return s;
}

BitWord operator^(BitWord lhs, const BitWord& rhs) {
    lhs ^= rhs;
    return lhs;
}

BitWord operator&(BitWord lhs, const BitWord& rhs) {
    lhs &= rhs;
    return lhs;
}

std::ostream& operator<<(std::ostream& os, const BitWord& w) { return os << w.to_string(); }

BitWord word_add(const BitWord& u, const BitWord& v) {
    require_same_length(u, v, "word_add");
    return u ^ v;
}

bool word_dot(const BitWord& u, const BitWord& v) {
    require_same_length(u, v, "word_dot");
    const auto a = u.blocks();
    const auto b = v.blocks();
    unsigned parity = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        parity ^= static_cast<unsigned>(std::popcount(a[i] & b[i])) & 1U;
    }
    return parity != 0;
}

std::size_t weight(const BitWord& u) noexcept { return u.weight(); }

// ---------------------------------------------------------------------------

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols) : rows_(rows, BitWord(cols)), cols_(cols) {}

Gf2Matrix::Gf2Matrix(std::vector<BitWord> rows)
    : Gf2Matrix(std::move(rows), 0) {}

Gf2Matrix::Gf2Matrix(std::vector<BitWord> rows, std::size_t cols) : rows_(std::move(rows)), cols_(cols) {
    if (!rows_.empty()) {
        cols_ = rows_.front().length();
    }
    for (const auto& r : rows_) {
        if (r.length() != cols_) {
            throw DimensionError("matrix rows must all have the same length");
        }
    }
}

Gf2Matrix::Gf2Matrix(std::initializer_list<std::initializer_list<int>> rows) {
    std::vector<BitWord> words;
    words.reserve(rows.size());
    for (const auto& r : rows) {
        words.emplace_back(r);
    }
    *this = Gf2Matrix(std::move(words));
}

Gf2Matrix Gf2Matrix::identity(std::size_t k) {
    Gf2Matrix m(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        m.set(i, i);
    }
    return m;
}

Gf2Matrix Gf2Matrix::from_strings(std::span<const std::string_view> rows) {
    std::vector<BitWord> words;
    words.reserve(rows.size());
    for (auto r : rows) {
        words.push_back(BitWord::from_string(r));
    }
    return Gf2Matrix(std::move(words));
}

void Gf2Matrix::swap_rows(std::size_t a, std::size_t b) { std::swap(rows_.at(a), rows_.at(b)); }

void Gf2Matrix::add_row(std::size_t dst, std::size_t src) { rows_.at(dst) ^= rows_.at(src); }

BitWord Gf2Matrix::column(std::size_t c) const {
    BitWord col(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r].get(c)) {
            col.set(r);
        }
    }
    return col;
}

std::ostream& operator<<(std::ostream& os, const Gf2Matrix& m) {
    for (const auto& r : m.rows()) {
        os << r << '\n';
    }
    return os;
}

// Row i of A*B is the sum of the rows of B selected by row i of A.
Gf2Matrix mat_mul(const Gf2Matrix& a, const Gf2Matrix& b) {
    if (a.col_count() != b.row_count()) {
        throw DimensionError("mat_mul: " + std::to_string(a.row_count()) + "x" + std::to_string(a.col_count()) +
                             " times " + std::to_string(b.row_count()) + "x" + std::to_string(b.col_count()));
    }
    std::vector<BitWord> out;
    out.reserve(a.row_count());
    for (const auto& arow : a.rows()) {
        BitWord acc(b.col_count());
        for (std::size_t j = 0; j < a.col_count(); ++j) {
            if (arow.get(j)) {
                acc ^= b.row(j);
            }
        }
        out.push_back(std::move(acc));
    }
    return Gf2Matrix(std::move(out), b.col_count());
}

Gf2Matrix mat_transpose(const Gf2Matrix& a) {
    Gf2Matrix t(a.col_count(), a.row_count());
    for (std::size_t r = 0; r < a.row_count(); ++r) {
        for (std::size_t c = 0; c < a.col_count(); ++c) {
            if (a.get(r, c)) {
                t.set(c, r);
            }
        }
    }
    return t;
}

Gf2Matrix gram(const Gf2Matrix& g) {
    const std::size_t k = g.row_count();
    Gf2Matrix out(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i; j < k; ++j) {
            if (word_dot(g.row(i), g.row(j))) {
                out.set(i, j);
                out.set(j, i);
            }
        }
    }
    return out;
}

RrefResult rref(const Gf2Matrix& a) {
    Gf2Matrix m = a;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.col_count() && row < m.row_count(); ++col) {
        std::size_t sel = row;
        while (sel < m.row_count() && !m.get(sel, col)) {
            ++sel;
        }
        if (sel == m.row_count()) {
            continue;
        }
        m.swap_rows(row, sel);
        for (std::size_t r = 0; r < m.row_count(); ++r) {
            if (r != row && m.get(r, col)) {
                m.add_row(r, row);
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Gf2Matrix& a) { return rref(a).pivots.size(); }

bool det(const Gf2Matrix& a) {
    if (!a.is_square()) {
        throw DimensionError("det: matrix is " + std::to_string(a.row_count()) + "x" +
                             std::to_string(a.col_count()) + ", not square");
    }
    return rank(a) == a.row_count();
}

}  // namespace lcd
