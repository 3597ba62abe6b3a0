#include <doctest.h>

#include <random>

#include "lcd/errors.hpp"
#include "lcd/gf2.hpp"
#include "naive.hpp"

using lcd::BitWord;
using lcd::Gf2Matrix;

TEST_CASE("word_add") {
    CHECK(lcd::word_add(BitWord{1, 0, 1}, BitWord{0, 1, 1}) == BitWord{1, 1, 0});

    std::mt19937_64 rng(11);
    for (std::size_t n : {1U, 7U, 64U, 65U, 130U}) {
        const auto w = naive::random_word(rng, n);
        CHECK(lcd::word_add(w, w) == BitWord(n));
        CHECK(lcd::word_add(w, BitWord(n)) == w);
    }
    CHECK_THROWS_AS((void)lcd::word_add(BitWord(3), BitWord(4)), lcd::DimensionError);
}

TEST_CASE("word_dot") {
    CHECK(lcd::word_dot(BitWord{1, 0, 1}, BitWord{0, 1, 1}));
    CHECK_FALSE(lcd::word_dot(BitWord{1, 0, 1}, BitWord(3)));
    CHECK(lcd::word_dot(BitWord{1, 1, 0, 0}, BitWord{0, 1, 1, 0}));
    CHECK_THROWS_AS((void)lcd::word_dot(BitWord(2), BitWord(5)), lcd::DimensionError);
}

TEST_CASE("weight") {
    CHECK(lcd::weight(BitWord(9)) == 0);
    CHECK(lcd::weight(BitWord::ones(7)) == 7);
    CHECK(lcd::weight(BitWord::from_string("101101")) == 4);
    CHECK(lcd::weight(BitWord::ones(130)) == 130);
}

TEST_CASE("canonical padding and equality") {
    const auto ones = BitWord::ones(70);
    REQUIRE(ones.blocks().size() == 2);
    CHECK(ones.blocks()[1] == (std::uint64_t{1} << 6) - 1);

    BitWord w(70);
    for (std::size_t i = 0; i < 70; ++i) {
        w.set(i);
    }
    CHECK(w == ones);
    CHECK(BitWord(3) != BitWord(4));
    CHECK_THROWS_AS(w.set(70), lcd::DimensionError);
    CHECK_THROWS_AS((void)BitWord::from_string("10x"), lcd::DomainError);
}

TEST_CASE("word identities on random pairs") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = 1 + rng() % 150;
        const auto u = naive::random_word(rng, n);
        const auto v = naive::random_word(rng, n);
        std::size_t overlap = 0;
        for (std::size_t i = 0; i < n; ++i) {
            overlap += (u.get(i) && v.get(i)) ? 1 : 0;
        }
        CHECK(lcd::weight(lcd::word_add(u, v)) == lcd::weight(u) + lcd::weight(v) - 2 * overlap);
        CHECK(lcd::word_dot(u, v) == ((lcd::weight(u & v) % 2) == 1));
    }
}

TEST_CASE("gram") {
    const Gf2Matrix g{{1, 0, 1}, {0, 1, 1}};
    const Gf2Matrix expected{{0, 1}, {1, 0}};
    CHECK(naive::multiply(naive::from(g), naive::transpose(naive::from(g))) == naive::from(expected));
    CHECK(lcd::gram(g) == expected);

    CHECK(lcd::gram(Gf2Matrix::identity(5)) == Gf2Matrix::identity(5));

    const Gf2Matrix h{{1, 0, 1, 0, 1, 1}, {0, 1, 0, 1, 1, 1}};
    CHECK(naive::multiply(naive::from(h), naive::transpose(naive::from(h))) == naive::Matrix{{0, 0}, {0, 0}});
    CHECK(lcd::gram(h) == Gf2Matrix(2, 2));
}

TEST_CASE("gram is symmetric and equals G times G^T") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        const auto g = naive::random_matrix(rng, 1 + rng() % 6, 1 + rng() % 90);
        const auto gg = lcd::gram(g);
        CHECK(gg == lcd::mat_transpose(gg));
        CHECK(gg == lcd::mat_mul(g, lcd::mat_transpose(g)));
    }
}

TEST_CASE("mat_mul agrees with the triple loop") {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t r = 1 + rng() % 8;
        const std::size_t m = 1 + rng() % 70;
        const std::size_t c = 1 + rng() % 70;
        const auto a = naive::random_matrix(rng, r, m);
        const auto b = naive::random_matrix(rng, m, c);
        CHECK(naive::from(lcd::mat_mul(a, b)) == naive::multiply(naive::from(a), naive::from(b)));
    }
    CHECK_THROWS_AS((void)lcd::mat_mul(Gf2Matrix(2, 3), Gf2Matrix(2, 3)), lcd::DimensionError);
}

TEST_CASE("transpose") {
    const Gf2Matrix a{{1, 1, 0}, {0, 0, 1}};
    CHECK(lcd::mat_transpose(a) == Gf2Matrix{{1, 0}, {1, 0}, {0, 1}});
    CHECK(lcd::mat_transpose(lcd::mat_transpose(a)) == a);
}

TEST_CASE("rank, det and rref") {
    CHECK(lcd::det(Gf2Matrix{{0, 1}, {1, 0}}));
    CHECK_FALSE(lcd::det(Gf2Matrix(2, 2)));
    CHECK(lcd::rank(Gf2Matrix{{1, 0, 1}, {0, 1, 1}}) == 2);
    CHECK(lcd::rank(Gf2Matrix{{1, 1, 0}, {1, 1, 0}}) == 1);
    CHECK_THROWS_AS((void)lcd::det(Gf2Matrix(2, 3)), lcd::DimensionError);

    const auto r = lcd::rref(Gf2Matrix{{0, 1, 1, 0}, {0, 1, 0, 1}, {1, 1, 1, 1}});
    CHECK(r.matrix == Gf2Matrix{{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}});
    CHECK(r.pivots == std::vector<std::size_t>{0, 1, 2});

    const auto z = lcd::rref(Gf2Matrix{{0, 0, 1}, {0, 0, 1}});
    CHECK(z.matrix == Gf2Matrix{{0, 0, 1}, {0, 0, 0}});
    CHECK(z.pivots == std::vector<std::size_t>{2});
}

TEST_CASE("det matches rank on every 2x2 matrix") {
    int nonsingular = 0;
    for (unsigned bits = 0; bits < 16; ++bits) {
        Gf2Matrix a(2, 2);
        for (unsigned i = 0; i < 4; ++i) {
            a.set(i / 2, i % 2, ((bits >> i) & 1U) != 0);
        }
        const bool d = lcd::det(a);
        CHECK(d == (lcd::rank(a) == 2));
        CHECK(static_cast<int>(d) == naive::determinant(naive::from(a)));
        nonsingular += d ? 1 : 0;
    }
    // |GL(2,2)| = 6
    CHECK(nonsingular == 6);
}

TEST_CASE("det matches rank and cofactor expansion on random 3x3 and 4x4") {
    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t k = 3 + trial % 2;
        const auto a = naive::random_matrix(rng, k, k);
        CHECK(lcd::det(a) == (lcd::rank(a) == k));
        CHECK(static_cast<int>(lcd::det(a)) == naive::determinant(naive::from(a)));
    }
}

TEST_CASE("rref is idempotent with increasing pivots") {
    std::mt19937_64 rng(16);
    for (int trial = 0; trial < 300; ++trial) {
        const auto a = naive::random_matrix(rng, 1 + rng() % 7, 1 + rng() % 80);
        const auto once = lcd::rref(a);
        const auto twice = lcd::rref(once.matrix);
        CHECK(twice.matrix == once.matrix);
        CHECK(twice.pivots == once.pivots);
        for (std::size_t i = 0; i < once.pivots.size(); ++i) {
            if (i > 0) {
                CHECK(once.pivots[i] > once.pivots[i - 1]);
            }
            // pivot column is a unit vector
            CHECK(lcd::weight(once.matrix.column(once.pivots[i])) == 1);
            CHECK(once.matrix.get(i, once.pivots[i]));
        }
        for (std::size_t i = once.pivots.size(); i < a.row_count(); ++i) {
            CHECK(once.matrix.row(i).is_zero());
        }
    }
}
