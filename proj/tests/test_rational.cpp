#include "redmod/rational_matrix.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace redmod;

namespace {

RationalMatrix random_matrix(std::mt19937_64& rng, size_t rows, size_t cols) {
    RationalMatrix m(rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) {
            long num = static_cast<long>(rng() % 11) - 5;
            long den = 1 + static_cast<long>(rng() % 4);
            m.at(i, j) = Rational(num, den);
        }
    return m;
}

} // namespace

TEST_CASE("rank plus nullity equals column count of the transpose side") {
    std::mt19937_64 rng(424242);
    for (int trial = 0; trial < 80; ++trial) {
        size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
        auto m = random_matrix(rng, rows, cols);
        size_t rank = rational_rank(m);
        auto ker = rational_kernel(m); // {x : x*m = 0}, x of length rows
        REQUIRE(rank + ker.size() == rows);
        for (const auto& x : ker) {
            auto y = m.apply(x);
            for (const auto& v : y)
                REQUIRE(v == 0);
        }
    }
}

TEST_CASE("kernel of an invertible matrix is trivial") {
    RationalMatrix m(2, 2);
    m.at(0, 0) = Rational(1, 2);
    m.at(0, 1) = 1;
    m.at(1, 0) = 0;
    m.at(1, 1) = Rational(-3, 7);
    REQUIRE(rational_rank(m) == 2);
    REQUIRE(rational_kernel(m).empty());
}

TEST_CASE("rref is canonical for a row space") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        auto m = random_matrix(rng, 3, 4);
        // mix rows with invertible operations
        RationalMatrix mixed = m;
        for (int k = 0; k < 4; ++k) {
            size_t i = rng() % 3, j = rng() % 3;
            if (i == j)
                continue;
            Rational f(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 3));
            for (size_t c = 0; c < 4; ++c)
                mixed.at(i, c) += f * mixed.at(j, c);
        }
        REQUIRE(rational_rref(m) == rational_rref(mixed));
    }
}

TEST_CASE("row space membership") {
    RationalMatrix m(2, 3);
    m.at(0, 0) = 1;
    m.at(0, 1) = 2;
    m.at(0, 2) = 3;
    m.at(1, 0) = 0;
    m.at(1, 1) = 1;
    m.at(1, 2) = 1;
    REQUIRE(in_row_space(m, {1, 3, 4}));
    REQUIRE_FALSE(in_row_space(m, {0, 0, 1}));
}
