#include "chow/integer_matrix.hpp"

#include "support/oracles.hpp"

#include <doctest.h>

using namespace chow;

namespace {

IntegerMatrix diagonal(std::initializer_list<int> entries) {
    IntegerMatrix m(entries.size(), entries.size());
    std::size_t i = 0;
    for (int e : entries) {
        m.at(i, i) = e;
        ++i;
    }
    return m;
}

} // namespace

TEST_CASE("smith form of simple matrices") {
    auto id = smith_normal_form(IntegerMatrix::identity(2));
    CHECK(id.diagonal == std::vector<BigInt>{1, 1});

    auto d23 = smith_normal_form(diagonal({2, 3}));
    CHECK(d23.diagonal == std::vector<BigInt>{1, 6});

    auto z = smith_normal_form(IntegerMatrix(3, 2));
    CHECK(z.diagonal == std::vector<BigInt>{0, 0});
    CHECK(z.rank == 0);
}

TEST_CASE("smith form reconstructs the input with unimodular transforms") {
    oracles::Rng rng(123456);
    for (int trial = 0; trial < 150; ++trial) {
        std::size_t rows = static_cast<std::size_t>(rng.uniform(1, 5));
        std::size_t cols = static_cast<std::size_t>(rng.uniform(1, 5));
        auto m = oracles::random_matrix(rng, rows, cols, 9);
        auto s = smith_normal_form(m);

        CHECK(abs_big(s.U.determinant()) == 1);
        CHECK(abs_big(s.V.determinant()) == 1);

        IntegerMatrix d = s.U * m * s.V;
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                CHECK(d.at(i, j) == (i == j && i < s.diagonal.size() ? s.diagonal[i] : BigInt(0)));

        for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i) {
            CHECK(s.diagonal[i] >= 0);
            if (s.diagonal[i] != 0) CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
            else CHECK(s.diagonal[i + 1] == 0);
        }
    }
}

TEST_CASE("kernel and column space bases") {
    oracles::Rng rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t rows = static_cast<std::size_t>(rng.uniform(1, 4));
        std::size_t cols = static_cast<std::size_t>(rng.uniform(1, 4));
        auto m = oracles::random_matrix(rng, rows, cols, 6);
        auto k = kernel_basis(m);
        IntegerMatrix prod = m * k;
        CHECK(prod.is_zero());

        // every column of m is expressible in the column space basis
        auto basis = column_space_basis(m);
        for (std::size_t j = 0; j < cols; ++j) {
            std::vector<BigInt> b(rows);
            for (std::size_t i = 0; i < rows; ++i) b[i] = m.at(i, j);
            CHECK(solve(basis, b).has_value());
        }
    }
}

TEST_CASE("integral linear solve") {
    IntegerMatrix m = IntegerMatrix::from_rows({{2, 0}, {0, 3}});
    CHECK(solve(m, {4, 9}).has_value());
    CHECK(!solve(m, {1, 3}).has_value());
    auto x = solve(m, {4, 9});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 2);
    CHECK((*x)[1] == 3);
}
