#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "a1mod/gf2.hpp"

#include <random>

using namespace a1mod;

namespace {

using Rows = std::vector<std::vector<int>>;

Rows random_rows(size_t r, size_t c, unsigned seed, double p = 0.5)
{
    std::mt19937 rng(seed);
    std::bernoulli_distribution bit(p);
    Rows a(r, std::vector<int>(c));
    for (auto& row : a)
        for (auto& x : row)
            x = bit(rng);
    return a;
}

// plain elimination on ints, written independently of BitMatrix
size_t naive_rank(Rows a)
{
    size_t rank = 0, cols = a.empty() ? 0 : a[0].size();
    for (size_t c = 0; c < cols && rank < a.size(); ++c) {
        size_t p = rank;
        while (p < a.size() && !a[p][c])
            ++p;
        if (p == a.size())
            continue;
        std::swap(a[p], a[rank]);
        for (size_t r = 0; r < a.size(); ++r)
            if (r != rank && a[r][c])
                for (size_t k = 0; k < cols; ++k)
                    a[r][k] ^= a[rank][k];
        ++rank;
    }
    return rank;
}

}  // namespace

TEST_CASE("rank of identity and zero")
{
    auto r = row_reduce(BitMatrix::identity(3));
    CHECK(r.rank == 3);
    CHECK(r.pivots == std::vector<size_t>{0, 1, 2});
    auto z = row_reduce(BitMatrix(4, 5));
    CHECK(z.rank == 0);
    CHECK(z.pivots.empty());
    CHECK(rank(BitMatrix(0, 7)) == 0);
    CHECK(rank(BitMatrix(7, 0)) == 0);
}

TEST_CASE("rank agrees with naive elimination")
{
    for (unsigned seed = 1; seed <= 40; ++seed) {
        size_t r = 1 + seed % 9, c = 1 + (seed * 7) % 13;
        auto rows = random_rows(r, c, seed, seed % 3 ? 0.5 : 0.2);
        CHECK(rank(BitMatrix::from_rows(rows, c)) == naive_rank(rows));
    }
    auto six = random_rows(6, 9, 2024);
    CHECK(rank(BitMatrix::from_rows(six, 9)) == naive_rank(six));
}

TEST_CASE("wide matrices cross word boundaries")
{
    auto rows = random_rows(70, 150, 7);
    CHECK(rank(BitMatrix::from_rows(rows, 150)) == naive_rank(rows));
    BitMatrix m = BitMatrix::from_rows(rows, 150);
    CHECK(m.transpose().transpose() == m);
    CHECK(rank(m.transpose()) == naive_rank(rows));
}

TEST_CASE("kernel basis")
{
    CHECK(kernel_basis(BitMatrix::identity(5)).rows() == 0);
    BitMatrix k = kernel_basis(BitMatrix(3, 4));
    CHECK(k.rows() == 4);
    CHECK(rank(k) == 4);
    auto rows = random_rows(7, 10, 11);
    BitMatrix m = BitMatrix::from_rows(rows, 10);
    BitMatrix kb = kernel_basis(m);
    CHECK(kb.rows() == 10 - naive_rank(rows));
    CHECK(rank(kb) == kb.rows());
    for (size_t i = 0; i < kb.rows(); ++i)
        CHECK((m * kb.row(i)).is_zero());
}

TEST_CASE("solve")
{
    BitVector b = BitVector::from_string("1011");
    auto x = solve(BitMatrix::identity(4), b);
    REQUIRE(x);
    CHECK(*x == b);
    CHECK(!solve(BitMatrix(3, 3), BitVector::from_string("010")));
    CHECK_THROWS_AS(solve(BitMatrix(3, 3), BitVector(2)), std::invalid_argument);

    auto rows = random_rows(8, 8, 5);
    rows[7] = rows[0];
    for (size_t c = 0; c < 8; ++c)
        rows[6][c] = rows[1][c] ^ rows[2][c];
    BitMatrix m = BitMatrix::from_rows(rows, 8);
    CHECK(rank(m) < 8);
    BitVector x0 = BitVector::from_string("11010011");
    BitVector rhs = m * x0;
    auto sol = solve(m, rhs);
    REQUIRE(sol);
    CHECK(m * *sol == rhs);
}

TEST_CASE("subspace membership")
{
    Subspace s(5);
    CHECK(s.add(BitVector::from_string("11000")));
    CHECK(s.add(BitVector::from_string("01100")));
    CHECK(!s.add(BitVector::from_string("10100")));
    CHECK(s.dim() == 2);
    CHECK(s.contains(BitVector::from_string("10100")));
    CHECK(!s.contains(BitVector::from_string("00001")));
    CHECK(Subspace::whole(5).dim() == 5);
}
