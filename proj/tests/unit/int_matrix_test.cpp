#include "arqkit/int_matrix.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace arqkit;
using arqkit::testing::Rng;

namespace {

IntMatrix random_matrix(Rng& rng, std::size_t r, std::size_t c, int range)
{
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = rng.between(-range, range);
    return m;
}

std::vector<std::vector<Int>> rows_of(const IntMatrix& m)
{
    std::vector<std::vector<Int>> out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        out[i] = m.row(i);
    return out;
}

} // namespace

TEST(IntMatrix, ProductMatchesNaiveLoops)
{
    Rng rng(11);
    for (int t = 0; t < 50; ++t) {
        std::size_t a = rng.between(1, 5), b = rng.between(1, 5), c = rng.between(1, 5);
        IntMatrix x = random_matrix(rng, a, b, 9), y = random_matrix(rng, b, c, 9);
        EXPECT_EQ(x * y, arqkit::testing::naive_mul(x, y));
    }
}

TEST(IntMatrix, PowerMatchesRepeatedProduct)
{
    Rng rng(12);
    for (int t = 0; t < 20; ++t) {
        std::size_t n = rng.between(1, 4);
        IntMatrix m = random_matrix(rng, n, n, 3);
        unsigned k = rng.between(0, 9);
        IntMatrix expect = IntMatrix::identity(n);
        for (unsigned i = 0; i < k; ++i)
            expect = arqkit::testing::naive_mul(expect, m);
        EXPECT_EQ(m.pow(k), expect);
    }
}

TEST(IntMatrix, LargePowersStayExact)
{
    IntMatrix m{{2, 0}, {0, 3}};
    IntMatrix p = m.pow(100);
    EXPECT_EQ(p(0, 0), Int(1) << 100);
    EXPECT_EQ(p(1, 1), boost::multiprecision::pow(Int(3), 100));
}

TEST(IntMatrix, DeterminantMatchesCofactorExpansion)
{
    Rng rng(13);
    for (int t = 0; t < 40; ++t) {
        std::size_t n = rng.between(1, 6);
        IntMatrix m = random_matrix(rng, n, n, 5);
        EXPECT_EQ(determinant(m), arqkit::testing::laplace_det(rows_of(m)));
    }
}

TEST(IntMatrix, IntegerInverseOfUnimodular)
{
    IntMatrix m{{2, 1}, {1, 1}};
    auto inv = integer_inverse(m);
    ASSERT_TRUE(inv);
    EXPECT_EQ(m * *inv, IntMatrix::identity(2));
    EXPECT_FALSE(integer_inverse(IntMatrix{{2, 0}, {0, 1}}));
    EXPECT_FALSE(integer_inverse(IntMatrix{{1, 2}, {2, 4}}));
}

TEST(IntMatrix, NullSpaceVectorsAreKilled)
{
    Rng rng(14);
    for (int t = 0; t < 30; ++t) {
        std::size_t r = rng.between(1, 4), c = rng.between(1, 6);
        IntMatrix m = random_matrix(rng, r, c, 2);
        auto ns = null_space(m);
        EXPECT_EQ(ns.size(), c - rank(m));
        for (const auto& v : ns)
            EXPECT_EQ(m * v, IntVec(r, 0));
    }
}

TEST(IntMatrix, SolveReturnsExactRationals)
{
    IntMatrix m{{2, 0}, {0, 3}};
    auto x = solve(m, {1, 1});
    ASSERT_TRUE(x);
    EXPECT_EQ((*x)[0], Rational(1, 2));
    EXPECT_EQ((*x)[1], Rational(1, 3));
    EXPECT_FALSE(solve(IntMatrix{{1, 1}, {1, 1}}, {1, 0}));
}

TEST(IntMatrix, RowMajorText)
{
    EXPECT_EQ((IntMatrix{{1, -2}, {0, 3}}).to_string(), "1 -2\n0 3\n");
    EXPECT_EQ(to_string(IntVec{1, 2, 3}), "1,2,3");
}
