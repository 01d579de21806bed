#include "oracles.hpp"

#include <flagswap/rat_matrix.hpp>
#include <flagswap/rational.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace flagswap;

TEST(Rational, StoredInLowestTermsWithPositiveDenominator)
{
    const Rational a(Integer(6), Integer(-4));
    EXPECT_EQ(a.numerator(), -3);
    EXPECT_EQ(a.denominator(), 2);
    EXPECT_EQ(a.str(), "-3/2");
    EXPECT_EQ(Rational::parse("10/4"), Rational(Integer(5), Integer(2)));
    EXPECT_EQ(Rational::parse("-0/7"), Rational(0));
    EXPECT_EQ(Rational::parse("+12"), Rational(12));
}

TEST(Rational, ParseRejectsMalformedText)
{
    for (const char* bad : {"", "1/0", "1/-2", "a", "1.5", "--1", "3/", "/3", "1 2"}) {
        EXPECT_THROW(Rational::parse(bad), Error) << bad;
    }
}

TEST(Rational, ArithmeticIsExact)
{
    const Rational third(Integer(1), Integer(3));
    EXPECT_EQ(third + third + third, Rational(1));
    EXPECT_EQ(third * Rational(3), Rational(1));
    EXPECT_EQ(Rational(1) / third, Rational(3));
    EXPECT_EQ(-third, Rational(Integer(-1), Integer(3)));
    // 2^200 / 2^199 stays exact
    Rational big(1);
    for (int i = 0; i < 200; ++i) {
        big = big * Rational(2);
    }
    EXPECT_EQ(big / (big / Rational(2)), Rational(2));
    EXPECT_LT(Rational(-1), third);
}

TEST(Rational, DivisionByZeroThrows)
{
    try {
        (void)(Rational(1) / Rational(0));
        FAIL() << "expected an error";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::SingularMatrix);
    }
}

TEST(Det, SpecExamples)
{
    EXPECT_EQ(det(RatMatrix::identity(3)), Rational(1));
    EXPECT_EQ(det(RatMatrix{{0, 1}, {1, 0}}), Rational(-1));
}

TEST(Det, AgreesWithCofactorOracleOnRandom4x4)
{
    std::mt19937_64 rng(11);
    for (int s = 0; s < 200; ++s) {
        const RatMatrix m = oracle::random_matrix(4, rng);
        EXPECT_EQ(det(m), oracle::cofactor_det(m));
    }
}

TEST(Det, RationalEntriesAgreeWithCofactorOracle)
{
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<long> num(-7, 7);
    std::uniform_int_distribution<long> den(1, 5);
    for (int s = 0; s < 50; ++s) {
        RatMatrix m(5);
        for (std::size_t i = 0; i < 5; ++i) {
            for (std::size_t j = 0; j < 5; ++j) {
                m(i, j) = Rational(Integer(num(rng)), Integer(den(rng)));
            }
        }
        EXPECT_EQ(det(m), oracle::cofactor_det(m));
    }
}

TEST(Det, Multiplicative)
{
    std::mt19937_64 rng(13);
    for (std::size_t d = 1; d <= 6; ++d) {
        for (int s = 0; s < 20; ++s) {
            const RatMatrix a = oracle::random_matrix(d, rng);
            const RatMatrix b = oracle::random_matrix(d, rng);
            EXPECT_EQ(det(a * b), det(a) * det(b));
        }
    }
}

TEST(Rank, AgreesWithGaussianOracle)
{
    std::mt19937_64 rng(14);
    for (std::size_t d = 1; d <= 6; ++d) {
        for (int s = 0; s < 30; ++s) {
            // low-rank products appear often with a narrow entry range
            const RatMatrix m = oracle::random_matrix(d, rng, -1, 1) * oracle::random_matrix(d, rng, 0, 1);
            EXPECT_EQ(rank(m), oracle::gauss_rank(oracle::rows_of(m)));
        }
    }
}

TEST(InverseUnitriangular, SpecExamples)
{
    EXPECT_EQ(inverse_unitriangular(RatMatrix::identity(4)), RatMatrix::identity(4));
    const RatMatrix u{{1, 1, 1}, {0, 1, 2}, {0, 0, 1}};
    const RatMatrix expected{{1, -1, 1}, {0, 1, -2}, {0, 0, 1}};
    EXPECT_EQ(inverse_unitriangular(u), expected);
}

TEST(InverseUnitriangular, SymbolicFormulaForD3)
{
    std::mt19937_64 rng(15);
    for (int s = 0; s < 50; ++s) {
        const RatMatrix u = oracle::random_unitriangular(3, rng);
        const Rational x = u(0, 1), y = u(0, 2), z = u(1, 2);
        const RatMatrix expected{{1, -x, x * z - y}, {0, 1, -z}, {0, 0, 1}};
        EXPECT_EQ(inverse_unitriangular(u), expected);
    }
}

TEST(InverseUnitriangular, ProductIsIdentityAndInvolution)
{
    std::mt19937_64 rng(16);
    for (std::size_t d = 1; d <= 8; ++d) {
        for (int s = 0; s < 10; ++s) {
            const RatMatrix u = oracle::random_unitriangular(d, rng);
            const RatMatrix v = inverse_unitriangular(u);
            EXPECT_TRUE(v.is_unitriangular());
            EXPECT_EQ(oracle::naive_product(u, v), RatMatrix::identity(d));
            EXPECT_EQ(inverse_unitriangular(v), u);
        }
    }
}

TEST(InverseUnitriangular, RejectsNonUnitriangular)
{
    for (const RatMatrix& bad : {RatMatrix{{2, 0}, {0, 1}}, RatMatrix{{1, 0}, {1, 1}}}) {
        try {
            (void)inverse_unitriangular(bad);
            FAIL() << "expected an error";
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::NotUnitriangular);
        }
    }
}

TEST(CornerMinors, SymbolicD3)
{
    std::mt19937_64 rng(17);
    for (int s = 0; s < 50; ++s) {
        const RatMatrix u = oracle::random_unitriangular(3, rng);
        const auto p = corner_minors(u);
        ASSERT_EQ(p.size(), 2U);
        EXPECT_EQ(p[0], u(0, 2));
        EXPECT_EQ(p[1], u(0, 1) * u(1, 2) - u(0, 2));
    }
    const auto p = corner_minors(RatMatrix{{1, 1, 1}, {0, 1, 2}, {0, 0, 1}});
    EXPECT_EQ(p[0], Rational(1));
    EXPECT_EQ(p[1], Rational(1));
}

TEST(CornerMinors, IdentityHasAllZero)
{
    for (std::size_t d = 2; d <= 8; ++d) {
        for (const auto& p : corner_minors(RatMatrix::identity(d))) {
            EXPECT_TRUE(p.is_zero());
        }
    }
}

TEST(CornerMinors, MatchCofactorOracleOfUpperRightBlock)
{
    std::mt19937_64 rng(18);
    for (std::size_t d = 2; d <= 7; ++d) {
        const RatMatrix u = oracle::random_unitriangular(d, rng);
        const auto p = corner_minors(u);
        for (std::size_t k = 1; k < d; ++k) {
            oracle::Rows block(k, std::vector<Rational>(k));
            for (std::size_t i = 0; i < k; ++i) {
                for (std::size_t j = 0; j < k; ++j) {
                    block[i][j] = u(i, d - k + j);
                }
            }
            EXPECT_EQ(p[k - 1], oracle::cofactor_det(block)) << "d=" << d << " k=" << k;
        }
    }
}

TEST(CornerMinors, JacobiComplementaryIdentity)
{
    std::mt19937_64 rng(19);
    for (std::size_t d = 2; d <= 8; ++d) {
        int generic = 0;
        while (generic < 100) {
            const RatMatrix u = oracle::random_unitriangular(d, rng, -9, 9);
            const auto p = corner_minors(u);
            bool all_nonzero = true;
            for (const auto& x : p) {
                all_nonzero = all_nonzero && !x.is_zero();
            }
            if (!all_nonzero) {
                continue;
            }
            ++generic;
            const auto q = corner_minors(inverse_unitriangular(u));
            for (std::size_t k = 1; k < d; ++k) {
                const Rational expected = (k * (d + 1)) % 2 == 0 ? p[d - k - 1] : -p[d - k - 1];
                ASSERT_EQ(q[k - 1], expected) << "d=" << d << " k=" << k;
            }
            if (d % 4 == 2) {
                EXPECT_EQ(q[d / 2 - 1].sign(), -p[d / 2 - 1].sign());
            }
        }
    }
}

TEST(Elementary, AddsMultipleOfNextColumn)
{
    const RatMatrix e = elementary(3, 2, Rational(5));
    const RatMatrix expected{{1, 0, 0}, {0, 1, 5}, {0, 0, 1}};
    EXPECT_EQ(e, expected);
}
