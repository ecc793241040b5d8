#include <gtest/gtest.h>

#include <cstdlib>

#include "finlab/linalg.hpp"
#include "finlab/scalar.hpp"
#include "fixtures.hpp"

using namespace finlab;
using fixtures::c;
using fixtures::q;

TEST(Scalar, RationalArithmeticIsExact) {
    EXPECT_EQ(q(1, 3) + q(1, 6), q(1, 2));
    EXPECT_EQ(q(2, 3) * q(3, 4), q(1, 2));
    EXPECT_EQ(q(1, 2) / q(1, 4), Scalar(2));
    EXPECT_EQ(-q(1, 2), q(-1, 2));
}

TEST(Scalar, ComplexArithmetic) {
    EXPECT_EQ(c(0, 1) * c(0, 1), Scalar(-1));
    EXPECT_EQ(c(1, 2) * c(1, 2).conj(), Scalar(5));
    EXPECT_EQ(c(3, 4).inverse(), Scalar(Rational(3, 25), Rational(-4, 25)));
    EXPECT_EQ(c(1, 1) / c(1, 1), Scalar(1));
}

TEST(Scalar, Unimodular) {
    EXPECT_TRUE(Scalar(-1).is_unimodular());
    EXPECT_TRUE(Scalar(Rational(3, 5), Rational(4, 5)).is_unimodular());
    EXPECT_FALSE(q(1, 2).is_unimodular());
    EXPECT_FALSE(c(1, 1).is_unimodular());
}

TEST(Scalar, InverseOfZeroThrows) { EXPECT_ANY_THROW(Scalar(0).inverse()); }

TEST(Modulus, ExactRootWhenSquare) {
    EXPECT_EQ(*Modulus::of(q(-3, 4)).exact(), Rational(3, 4));
    EXPECT_EQ(*Modulus::of(c(3, 4)).exact(), Rational(5));
    EXPECT_FALSE(Modulus::of(c(1, 1)).exact().has_value());
    EXPECT_LT(Modulus::of(q(1, 2)), Modulus::of(c(0, 1)));
}

TEST(UnimodularSet, RealIsSignPair) {
    auto s = unimodular_set(Field::Real, 16);
    ASSERT_EQ(s.size(), 2U);
    EXPECT_EQ(s[0] * s[1], Scalar(-1));
}

TEST(UnimodularSet, ComplexPointsAreExactlyUnimodularAndDistinct) {
    for (int m : {4, 8, 16, 24}) {
        auto s = unimodular_set(Field::Complex, m);
        ASSERT_EQ(s.size(), static_cast<std::size_t>(m));
        for (std::size_t i = 0; i < s.size(); ++i) {
            EXPECT_TRUE(s[i].is_unimodular());
            for (std::size_t j = i + 1; j < s.size(); ++j) EXPECT_NE(s[i], s[j]);
        }
        if (m % 4 == 0) {
            for (const Scalar& u : {Scalar(1), Scalar(-1), c(0, 1), c(0, -1)})
                EXPECT_NE(std::find(s.begin(), s.end(), u), s.end());
        }
    }
}

TEST(Discretization, ReadsEnvironment) {
    ::setenv("LAB_S_DISCRETIZATION", "24", 1);
    EXPECT_EQ(default_discretization(), 24);
    ::unsetenv("LAB_S_DISCRETIZATION");
    EXPECT_EQ(default_discretization(), 16);
}

TEST(Linalg, RankSolveInverse) {
    Mat m = {{1, 2}, {2, 4}};
    EXPECT_EQ(linalg::rank(m, 2), 1U);
    EXPECT_FALSE(linalg::inverse(m).has_value());
    Mat a = {{2, 1}, {1, 1}};
    auto inv = linalg::inverse(a);
    ASSERT_TRUE(inv);
    EXPECT_EQ(linalg::multiply(a, *inv, 2), linalg::identity(2));
    auto x = linalg::solve(a, Vec{3, 2}, 2);
    ASSERT_TRUE(x);
    EXPECT_EQ(*x, (Vec{1, 1}));
    EXPECT_FALSE(linalg::solve(m, Vec{1, 0}, 2).has_value());
}

TEST(Linalg, NullspaceIsAnnihilated) {
    Mat m = {{1, 1, 1}, {1, -1, 0}};
    auto ns = linalg::nullspace(m, 3);
    ASSERT_EQ(ns.size(), 1U);
    EXPECT_TRUE(linalg::is_zero(linalg::multiply(m, ns[0])));
}

TEST(Linalg, UnimodularRatio) {
    EXPECT_EQ(*linalg::unimodular_ratio(Vec{-1, 2}, Vec{1, -2}), Scalar(-1));
    EXPECT_EQ(*linalg::unimodular_ratio(Vec{c(0, 1), c(-2, 0)}, Vec{1, c(0, 2)}), c(0, 1));
    EXPECT_FALSE(linalg::unimodular_ratio(Vec{2, 4}, Vec{1, 2}).has_value());
    EXPECT_FALSE(linalg::unimodular_ratio(Vec{1, 0}, Vec{0, 1}).has_value());
}
