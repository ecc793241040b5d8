#include <gtest/gtest.h>

#include "finlab/errors.hpp"
#include "finlab/space.hpp"
#include "fixtures.hpp"

using namespace finlab;
using fixtures::c;
using fixtures::q;

TEST(WeightedSpace, RejectsBadInput) {
    EXPECT_THROW(WeightedSpace({"a", "b"}, {1, 0}, Field::Real), LabError);
    EXPECT_THROW(WeightedSpace({"a", "a"}, {1, 1}, Field::Real), LabError);
    EXPECT_THROW(WeightedSpace({"a"}, {c(0, 1)}, Field::Real), LabError);
    WeightedSpace s({"a", "b"}, {1, 2}, Field::Real);
    EXPECT_EQ(s.index_of("b"), 1U);
    EXPECT_THROW(s.index_of("z"), LabError);
}

TEST(Subspace, RejectsDependentOrMisSizedBasis) {
    WeightedSpace s = WeightedSpace::uniform({"a", "b", "c"});
    EXPECT_THROW(Subspace(s, {{1, 1, 1}, {2, 2, 2}}), LabError);
    EXPECT_THROW(Subspace(s, {{1, 1}}), LabError);
    EXPECT_THROW(Subspace(s, {}), LabError);
}

TEST(Subspace, CoordinatesRoundTrip) {
    auto a = fixtures::three_point();
    Vec f = a->values(Vec{2, 1});
    EXPECT_EQ(f, (Vec{3, 1, 2}));
    EXPECT_EQ(*a->coords(f), (Vec{2, 1}));
    EXPECT_FALSE(a->coords(Vec{1, 0, 0}).has_value());
    EXPECT_THROW(a->require_coords(FunctionVec{{1, 0, 0}}), LabError);
}

TEST(Subspace, GeneratorsCarryTheWeight) {
    auto a = fixtures::sub({"a", "b"}, {{1, 2}}, {q(1, 2), -3});
    EXPECT_EQ(a->generator(0).coords, (Vec{q(1, 2)}));
    EXPECT_EQ(a->generator(1).coords, (Vec{-6}));
    EXPECT_EQ(evaluate(a->generator(1), Vec{1}), Scalar(-6));
}

TEST(Norm, WeightedSupAndSuppmax) {
    auto a = fixtures::full({"a", "b", "c"}, {1, q(1, 2), -2});
    FunctionVec f{{3, -6, q(3, 2)}};
    EXPECT_EQ(norm(*a, f), Modulus(Rational(9)));
    EXPECT_EQ(suppmax(*a, f), (PointSet{0, 1, 2}));
    EXPECT_EQ(suppmax(*a, FunctionVec{{1, 0, 1}}), (PointSet{2}));
    EXPECT_THROW(suppmax(*a, FunctionVec{{0, 0, 0}}), LabError);
}

TEST(Norm, ComplexModulus) {
    auto a = fixtures::full({"a", "b"}, {}, Field::Complex);
    EXPECT_EQ(norm(*a, FunctionVec{{c(3, 4), 5}}), Modulus(Rational(25)));
    EXPECT_EQ(suppmax(*a, FunctionVec{{c(3, 4), 5}}), (PointSet{0, 1}));
}

TEST(Delta, RequiresUnimodularScalar) {
    auto a = fixtures::three_point();
    EXPECT_EQ(delta(*a, Scalar(-1), "b").coords, (Vec{-1, 1}));
    EXPECT_THROW(delta(*a, Scalar(2), 0), LabError);
    EXPECT_THROW(delta(*a, Scalar(1), "q"), LabError);
}

TEST(SimEquiv, DetectsSignedCopies) {
    auto a = fixtures::sub({"a", "b", "c", "d"}, {{1, -1, 2, 0}, {1, -1, 0, 0}});
    auto r = sim_equiv(*a, 0, 1);
    ASSERT_TRUE(r.equivalent);
    EXPECT_EQ(delta(*a, r.lambda, 0), delta(*a, r.mu, 1));
    EXPECT_FALSE(sim_equiv(*a, 0, 2).equivalent);
    EXPECT_TRUE(sim_equiv(*a, 3, 3).equivalent);
    EXPECT_EQ(a->class_rep(1), 0U);
    EXPECT_FALSE(distinguishes(*a, {0, 1, 2}));
    EXPECT_TRUE(distinguishes(*a, {0, 2, 3}));
}

TEST(SimEquiv, ComplexUnimodularFactor) {
    auto b = fixtures::sub({"a", "b", "c"}, {{1, c(0, 1), 0}, {0, 0, 1}}, {}, Field::Complex);
    auto r = sim_equiv(*b, 0, 1);
    ASSERT_TRUE(r.equivalent);
    EXPECT_TRUE(r.lambda.is_unimodular() && r.mu.is_unimodular());
    EXPECT_EQ(delta(*b, r.lambda, 0), delta(*b, r.mu, 1));
    EXPECT_FALSE(sim_equiv(*b, 0, 2).equivalent);
}

TEST(PlacedOver, SupOutsideBelowNorm) {
    auto a = fixtures::full({"a", "b", "c"});
    Family g(*a, {FunctionVec{{2, 1, 0}}, FunctionVec{{1, 1, 1}}});
    EXPECT_TRUE(placed_over(*a, g, {0}));
    EXPECT_FALSE(placed_over(*a, g, {1}));
    EXPECT_TRUE(placed_over(*a, g, {0, 1, 2}));
}

TEST(Boundary, ThreePointExample) {
    auto a = fixtures::three_point();
    EXPECT_TRUE(is_boundary(*a, {0, 1}).boundary);
    auto r = is_boundary(*a, {2});
    EXPECT_FALSE(r.boundary);
    ASSERT_TRUE(r.witness);
    // The witness has its norm outside {c}.
    EXPECT_GT(norm_of_coords(*a, *r.witness), Modulus::of(a->values(*r.witness)[2]));
    EXPECT_THROW(is_boundary(*a, {}), LabError);
}

TEST(Boundary, WholeSpaceIsAlwaysABoundary) {
    auto a = fixtures::affine_three_point();
    EXPECT_TRUE(is_boundary(*a, all_points(3)).boundary);
    EXPECT_TRUE(is_boundary(*a, {0, 2}).boundary);
    EXPECT_FALSE(is_boundary(*a, {0, 1}).boundary);
}

TEST(ConstantOne, Membership) {
    EXPECT_TRUE(fixtures::affine_three_point()->constant_one().has_value());
    EXPECT_FALSE(fixtures::sub({"a", "b"}, {{1, 2}})->constant_one().has_value());
}
