#include <gtest/gtest.h>

#include "finlab/choquet.hpp"
#include "finlab/errors.hpp"
#include "fixtures.hpp"

using namespace finlab;
using fixtures::q;

TEST(MSet, ThreePointSubspace) {
    auto a = fixtures::three_point();
    EXPECT_EQ(m_set(LinearMap::identity(a)), (PointSet{0, 1}));
    EXPECT_EQ(extreme_classes(*a), (PointSet{0, 1}));
}

TEST(MSet, AffineSubspaceAndFaceConstruction) {
    auto a = fixtures::affine_three_point();
    EXPECT_EQ(m_set(LinearMap::identity(a)), (PointSet{0, 2}));
    auto f = prop63_set(*a);
    EXPECT_EQ(f.points, (PointSet{0, 2}));
    EXPECT_TRUE(f.matches_m_set);
}

TEST(MSet, FaceConstructionPreconditions) {
    EXPECT_THROW(prop63_set(*fixtures::sub({"a", "b"}, {{1, 1}}, {1, 2})), LabError);
    EXPECT_THROW(prop63_set(*fixtures::sub({"a", "b"}, {{1, 2}})), LabError);
}

TEST(MSet, AveragingMap) {
    const LinearMap t = fixtures::averaging_map();
    auto r = choquet_report(t);
    EXPECT_EQ(r.m_set, (PointSet{0, 1}));
    EXPECT_EQ(r.generator_images[2].coords, (Vec{q(1, 2), q(1, 2)}));
    EXPECT_EQ(r.extreme, (std::vector<bool>{true, true, false}));
}

TEST(MSet, RejectsNonIsometry) {
    auto f2 = fixtures::full({"a", "b"});
    EXPECT_THROW(choquet_report(LinearMap(f2, f2, {{q(1, 2), 0}, {0, 1}})), LabError);
}

TEST(MSet, EquivalentPointsShareMembership) {
    auto a = fixtures::sub({"a", "b", "c"}, {{1, -1, 1}, {0, 0, 1}});
    const PointSet m = m_set(LinearMap::identity(a));
    EXPECT_EQ(contains(m, 0), contains(m, 1));
}

TEST(ChContains, ThreePointSubspace) {
    auto id = LinearMap::identity(fixtures::three_point());
    EXPECT_TRUE(ch_contains(id, {0, 1}));
    EXPECT_FALSE(ch_contains(id, {0}));
    EXPECT_FALSE(ch_contains(id, {0, 1, 2}));
    EXPECT_THROW(ch_contains(id, {}), LabError);
}

TEST(ChContains, AveragingMap) {
    const LinearMap t = fixtures::averaging_map();
    EXPECT_TRUE(ch_contains(t, {0, 1}));
    EXPECT_FALSE(ch_contains(t, {0, 2}));
}

TEST(BoundaryMeetsSuppmax, ChoquetSetMeetsEverySuppmax) {
    auto a = fixtures::three_point();
    EXPECT_TRUE(boundary_meets_suppmax(*a, FunctionVec{{1, -1, 0}}, {0, 1}));
    EXPECT_TRUE(boundary_meets_suppmax(*a, FunctionVec{{2, 0, 1}}, {0, 1}));
    EXPECT_THROW(boundary_meets_suppmax(*a, FunctionVec{{2, 0, 1}}, {2}), LabError);
    EXPECT_THROW(boundary_meets_suppmax(*a, FunctionVec{{0, 0, 0}}, {0, 1}), LabError);
}
