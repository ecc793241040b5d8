#include <gtest/gtest.h>

#include "finlab/choquet.hpp"
#include "finlab/errors.hpp"
#include "finlab/isometry.hpp"
#include "fixtures.hpp"

using namespace finlab;
using fixtures::c;
using fixtures::q;

TEST(Isometry, AveragingMapIsIntoNotOnto) {
    const LinearMap t = fixtures::averaging_map();
    EXPECT_TRUE(verify_into_isometry(t).isometry);
    EXPECT_FALSE(verify_onto_isometry(t));
}

TEST(Isometry, HalfScalingHasWitness) {
    auto f2 = fixtures::full({"a", "b"});
    const LinearMap t(f2, f2, {{q(1, 2), 0}, {0, 1}});
    auto r = verify_into_isometry(t);
    ASSERT_FALSE(r.isometry);
    ASSERT_TRUE(r.witness);
    EXPECT_NE(norm_of_coords(*f2, t.image(*r.witness)), norm_of_coords(*f2, *r.witness));
    EXPECT_THROW(verify_onto_isometry(t), LabError);
}

TEST(Isometry, NonInjectiveMapIsRejected) {
    auto f2 = fixtures::full({"a", "b"});
    auto f1 = fixtures::full({"x"});
    EXPECT_FALSE(verify_into_isometry(LinearMap(f2, f1, {{1, 0}})).isometry);
}

TEST(Decompose, AveragingMap) {
    const LinearMap t = fixtures::averaging_map();
    auto form = decompose(t);
    EXPECT_EQ(form.on(), (PointSet{0, 1}));
    EXPECT_EQ(form.phi.at(0), Scalar(1));
    EXPECT_EQ(form.phi.at(1), Scalar(-1));
    EXPECT_EQ(form.tau.at(0), 0U);
    EXPECT_EQ(form.tau.at(1), 1U);
    EXPECT_TRUE(satisfies_identity(t, form));
    EXPECT_TRUE(tau_covers_choquet(t, form));
}

TEST(Decompose, SwapAndInverse) {
    auto f2 = fixtures::full({"a", "b"});
    const LinearMap t(f2, f2, {{0, 1}, {-1, 0}});
    auto form = decompose(t);
    EXPECT_EQ(form.phi.at(0), Scalar(1));
    EXPECT_EQ(form.phi.at(1), Scalar(-1));
    EXPECT_EQ(form.tau.at(0), 1U);
    EXPECT_EQ(form.tau.at(1), 0U);
    auto inv = invert_form(t, form);
    EXPECT_TRUE(inv.agrees);
    EXPECT_EQ(inv.form.phi.at(0), Scalar(-1));
    EXPECT_EQ(inv.form.phi.at(1), Scalar(1));
    EXPECT_EQ(inv.form.tau.at(0), 1U);
}

TEST(Decompose, StrictRejectsAmbiguity) {
    auto a = fixtures::sub({"a", "b", "c"}, {{1, -1, 1}, {0, 0, 1}});
    const LinearMap id = LinearMap::identity(a);
    auto form = decompose(id);
    EXPECT_FALSE(form.ambiguous.empty());
    EXPECT_TRUE(satisfies_identity(id, form));
    EXPECT_THROW(decompose(id, true), LabError);
}

TEST(Decompose, ComplexWeights) {
    auto f1 = fixtures::full({"a", "b"}, {c(0, 1), 2}, Field::Complex);
    auto f2 = fixtures::full({"x", "y", "z"}, {1, 1, q(1, 2)}, Field::Complex);
    CompositionForm want;
    want.phi = {{0, c(0, 1)}, {1, Scalar(Rational(3, 5), Rational(4, 5))}, {2, Scalar(-1)}};
    want.tau = {{0, 1}, {1, 0}, {2, 0}};
    auto op = weighted_composition_operator(f1, f2, want);
    EXPECT_TRUE(op.isometry);
    EXPECT_TRUE(verify_into_isometry(op.map).isometry);
    EXPECT_EQ(decompose(op.map), want);
}

TEST(Constructor, IsometryIffTauImageIsBoundary) {
    auto a = fixtures::three_point();
    auto f2 = fixtures::full({"x", "y"});
    CompositionForm bad;
    bad.phi = {{0, 1}, {1, 1}};
    bad.tau = {{0, 2}, {1, 2}};
    auto op = weighted_composition_operator(a, f2, bad);
    EXPECT_FALSE(op.isometry);
    EXPECT_FALSE(verify_into_isometry(op.map).isometry);
    CompositionForm good;
    good.phi = {{0, 1}, {1, -1}};
    good.tau = {{0, 0}, {1, 1}};
    auto op2 = weighted_composition_operator(a, f2, good);
    EXPECT_TRUE(op2.isometry);
    EXPECT_TRUE(verify_into_isometry(op2.map).isometry);
}

TEST(Constructor, RejectsBadForms) {
    auto f2 = fixtures::full({"a", "b"});
    CompositionForm f;
    f.phi = {{0, 2}};
    f.tau = {{0, 0}};
    EXPECT_THROW(weighted_composition_operator(f2, f2, f), LabError);
    f.phi = {{0, 1}};
    f.tau = {{0, 7}};
    EXPECT_THROW(weighted_composition_operator(f2, f2, f), LabError);
}

TEST(Uniqueness, ImpostorsAndRestrictions) {
    const LinearMap t = fixtures::averaging_map();
    auto d = decompose(t);
    auto flipped = d;
    flipped.phi[0] = Scalar(-1);
    EXPECT_EQ(check_alternative(t, d, flipped), Uniqueness::IdentityFails);
    auto moved = d;
    moved.tau[1] = 0;
    EXPECT_EQ(check_alternative(t, d, moved), Uniqueness::IdentityFails);
    EXPECT_EQ(check_alternative(t, d, restrict_form(d, {1})), Uniqueness::Agrees);
}

TEST(Compose, AveragingAfterSwap) {
    auto f2 = fixtures::full({"a", "b"});
    const LinearMap swap(f2, f2, {{0, 1}, {-1, 0}});
    const LinearMap avg(f2, fixtures::full({"x", "y", "z"}), {{1, 0}, {0, -1}, {q(1, 2), q(1, 2)}});
    auto r = compose_forms(swap, decompose(swap), avg, decompose(avg));
    EXPECT_TRUE(r.agrees);
    EXPECT_TRUE(r.nonempty);
    EXPECT_TRUE(r.inside_mset);
    EXPECT_EQ(r.form.tau.at(0), 1U);
    EXPECT_EQ(r.form.phi.at(0), Scalar(1));
    EXPECT_EQ(r.form.tau.at(1), 0U);
    EXPECT_EQ(r.form.phi.at(1), Scalar(1));
}

TEST(Invert, RequiresOnto) {
    const LinearMap t = fixtures::averaging_map();
    EXPECT_THROW(invert_form(t, decompose(t)), LabError);
}

TEST(Beta, AveragingMapFailsOnlyAtZ) {
    auto ab = property_alpha_beta(fixtures::averaging_map());
    EXPECT_TRUE(ab.alpha);
    EXPECT_EQ(ab.beta, Tristate::False);
    EXPECT_EQ(ab.beta_at, (std::vector<Tristate>{Tristate::True, Tristate::True, Tristate::False}));
    EXPECT_TRUE(ab.confidence.is_exact());
}

TEST(Beta, WitnessFamiliesPinTheirPoint) {
    const LinearMap t = fixtures::averaging_map();
    auto ab = property_alpha_beta(t);
    for (const auto& [z, fam] : ab.beta_witnesses) {
        PointSet common = all_points(3);
        for (const auto& v : fam)
            common = set_intersection(common, suppmax_of_coords(t.codomain(), t.image(*t.domain().coords(v))));
        EXPECT_EQ(common, (PointSet{z}));
    }
}
