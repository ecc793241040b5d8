#include <gtest/gtest.h>

#include <algorithm>

#include "finlab/dual.hpp"
#include "finlab/errors.hpp"
#include "fixtures.hpp"
#include "harness/generate.hpp"
#include "harness/oracle.hpp"

using namespace finlab;
using fixtures::c;
using fixtures::q;

namespace {

Rational max_abs(const Subspace& a, const Vec& x) {
    Rational best = 0;
    for (const auto& g : a.generators()) best = std::max(best, Rational(abs(evaluate(g, x).re())));
    return best;
}

}  // namespace

TEST(DualNorm, ThreePointExample) {
    auto a = fixtures::three_point();
    EXPECT_EQ(dual_norm(*a, a->generator(0)).value, Rational(1));
    EXPECT_EQ(dual_norm(*a, a->generator(2)).value, Rational(1));
    EXPECT_EQ(dual_norm(*a, Functional{{2, 0}}).value, Rational(2));
    EXPECT_EQ(dual_norm(*a, Functional{{0, 1}}).value, Rational(1));
    EXPECT_EQ(dual_norm(*a, Functional{{0, 0}}).value, Rational(0));
}

TEST(InAbsconv, MemberCarriesValidCertificate) {
    auto a = fixtures::three_point();
    std::vector<Functional> gens = {a->generator(0), a->generator(1)};
    auto r = in_absconv(a->generator(2), gens);
    ASSERT_TRUE(r.member);
    EXPECT_TRUE(verify_certificate(a->generator(2), gens, r));
    EXPECT_TRUE(r.confidence.is_exact());
}

TEST(InAbsconv, NonMemberCarriesSeparator) {
    auto a = fixtures::three_point();
    std::vector<Functional> gens = {a->generator(2)};
    auto r = in_absconv(a->generator(0), gens);
    ASSERT_FALSE(r.member);
    ASSERT_TRUE(r.separator);
    EXPECT_GT(evaluate(a->generator(0), *r.separator).re(), abs(evaluate(a->generator(2), *r.separator).re()));
}

TEST(InAbsconv, ComplexResultsAreTagged) {
    std::vector<Functional> gens = {Functional{{1, 0}}, Functional{{0, 1}}};
    auto in = in_absconv(Functional{{c(0, 1), 0}}, gens, Field::Complex, 16);
    EXPECT_TRUE(in.member);
    auto out = in_absconv(Functional{{1, 1}}, gens, Field::Complex, 16);
    EXPECT_FALSE(out.member);
    EXPECT_FALSE(out.confidence.is_exact());
    EXPECT_EQ(out.confidence.m, 16);
}

TEST(InConv, PlainHull) {
    std::vector<Functional> pts = {Functional{{0, 0}}, Functional{{2, 0}}, Functional{{0, 2}}};
    EXPECT_TRUE(in_conv(Functional{{1, 1}}, pts).member);
    auto r = in_conv(Functional{{2, 1}}, pts);
    EXPECT_FALSE(r.member);
    ASSERT_TRUE(r.separator);
    Rational best = evaluate(pts[0], *r.separator).re();
    for (const auto& p : pts) best = std::max(best, evaluate(p, *r.separator).re());
    EXPECT_GT(evaluate(Functional{{2, 1}}, *r.separator).re(), best);
}

TEST(Extreme, ThreePointExample) {
    auto a = fixtures::three_point();
    EXPECT_TRUE(is_extreme(*a, a->generator(0)).extreme);
    EXPECT_TRUE(is_extreme(*a, delta(*a, Scalar(-1), 1)).extreme);
    auto r = is_extreme(*a, a->generator(2));
    EXPECT_FALSE(r.extreme);
    ASSERT_TRUE(r.point);
    EXPECT_THROW(is_extreme(*a, Functional{{2, 0}}), LabError);
    EXPECT_FALSE(is_extreme(*a, Functional{{0, 1}}).extreme);
}

TEST(MatchGenerator, FindsSignedPoint) {
    auto a = fixtures::three_point();
    auto m = match_generator(*a, Functional{{-1, 1}});
    ASSERT_TRUE(m);
    EXPECT_EQ(m->first, 1U);
    EXPECT_EQ(m->second, Scalar(-1));
    EXPECT_FALSE(match_generator(*a, Functional{{0, 1}}).has_value());
}

TEST(Sigma, CenteredAndUncentered) {
    auto f2 = fixtures::full({"a", "b"});
    auto r = sigma_check(*f2, Family(*f2, {FunctionVec{{1, 1}}}));
    EXPECT_TRUE(r.centered);
    EXPECT_EQ(r.extreme_members.size(), 4U);
    ASSERT_TRUE(r.witness);
    EXPECT_TRUE(r.member_test(*r.witness));
    EXPECT_FALSE(sigma_check(*f2, Family(*f2, {FunctionVec{{1, 0}}, FunctionVec{{0, 1}}})).centered);
    std::vector<FunctionVec> big(kMaxSigmaFamily + 1, FunctionVec{{1, 1}});
    EXPECT_THROW(sigma_check(*f2, Family(*f2, big)), LabError);
}

TEST(Sigma, ComplexCenteredViaCommonSuppmax) {
    auto f2 = fixtures::full({"a", "b"}, {}, Field::Complex);
    EXPECT_TRUE(sigma_check(*f2, Family(*f2, {FunctionVec{{c(0, 1), 1}}, FunctionVec{{1, 0}}})).centered);
    EXPECT_FALSE(sigma_check(*f2, Family(*f2, {FunctionVec{{1, 0}}, FunctionVec{{0, c(0, 1)}}})).centered);
}

// Property: the dual norm is the gauge of the hull of the signed generators,
// checked with the LP-free hull oracle; separators really separate.
TEST(DualNormProperty, AgreesWithHullOracle) {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        RawInstance raw = gen_instance(seed, Scale{5, 3, 3}, Kind::RandomSubspace);
        Subspace a(WeightedSpace(raw.spaces[0].points, raw.spaces[0].weight, Field::Real), raw.subspaces[0].basis);
        Rng rng(seed);
        Vec ell(a.dim());
        for (auto& x : ell) x = random_coefficient(rng, 3, Field::Real);
        const Rational n = dual_norm(a, Functional{ell}).value;
        const auto hull = oracle::signed_generators(a);
        if (sgn(n) == 0) {
            EXPECT_TRUE(linalg::is_zero(ell));
            continue;
        }
        EXPECT_TRUE(oracle::in_hull(linalg::scale(ell, Scalar(1 / n)), hull)) << "seed " << seed;
        EXPECT_FALSE(oracle::in_hull(linalg::scale(ell, Scalar(Rational(101, 100) / n)), hull)) << "seed " << seed;

        std::vector<Functional> gens = a.generators();
        auto scaled = Functional{linalg::scale(ell, Scalar(Rational(11, 10) / n))};
        auto r = in_absconv(scaled, gens);
        ASSERT_FALSE(r.member);
        ASSERT_TRUE(r.separator);
        EXPECT_GT(evaluate(scaled, *r.separator).re(), max_abs(a, *r.separator));
    }
}
