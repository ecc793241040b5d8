#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "finlab/space.hpp"

namespace finlab {

/// One generator of the dual ball per point, deduplicated into ~_A classes.
struct GeneratorSystem {
    std::vector<Functional> generators;  ///< Delta_A(1, z) for every z, in point order
    std::vector<std::size_t> class_rep;  ///< lowest-index equivalent point of each z
    PointSet reps;
};

GeneratorSystem generator_system(const Subspace& space);

struct DualNorm {
    /// Exact in the real field; in the complex field, the gauge of the
    /// discretized hull, which bounds the true norm from above.
    Rational value;
    Confidence confidence;
};

DualNorm dual_norm(const Subspace& space, const Functional& ell);
DualNorm dual_norm(const Subspace& space, const Functional& ell, int discretization);

/// target = sum_k weight_k * unit_k * gens[gen_k], weights >= 0 summing to <= 1.
struct HullTerm {
    std::size_t gen = 0;
    Rational weight;
    Scalar unit{1};
};

struct HullMembership {
    bool member = false;
    std::vector<HullTerm> certificate;  ///< set when member
    /// Coordinates of f with Re target(f) > sup over the hull of Re m(f);
    /// set when not a member.
    std::optional<Vec> separator;
    Confidence confidence;
};

/// Membership of `target` in the absolutely convex hull of `gens`. Exact in
/// the real field. In the complex field the circle is replaced by m unit
/// points, so `member == true` is always exact while `member == false` is
/// tagged discretized(m).
HullMembership in_absconv(const Functional& target, std::span<const Functional> gens, Field field,
                          int discretization);
HullMembership in_absconv(const Functional& target, std::span<const Functional> gens,
                          Field field = Field::Real);

/// Plain convex hull membership: target = sum t_k gens[k], t >= 0, sum t = 1.
/// Separators are produced for real inputs only.
HullMembership in_conv(const Functional& target, std::span<const Functional> gens);

/// Checks that a certificate reproduces the target with total weight <= 1.
bool verify_certificate(const Functional& target, std::span<const Functional> gens,
                        const HullMembership& result);

struct ExtremeResult {
    bool extreme = false;
    /// Point z with ell = lambda * Delta_A(1, z), when ell is a generator multiple.
    std::optional<std::size_t> point;
    Scalar lambda{1};
    Confidence confidence;
};

/// Extreme-point test on the dual unit ball. Throws a normalization error
/// unless ell has dual norm 1.
ExtremeResult is_extreme(const Subspace& space, const Functional& ell);
ExtremeResult is_extreme(const Subspace& space, const Functional& ell, int discretization);

/// Same test for a functional already known to lie in the unit ball; returns
/// false instead of throwing when its norm is below 1.
ExtremeResult is_extreme_in_ball(const Subspace& space, const Functional& ell, int discretization);

/// ell is lambda * Delta_A(1, z) for some z and unimodular lambda.
std::optional<std::pair<std::size_t, Scalar>> match_generator(const Subspace& space, const Functional& ell);

struct SigmaReport {
    bool centered = false;
    /// Decides ell in Sigma^A(G).
    std::function<bool(const Functional&)> member_test;
    /// lambda * Delta_A(1, z) that are both members and extreme; one entry
    /// per (class, sign) in the real field, lambda = 1 representatives in
    /// the complex field.
    std::vector<Functional> extreme_members;
    std::vector<std::size_t> extreme_points;  ///< the z of each extreme member
    /// A member found by the sign-pattern search, when centered.
    std::optional<Functional> witness;
    Confidence confidence;
};

constexpr std::size_t kMaxSigmaFamily = 20;

SigmaReport sigma_check(const Subspace& space, const Family& family,
                        std::size_t max_family = kMaxSigmaFamily);

}  // namespace finlab
