#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "finlab/dual.hpp"
#include "finlab/space.hpp"

namespace finlab {

/// Linear operator A1 -> A2 as a d2 x d1 matrix in the two basis orders.
class LinearMap {
public:
    LinearMap(std::shared_ptr<const Subspace> domain, std::shared_ptr<const Subspace> codomain, Mat matrix);

    static LinearMap identity(std::shared_ptr<const Subspace> space);

    const Subspace& domain() const { return *domain_; }
    const Subspace& codomain() const { return *codomain_; }
    const std::shared_ptr<const Subspace>& domain_ptr() const { return domain_; }
    const std::shared_ptr<const Subspace>& codomain_ptr() const { return codomain_; }
    const Mat& matrix() const { return matrix_; }

    /// Codomain coordinates of T applied to domain coordinates.
    Vec image(std::span<const Scalar> coords) const;
    /// T* ell, for ell on the codomain.
    Functional pullback(const Functional& ell) const;
    /// T* Delta_{A2}(1, x).
    const Functional& pulled_generator(std::size_t x) const { return pulled_.at(x); }
    const std::vector<Functional>& pulled_generators() const { return pulled_; }

private:
    std::shared_ptr<const Subspace> domain_;
    std::shared_ptr<const Subspace> codomain_;
    Mat matrix_;
    std::vector<Functional> pulled_;
};

/// second o first.
LinearMap compose(const LinearMap& first, const LinearMap& second);

/// Structural equality: same points, weights, field and basis.
bool same_subspace(const Subspace& a, const Subspace& b);

struct IsometryCheck {
    bool isometry = false;
    /// Domain coordinates of an f with ||Tf|| != ||f||.
    std::optional<Vec> witness;
    Confidence confidence;
};

IsometryCheck verify_into_isometry(const LinearMap& map);
/// Throws not-isometry unless the map is an into-isometry.
bool verify_onto_isometry(const LinearMap& map);

/// (phi, tau) on a set U of codomain points: p2(x) Tf(x) = phi(x) p1(tau(x)) f(tau(x)).
struct CompositionForm {
    std::map<std::size_t, Scalar> phi;
    std::map<std::size_t, std::size_t> tau;
    /// Domain ~_A classes with more than one point that tau landed in.
    std::map<std::size_t, PointSet> ambiguous;

    PointSet on() const;
    bool operator==(const CompositionForm& o) const { return phi == o.phi && tau == o.tau; }
};

CompositionForm restrict_form(const CompositionForm& form, const PointSet& points);

struct CompositionOperator {
    LinearMap map;
    /// tau(U) is a boundary of A1.
    bool isometry = false;
    Confidence confidence;
};

CompositionOperator weighted_composition_operator(std::shared_ptr<const Subspace> domain,
                                                  std::shared_ptr<const Subspace> codomain,
                                                  const CompositionForm& form);

/// Factorization on U = M_T(A1). With strict set, a tau value in a ~_A class
/// of more than one point raises an ambiguity error instead of picking the
/// lowest point.
CompositionForm decompose(const LinearMap& map, bool strict = false);

/// T* Delta_{A2}(1, x) = phi(x) Delta_{A1}(1, tau(x)) on every x the form covers.
bool satisfies_identity(const LinearMap& map, const CompositionForm& form);

/// tau(U) meets every ~_A class of M(A1).
bool tau_covers_choquet(const LinearMap& map, const CompositionForm& form);

enum class Uniqueness { IdentityFails, Agrees, Violates };
const char* to_string(Uniqueness u);

/// Checks an alternative form against the decomposition of the same map.
Uniqueness check_alternative(const LinearMap& map, const CompositionForm& decomposed,
                             const CompositionForm& alternative);

struct ComposeResult {
    CompositionForm form;
    bool agrees = false;     ///< matches decompose(T2 T1) on its set
    bool nonempty = false;
    bool inside_mset = false;  ///< its set lies in M_{T3}(A1)
};

ComposeResult compose_forms(const LinearMap& t1, const CompositionForm& f1, const LinearMap& t2,
                            const CompositionForm& f2);

struct InvertResult {
    LinearMap inverse;
    CompositionForm form;
    bool agrees = false;  ///< matches decompose of the inverse matrix
};

InvertResult invert_form(const LinearMap& map, const CompositionForm& form);

enum class Tristate { False, True, Unknown };
const char* to_string(Tristate t);

struct AlphaBeta {
    bool alpha = true;
    std::string alpha_note = "finite: K=Z";
    Tristate beta = Tristate::True;
    std::vector<Tristate> beta_at;                  ///< per codomain point
    std::map<std::size_t, std::vector<Vec>> beta_witnesses;  ///< value vectors of the family G
    Confidence confidence;
};

constexpr int kBetaSearchBudget = 10000;

AlphaBeta property_alpha_beta(const LinearMap& map, int budget = kBetaSearchBudget);

}  // namespace finlab
