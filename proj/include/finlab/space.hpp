#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "finlab/linalg.hpp"
#include "finlab/scalar.hpp"

namespace finlab {

/// Sorted, duplicate-free list of point indices into a space.
using PointSet = std::vector<std::size_t>;

PointSet make_point_set(std::vector<std::size_t> points);
bool contains(const PointSet& set, std::size_t point);
PointSet set_difference(const PointSet& a, const PointSet& b);
PointSet set_intersection(const PointSet& a, const PointSet& b);
PointSet all_points(std::size_t n);

/// Finite point set Z with a nonvanishing weight p; the ambient C(Z;p).
class WeightedSpace {
public:
    WeightedSpace(std::vector<std::string> points, std::vector<Scalar> weight, Field field);

    static WeightedSpace uniform(std::vector<std::string> points, Field field = Field::Real);

    std::size_t size() const { return points_.size(); }
    Field field() const { return field_; }
    const std::vector<std::string>& points() const { return points_; }
    const std::string& name(std::size_t z) const { return points_.at(z); }
    const std::vector<Scalar>& weight() const { return weight_; }
    const Scalar& weight(std::size_t z) const { return weight_.at(z); }

    std::size_t index_of(std::string_view point) const;
    PointSet indices_of(std::span<const std::string> points) const;
    void check_point(std::size_t z) const;

private:
    std::vector<std::string> points_;
    std::vector<Scalar> weight_;
    Field field_;
};

/// Element of C(Z;p) as its value vector in point order.
struct FunctionVec {
    Vec values;
};

/// Element of the dual of a subspace, stored by its values on the basis.
struct Functional {
    Vec coords;

    friend bool operator==(const Functional& a, const Functional& b) { return a.coords == b.coords; }
    friend bool operator!=(const Functional& a, const Functional& b) { return !(a == b); }
};

/// Nonzero linear subspace A of C(Z;p), given by independent basis
/// functions. Precomputes the evaluation functionals Delta_A(1, z) and the
/// ~_A classes; immutable afterwards.
class Subspace {
public:
    Subspace(WeightedSpace ambient, std::vector<Vec> basis);

    static Subspace full(WeightedSpace ambient);

    const WeightedSpace& ambient() const { return ambient_; }
    Field field() const { return ambient_.field(); }
    std::size_t dim() const { return basis_.size(); }
    std::size_t num_points() const { return ambient_.size(); }
    const std::vector<Vec>& basis() const { return basis_; }

    /// Value vector of the function with the given basis coordinates.
    Vec values(std::span<const Scalar> coords) const;
    /// Basis coordinates of a value vector, or nullopt when outside A.
    std::optional<Vec> coords(std::span<const Scalar> values) const;
    /// Like coords() but throws a span-membership error.
    Vec require_coords(const FunctionVec& f) const;

    /// Delta_A(1, z) in basis coordinates: (p(z) b_j(z))_j.
    const Functional& generator(std::size_t z) const { return generators_.at(z); }
    const std::vector<Functional>& generators() const { return generators_; }

    /// Lowest-index point of the ~_A class of z.
    std::size_t class_rep(std::size_t z) const { return class_rep_.at(z); }
    /// Class representatives in increasing order.
    const PointSet& class_reps() const { return reps_; }
    PointSet class_members(std::size_t z) const;

    /// Coordinates of the constant-one function when it lies in A.
    std::optional<Vec> constant_one() const;

private:
    WeightedSpace ambient_;
    std::vector<Vec> basis_;
    std::vector<Functional> generators_;
    std::vector<std::size_t> class_rep_;
    PointSet reps_;
    // Points whose rows of the basis matrix are independent, with the inverse
    // of that d x d block; recovers coordinates from values.
    PointSet pivot_points_;
    Mat pivot_inverse_;
};

/// Nonempty list of nonzero members of one subspace, kept in coordinates.
class Family {
public:
    Family(const Subspace& space, std::vector<FunctionVec> members);

    std::size_t size() const { return coords_.size(); }
    const std::vector<Vec>& coords() const { return coords_; }
    const Vec& coords(std::size_t i) const { return coords_.at(i); }

private:
    std::vector<Vec> coords_;
};

Scalar evaluate(const Functional& ell, std::span<const Scalar> coords);

/// Weighted sup norm max_z |p(z) f(z)|.
Modulus norm(const Subspace& space, const FunctionVec& f);
Modulus norm_of_coords(const Subspace& space, std::span<const Scalar> coords);

/// Delta_A(lambda, z); lambda must be unimodular.
Functional delta(const Subspace& space, const Scalar& lambda, std::size_t z);
Functional delta(const Subspace& space, const Scalar& lambda, std::string_view point);

/// Points where |p(z) f(z)| attains the norm. Rejects f = 0.
PointSet suppmax(const Subspace& space, const FunctionVec& f);
PointSet suppmax_of_coords(const Subspace& space, std::span<const Scalar> coords);

/// True iff some member of the family has its weighted sup outside V strictly
/// below its norm (sup over the empty set is 0).
bool placed_over(const Subspace& space, const Family& family, const PointSet& points);

struct SimEquivalence {
    bool equivalent = false;
    /// Witnesses with Delta_A(lambda, x) = Delta_A(mu, y) when equivalent.
    Scalar lambda{1};
    Scalar mu{1};
};

SimEquivalence sim_equiv(const Subspace& space, std::size_t x, std::size_t y);

/// True iff no two distinct points of V are ~_A-equivalent.
bool distinguishes(const Subspace& space, const PointSet& points);

struct BoundaryResult {
    bool boundary = false;
    /// Coordinates of an f whose sup over Y is below its norm.
    std::optional<Vec> witness;
    Confidence confidence;
};

/// Decides whether Y is a boundary of A: every Delta_A(1, z) with z outside
/// Y must lie in the absolutely convex hull of the functionals over Y.
BoundaryResult is_boundary(const Subspace& space, const PointSet& points);
BoundaryResult is_boundary(const Subspace& space, const PointSet& points, int discretization);

}  // namespace finlab
