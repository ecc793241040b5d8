#include "finlab/space.hpp"

#include <algorithm>
#include <set>

#include "finlab/dual.hpp"
#include "finlab/errors.hpp"

namespace finlab {

PointSet make_point_set(std::vector<std::size_t> points) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return points;
}

bool contains(const PointSet& set, std::size_t point) {
    return std::binary_search(set.begin(), set.end(), point);
}

PointSet set_difference(const PointSet& a, const PointSet& b) {
    PointSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

PointSet set_intersection(const PointSet& a, const PointSet& b) {
    PointSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

PointSet all_points(std::size_t n) {
    PointSet out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = i;
    return out;
}

WeightedSpace::WeightedSpace(std::vector<std::string> points, std::vector<Scalar> weight, Field field)
    : points_(std::move(points)), weight_(std::move(weight)), field_(field) {
    if (points_.empty()) throw LabError(ErrorCode::InvalidArgument, "space needs at least one point");
    if (weight_.size() != points_.size())
        throw LabError(ErrorCode::DimensionMismatch, "weight must be given on every point");
    std::set<std::string> seen;
    for (std::size_t z = 0; z < points_.size(); ++z) {
        if (!seen.insert(points_[z]).second)
            throw LabError(ErrorCode::InvalidArgument, "duplicate point '" + points_[z] + "'");
        if (weight_[z].is_zero())
            throw LabError(ErrorCode::InvalidArgument, "weight vanishes at '" + points_[z] + "'");
        if (field_ == Field::Real && !weight_[z].is_real())
            throw LabError(ErrorCode::InvalidArgument, "complex weight in a real space");
    }
}

WeightedSpace WeightedSpace::uniform(std::vector<std::string> points, Field field) {
    std::vector<Scalar> w(points.size(), Scalar(1));
    return WeightedSpace(std::move(points), std::move(w), field);
}

std::size_t WeightedSpace::index_of(std::string_view point) const {
    for (std::size_t z = 0; z < points_.size(); ++z)
        if (points_[z] == point) return z;
    throw LabError(ErrorCode::UnknownPoint, "unknown point '" + std::string(point) + "'");
}

PointSet WeightedSpace::indices_of(std::span<const std::string> points) const {
    std::vector<std::size_t> out;
    out.reserve(points.size());
    for (const auto& p : points) out.push_back(index_of(p));
    return make_point_set(std::move(out));
}

void WeightedSpace::check_point(std::size_t z) const {
    if (z >= points_.size())
        throw LabError(ErrorCode::UnknownPoint, "point index " + std::to_string(z) + " out of range");
}

Subspace::Subspace(WeightedSpace ambient, std::vector<Vec> basis)
    : ambient_(std::move(ambient)), basis_(std::move(basis)) {
    const std::size_t n = ambient_.size();
    const std::size_t d = basis_.size();
    if (d == 0) throw LabError(ErrorCode::InvalidArgument, "subspace needs at least one basis vector");
    for (const auto& b : basis_) {
        if (b.size() != n) throw LabError(ErrorCode::DimensionMismatch, "basis vector length differs from point count");
        if (ambient_.field() == Field::Real)
            for (const auto& x : b)
                if (!x.is_real()) throw LabError(ErrorCode::InvalidArgument, "complex basis entry in a real space");
    }

    // Point-major matrix: row z holds (b_j(z))_j.
    Mat by_point(n, Vec(d));
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t z = 0; z < n; ++z) by_point[z][j] = basis_[j][z];

    // Greedy pivot rows; independence of the basis means d of them exist.
    Mat chosen;
    for (std::size_t z = 0; z < n && chosen.size() < d; ++z) {
        chosen.push_back(by_point[z]);
        if (linalg::rank(chosen, d) == chosen.size()) {
            pivot_points_.push_back(z);
        } else {
            chosen.pop_back();
        }
    }
    if (chosen.size() != d) throw LabError(ErrorCode::InvalidArgument, "basis vectors are linearly dependent");
    pivot_inverse_ = *linalg::inverse(chosen);

    generators_.reserve(n);
    for (std::size_t z = 0; z < n; ++z) {
        Functional g{linalg::scale(by_point[z], ambient_.weight(z))};
        generators_.push_back(std::move(g));
    }

    class_rep_.resize(n);
    for (std::size_t z = 0; z < n; ++z) {
        class_rep_[z] = z;
        for (std::size_t r : reps_) {
            if (linalg::unimodular_ratio(generators_[z].coords, generators_[r].coords)) {
                class_rep_[z] = r;
                break;
            }
        }
        if (class_rep_[z] == z) reps_.push_back(z);
    }
}

Subspace Subspace::full(WeightedSpace ambient) {
    std::vector<Vec> basis = linalg::identity(ambient.size());
    return Subspace(std::move(ambient), std::move(basis));
}

Vec Subspace::values(std::span<const Scalar> coords) const {
    if (coords.size() != dim()) throw LabError(ErrorCode::DimensionMismatch, "coordinate vector length differs from dimension");
    Vec out(num_points());
    for (std::size_t j = 0; j < dim(); ++j) {
        if (coords[j].is_zero()) continue;
        for (std::size_t z = 0; z < num_points(); ++z) {
            if (!basis_[j][z].is_zero()) out[z] += coords[j] * basis_[j][z];
        }
    }
    return out;
}

std::optional<Vec> Subspace::coords(std::span<const Scalar> values) const {
    if (values.size() != num_points()) throw LabError(ErrorCode::DimensionMismatch, "value vector length differs from point count");
    Vec at_pivots;
    at_pivots.reserve(dim());
    for (std::size_t z : pivot_points_) at_pivots.push_back(values[z]);
    Vec c = linalg::multiply(pivot_inverse_, at_pivots);
    Vec back = this->values(c);
    for (std::size_t z = 0; z < num_points(); ++z)
        if (back[z] != values[z]) return std::nullopt;
    return c;
}

Vec Subspace::require_coords(const FunctionVec& f) const {
    auto c = coords(f.values);
    if (!c) throw LabError(ErrorCode::SpanMembership, "function does not lie in the subspace");
    return *c;
}

PointSet Subspace::class_members(std::size_t z) const {
    ambient_.check_point(z);
    PointSet out;
    for (std::size_t y = 0; y < num_points(); ++y)
        if (class_rep_[y] == class_rep_[z]) out.push_back(y);
    return out;
}

std::optional<Vec> Subspace::constant_one() const {
    return coords(Vec(num_points(), Scalar(1)));
}

Family::Family(const Subspace& space, std::vector<FunctionVec> members) {
    if (members.empty()) throw LabError(ErrorCode::EmptySet, "family must be nonempty");
    for (const auto& f : members) {
        Vec c = space.require_coords(f);
        if (linalg::is_zero(c)) throw LabError(ErrorCode::InvalidArgument, "family members must be nonzero");
        coords_.push_back(std::move(c));
    }
}

Scalar evaluate(const Functional& ell, std::span<const Scalar> coords) {
    return linalg::dot(ell.coords, coords);
}

Modulus norm_of_coords(const Subspace& space, std::span<const Scalar> coords) {
    Modulus best;
    for (const auto& g : space.generators()) {
        Modulus m = Modulus::of(evaluate(g, coords));
        if (m > best) best = m;
    }
    return best;
}

Modulus norm(const Subspace& space, const FunctionVec& f) {
    return norm_of_coords(space, space.require_coords(f));
}

Functional delta(const Subspace& space, const Scalar& lambda, std::size_t z) {
    space.ambient().check_point(z);
    if (!lambda.is_unimodular()) throw LabError(ErrorCode::NotUnimodular, "lambda must have modulus 1");
    if (space.field() == Field::Real && !lambda.is_real())
        throw LabError(ErrorCode::NotUnimodular, "lambda must be +1 or -1 in the real field");
    return Functional{linalg::scale(space.generator(z).coords, lambda)};
}

Functional delta(const Subspace& space, const Scalar& lambda, std::string_view point) {
    return delta(space, lambda, space.ambient().index_of(point));
}

PointSet suppmax_of_coords(const Subspace& space, std::span<const Scalar> coords) {
    Modulus n = norm_of_coords(space, coords);
    if (n.is_zero()) throw LabError(ErrorCode::UndefinedSuppmax, "suppmax is undefined for the zero function");
    PointSet out;
    for (std::size_t z = 0; z < space.num_points(); ++z)
        if (Modulus::of(evaluate(space.generator(z), coords)) == n) out.push_back(z);
    return out;
}

PointSet suppmax(const Subspace& space, const FunctionVec& f) {
    return suppmax_of_coords(space, space.require_coords(f));
}

bool placed_over(const Subspace& space, const Family& family, const PointSet& points) {
    if (points.empty()) throw LabError(ErrorCode::EmptySet, "placed_over needs a nonempty point set");
    for (std::size_t z : points) space.ambient().check_point(z);
    for (const auto& c : family.coords()) {
        Modulus n = norm_of_coords(space, c);
        Modulus outside;
        for (std::size_t z = 0; z < space.num_points(); ++z) {
            if (contains(points, z)) continue;
            Modulus m = Modulus::of(evaluate(space.generator(z), c));
            if (m > outside) outside = m;
        }
        if (outside < n) return true;
    }
    return false;
}

SimEquivalence sim_equiv(const Subspace& space, std::size_t x, std::size_t y) {
    space.ambient().check_point(x);
    space.ambient().check_point(y);
    // Delta(1, x) = mu * Delta(1, y) with |mu| = 1 gives lambda = 1.
    auto mu = linalg::unimodular_ratio(space.generator(x).coords, space.generator(y).coords);
    if (!mu) return {};
    return {true, Scalar(1), *mu};
}

bool distinguishes(const Subspace& space, const PointSet& points) {
    if (points.empty()) throw LabError(ErrorCode::EmptySet, "distinguishes needs a nonempty point set");
    for (std::size_t z : points) space.ambient().check_point(z);
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (space.class_rep(points[i]) == space.class_rep(points[j])) return false;
    return true;
}

namespace {

Modulus sup_over(const Subspace& space, const PointSet& points, std::span<const Scalar> coords) {
    Modulus best;
    for (std::size_t z : points) {
        Modulus m = Modulus::of(evaluate(space.generator(z), coords));
        if (m > best) best = m;
    }
    return best;
}

}  // namespace

BoundaryResult is_boundary(const Subspace& space, const PointSet& points) {
    return is_boundary(space, points, default_discretization());
}

BoundaryResult is_boundary(const Subspace& space, const PointSet& points, int discretization) {
    if (points.empty()) throw LabError(ErrorCode::EmptySet, "boundary candidate must be nonempty");
    for (std::size_t z : points) space.ambient().check_point(z);

    auto gap = [&](std::span<const Scalar> c) { return sup_over(space, points, c) < norm_of_coords(space, c); };

    // Cheap witnesses first: the basis functions themselves.
    for (std::size_t j = 0; j < space.dim(); ++j) {
        Vec e(space.dim());
        e[j] = 1;
        if (gap(e)) return {false, e, Confidence::exact()};
    }

    std::vector<Functional> gens;
    for (std::size_t y : points) gens.push_back(space.generator(y));
    BoundaryResult result{true, std::nullopt, Confidence::exact()};
    for (std::size_t z = 0; z < space.num_points(); ++z) {
        if (contains(points, z)) continue;
        HullMembership h = in_absconv(space.generator(z), gens, space.field(), discretization);
        if (h.member) continue;
        if (h.separator && gap(*h.separator)) return {false, h.separator, Confidence::exact()};
        // Only reachable with a discretized circle: undecided, report the gap.
        result = {false, h.separator, h.confidence};
    }
    return result;
}

}  // namespace finlab
