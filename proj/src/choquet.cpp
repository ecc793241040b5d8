#include "finlab/choquet.hpp"

#include "finlab/errors.hpp"

namespace finlab {

ChoquetReport choquet_report(const LinearMap& map) {
    IsometryCheck check = verify_into_isometry(map);
    if (!check.isometry) throw LabError(ErrorCode::NotIsometry, "Choquet sets are defined for into-isometries only");
    const int m = default_discretization();
    ChoquetReport out;
    out.confidence = check.confidence;
    out.generator_images = map.pulled_generators();
    out.extreme.resize(map.codomain().num_points());
    for (std::size_t x = 0; x < map.codomain().num_points(); ++x) {
        ExtremeResult e = is_extreme_in_ball(map.domain(), map.pulled_generator(x), m);
        out.extreme[x] = e.extreme;
        if (!e.confidence.is_exact()) out.confidence = e.confidence;
        if (e.extreme) out.m_set.push_back(x);
    }
    return out;
}

PointSet m_set(const LinearMap& map) {
    return choquet_report(map).m_set;
}

PointSet extreme_classes(const Subspace& space) {
    const int m = default_discretization();
    PointSet out;
    for (std::size_t r : space.class_reps()) {
        if (linalg::is_zero(space.generator(r).coords)) continue;
        if (is_extreme_in_ball(space, space.generator(r), m).extreme) out.push_back(r);
    }
    return out;
}

bool ch_contains(const LinearMap& map, const PointSet& points) {
    if (points.empty()) throw LabError(ErrorCode::EmptySet, "Choquet candidate must be nonempty");
    for (std::size_t y : points) map.codomain().ambient().check_point(y);
    if (!verify_into_isometry(map).isometry) throw LabError(ErrorCode::NotIsometry, "Choquet sets are defined for into-isometries only");
    const Subspace& a1 = map.domain();
    const int m = default_discretization();
    for (std::size_t y : points)
        if (!is_extreme_in_ball(a1, map.pulled_generator(y), m).extreme) return false;
    // Both sides are closed under S, so one representative per class suffices.
    for (std::size_t r : extreme_classes(a1)) {
        bool hit = false;
        for (std::size_t y : points) {
            auto mu = linalg::unimodular_ratio(map.pulled_generator(y).coords, a1.generator(r).coords);
            if (mu && (a1.field() == Field::Complex || mu->is_real())) {
                hit = true;
                break;
            }
        }
        if (!hit) return false;
    }
    return true;
}

FaceChoquet prop63_set(const Subspace& space) {
    for (const auto& w : space.ambient().weight())
        if (w != Scalar(1)) throw LabError(ErrorCode::InvalidArgument, "face construction needs the weight 1 everywhere");
    if (!space.constant_one()) throw LabError(ErrorCode::SpanMembership, "the constant function 1 is not in the subspace");

    // With p = 1 every Delta(1, z) takes the value 1 at the constant function,
    // so the face is the plain convex hull of the generators.
    PointSet ex_classes;
    for (std::size_t r : space.class_reps()) {
        std::vector<Functional> others;
        for (std::size_t y : space.class_reps())
            if (y != r) others.push_back(space.generator(y));
        if (others.empty() || !in_conv(space.generator(r), others).member) ex_classes.push_back(r);
    }
    FaceChoquet out;
    for (std::size_t z = 0; z < space.num_points(); ++z)
        if (contains(ex_classes, space.class_rep(z))) out.points.push_back(z);
    LinearMap id = LinearMap::identity(std::make_shared<const Subspace>(space));
    out.matches_m_set = out.points == m_set(id);
    return out;
}

bool boundary_meets_suppmax(const Subspace& space, const FunctionVec& f, const PointSet& points) {
    PointSet spm = suppmax(space, f);
    LinearMap id = LinearMap::identity(std::make_shared<const Subspace>(space));
    if (points.empty() || !ch_contains(id, points))
        throw LabError(ErrorCode::NotChoquet, "point set is not a Choquet family of the subspace");
    return !set_intersection(spm, points).empty();
}

}  // namespace finlab
