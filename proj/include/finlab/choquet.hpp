#pragma once

#include <map>

#include "finlab/isometry.hpp"

namespace finlab {

struct ChoquetReport {
    PointSet m_set;
    /// T* Delta_{A2}(1, z) for every codomain point.
    std::vector<Functional> generator_images;
    std::vector<bool> extreme;  ///< per codomain point
    Confidence confidence;
};

/// Refuses maps that are not into-isometries.
ChoquetReport choquet_report(const LinearMap& map);
PointSet m_set(const LinearMap& map);

/// Extreme-generator classes of A: representatives z with Delta_A(1, z) extreme.
PointSet extreme_classes(const Subspace& space);

/// T* Delta_{A2}(S x Y) equals ext A1*.
bool ch_contains(const LinearMap& map, const PointSet& points);

struct FaceChoquet {
    PointSet points;
    bool matches_m_set = false;
};

/// {z : Delta_A(1, z) extreme in the face ell(1) = 1}; needs weight 1 and 1 in A.
FaceChoquet prop63_set(const Subspace& space);

/// Whether Y meets suppmax(f); Y must be a Choquet family of A.
bool boundary_meets_suppmax(const Subspace& space, const FunctionVec& f, const PointSet& points);

}  // namespace finlab
