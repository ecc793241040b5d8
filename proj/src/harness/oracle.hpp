#pragma once

#include <vector>

#include "finlab/space.hpp"

// Brute-force references that never touch the LP solver. Real field only,
// except modulus_equivalent.
namespace finlab::oracle {

std::vector<Vec> sorted_unique(std::vector<Vec> points);

/// q in conv(points), by exact barycentric solves over subsets of at most
/// dim + 1 points.
bool in_hull(const Vec& q, const std::vector<Vec>& points);

/// The distinct points that are vertices of conv(points).
std::vector<Vec> vertices(const std::vector<Vec>& points);

/// +-Delta_A(1, z) for every z, deduplicated.
std::vector<Vec> signed_generators(const Subspace& space);

/// Vertices of the dual unit ball.
std::vector<Vec> ball_vertices(const Subspace& space);

/// Signed generators in the face {ell : ell(f_i) = sign_i ||f_i||}.
std::vector<Vec> face_points(const Subspace& space, const std::vector<Vec>& family, const std::vector<int>& signs);

/// ex Sigma^A(G) as the union of the vertex sets of the nonempty faces.
std::vector<Vec> sigma_extremes(const Subspace& space, const std::vector<Vec>& family);

/// Signed generators lying in some face, i.e. Sigma^A(G) intersected with the generator points.
std::vector<Vec> sigma_generator_points(const Subspace& space, const std::vector<Vec>& family);

/// |Delta(1,x)(f)| = |Delta(1,y)(f)| on a probe set that determines ~_A.
bool modulus_equivalent(const Subspace& space, std::size_t x, std::size_t y);

}  // namespace finlab::oracle
