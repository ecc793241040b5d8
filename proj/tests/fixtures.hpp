#pragma once

#include <memory>
#include <string>
#include <vector>

#include "finlab/choquet.hpp"
#include "finlab/isometry.hpp"

namespace fixtures {

using namespace finlab;

inline Scalar q(long n, long d = 1) { return Scalar::fraction(n, d); }
inline Scalar c(long re, long im) { return Scalar(Rational(re), Rational(im)); }

inline std::shared_ptr<const Subspace> sub(std::vector<std::string> pts, std::vector<Vec> basis,
                                           std::vector<Scalar> w = {}, Field field = Field::Real) {
    if (w.empty()) w.assign(pts.size(), Scalar(1));
    return std::make_shared<const Subspace>(WeightedSpace(std::move(pts), std::move(w), field), std::move(basis));
}

inline std::shared_ptr<const Subspace> full(std::vector<std::string> pts, std::vector<Scalar> w = {},
                                            Field field = Field::Real) {
    const std::size_t n = pts.size();
    return sub(std::move(pts), linalg::identity(n), std::move(w), field);
}

/// span{(1,1,1),(1,-1,0)} on {a,b,c}.
inline std::shared_ptr<const Subspace> three_point() { return sub({"a", "b", "c"}, {{1, 1, 1}, {1, -1, 0}}); }

/// span{(1,1,1),(0,1/2,1)} on {a,b,c}.
inline std::shared_ptr<const Subspace> affine_three_point() { return sub({"a", "b", "c"}, {{1, 1, 1}, {0, q(1, 2), 1}}); }

/// Tf = (f(a), -f(b), (f(a)+f(b))/2) from C({a,b}) to C({x,y,z}).
inline LinearMap averaging_map() {
    return LinearMap(full({"a", "b"}), full({"x", "y", "z"}), {{1, 0}, {0, -1}, {q(1, 2), q(1, 2)}});
}

}  // namespace fixtures
