#pragma once

#include <optional>
#include <span>
#include <vector>

#include "finlab/scalar.hpp"

namespace finlab {

using Vec = std::vector<Scalar>;
/// Row-major dense matrix.
using Mat = std::vector<Vec>;

namespace linalg {

Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b);
Vec scale(std::span<const Scalar> v, const Scalar& s);
Vec add(std::span<const Scalar> a, std::span<const Scalar> b);
Vec sub(std::span<const Scalar> a, std::span<const Scalar> b);
bool is_zero(std::span<const Scalar> v);

Mat transpose(const Mat& m, std::size_t cols);
Vec multiply(const Mat& m, std::span<const Scalar> v);
Mat multiply(const Mat& a, const Mat& b, std::size_t b_cols);
Mat identity(std::size_t n);

/// Rank of the row set (Gaussian elimination over exact scalars).
std::size_t rank(const Mat& rows, std::size_t cols);

/// Some solution x of m x = b, or nullopt when the system is inconsistent.
std::optional<Vec> solve(const Mat& m, std::span<const Scalar> b, std::size_t cols);

/// Basis of {x : m x = 0}.
std::vector<Vec> nullspace(const Mat& m, std::size_t cols);

std::optional<Mat> inverse(const Mat& m);

/// mu with a = mu * b and |mu| = 1, if one exists. Two zero vectors give mu = 1.
std::optional<Scalar> unimodular_ratio(std::span<const Scalar> a, std::span<const Scalar> b);

}  // namespace linalg
}  // namespace finlab
