#include "finlab/linalg.hpp"

#include <cassert>

#include "finlab/errors.hpp"

namespace finlab::linalg {

Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b) {
    if (a.size() != b.size()) throw LabError(ErrorCode::DimensionMismatch, "dot: length mismatch");
    Scalar acc;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero() || b[i].is_zero()) continue;
        acc += a[i] * b[i];
    }
    return acc;
}

Vec scale(std::span<const Scalar> v, const Scalar& s) {
    Vec out(v.begin(), v.end());
    for (auto& x : out) x *= s;
    return out;
}

Vec add(std::span<const Scalar> a, std::span<const Scalar> b) {
    if (a.size() != b.size()) throw LabError(ErrorCode::DimensionMismatch, "add: length mismatch");
    Vec out(a.begin(), a.end());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    return out;
}

Vec sub(std::span<const Scalar> a, std::span<const Scalar> b) {
    if (a.size() != b.size()) throw LabError(ErrorCode::DimensionMismatch, "sub: length mismatch");
    Vec out(a.begin(), a.end());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
    return out;
}

bool is_zero(std::span<const Scalar> v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Mat transpose(const Mat& m, std::size_t cols) {
    Mat out(cols, Vec(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) out[j][i] = m[i][j];
    return out;
}

Vec multiply(const Mat& m, std::span<const Scalar> v) {
    Vec out;
    out.reserve(m.size());
    for (const auto& row : m) out.push_back(dot(row, v));
    return out;
}

Mat multiply(const Mat& a, const Mat& b, std::size_t b_cols) {
    Mat out(a.size(), Vec(b_cols));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != b.size()) throw LabError(ErrorCode::DimensionMismatch, "matrix product mismatch");
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < b_cols; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    }
    return out;
}

Mat identity(std::size_t n) {
    Mat out(n, Vec(n));
    for (std::size_t i = 0; i < n; ++i) out[i][i] = 1;
    return out;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Mat& m, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && m[sel][col].is_zero()) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        Scalar inv = m[row][col].inverse();
        for (auto& x : m[row]) x *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            Scalar f = m[r][col];
            for (std::size_t c = 0; c < m[r].size(); ++c) {
                if (!m[row][c].is_zero()) m[r][c] -= f * m[row][c];
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t rank(const Mat& rows, std::size_t cols) {
    Mat m = rows;
    return rref(m, cols).size();
}

std::optional<Vec> solve(const Mat& m, std::span<const Scalar> b, std::size_t cols) {
    if (b.size() != m.size()) throw LabError(ErrorCode::DimensionMismatch, "solve: rhs length mismatch");
    Mat aug = m;
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
    auto pivots = rref(aug, cols);
    for (std::size_t r = pivots.size(); r < aug.size(); ++r)
        if (!aug[r][cols].is_zero()) return std::nullopt;
    Vec x(cols);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][cols];
    return x;
}

std::vector<Vec> nullspace(const Mat& m, std::size_t cols) {
    Mat r = m;
    auto pivots = rref(r, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vec> out;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vec v(cols);
        v[free] = 1;
        for (std::size_t row = 0; row < pivots.size(); ++row) v[pivots[row]] = -r[row][free];
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<Mat> inverse(const Mat& m) {
    const std::size_t n = m.size();
    Mat aug = m;
    for (std::size_t i = 0; i < n; ++i) {
        if (aug[i].size() != n) throw LabError(ErrorCode::DimensionMismatch, "inverse: matrix not square");
        aug[i].resize(2 * n);
        aug[i][n + i] = 1;
    }
    auto pivots = rref(aug, n);
    if (pivots.size() != n) return std::nullopt;
    Mat out(n, Vec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i][j] = aug[i][n + j];
    return out;
}

std::optional<Scalar> unimodular_ratio(std::span<const Scalar> a, std::span<const Scalar> b) {
    if (a.size() != b.size()) throw LabError(ErrorCode::DimensionMismatch, "ratio: length mismatch");
    std::optional<Scalar> mu;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (b[i].is_zero()) {
            if (!a[i].is_zero()) return std::nullopt;
            continue;
        }
        Scalar r = a[i] / b[i];
        if (!mu) {
            if (!r.is_unimodular()) return std::nullopt;
            mu = r;
        } else if (*mu != r) {
            return std::nullopt;
        }
    }
    if (!mu) return Scalar(1);  // both zero
    return mu;
}

}  // namespace finlab::linalg
