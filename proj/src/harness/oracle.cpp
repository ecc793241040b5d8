#include "harness/oracle.hpp"

#include <algorithm>
#include <functional>

namespace finlab::oracle {

std::vector<Vec> sorted_unique(std::vector<Vec> points) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return points;
}

bool in_hull(const Vec& q, const std::vector<Vec>& points) {
    const std::size_t dim = q.size();
    const std::size_t max_k = std::min(points.size(), dim + 1);
    Vec rhs = q;
    rhs.emplace_back(1);
    std::vector<std::size_t> pick;

    // Any nonnegative solution certifies membership; when the chosen points
    // are affinely dependent a smaller subset is tried as well.
    std::function<bool(std::size_t, std::size_t)> search = [&](std::size_t start, std::size_t k) {
        if (pick.size() == k) {
            Mat m(dim + 1, Vec(k));
            for (std::size_t c = 0; c < k; ++c) {
                for (std::size_t r = 0; r < dim; ++r) m[r][c] = points[pick[c]][r];
                m[dim][c] = 1;
            }
            auto t = linalg::solve(m, rhs, k);
            if (!t) return false;
            return std::all_of(t->begin(), t->end(), [](const Scalar& x) { return x.is_real() && sgn(x.re()) >= 0; });
        }
        for (std::size_t i = start; i < points.size(); ++i) {
            pick.push_back(i);
            if (search(i + 1, k)) return true;
            pick.pop_back();
        }
        return false;
    };
    for (std::size_t k = 1; k <= max_k; ++k) {
        pick.clear();
        if (search(0, k)) return true;
    }
    return false;
}

std::vector<Vec> vertices(const std::vector<Vec>& points) {
    std::vector<Vec> pts = sorted_unique(points);
    std::vector<Vec> out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::vector<Vec> others;
        for (std::size_t j = 0; j < pts.size(); ++j)
            if (j != i) others.push_back(pts[j]);
        if (!in_hull(pts[i], others)) out.push_back(pts[i]);
    }
    return out;
}

std::vector<Vec> signed_generators(const Subspace& space) {
    std::vector<Vec> pts;
    for (const auto& g : space.generators()) {
        pts.push_back(g.coords);
        pts.push_back(linalg::scale(g.coords, Scalar(-1)));
    }
    return sorted_unique(std::move(pts));
}

std::vector<Vec> ball_vertices(const Subspace& space) {
    return vertices(signed_generators(space));
}

namespace {

Scalar max_abs_value(const Subspace& space, const Vec& f) {
    Rational best = 0;
    for (const auto& g : space.generators()) {
        Rational v = abs(linalg::dot(g.coords, f).re());
        if (v > best) best = v;
    }
    return Scalar(best);
}

}  // namespace

std::vector<Vec> face_points(const Subspace& space, const std::vector<Vec>& family, const std::vector<int>& signs) {
    std::vector<Scalar> targets;
    for (std::size_t i = 0; i < family.size(); ++i) targets.push_back(max_abs_value(space, family[i]) * Scalar(signs[i]));
    std::vector<Vec> out;
    for (const auto& q : signed_generators(space)) {
        bool in = true;
        for (std::size_t i = 0; i < family.size() && in; ++i) in = linalg::dot(q, family[i]) == targets[i];
        if (in) out.push_back(q);
    }
    return out;
}

namespace {

template <class F>
void for_each_sign_pattern(std::size_t k, F&& f) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        std::vector<int> signs(k);
        for (std::size_t i = 0; i < k; ++i) signs[i] = ((mask >> i) & 1U) ? -1 : 1;
        f(signs);
    }
}

}  // namespace

std::vector<Vec> sigma_extremes(const Subspace& space, const std::vector<Vec>& family) {
    std::vector<Vec> out;
    for_each_sign_pattern(family.size(), [&](const std::vector<int>& signs) {
        auto face = face_points(space, family, signs);
        if (face.empty()) return;
        for (auto& v : vertices(face)) out.push_back(std::move(v));
    });
    return sorted_unique(std::move(out));
}

std::vector<Vec> sigma_generator_points(const Subspace& space, const std::vector<Vec>& family) {
    std::vector<Vec> out;
    for_each_sign_pattern(family.size(), [&](const std::vector<int>& signs) {
        for (auto& v : face_points(space, family, signs)) out.push_back(std::move(v));
    });
    return sorted_unique(std::move(out));
}

bool modulus_equivalent(const Subspace& space, std::size_t x, std::size_t y) {
    const std::size_t d = space.dim();
    std::vector<Vec> probes;
    const Scalar i_unit(Rational(0), Rational(1));
    for (std::size_t j = 0; j < d; ++j) {
        Vec e(d);
        e[j] = 1;
        probes.push_back(e);
        for (std::size_t k = j + 1; k < d; ++k) {
            Vec s(d);
            s[j] = 1;
            s[k] = 1;
            probes.push_back(s);
            if (space.field() == Field::Complex) {
                s[k] = i_unit;
                probes.push_back(s);
            }
        }
    }
    for (const auto& f : probes) {
        if (Modulus::of(evaluate(space.generator(x), f)) != Modulus::of(evaluate(space.generator(y), f))) return false;
    }
    return true;
}

}  // namespace finlab::oracle
