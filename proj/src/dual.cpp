#include "finlab/dual.hpp"

#include <algorithm>
#include <cassert>

#include "finlab/errors.hpp"
#include "finlab/lp.hpp"

namespace finlab {

GeneratorSystem generator_system(const Subspace& space) {
    GeneratorSystem sys;
    sys.generators = space.generators();
    sys.class_rep.resize(space.num_points());
    for (std::size_t z = 0; z < space.num_points(); ++z) sys.class_rep[z] = space.class_rep(z);
    sys.reps = space.class_reps();
    return sys;
}

namespace {

std::size_t common_dim(const Functional& target, std::span<const Functional> gens) {
    const std::size_t d = target.coords.size();
    for (const auto& g : gens)
        if (g.coords.size() != d) throw LabError(ErrorCode::DimensionMismatch, "functionals of different dimension");
    return d;
}

// f with target(f) = 1 and g(f) = 0 for all gens, when target leaves their span.
std::optional<Vec> span_separator(const Functional& target, std::span<const Functional> gens, std::size_t d) {
    Mat rows;
    for (const auto& g : gens) rows.push_back(g.coords);
    if (rows.empty()) rows.push_back(Vec(d));
    for (auto& r : linalg::nullspace(rows, d)) {
        Scalar v = evaluate(target, r);
        if (!v.is_zero()) return linalg::scale(r, v.inverse());
    }
    return std::nullopt;
}

// Minimum total weight representation over the given unit set. Variables are
// w[i * units + k] >= 0 for generator i and unit k.
lp::Result min_weight_representation(const Functional& target, std::span<const Functional> gens,
                                     const std::vector<Scalar>& units, bool complex_rows) {
    const std::size_t d = target.coords.size();
    const std::size_t nvars = gens.size() * units.size();
    lp::LinearProgram prog(nvars);
    prog.set_objective(std::vector<Rational>(nvars, Rational(1)), lp::Sense::Minimize);
    for (std::size_t j = 0; j < d; ++j) {
        std::vector<Rational> re_row(nvars), im_row(nvars);
        for (std::size_t i = 0; i < gens.size(); ++i) {
            for (std::size_t k = 0; k < units.size(); ++k) {
                Scalar v = units[k] * gens[i].coords[j];
                re_row[i * units.size() + k] = v.re();
                im_row[i * units.size() + k] = v.im();
            }
        }
        prog.add_row(std::move(re_row), lp::Relation::Equal, target.coords[j].re());
        if (complex_rows) prog.add_row(std::move(im_row), lp::Relation::Equal, target.coords[j].im());
    }
    return prog.solve();
}

// max Re target(x) subject to Re(u g(x)) <= 1 for every generator g and unit u.
// The coordinates of x are split into real and imaginary parts when complex.
Vec hull_separator(const Functional& target, std::span<const Functional> gens, const std::vector<Scalar>& units,
                   bool complex_vars) {
    const std::size_t d = target.coords.size();
    const std::size_t nvars = complex_vars ? 2 * d : d;
    lp::LinearProgram prog(nvars);
    for (std::size_t v = 0; v < nvars; ++v) prog.set_free(v);

    // Re(h . x) with x = xr + i xi is sum_j hr_j xr_j - hi_j xi_j.
    auto real_part_row = [&](const Vec& h) {
        std::vector<Rational> row(nvars);
        for (std::size_t j = 0; j < d; ++j) {
            row[j] = h[j].re();
            if (complex_vars) row[d + j] = -h[j].im();
        }
        return row;
    };
    prog.set_objective(real_part_row(target.coords), lp::Sense::Maximize);
    for (const auto& g : gens) {
        for (const auto& u : units) prog.add_row(real_part_row(linalg::scale(g.coords, u)), lp::Relation::LessEqual, 1);
    }
    lp::Result res = prog.solve();
    if (res.status != lp::Status::Optimal)
        throw LabError(ErrorCode::TheoremViolation, "separation LP did not reach an optimum");
    Vec x(d);
    for (std::size_t j = 0; j < d; ++j) {
        x[j] = complex_vars ? Scalar(res.x[j], res.x[d + j]) : Scalar(res.x[j]);
    }
    return x;
}

}  // namespace

HullMembership in_absconv(const Functional& target, std::span<const Functional> gens, Field field) {
    return in_absconv(target, gens, field, default_discretization());
}

HullMembership in_absconv(const Functional& target, std::span<const Functional> gens, Field field,
                          int discretization) {
    const std::size_t d = common_dim(target, gens);
    const bool complex = field == Field::Complex;
    if (!complex) {
        for (const auto& x : target.coords)
            if (!x.is_real()) throw LabError(ErrorCode::InvalidArgument, "complex functional in the real field");
    }
    HullMembership out;
    out.confidence = complex ? Confidence::discretized(discretization) : Confidence::exact();

    if (linalg::is_zero(target.coords)) {
        out.member = true;
        out.confidence = Confidence::exact();
        return out;
    }
    if (gens.empty()) {
        out.separator = span_separator(target, gens, d);
        out.confidence = Confidence::exact();
        return out;
    }

    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (linalg::is_zero(gens[i].coords)) continue;
        if (auto mu = linalg::unimodular_ratio(target.coords, gens[i].coords)) {
            out.member = true;
            out.confidence = Confidence::exact();
            out.certificate.push_back({i, Rational(1), *mu});
            return out;
        }
    }

    const std::vector<Scalar> units = unimodular_set(field, discretization);
    lp::Result rep = min_weight_representation(target, gens, units, complex);
    if (rep.status == lp::Status::Infeasible) {
        // With +-1 (and +-i) among the units, infeasible means outside the span.
        out.separator = span_separator(target, gens, d);
        assert(out.separator);
        out.confidence = Confidence::exact();
        return out;
    }
    if (rep.objective <= 1) {
        out.member = true;
        out.confidence = Confidence::exact();
        for (std::size_t i = 0; i < gens.size(); ++i) {
            for (std::size_t k = 0; k < units.size(); ++k) {
                const Rational& w = rep.x[i * units.size() + k];
                if (sgn(w) != 0) out.certificate.push_back({i, w, units[k]});
            }
        }
        return out;
    }
    out.separator = hull_separator(target, gens, units, complex);
    return out;
}

HullMembership in_conv(const Functional& target, std::span<const Functional> gens) {
    const std::size_t d = common_dim(target, gens);
    HullMembership out;
    out.confidence = Confidence::exact();
    if (gens.empty()) {
        // The empty hull: separate with any f where target is nonzero, or the zero functional.
        out.separator = linalg::is_zero(target.coords) ? std::nullopt : span_separator(target, gens, d);
        return out;
    }
    const std::size_t k = gens.size();
    lp::LinearProgram prog(k);
    std::vector<Rational> ones(k, Rational(1));
    prog.set_objective(ones, lp::Sense::Minimize);
    prog.add_row(ones, lp::Relation::Equal, 1);
    bool complex = !std::all_of(target.coords.begin(), target.coords.end(), [](const Scalar& x) { return x.is_real(); });
    for (const auto& g : gens)
        for (const auto& x : g.coords) complex = complex || !x.is_real();
    for (std::size_t j = 0; j < d; ++j) {
        std::vector<Rational> re_row(k), im_row(k);
        for (std::size_t i = 0; i < k; ++i) {
            re_row[i] = gens[i].coords[j].re();
            im_row[i] = gens[i].coords[j].im();
        }
        prog.add_row(std::move(re_row), lp::Relation::Equal, target.coords[j].re());
        if (complex) prog.add_row(std::move(im_row), lp::Relation::Equal, target.coords[j].im());
    }
    lp::Result res = prog.solve();
    if (res.status == lp::Status::Optimal) {
        out.member = true;
        for (std::size_t i = 0; i < k; ++i)
            if (sgn(res.x[i]) != 0) out.certificate.push_back({i, res.x[i], Scalar(1)});
        return out;
    }
    if (complex) return out;
    // max target(x) - s  s.t.  g_i(x) - s <= 0,  target(x) - s <= 1.
    lp::LinearProgram sep(d + 1);
    for (std::size_t v = 0; v <= d; ++v) sep.set_free(v);
    auto row_of = [&](const Functional& f) {
        std::vector<Rational> row(d + 1);
        for (std::size_t j = 0; j < d; ++j) row[j] = f.coords[j].re();
        row[d] = -1;
        return row;
    };
    sep.set_objective(row_of(target), lp::Sense::Maximize);
    for (const auto& g : gens) sep.add_row(row_of(g), lp::Relation::LessEqual, 0);
    sep.add_row(row_of(target), lp::Relation::LessEqual, 1);
    lp::Result s = sep.solve();
    if (s.status != lp::Status::Optimal || sgn(s.objective) <= 0)
        throw LabError(ErrorCode::TheoremViolation, "convex hull separation failed");
    Vec x(d);
    for (std::size_t j = 0; j < d; ++j) x[j] = Scalar(s.x[j]);
    out.separator = x;
    return out;
}

bool verify_certificate(const Functional& target, std::span<const Functional> gens, const HullMembership& result) {
    if (!result.member) return false;
    Vec acc(target.coords.size());
    Rational total = 0;
    for (const auto& t : result.certificate) {
        if (t.gen >= gens.size() || sgn(t.weight) < 0 || !t.unit.is_unimodular()) return false;
        total += t.weight;
        acc = linalg::add(acc, linalg::scale(gens[t.gen].coords, t.unit * Scalar(t.weight)));
    }
    return total <= 1 && acc == target.coords;
}

DualNorm dual_norm(const Subspace& space, const Functional& ell) {
    return dual_norm(space, ell, default_discretization());
}

DualNorm dual_norm(const Subspace& space, const Functional& ell, int discretization) {
    if (ell.coords.size() != space.dim()) throw LabError(ErrorCode::DimensionMismatch, "functional dimension differs from subspace");
    const bool complex = space.field() == Field::Complex;
    DualNorm out{0, complex ? Confidence::discretized(discretization) : Confidence::exact()};
    if (linalg::is_zero(ell.coords)) {
        out.confidence = Confidence::exact();
        return out;
    }
    const auto units = unimodular_set(space.field(), discretization);
    lp::Result rep = min_weight_representation(ell, space.generators(), units, complex);
    if (rep.status != lp::Status::Optimal)
        throw LabError(ErrorCode::TheoremViolation, "evaluation functionals fail to span the dual");
    out.value = rep.objective;
    return out;
}

std::optional<std::pair<std::size_t, Scalar>> match_generator(const Subspace& space, const Functional& ell) {
    if (ell.coords.size() != space.dim()) throw LabError(ErrorCode::DimensionMismatch, "functional dimension differs from subspace");
    if (linalg::is_zero(ell.coords)) return std::nullopt;
    for (std::size_t r : space.class_reps()) {
        if (linalg::is_zero(space.generator(r).coords)) continue;
        if (auto mu = linalg::unimodular_ratio(ell.coords, space.generator(r).coords)) {
            if (space.field() == Field::Real && !mu->is_real()) continue;
            return std::make_pair(r, *mu);
        }
    }
    return std::nullopt;
}

ExtremeResult is_extreme_in_ball(const Subspace& space, const Functional& ell, int discretization) {
    ExtremeResult out;
    auto match = match_generator(space, ell);
    if (!match) return out;
    out.point = match->first;
    out.lambda = match->second;
    std::vector<Functional> others;
    for (std::size_t r : space.class_reps()) {
        if (r == match->first || linalg::is_zero(space.generator(r).coords)) continue;
        others.push_back(space.generator(r));
    }
    if (others.empty()) {
        out.extreme = true;
        return out;
    }
    HullMembership h = in_absconv(ell, others, space.field(), discretization);
    out.extreme = !h.member;
    out.confidence = h.confidence;
    return out;
}

ExtremeResult is_extreme(const Subspace& space, const Functional& ell) {
    return is_extreme(space, ell, default_discretization());
}

ExtremeResult is_extreme(const Subspace& space, const Functional& ell, int discretization) {
    DualNorm n = dual_norm(space, ell, discretization);
    const bool off_sphere = n.confidence.is_exact() ? n.value != 1 : n.value < 1;
    if (off_sphere)
        throw LabError(ErrorCode::Normalization, "is_extreme requires a functional of dual norm 1 (got " +
                                                     n.value.get_str() + ")");
    return is_extreme_in_ball(space, ell, discretization);
}

SigmaReport sigma_check(const Subspace& space, const Family& family, std::size_t max_family) {
    const std::size_t k = family.size();
    if (k > max_family)
        throw LabError(ErrorCode::FamilySize, "family of size " + std::to_string(k) + " exceeds the limit of " +
                                                  std::to_string(max_family));
    const int m = default_discretization();
    const bool complex = space.field() == Field::Complex;
    std::vector<Modulus> norms;
    for (const auto& c : family.coords()) norms.push_back(norm_of_coords(space, c));

    SigmaReport report;
    report.confidence = complex ? Confidence::discretized(m) : Confidence::exact();

    report.member_test = [space, coords = family.coords(), norms, m](const Functional& ell) {
        if (ell.coords.size() != space.dim()) return false;
        for (std::size_t i = 0; i < coords.size(); ++i)
            if (Modulus::of(evaluate(ell, coords[i])) != norms[i]) return false;
        // |ell(f)| = ||f|| forces dual norm >= 1; membership in the ball closes it.
        if (space.field() == Field::Real) return dual_norm(space, ell).value == 1;
        return in_absconv(ell, space.generators(), Field::Complex, m).member;
    };

    if (!complex) {
        const std::size_t n = space.num_points();
        // Sigma^A(G) = -Sigma^A(G): patterns with sigma_0 = +1 suffice.
        for (std::size_t mask = 0; mask < (std::size_t{1} << (k - 1)) && !report.centered; ++mask) {
            lp::LinearProgram prog(2 * n);
            std::vector<Rational> ones(2 * n, Rational(1));
            prog.add_row(ones, lp::Relation::LessEqual, 1);
            for (std::size_t i = 0; i < k; ++i) {
                std::vector<Rational> row(2 * n);
                for (std::size_t z = 0; z < n; ++z) {
                    Rational v = evaluate(space.generator(z), family.coords(i)).re();
                    row[2 * z] = v;
                    row[2 * z + 1] = -v;
                }
                const bool negative = i > 0 && ((mask >> (i - 1)) & 1U);
                Rational rhs = *norms[i].exact();
                prog.add_row(std::move(row), lp::Relation::Equal, negative ? Rational(-rhs) : rhs);
            }
            lp::Result res = prog.solve();
            if (res.status != lp::Status::Optimal) continue;
            report.centered = true;
            Vec coords(space.dim());
            for (std::size_t z = 0; z < n; ++z) {
                Scalar t(Rational(res.x[2 * z] - res.x[2 * z + 1]));
                if (!t.is_zero()) coords = linalg::add(coords, linalg::scale(space.generator(z).coords, t));
            }
            report.witness = Functional{coords};
        }
    } else {
        // A face of the ball is nonempty iff it holds a generator multiple.
        PointSet common = all_points(space.num_points());
        for (const auto& c : family.coords()) common = set_intersection(common, suppmax_of_coords(space, c));
        if (!common.empty()) {
            report.centered = true;
            report.witness = space.generator(common.front());
        }
    }

    if (!report.centered) return report;

    const auto signs = complex ? std::vector<Scalar>{Scalar(1)} : unimodular_set(Field::Real, m);
    for (std::size_t r : space.class_reps()) {
        if (linalg::is_zero(space.generator(r).coords)) continue;
        for (const auto& s : signs) {
            Functional ell{linalg::scale(space.generator(r).coords, s)};
            if (!report.member_test(ell)) continue;
            if (!is_extreme_in_ball(space, ell, m).extreme) continue;
            report.extreme_members.push_back(std::move(ell));
            report.extreme_points.push_back(r);
        }
    }
    return report;
}

}  // namespace finlab
