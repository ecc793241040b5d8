#include "finlab/isometry.hpp"

#include <algorithm>
#include <random>

#include "finlab/choquet.hpp"
#include "finlab/errors.hpp"
#include "finlab/lp.hpp"

namespace finlab {

LinearMap::LinearMap(std::shared_ptr<const Subspace> domain, std::shared_ptr<const Subspace> codomain, Mat matrix)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix)) {
    if (!domain_ || !codomain_) throw LabError(ErrorCode::InvalidArgument, "map needs a domain and a codomain");
    if (domain_->field() != codomain_->field())
        throw LabError(ErrorCode::InvalidArgument, "domain and codomain use different scalar fields");
    const std::size_t d1 = domain_->dim();
    const std::size_t d2 = codomain_->dim();
    if (matrix_.size() != d2)
        throw LabError(ErrorCode::DimensionMismatch,
                       "matrix has " + std::to_string(matrix_.size()) + " rows, codomain dimension is " + std::to_string(d2));
    for (const auto& row : matrix_) {
        if (row.size() != d1)
            throw LabError(ErrorCode::DimensionMismatch,
                           "matrix row has " + std::to_string(row.size()) + " entries, domain dimension is " + std::to_string(d1));
        if (domain_->field() == Field::Real)
            for (const auto& x : row)
                if (!x.is_real()) throw LabError(ErrorCode::InvalidArgument, "complex matrix entry between real spaces");
    }
    pulled_.reserve(codomain_->num_points());
    for (const auto& g : codomain_->generators()) pulled_.push_back(pullback(g));
}

LinearMap LinearMap::identity(std::shared_ptr<const Subspace> space) {
    Mat id = linalg::identity(space->dim());
    return LinearMap(space, space, std::move(id));
}

Vec LinearMap::image(std::span<const Scalar> coords) const {
    if (coords.size() != domain_->dim()) throw LabError(ErrorCode::DimensionMismatch, "coordinate vector length differs from domain dimension");
    return linalg::multiply(matrix_, coords);
}

Functional LinearMap::pullback(const Functional& ell) const {
    if (ell.coords.size() != codomain_->dim()) throw LabError(ErrorCode::DimensionMismatch, "functional dimension differs from codomain");
    Vec out(domain_->dim());
    for (std::size_t i = 0; i < matrix_.size(); ++i) {
        if (ell.coords[i].is_zero()) continue;
        for (std::size_t j = 0; j < out.size(); ++j)
            if (!matrix_[i][j].is_zero()) out[j] += ell.coords[i] * matrix_[i][j];
    }
    return Functional{std::move(out)};
}

bool same_subspace(const Subspace& a, const Subspace& b) {
    return a.field() == b.field() && a.ambient().points() == b.ambient().points() &&
           a.ambient().weight() == b.ambient().weight() && a.basis() == b.basis();
}

LinearMap compose(const LinearMap& first, const LinearMap& second) {
    if (!same_subspace(first.codomain(), second.domain()))
        throw LabError(ErrorCode::DimensionMismatch, "codomain of the first map is not the domain of the second");
    Mat m = linalg::multiply(second.matrix(), first.matrix(), first.domain().dim());
    return LinearMap(first.domain_ptr(), second.codomain_ptr(), std::move(m));
}

namespace {

std::vector<Functional> nonzero_class_generators(const Subspace& space) {
    std::vector<Functional> out;
    for (std::size_t r : space.class_reps())
        if (!linalg::is_zero(space.generator(r).coords)) out.push_back(space.generator(r));
    return out;
}

bool norm_preserved(const LinearMap& map, std::span<const Scalar> coords) {
    return norm_of_coords(map.codomain(), map.image(coords)) == norm_of_coords(map.domain(), coords);
}

}  // namespace

IsometryCheck verify_into_isometry(const LinearMap& map) {
    const Subspace& a1 = map.domain();
    for (std::size_t j = 0; j < a1.dim(); ++j) {
        Vec e(a1.dim());
        e[j] = 1;
        if (!norm_preserved(map, e)) return {false, e, Confidence::exact()};
    }

    // The two dual balls coincide iff each generator set lies in the other hull.
    const auto own = nonzero_class_generators(a1);
    const auto& pulled = map.pulled_generators();
    IsometryCheck result{true, std::nullopt, Confidence::exact()};
    auto test = [&](const Functional& target, std::span<const Functional> hull) {
        HullMembership h = in_absconv(target, hull, a1.field());
        if (h.member) return true;
        if (h.separator && !norm_preserved(map, *h.separator)) {
            result = {false, h.separator, Confidence::exact()};
            return false;
        }
        if (result.isometry) result = {false, std::nullopt, h.confidence};
        return true;
    };
    for (const auto& g : own)
        if (!test(g, pulled)) return result;
    for (const auto& p : pulled)
        if (!test(p, own)) return result;
    return result;
}

bool verify_onto_isometry(const LinearMap& map) {
    if (!verify_into_isometry(map).isometry) throw LabError(ErrorCode::NotIsometry, "map is not an into-isometry");
    return linalg::rank(map.matrix(), map.domain().dim()) == map.codomain().dim();
}

PointSet CompositionForm::on() const {
    PointSet out;
    for (const auto& [x, _] : phi) out.push_back(x);
    return out;
}

CompositionForm restrict_form(const CompositionForm& form, const PointSet& points) {
    CompositionForm out;
    for (std::size_t x : points) {
        auto p = form.phi.find(x);
        auto t = form.tau.find(x);
        if (p == form.phi.end() || t == form.tau.end()) continue;
        out.phi.emplace(x, p->second);
        out.tau.emplace(x, t->second);
        if (auto a = form.ambiguous.find(t->second); a != form.ambiguous.end()) out.ambiguous.insert(*a);
    }
    return out;
}

namespace {

void check_form_shape(const Subspace& domain, const Subspace& codomain, const CompositionForm& form) {
    if (form.phi.size() != form.tau.size())
        throw LabError(ErrorCode::InvalidArgument, "phi and tau must be defined on the same points");
    for (const auto& [x, s] : form.phi) {
        codomain.ambient().check_point(x);
        if (!form.tau.count(x)) throw LabError(ErrorCode::InvalidArgument, "tau undefined where phi is defined");
        if (!s.is_unimodular()) throw LabError(ErrorCode::NotUnimodular, "phi(" + codomain.ambient().name(x) + ") is not unimodular");
        if (domain.field() == Field::Real && !s.is_real())
            throw LabError(ErrorCode::NotUnimodular, "phi must be +1 or -1 in the real field");
    }
    for (const auto& [x, y] : form.tau) {
        if (y >= domain.num_points())
            throw LabError(ErrorCode::UnknownPoint, "tau(" + codomain.ambient().name(x) + ") lies outside the domain points");
    }
}

}  // namespace

CompositionOperator weighted_composition_operator(std::shared_ptr<const Subspace> domain,
                                                  std::shared_ptr<const Subspace> codomain,
                                                  const CompositionForm& form) {
    check_form_shape(*domain, *codomain, form);
    const Subspace& a1 = *domain;
    const Subspace& a2 = *codomain;
    Mat m(a2.dim(), Vec(a1.dim()));
    for (std::size_t j = 0; j < a1.dim(); ++j) {
        Vec values(a2.num_points());
        for (const auto& [x, s] : form.phi) {
            const std::size_t y = form.tau.at(x);
            values[x] = s * a1.ambient().weight(y) / a2.ambient().weight(x) * a1.basis()[j][y];
        }
        auto c = a2.coords(values);
        if (!c) throw LabError(ErrorCode::SpanMembership, "image of a basis function leaves the codomain subspace");
        for (std::size_t i = 0; i < a2.dim(); ++i) m[i][j] = (*c)[i];
    }
    CompositionOperator out{LinearMap(std::move(domain), std::move(codomain), std::move(m)), false, Confidence::exact()};
    std::vector<std::size_t> image;
    for (const auto& [_, y] : form.tau) image.push_back(y);
    PointSet tau_image = make_point_set(std::move(image));
    if (!tau_image.empty()) {
        BoundaryResult b = is_boundary(a1, tau_image);
        out.isometry = b.boundary;
        out.confidence = b.confidence;
    }
    return out;
}

CompositionForm decompose(const LinearMap& map, bool strict) {
    IsometryCheck check = verify_into_isometry(map);
    if (!check.isometry) throw LabError(ErrorCode::NotIsometry, "decompose needs an into-isometry");
    const Subspace& a1 = map.domain();
    CompositionForm form;
    for (std::size_t x : m_set(map)) {
        auto match = match_generator(a1, map.pulled_generator(x));
        if (!match)
            throw LabError(ErrorCode::TheoremViolation,
                           "extreme pullback at " + map.codomain().ambient().name(x) + " is not a generator multiple");
        const auto [z, lambda] = *match;
        PointSet cls = a1.class_members(z);
        if (cls.size() > 1) {
            if (strict) {
                std::string names;
                for (std::size_t y : cls) names += (names.empty() ? "" : ",") + a1.ambient().name(y);
                throw LabError(ErrorCode::Ambiguity, "tau(" + map.codomain().ambient().name(x) + ") is ambiguous among {" + names + "}");
            }
            form.ambiguous[z] = cls;
        }
        form.phi.emplace(x, lambda);
        form.tau.emplace(x, z);
    }
    return form;
}

bool satisfies_identity(const LinearMap& map, const CompositionForm& form) {
    if (form.phi.size() != form.tau.size()) return false;
    for (const auto& [x, s] : form.phi) {
        auto t = form.tau.find(x);
        if (t == form.tau.end() || x >= map.codomain().num_points() || t->second >= map.domain().num_points()) return false;
        if (!s.is_unimodular()) return false;
        if (map.pulled_generator(x).coords != linalg::scale(map.domain().generator(t->second).coords, s)) return false;
    }
    return true;
}

bool tau_covers_choquet(const LinearMap& map, const CompositionForm& form) {
    PointSet hit;
    for (const auto& [_, y] : form.tau) hit.push_back(map.domain().class_rep(y));
    hit = make_point_set(std::move(hit));
    for (std::size_t z : extreme_classes(map.domain()))
        if (!contains(hit, z)) return false;
    return true;
}

const char* to_string(Uniqueness u) {
    switch (u) {
        case Uniqueness::IdentityFails: return "identity-fails";
        case Uniqueness::Agrees: return "agrees";
        case Uniqueness::Violates: return "violates";
    }
    return "unknown";
}

Uniqueness check_alternative(const LinearMap& map, const CompositionForm& decomposed,
                             const CompositionForm& alternative) {
    if (!satisfies_identity(map, alternative)) return Uniqueness::IdentityFails;
    for (const auto& [x, y] : alternative.tau) {
        auto t = decomposed.tau.find(x);
        if (t == decomposed.tau.end()) return Uniqueness::Violates;
        if (map.domain().class_rep(y) != map.domain().class_rep(t->second)) return Uniqueness::Violates;
        if (y == t->second && alternative.phi.at(x) != decomposed.phi.at(x)) return Uniqueness::Violates;
    }
    return Uniqueness::Agrees;
}

ComposeResult compose_forms(const LinearMap& t1, const CompositionForm& f1, const LinearMap& t2,
                            const CompositionForm& f2) {
    if (!same_subspace(t1.codomain(), t2.domain()))
        throw LabError(ErrorCode::DimensionMismatch, "codomain of the first map is not the domain of the second");
    if (f1.phi.empty() || !satisfies_identity(t1, f1))
        throw LabError(ErrorCode::InvalidArgument, "first form does not decompose the first map");
    if (f2.phi.empty() || !satisfies_identity(t2, f2))
        throw LabError(ErrorCode::InvalidArgument, "second form does not decompose the second map");

    ComposeResult out;
    for (const auto& [x, y] : f2.tau) {
        auto p1 = f1.phi.find(y);
        if (p1 == f1.phi.end()) continue;
        out.form.phi.emplace(x, f2.phi.at(x) * p1->second);
        const std::size_t z = f1.tau.at(y);
        out.form.tau.emplace(x, z);
        if (auto a = f1.ambiguous.find(z); a != f1.ambiguous.end()) out.form.ambiguous.insert(*a);
    }
    LinearMap t3 = compose(t1, t2);
    CompositionForm d3 = decompose(t3);
    const PointSet on = out.form.on();
    out.nonempty = !on.empty();
    out.inside_mset = std::includes(d3.phi.begin(), d3.phi.end(), out.form.phi.begin(), out.form.phi.end(),
                                    [](const auto& a, const auto& b) { return a.first < b.first; });
    out.agrees = out.inside_mset && restrict_form(d3, on) == out.form;
    return out;
}

InvertResult invert_form(const LinearMap& map, const CompositionForm& form) {
    if (!verify_onto_isometry(map)) throw LabError(ErrorCode::NotOnto, "map is not onto its codomain");
    if (!satisfies_identity(map, form)) throw LabError(ErrorCode::InvalidArgument, "form does not decompose the map");
    const std::size_t n1 = map.domain().num_points();
    const std::size_t n2 = map.codomain().num_points();
    std::vector<std::optional<std::size_t>> preimage(n1);
    bool bijective = form.tau.size() == n2 && n1 == n2;
    for (const auto& [x, y] : form.tau) {
        if (preimage[y]) bijective = false;
        preimage[y] = x;
    }
    for (const auto& p : preimage) bijective = bijective && p.has_value();
    if (!bijective) throw LabError(ErrorCode::TheoremViolation, "tau is not a bijection between the point sets");

    auto inv = linalg::inverse(map.matrix());
    if (!inv) throw LabError(ErrorCode::NotOnto, "matrix is singular");
    InvertResult out{LinearMap(map.codomain_ptr(), map.domain_ptr(), std::move(*inv)), {}, false};
    for (std::size_t z = 0; z < n1; ++z) {
        const std::size_t x = *preimage[z];
        out.form.tau.emplace(z, x);
        out.form.phi.emplace(z, form.phi.at(x).inverse());
    }
    out.agrees = decompose(out.inverse) == out.form;
    return out;
}

const char* to_string(Tristate t) {
    switch (t) {
        case Tristate::False: return "false";
        case Tristate::True: return "true";
        case Tristate::Unknown: return "unknown";
    }
    return "unknown";
}

namespace {

// min or max of P_w(c) over {c : P_0(c) = 1, |P_v(c)| <= 1 for all v}.
lp::Result pinned_extent(const LinearMap& map, std::size_t z0, std::size_t w, lp::Sense sense) {
    const std::size_t d = map.domain().dim();
    auto row = [&](std::size_t x) {
        std::vector<Rational> r(d);
        for (std::size_t j = 0; j < d; ++j) r[j] = map.pulled_generator(x).coords[j].re();
        return r;
    };
    lp::LinearProgram prog(d);
    for (std::size_t j = 0; j < d; ++j) prog.set_free(j);
    prog.set_objective(row(w), sense);
    prog.add_row(row(z0), lp::Relation::Equal, 1);
    for (std::size_t v = 0; v < map.codomain().num_points(); ++v) {
        prog.add_row(row(v), lp::Relation::LessEqual, 1);
        prog.add_row(row(v), lp::Relation::GreaterEqual, -1);
    }
    return prog.solve();
}

Vec to_vec(const std::vector<Rational>& x) {
    Vec out;
    out.reserve(x.size());
    for (const auto& v : x) out.emplace_back(v);
    return out;
}

Tristate beta_exact(const LinearMap& map, std::size_t z0, std::vector<Vec>& witnesses) {
    const std::size_t n2 = map.codomain().num_points();
    if (linalg::is_zero(map.pulled_generator(z0).coords)) return Tristate::False;
    std::vector<bool> excluded(n2, false);
    excluded[z0] = true;
    for (std::size_t w = 0; w < n2; ++w) {
        if (excluded[w]) continue;
        lp::Result lo = pinned_extent(map, z0, w, lp::Sense::Minimize);
        if (lo.status != lp::Status::Optimal) return Tristate::False;
        lp::Result hi = pinned_extent(map, z0, w, lp::Sense::Maximize);
        if (lo.objective == hi.objective && abs(lo.objective) == 1) return Tristate::False;
        Vec c = to_vec(lo.x);
        if (lo.objective != hi.objective) c = linalg::scale(linalg::add(c, to_vec(hi.x)), Scalar::fraction(1, 2));
        Vec image = map.image(c);
        for (std::size_t v = 0; v < n2; ++v) {
            Modulus m = Modulus::of(evaluate(map.codomain().generator(v), image));
            if (m < Modulus(Rational(1))) excluded[v] = true;
        }
        witnesses.push_back(map.domain().values(c));
    }
    return Tristate::True;
}

}  // namespace

AlphaBeta property_alpha_beta(const LinearMap& map, int budget) {
    if (!verify_into_isometry(map).isometry) throw LabError(ErrorCode::NotIsometry, "property_alpha_beta needs an into-isometry");
    AlphaBeta out;
    const std::size_t n2 = map.codomain().num_points();
    const std::size_t d1 = map.domain().dim();
    out.beta_at.assign(n2, Tristate::Unknown);

    if (map.domain().field() == Field::Real) {
        for (std::size_t z0 = 0; z0 < n2; ++z0) {
            std::vector<Vec> witnesses;
            out.beta_at[z0] = beta_exact(map, z0, witnesses);
            if (out.beta_at[z0] == Tristate::True) out.beta_witnesses[z0] = std::move(witnesses);
        }
    } else {
        // Bounded search: basis functions, pairwise combinations, then random ones.
        std::vector<Vec> candidates;
        const Scalar i_unit(Rational(0), Rational(1));
        for (std::size_t j = 0; j < d1; ++j) {
            Vec e(d1);
            e[j] = 1;
            candidates.push_back(e);
            for (std::size_t k = j + 1; k < d1; ++k) {
                for (const Scalar& s : {Scalar(1), Scalar(-1), i_unit, -i_unit}) {
                    Vec c(d1);
                    c[j] = 1;
                    c[k] = s;
                    candidates.push_back(c);
                }
            }
        }
        std::mt19937_64 rng(0x5eed);
        std::uniform_int_distribution<long> coef(-4, 4);
        while (static_cast<int>(candidates.size()) < budget) {
            Vec c(d1);
            for (auto& x : c) x = Scalar(Rational(coef(rng)), Rational(coef(rng)));
            if (!linalg::is_zero(c)) candidates.push_back(std::move(c));
        }
        std::vector<PointSet> meet(n2, all_points(n2));
        std::vector<std::vector<Vec>> chosen(n2);
        std::size_t pinned = 0;
        for (const auto& c : candidates) {
            PointSet spm = suppmax_of_coords(map.codomain(), map.image(c));
            for (std::size_t z0 : spm) {
                if (meet[z0].size() == 1) continue;
                PointSet next = set_intersection(meet[z0], spm);
                if (next.size() == meet[z0].size()) continue;
                meet[z0] = std::move(next);
                chosen[z0].push_back(map.domain().values(c));
                if (meet[z0].size() == 1) ++pinned;
            }
            if (pinned == n2) break;
        }
        for (std::size_t z0 = 0; z0 < n2; ++z0) {
            if (meet[z0].size() == 1) {
                out.beta_at[z0] = Tristate::True;
                out.beta_witnesses[z0] = std::move(chosen[z0]);
            }
        }
    }

    out.beta = Tristate::True;
    for (Tristate t : out.beta_at) {
        if (t == Tristate::False) out.beta = Tristate::False;
        else if (t == Tristate::Unknown && out.beta == Tristate::True) out.beta = Tristate::Unknown;
    }
    return out;
}

}  // namespace finlab
