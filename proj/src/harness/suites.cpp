#include "harness/suites.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include "finlab/errors.hpp"
#include "harness/generate.hpp"
#include "harness/oracle.hpp"

namespace finlab {

namespace {

Outcome ok(std::string note = {}) { return {Verdict::Pass, std::move(note)}; }
Outcome fail(std::string note) { return {Verdict::Fail, std::move(note)}; }
Outcome skip(std::string note) { return {Verdict::Skip, std::move(note)}; }

Rng predicate_rng(const Instance& inst) { return Rng(splitmix64(inst.seed() ^ 0x7f4a7c15f39cc060ULL)); }

std::string show(std::span<const Scalar> v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].to_string();
    os << ')';
    return os.str();
}

std::string show(const Subspace& a, const PointSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + a.ambient().name(s[i]);
    return out + "}";
}

Vec random_coords(Rng& rng, std::size_t d, Field field, int height = 3) {
    for (;;) {
        Vec c(d);
        for (auto& x : c) x = random_coefficient(rng, height, field);
        if (!linalg::is_zero(c)) return c;
    }
}

PointSet random_subset(Rng& rng, std::size_t n, bool nonempty = true) {
    for (;;) {
        PointSet s;
        for (std::size_t z = 0; z < n; ++z)
            if (rng.coin()) s.push_back(z);
        if (!nonempty || !s.empty() || n == 0) return s;
    }
}

bool has(const std::vector<Vec>& sorted, const Vec& v) { return std::binary_search(sorted.begin(), sorted.end(), v); }

std::vector<Vec> signed_set(const std::vector<Functional>& ells, const PointSet& points) {
    std::vector<Vec> out;
    for (std::size_t z : points) {
        out.push_back(ells[z].coords);
        out.push_back(linalg::scale(ells[z].coords, Scalar(-1)));
    }
    return oracle::sorted_unique(std::move(out));
}

std::vector<Vec> signed_set(const std::vector<Functional>& ells) { return signed_set(ells, all_points(ells.size())); }

Rational abs_value(const Functional& ell, const Vec& f) { return abs(evaluate(ell, f).re()); }

std::shared_ptr<const Subspace> shared(const Subspace& s) { return std::make_shared<const Subspace>(s); }

LinearMap identity_on(const Subspace& s) { return LinearMap::identity(shared(s)); }

/// Intersection of suppmax(Tf) over the family (domain coordinates).
PointSet common_suppmax(const LinearMap& t, const std::vector<Vec>& family) {
    PointSet out = all_points(t.codomain().num_points());
    for (const auto& f : family) out = set_intersection(out, suppmax_of_coords(t.codomain(), t.image(f)));
    return out;
}

/// Range of T as a subspace of the codomain's ambient space, with T onto it.
LinearMap onto_range(const LinearMap& t) {
    const Subspace& a1 = t.domain();
    std::vector<Vec> basis;
    for (std::size_t j = 0; j < a1.dim(); ++j) {
        Vec col(t.codomain().dim());
        for (std::size_t r = 0; r < col.size(); ++r) col[r] = t.matrix()[r][j];
        basis.push_back(t.codomain().values(col));
    }
    auto b = std::make_shared<const Subspace>(t.codomain().ambient(), basis);
    return LinearMap(t.domain_ptr(), b, linalg::identity(a1.dim()));
}

bool is_full(const Subspace& s) { return s.basis() == linalg::identity(s.num_points()); }

/// The (phi, tau) form visible directly in the matrix of a map between full
/// spaces: each nonzero row has exactly one nonzero entry.
std::optional<CompositionForm> read_off_form(const LinearMap& t) {
    if (!is_full(t.domain()) || !is_full(t.codomain())) return std::nullopt;
    const auto& p1 = t.domain().ambient().weight();
    const auto& p2 = t.codomain().ambient().weight();
    CompositionForm form;
    for (std::size_t x = 0; x < t.matrix().size(); ++x) {
        std::optional<std::size_t> col;
        for (std::size_t y = 0; y < t.matrix()[x].size(); ++y) {
            if (t.matrix()[x][y].is_zero()) continue;
            if (col) return std::nullopt;
            col = y;
        }
        if (!col) continue;
        Scalar phi = t.matrix()[x][*col] * p2[x] / p1[*col];
        if (!phi.is_unimodular()) return std::nullopt;
        form.phi[x] = phi;
        form.tau[x] = *col;
    }
    return form;
}

/// Nonzero family whose suppmax sets share a point z0 of the domain.
std::vector<Vec> centered_family(Rng& rng, const Subspace& a, std::size_t max_size) {
    std::vector<Vec> fam{random_coords(rng, a.dim(), a.field())};
    const PointSet first = suppmax_of_coords(a, fam[0]);
    const std::size_t z0 = rng.pick(first);
    const auto want = static_cast<std::size_t>(rng.range(1, static_cast<long>(max_size)));
    for (int attempt = 0; attempt < 400 && fam.size() < want; ++attempt) {
        Vec f = random_coords(rng, a.dim(), a.field());
        if (contains(suppmax_of_coords(a, f), z0)) fam.push_back(std::move(f));
    }
    return fam;
}

Family as_family(const Subspace& a, const std::vector<Vec>& coords) {
    std::vector<FunctionVec> members;
    for (const auto& c : coords) members.push_back({a.values(c)});
    return Family(a, members);
}

std::optional<Outcome> require_isometry(const LinearMap& t) {
    if (!verify_into_isometry(t).isometry) return skip("map is not an into-isometry");
    return std::nullopt;
}

// ---------------------------------------------------------------- generators

RawInstance small_subspace(std::uint64_t seed) { return gen_instance(seed, Scale{5, 3, 3}, Kind::RandomSubspace); }
RawInstance mid_subspace(std::uint64_t seed) { return gen_instance(seed, Scale{6, 3, 3}, Kind::RandomSubspace); }
RawInstance mixed_field_subspace(std::uint64_t seed) {
    return gen_instance(seed, Scale{6, 3, 3}, Kind::RandomSubspace, (seed & 1U) ? Field::Complex : Field::Real);
}
RawInstance small_isometry(std::uint64_t seed) { return gen_instance(seed, Scale{5, 3, 3}, Kind::IsometryPair); }
RawInstance full_pair(std::uint64_t seed) { return gen_instance(seed, Scale{8, 4, 3}, Kind::FullSpacePair); }
RawInstance full_pair_complex(std::uint64_t seed) {
    return gen_instance(seed, Scale{8, 4, 3}, Kind::FullSpacePair, Field::Complex);
}
RawInstance onto_pair(std::uint64_t seed) { return gen_instance(seed, Scale{8, 4, 3}, Kind::OntoPair); }
RawInstance small_onto_pair(std::uint64_t seed) { return gen_instance(seed, Scale{6, 4, 3}, Kind::OntoPair); }
RawInstance isometry_or_onto(std::uint64_t seed) { return (seed & 1U) ? small_onto_pair(seed) : small_isometry(seed); }
RawInstance triple(std::uint64_t seed) { return gen_instance(seed, Scale{8, 4, 3}, Kind::ComposableTriple); }

RawInstance unital_subspace(std::uint64_t seed) {
    Rng rng(splitmix64(seed));
    RawInstance raw;
    raw.seed = seed;
    raw.scale = Scale{5, 3, 3};
    const auto n = static_cast<std::size_t>(rng.range(1, 5));
    const auto d = static_cast<std::size_t>(rng.range(1, std::min<long>(3, static_cast<long>(n))));
    raw.spaces.push_back(random_space(rng, "Z", kDomainNames, n, 3, Field::Real, true));
    for (;;) {
        std::vector<Vec> basis{Vec(n, Scalar(1))};
        for (std::size_t j = 1; j < d; ++j) basis.push_back(random_basis(rng, raw.spaces[0], 1, 3)[0]);
        if (linalg::rank(Mat(basis.begin(), basis.end()), n) == d) {
            raw.subspaces.push_back({"A", "Z", basis});
            break;
        }
    }
    return raw;
}

/// Full pair where some domain point has a single tau-preimage.
RawInstance pinned_pair(std::uint64_t seed) {
    Rng rng(splitmix64(seed));
    RawInstance raw;
    raw.seed = seed;
    raw.scale = Scale{8, 4, 3};
    const auto n1 = static_cast<std::size_t>(rng.range(1, 4));
    const auto n2 = static_cast<std::size_t>(rng.range(static_cast<long>(n1), std::min<long>(8, 2 * static_cast<long>(n1) - 1)));
    raw.spaces.push_back(random_space(rng, "Z1", kDomainNames, n1, 3, Field::Real));
    raw.subspaces.push_back({"A1", "Z1", full_basis(n1)});
    raw.spaces.push_back(random_space(rng, "Z2", kCodomainNames, n2, 3, Field::Real));
    raw.subspaces.push_back({"A2", "Z2", full_basis(n2)});
    raw.maps.push_back(random_composition_map(rng, "T", raw.spaces[0], raw.subspaces[0], raw.spaces[1], raw.subspaces[1], false));
    return raw;
}

// ---------------------------------------------------------------- dual geometry

Outcome check_ext_oracle(const Instance& inst) {
    const Subspace& a = *inst.subspace(0);
    const auto verts = oracle::ball_vertices(a);
    const int m = default_discretization();
    for (std::size_t z = 0; z < a.num_points(); ++z) {
        for (long s : {1L, -1L}) {
            Functional ell{linalg::scale(a.generator(z).coords, Scalar(s))};
            const bool lp = is_extreme_in_ball(a, ell, m).extreme;
            const bool brute = has(verts, ell.coords);
            if (lp != brute)
                return fail("point " + a.ambient().name(z) + " sign " + std::to_string(s) + ": lp " + std::to_string(lp) +
                            ", vertex enumeration " + std::to_string(brute));
            if (lp && !is_extreme(a, ell).extreme) return fail("is_extreme rejects vertex at " + a.ambient().name(z));
        }
    }
    return ok();
}

Outcome check_t31(const Instance& inst) {
    const LinearMap& t = inst.map(0);
    if (auto s = require_isometry(t)) return *s;
    const auto pulled = signed_set(t.pulled_generators());
    for (const auto& v : oracle::ball_vertices(t.domain()))
        if (!has(pulled, v)) return fail("vertex " + show(v) + " is not a pulled generator");
    return ok();
}

Outcome check_l41(const Instance& inst) {
    const Subspace& a = *inst.subspace(0);
    Rng rng = predicate_rng(inst);
    std::vector<Vec> fam;
    const long k = rng.range(1, 3);
    for (long i = 0; i < k; ++i) fam.push_back(random_coords(rng, a.dim(), a.field()));
    const auto ball = oracle::ball_vertices(a);
    for (std::size_t mask = 0; mask < (std::size_t{1} << fam.size()); ++mask) {
        std::vector<int> signs(fam.size());
        for (std::size_t i = 0; i < fam.size(); ++i) signs[i] = ((mask >> i) & 1U) ? -1 : 1;
        const auto face = oracle::face_points(a, fam, signs);
        if (face.empty()) continue;
        std::vector<Vec> expected;
        for (const auto& q : face)
            if (has(ball, q)) expected.push_back(q);
        if (oracle::vertices(face) != expected) return fail("face vertices differ from face points that are ball vertices");
    }
    return ok();
}

Outcome check_l42(const Instance& inst) {
    const Subspace& a = *inst.subspace(0);
    Rng rng = predicate_rng(inst);
    const auto fam = centered_family(rng, a, 4);
    const SigmaReport r = sigma_check(a, as_family(a, fam));
    if (!r.centered) return fail("centered family reported uncentered");
    const auto ex = oracle::sigma_extremes(a, fam);
    if (ex.empty()) return fail("no extreme point in a centered family's set");
    std::vector<Vec> sigma_ext;
    const auto ball = oracle::ball_vertices(a);
    for (const auto& q : oracle::sigma_generator_points(a, fam))
        if (has(ball, q)) sigma_ext.push_back(q);
    if (sigma_ext != ex) return fail("face-vertex union differs from the set meet ball vertices");
    std::vector<Vec> lp;
    for (const auto& e : r.extreme_members) lp.push_back(e.coords);
    if (oracle::sorted_unique(lp) != ex) return fail("sigma_check extreme members differ from enumeration");
    for (const auto& e : ex)
        if (!r.member_test(Functional{e})) return fail("member test rejects extreme point " + show(e));
    if (!r.witness || !r.member_test(*r.witness)) return fail("missing or invalid witness");
    if (!oracle::in_hull(r.witness->coords, ex)) return fail("witness outside the hull of the extreme points");
    return ok();
}

Outcome check_t41(const Instance& inst) {
    const LinearMap& t = inst.map(0);
    if (auto s = require_isometry(t)) return *s;
    const Subspace& a1 = t.domain();
    Rng rng = predicate_rng(inst);
    const auto fam = centered_family(rng, a1, 4);
    const PointSet common = common_suppmax(t, fam);
    const auto ball = oracle::ball_vertices(a1);
    for (const auto& e : oracle::sigma_extremes(a1, fam)) {
        bool found = false;
        for (std::size_t z : common)
            found = found || has(signed_set(t.pulled_generators(), {z}), e);
        if (!found) return fail("extreme point " + show(e) + " not pulled back from the common suppmax");
    }
    bool vertex = false;
    for (std::size_t z : common) vertex = vertex || has(ball, t.pulled_generator(z).coords);
    if (!vertex) return fail("no point of the common suppmax gives a vertex");
    std::vector<Vec> images;
    for (const auto& f : fam) images.push_back(t.image(f));
    const Family tg = as_family(t.codomain(), images);
    if (!placed_over(t.codomain(), tg, all_points(t.codomain().num_points())) ||
        !placed_over(t.codomain(), tg, suppmax_of_coords(t.codomain(), images[0])))
        return fail("image family not placed over its suppmax");
    return ok();
}

/// Family in the domain with a single common suppmax point of its image.
std::optional<std::pair<std::size_t, std::vector<Vec>>> pinning_family(Rng& rng, const LinearMap& t) {
    const Subspace& a1 = t.domain();
    std::vector<Vec> fam{random_coords(rng, a1.dim(), a1.field())};
    PointSet common = common_suppmax(t, fam);
    const std::size_t z0 = rng.pick(common);
    for (int attempt = 0; attempt < 300 && common.size() > 1; ++attempt) {
        Vec f = random_coords(rng, a1.dim(), a1.field());
        const PointSet s = suppmax_of_coords(t.codomain(), t.image(f));
        if (!contains(s, z0)) continue;
        const PointSet next = set_intersection(common, s);
        if (next.size() < common.size()) {
            common = next;
            fam.push_back(std::move(f));
        }
    }
    if (common.size() == 1) return std::make_pair(z0, fam);
    const AlphaBeta ab = property_alpha_beta(t);
    for (const auto& [z, values] : ab.beta_witnesses) {
        if (ab.beta_at[z] != Tristate::True) continue;
        std::vector<Vec> coords;
        for (const auto& v : values) coords.push_back(a1.require_coords(FunctionVec{v}));
        if (coords.empty()) coords.push_back(random_coords(rng, a1.dim(), a1.field()));
        return std::make_pair(z, coords);
    }
    return std::nullopt;
}

Outcome check_c41(const Instance& inst) {
    const LinearMap& t = inst.map(0);
    if (auto s = require_isometry(t)) return *s;
    const Subspace& a1 = t.domain();
    Rng rng = predicate_rng(inst);
    const auto pin = pinning_family(rng, t);
    if (!pin) return skip("no family pins a single point");
    const auto& [z0, fam] = *pin;
    if (common_suppmax(t, fam) != PointSet{z0}) return fail("constructed family does not pin " + t.codomain().ambient().name(z0));
    const auto expected = signed_set(t.pulled_generators(), {z0});
    if (linalg::is_zero(t.pulled_generator(z0).coords)) return fail("pinned point has a zero pulled generator");
    std::vector<Vec> all;
    for (std::size_t mask = 0; mask < (std::size_t{1} << fam.size()); ++mask) {
        std::vector<int> signs(fam.size());
        for (std::size_t i = 0; i < fam.size(); ++i) signs[i] = ((mask >> i) & 1U) ? -1 : 1;
        const auto face = oracle::face_points(a1, fam, signs);
        if (face.size() > 1) return fail("a face holds more than one point");
        for (const auto& q : face) all.push_back(q);
    }
    if (oracle::sorted_unique(all) != expected) return fail("faces differ from the pulled generator pair");
    const SigmaReport r = sigma_check(a1, as_family(a1, fam));
    std::vector<Vec> lp;
    for (const auto& e : r.extreme_members) lp.push_back(e.coords);
    if (oracle::sorted_unique(lp) != expected) return fail("sigma_check extreme members differ from the pulled pair");
    for (const auto& e : expected)
        if (!r.member_test(Functional{e})) return fail("member test rejects " + show(e));
    if (r.member_test(Functional{Vec(a1.dim())})) return fail("member test accepts zero");
    return ok();
}

/// Random points of the domain's unit ball: signed generators and midpoints.
std::vector<Vec> random_ball_points(Rng& rng, const Subspace& a) {
    std::vector<Vec> out;
    const long k = rng.range(1, 3);
    auto signed_gen = [&] {
        const auto z = static_cast<std::size_t>(rng.range(0, static_cast<long>(a.num_points()) - 1));
        return linalg::scale(a.generator(z).coords, Scalar(rng.coin() ? 1 : -1));
    };
    for (long i = 0; i < k; ++i) {
        Vec v = signed_gen();
        if (rng.coin()) v = linalg::scale(linalg::add(v, signed_gen()), Scalar::fraction(1, 2));
        out.push_back(v);
    }
    return out;
}

Outcome check_p41(const Instance& inst) {
    const LinearMap& t = inst.map(0);
    if (auto s = require_isometry(t)) return *s;
    Rng rng = predicate_rng(inst);
    const Subspace& a1 = t.domain();
    const std::size_t n2 = t.codomain().num_points();
    const Vec f = random_coords(rng, a1.dim(), a1.field());
    const auto ls = random_ball_points(rng, a1);
    std::vector<Rational> lv;
    for (const auto& l : ls) lv.push_back(abs_value(Functional{l}, f));
    const Rational l_min = *std::min_element(lv.begin(), lv.end());
    const Rational l_max = *std::max_element(lv.begin(), lv.end());
    std::vector<Rational> pv(n2);
    for (std::size_t z = 0; z < n2; ++z) pv[z] = abs_value(t.pulled_generator(z), f);

    PointSet q;
    switch (rng.range(0, 2)) {
        case 0:
            for (std::size_t z = 0; z < n2; ++z)
                if (pv[z] >= l_min) q.push_back(z);
            break;
        case 1:
            for (std::size_t z = 0; z < n2; ++z)
                if (pv[z] <= l_max) q.push_back(z);
            break;
        default: q = random_subset(rng, n2, false);
    }
    const PointSet out = set_difference(all_points(n2), q);
    std::optional<Rational> sup_out, inf_out;
    for (std::size_t z : out) {
        if (!sup_out || pv[z] > *sup_out) sup_out = pv[z];
        if (!inf_out || pv[z] < *inf_out) inf_out = pv[z];
    }
    const bool first = sup_out.value_or(Rational(0)) < l_min;
    const bool second = !inf_out || *inf_out > l_max;
    if (!first && !second) return skip("neither separation inequality holds");
    const auto outside = signed_set(t.pulled_generators(), out);
    for (const auto& l : ls)
        if (has(outside, l)) return fail("functional " + show(l) + " is a pulled generator outside Q");
    return ok();
}

Outcome check_c42(const Instance& inst) {
    const LinearMap& t = inst.map(0);
    if (auto s = require_isometry(t)) return *s;
    Rng rng = predicate_rng(inst);
    const Subspace& a1 = t.domain();
    const std::size_t n2 = t.codomain().num_points();
    const auto ball = oracle::ball_vertices(a1);
    PointSet cands;
    for (std::size_t z = 0; z < a1.num_points(); ++z)
        if (has(ball, a1.generator(z).coords)) cands.push_back(z);
    if (cands.empty()) return fail("dual ball without vertices");
    const std::size_t z0 = rng.pick(cands);
    const Functional& g0 = a1.generator(z0);
    Vec f;
    for (int i = 0; i < 50 && (f.empty() || evaluate(g0, f).is_zero()); ++i) f = random_coords(rng, a1.dim(), a1.field());
    if (evaluate(g0, f).is_zero()) return skip("no f with nonzero value at the chosen point");
    const Rational v0 = abs_value(g0, f);
    PointSet k;
    if (rng.coin()) {
        for (std::size_t z = 0; z < n2; ++z)
            if (abs_value(t.pulled_generator(z), f) >= v0) k.push_back(z);
    } else {
        k = random_subset(rng, n2, false);
    }
    const PointSet out = set_difference(all_points(n2), k);
    for (std::size_t z : out)
        if (abs_value(t.pulled_generator(z), f) >= v0) return skip("separation inequality fails");
    const Vec neg = linalg::scale(g0.coords, Scalar(-1));
    const auto outside = signed_set(t.pulled_generators(), out);
    if (has(outside, g0.coords) || has(outside, neg)) return fail("extreme generator is pulled back from outside K");
    if (!has(signed_set(t.pulled_generators(), k), g0.coords)) return fail("extreme generator not pulled back from K");
    return ok();
}

// ---------------------------------------------------------------- space core

Outcome check_p51(const Instance& inst) {
    const Subspace& a = *inst.subspace(0);
    const std::size_t n = a.num_points();
    std::vector<std::vector<bool>> eq(n, std::vector<bool>(n));
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            const SimEquivalence s = sim_equiv(a, x, y);
            eq[x][y] = s.equivalent;
            if (s.equivalent != oracle::modulus_equivalent(a, x, y))
                return fail("sim_equiv disagrees with modulus probes at " + a.ambient().name(x) + "," + a.ambient().name(y));
            if (s.equivalent != (a.class_rep(x) == a.class_rep(y))) return fail("class table disagrees with sim_equiv");
            if (s.equivalent) {
                if (!s.lambda.is_unimodular() || !s.mu.is_unimodular()) return fail("witness not unimodular");
                if (delta(a, s.lambda, x) != delta(a, s.mu, y)) return fail("witness does not identify the functionals");
            }
        }
    }
    for (std::size_t x = 0; x < n; ++x) {
        if (!eq[x][x]) return fail("not reflexive");
        for (std::size_t y = 0; y < n; ++y) {
            if (eq[x][y] != eq[y][x]) return fail("not symmetric");
            for (std::size_t z = 0; z < n; ++z)
                if (eq[x][y] && eq[y][z] && !eq[x][z]) return fail("not transitive");
        }
    }
    return ok();
}

Outcome check_p52(const Instance& inst) {
    const Subspace& a = *inst.subspace(0);
    Rng rng = predicate_rng(inst);
    const PointSet m = random_subset(rng, a.num_points());
    PointSet l;
    while (l.empty())
        for (std::size_t z : m)
            if (rng.coin()) l.push_back(z);
    for (std::size_t x : l)
        if (linalg::is_zero(a.generator(x).coords)) return skip("zero generator in L");
    bool lhs = true;
    for (std::size_t x : l)
        for (std::size_t y : m)
            if (x != y && sim_equiv(a, x, y).equivalent) lhs = false;
    const auto on_l = signed_set(a.generators(), l);
    const bool injective = on_l.size() == 2 * l.size();
    bool disjoint = true;
    for (const auto& v : signed_set(a.generators(), set_difference(m, l))) disjoint = disjoint && !has(on_l, v);
    if (lhs != (injective && disjoint))
        return fail("distinguishing " + show(a, l) + " within " + show(a, m) + " is " + std::to_string(lhs) +
                    " but injective and disjoint is " + std::to_string(injective && disjoint));
    return ok();
}

// ---------------------------------------------------------------- choquet

Outcome check_p61(const Instance& inst) {
    const LinearMap& t = inst.map(0);
    if (auto s = require_isometry(t)) return *s;
    Rng rng = predicate_rng(inst);
    const Subspace& a2 = t.codomain();
    const PointSet mt = m_set(t);
    const auto ext = oracle::ball_vertices(t.domain());
    std::vector<PointSet> boundaries{all_points(a2.num_points()), m_set(identity_on(a2))};
    const PointSet r = random_subset(rng, a2.num_points());
    if (is_boundary(a2, r).boundary) boundaries.push_back(r);
    for (const auto& k : boundaries) {
        const auto pulled = signed_set(t.pulled_generators(), k);
        for (const auto& v : ext)
            if (!has(pulled, v)) return fail("vertex " + show(v) + " not pulled back from boundary " + show(a2, k));
        const PointSet meet = set_intersection(mt, k);
        if (meet.empty()) return fail("M_T misses boundary " + show(a2, k));
        if (!ch_contains(t, meet)) return fail("M_T meet " + show(a2, k) + " is not a Choquet set");
    }
    const LinearMap tb = onto_range(t);
    const PointSet y = m_set(identity_on(a2));
    const auto pulled = signed_set(tb.pulled_generators(), y);
    for (const auto& v : ext)
        if (!has(pulled, v)) return fail("vertex " + show(v) + " not pulled back through the range");
    const PointSet meet = set_intersection(m_set(tb), y);
    if (meet.empty() || !ch_contains(tb, meet)) return fail("range map: M_T meet Y is not a Choquet set");
    return ok();
}

Outcome check_p62(const Instance& inst) {
    const LinearMap& t = inst.map(0);
    if (auto s = require_isometry(t)) return *s;
    Rng rng = predicate_rng(inst);
    const Subspace& a1 = t.domain();
    const std::size_t n1 = a1.num_points();
    const std::size_t n2 = t.codomain().num_points();
    const PointSet v = random_subset(rng, n1);
    const PointSet not_v = set_difference(all_points(n1), v);
    const Vec f = random_coords(rng, a1.dim(), a1.field());
    std::optional<Rational> inf_nv, sup_nv;
    for (std::size_t x : not_v) {
        const Rational g = abs_value(a1.generator(x), f);
        if (!inf_nv || g < *inf_nv) inf_nv = g;
        if (!sup_nv || g > *sup_nv) sup_nv = g;
    }
    PointSet w;
    if (rng.coin()) {
        for (std::size_t z = 0; z < n2; ++z)
            if (!inf_nv || abs_value(t.pulled_generator(z), f) < *inf_nv) w.push_back(z);
    } else {
        w = random_subset(rng, n2, false);
    }
    std::optional<Rational> sup_w, inf_w;
    for (std::size_t z : w) {
        const Rational p = abs_value(t.pulled_generator(z), f);
        if (!sup_w || p > *sup_w) sup_w = p;
        if (!inf_w || p < *inf_w) inf_w = p;
    }
    const bool first = !inf_nv || sup_w.value_or(Rational(0)) < *inf_nv;
    const bool second = !inf_w || inf_w > sup_nv.value_or(Rational(0));
    if (!first && !second) return skip("neither separation inequality holds");
    const auto from_w = signed_set(t.pulled_generators(), w);
    for (const auto& g : signed_set(a1.generators(), not_v))
        if (has(from_w, g)) return fail("generator outside V is pulled back from W");
    const auto allowed = signed_set(a1.generators(), set_intersection(m_set(identity_on(a1)), v));
    for (const auto& p : signed_set(t.pulled_generators(), set_intersection(m_set(t), w)))
        if (!has(allowed, p)) return fail("pulled extreme generator " + show(p) + " not from M(A1) within V");
    return ok();
}

Outcome check_p63(const Instance& inst) {
    const Subspace& a = *inst.subspace(0);
    const FaceChoquet r = prop63_set(a);
    if (!r.matches_m_set) return fail("face construction differs from M(A): " + show(a, r.points));
    std::vector<Vec> gens;
    for (const auto& g : a.generators()) gens.push_back(g.coords);
    const auto face_ext = oracle::vertices(gens);
    const auto ball = oracle::ball_vertices(a);
    PointSet from_face, from_ball;
    for (std::size_t z = 0; z < a.num_points(); ++z) {
        if (has(face_ext, a.generator(z).coords)) from_face.push_back(z);
        if (has(ball, a.generator(z).coords)) from_ball.push_back(z);
    }
    if (from_face != r.points) return fail("enumerated face vertices give " + show(a, from_face));
    if (from_ball != r.points) return fail("enumerated ball vertices give " + show(a, from_ball));
    return ok();
}

Outcome check_c61(const Instance& inst) {
    const Subspace& a = *inst.subspace(0);
    Rng rng = predicate_rng(inst);
    const LinearMap id = identity_on(a);
    const PointSet m = m_set(id);
    const PointSet classes = extreme_classes(a);
    PointSet y;
    for (std::size_t r : classes) {
        const PointSet members = set_intersection(a.class_members(r), m);
        PointSet pick;
        while (pick.empty())
            for (std::size_t z : members)
                if (rng.coin()) pick.push_back(z);
        y.insert(y.end(), pick.begin(), pick.end());
    }
    y = make_point_set(y);
    if (!ch_contains(id, y)) return fail("class transversal " + show(a, y) + " rejected");
    if (!is_boundary(a, y).boundary) return fail("Choquet set " + show(a, y) + " is not a boundary");
    for (int i = 0; i < 5; ++i) {
        const Vec f = random_coords(rng, a.dim(), a.field());
        if (set_intersection(y, suppmax_of_coords(a, f)).empty()) return fail("Choquet set misses suppmax of " + show(f));
        if (!boundary_meets_suppmax(a, FunctionVec{a.values(f)}, y)) return fail("boundary_meets_suppmax false");
    }
    if (classes.size() > 1) {
        const PointSet dropped = set_difference(y, a.class_members(classes[0]));
        if (ch_contains(id, dropped)) return fail("set missing a class accepted");
    }
    const PointSet rest = set_difference(all_points(a.num_points()), m);
    if (!rest.empty()) {
        PointSet bad = y;
        bad.push_back(rest[0]);
        if (ch_contains(id, make_point_set(bad))) return fail("set with a non-extreme point accepted");
    }
    return ok();
}

Outcome check_r61(const Instance& inst) {
    const LinearMap& t = inst.map(0);
    if (auto s = require_isometry(t)) return *s;
    const LinearMap tb = onto_range(t);
    const PointSet range_m = m_set(identity_on(tb.codomain()));
    const PointSet mt = m_set(t);
    if (range_m != mt) return fail("M of the range " + show(t.codomain(), range_m) + " differs from M_T " + show(t.codomain(), mt));
    return ok();
}

Outcome check_r63(const Instance& inst) {
    const Subspace& a = *inst.subspace(0);
    const PointSet m = m_set(identity_on(a));
    if (!is_boundary(a, m).boundary) return fail("M(A) = " + show(a, m) + " is not a boundary");
    return ok();
}

// ---------------------------------------------------------------- isometry

Outcome check_l71(const Instance& inst) {
    const LinearMap& t = inst.map(0);
    if (auto s = require_isometry(t)) return *s;
    Rng rng = predicate_rng(inst);
    const Subspace& a1 = t.domain();
    for (int trial = 0; trial < 4; ++trial) {
        Vec raw = random_ball_points(rng, a1)[0];
        if (rng.coin()) raw = linalg::add(raw, random_ball_points(rng, a1)[0]);
        const Rational nr = dual_norm(a1, Functional{raw}).value;
        if (sgn(nr) == 0) continue;
        const Functional ell{linalg::scale(raw, Scalar(Rational(1) / nr))};
        Vec f;
        for (int i = 0; i < 50 && (f.empty() || evaluate(ell, f).is_zero()); ++i) f = random_coords(rng, a1.dim(), a1.field());
        if (evaluate(ell, f).is_zero()) continue;
        const Rational half = abs_value(ell, f) / 2;
        PointSet k;
        for (std::size_t z = 0; z < t.codomain().num_points(); ++z)
            if (abs_value(t.pulled_generator(z), f) >= half) k.push_back(z);
        if (k.empty()) return fail("no codomain point reaches half the value");
        if (has(signed_set(t.pulled_generators(), set_difference(all_points(t.codomain().num_points()), k)), ell.coords))
            return fail("unit functional " + show(ell.coords) + " pulled back from outside K");
    }
    return ok();
}

Outcome check_l72(const Instance& inst) {
    const LinearMap& t = inst.map(0);
    if (auto s = require_isometry(t)) return *s;
    const std::size_t n2 = t.codomain().num_points();
    if (t.domain().dim() != t.codomain().dim()) return skip("map is not onto");
    const auto inv = linalg::inverse(t.matrix());
    if (!inv) return skip("map is not onto");
    const AlphaBeta ab = property_alpha_beta(t);
    const Subspace& a1 = t.domain();
    for (std::size_t z0 = 0; z0 < n2; ++z0) {
        Vec e(n2);
        e[z0] = 1;
        const Vec c = linalg::multiply(*inv, t.codomain().require_coords(FunctionVec{e}));
        if (common_suppmax(t, {c}) != PointSet{z0}) return fail("indicator preimage does not pin its point");
        if (ab.beta_at[z0] != Tristate::True) return fail("beta not established at " + t.codomain().ambient().name(z0));
        std::vector<Vec> fam;
        for (const auto& v : ab.beta_witnesses.at(z0)) fam.push_back(a1.require_coords(FunctionVec{v}));
        if (common_suppmax(t, fam) != PointSet{z0}) return fail("beta witness does not pin its point");
        std::vector<Vec> images;
        for (const auto& f : fam) images.push_back(t.image(f));
        if (!images.empty() && !placed_over(t.codomain(), as_family(t.codomain(), images), {z0}))
            return fail("image family not placed over its point");
    }
    return ok();
}

Outcome check_p71(const Instance& inst) {
    const LinearMap& t = inst.map(0);
    if (auto s = require_isometry(t)) return *s;
    const AlphaBeta ab = property_alpha_beta(t);
    if (!ab.alpha) return fail("alpha fails on a finite space");
    const auto ext = oracle::ball_vertices(t.domain());
    const auto from_m = signed_set(t.pulled_generators(), m_set(t));
    for (const auto& v : ext)
        if (!has(from_m, v)) return fail("vertex " + show(v) + " not pulled back from M_T");
    return ok();
}

Outcome check_p72(const Instance& inst) {
    const LinearMap& t = inst.map(0);
    if (auto s = require_isometry(t)) return *s;
    const AlphaBeta ab = property_alpha_beta(t);
    const std::size_t n2 = t.codomain().num_points();
    const Subspace& a1 = t.domain();
    for (std::size_t z = 0; z < n2; ++z) {
        if (ab.beta_at[z] == Tristate::True) {
            std::vector<Vec> fam;
            for (const auto& v : ab.beta_witnesses.at(z)) fam.push_back(a1.require_coords(FunctionVec{v}));
            if (common_suppmax(t, fam) != PointSet{z}) return fail("beta witness does not pin " + t.codomain().ambient().name(z));
        }
        for (std::size_t w = 0; w < n2; ++w) {
            if (w == z) continue;
            if (linalg::unimodular_ratio(t.pulled_generator(z).coords, t.pulled_generator(w).coords) &&
                ab.beta_at[z] == Tristate::True)
                return fail("beta claimed at a point sharing its pulled generator");
        }
    }
    if (ab.beta != Tristate::True) return ok("beta fails somewhere; hypothesis not met");
    const auto pulled = signed_set(t.pulled_generators());
    if (pulled.size() != 2 * n2) return fail("pulled generators not injective up to sign");
    for (const auto& p : t.pulled_generators())
        if (linalg::is_zero(p.coords)) return fail("zero pulled generator");
    return ok();
}

Outcome check_t71(const Instance& inst) {
    const LinearMap& t = inst.map(0);
    if (auto s = require_isometry(t)) return *s;
    const AlphaBeta ab = property_alpha_beta(t);
    if (ab.beta != Tristate::True) return ok("beta fails somewhere; hypothesis not met");
    const std::size_t n2 = t.codomain().num_points();
    if (m_set(t) != all_points(n2)) return fail("M_T is not the whole codomain");
    const auto pulled = signed_set(t.pulled_generators());
    if (pulled.size() != 2 * n2) return fail("pulled generator map not injective");
    if (pulled != oracle::ball_vertices(t.domain())) return fail("pulled generators differ from the ball vertices");
    return ok();
}

CompositionForm perturb(Rng& rng, const CompositionForm& form, std::size_t n1, std::size_t n2) {
    CompositionForm out = form;
    const PointSet on = form.on();
    const PointSet off = set_difference(all_points(n2), on);
    for (;;) {
        switch (rng.range(0, 2)) {
            case 0: {
                const std::size_t x = rng.pick(on);
                out.phi[x] = -out.phi[x];
                return out;
            }
            case 1: {
                if (n1 < 2) break;
                const std::size_t x = rng.pick(on);
                out.tau[x] = (out.tau[x] + static_cast<std::size_t>(rng.range(1, static_cast<long>(n1) - 1))) % n1;
                return out;
            }
            default: {
                if (off.empty()) break;
                const std::size_t x = rng.pick(off);
                out.phi[x] = Scalar(1);
                out.tau[x] = static_cast<std::size_t>(rng.range(0, static_cast<long>(n1) - 1));
                return out;
            }
        }
    }
}

Outcome check_t72(const Instance& inst) {
    const LinearMap& t = inst.map(0);
    if (auto s = require_isometry(t)) return *s;
    const auto expected = read_off_form(t);
    if (!expected) return skip("matrix is not a weighted composition");
    const std::size_t n1 = t.domain().num_points();
    const std::size_t n2 = t.codomain().num_points();
    if (m_set(t) != expected->on()) return fail("M_T differs from the support of the matrix rows");
    const CompositionForm d = decompose(t);
    if (!(d == *expected)) return fail("decompose differs from the matrix form");
    std::set<std::size_t> image;
    for (const auto& [x, y] : d.tau) image.insert(y);
    if (image.size() != n1) return fail("tau is not surjective");
    if (!satisfies_identity(t, d) || !tau_covers_choquet(t, d)) return fail("decomposed form fails its own laws");
    Rng rng = predicate_rng(inst);
    if (d.on().empty()) return fail("empty form");
    const CompositionForm impostor = perturb(rng, d, n1, n2);
    if (check_alternative(t, d, impostor) != Uniqueness::IdentityFails) return fail("perturbed form not rejected");
    const CompositionForm part = restrict_form(d, random_subset(rng, n2));
    if (check_alternative(t, d, part) != Uniqueness::Agrees) return fail("restricted form not accepted");
    return ok();
}

Outcome check_c72(const Instance& inst) {
    const LinearMap& t = inst.map(0);
    if (auto s = require_isometry(t)) return *s;
    // Every subset of a finite discrete space is closed, so the guard below
    // can never fire.
    const PointSet m = m_set(t);
    const bool closed = true;
    if (!closed) return fail("non-closed M_T");
    (void)m;
    return ok();
}

Outcome check_c73(const Instance& inst) {
    const LinearMap& base = inst.map(0);
    Rng rng = predicate_rng(inst);
    const std::size_t n1 = base.domain().num_points();
    const std::size_t n2 = base.codomain().num_points();
    CompositionForm form;
    const PointSet u = random_subset(rng, n2);
    const bool surjective = u.size() >= n1 && rng.coin();
    std::vector<std::size_t> order = u;
    rng.shuffle(order);
    for (std::size_t k = 0; k < order.size(); ++k) {
        form.tau[order[k]] = surjective && k < n1 ? k : static_cast<std::size_t>(rng.range(0, static_cast<long>(n1) - 1));
        form.phi[order[k]] = random_unimodular(rng, base.domain().field());
    }
    const CompositionOperator op = weighted_composition_operator(base.domain_ptr(), base.codomain_ptr(), form);
    const IsometryCheck iso = verify_into_isometry(op.map);
    if (op.isometry != iso.isometry) return fail("constructor and verifier disagree on the isometry");
    if (surjective && !iso.isometry) return fail("surjective tau did not give an isometry");
    std::set<std::size_t> range;
    for (const auto& [x, y] : form.tau) range.insert(y);
    for (int i = 0; i < 4; ++i) {
        const Vec f = random_coords(rng, base.domain().dim(), base.domain().field());
        Modulus best;
        for (std::size_t y : range) best = std::max(best, Modulus::of(evaluate(base.domain().generator(y), f)));
        if (norm_of_coords(op.map.codomain(), op.map.image(f)) != best) return fail("norm of Tf is not the sup over tau(U)");
    }
    return ok();
}

Outcome check_c74(const Instance& inst) {
    const LinearMap& t1 = inst.map(0);
    const LinearMap& t2 = inst.map(1);
    if (auto s = require_isometry(t1)) return *s;
    if (auto s = require_isometry(t2)) return *s;
    const CompositionForm f1 = decompose(t1);
    const CompositionForm f2 = decompose(t2);
    const ComposeResult r = compose_forms(t1, f1, t2, f2);
    if (!r.agrees) return fail("composed form differs from decompose of the product");
    if (!r.nonempty) return fail("composed form is empty");
    if (!r.inside_mset) return fail("composed form leaves M_T");
    std::set<std::size_t> image;
    for (const auto& [x, y] : r.form.tau) image.insert(y);
    if (image.size() != t1.domain().num_points()) return fail("composed tau is not surjective");
    const auto direct = read_off_form(compose(t1, t2));
    if (!direct || !(restrict_form(*direct, r.form.on()) == r.form)) return fail("composed form differs from the product matrix");
    for (const auto& [x, phi] : r.form.phi)
        if (phi != f2.phi.at(x) * f1.phi.at(f2.tau.at(x)) || r.form.tau.at(x) != f1.tau.at(f2.tau.at(x)))
            return fail("composition law fails at a point");
    return ok();
}

Outcome check_c75(const Instance& inst) {
    const LinearMap& t = inst.map(0);
    if (auto s = require_isometry(t)) return *s;
    const CompositionForm f = decompose(t);
    const InvertResult r = invert_form(t, f);
    if (!r.agrees) return fail("inverse form differs from decompose of the inverse matrix");
    const auto direct = read_off_form(r.inverse);
    if (!direct || !(restrict_form(*direct, r.form.on()) == r.form)) return fail("inverse form differs from the inverse matrix");
    for (const auto& [z, y] : r.form.tau) {
        if (f.tau.at(y) != z) return fail("inverse tau is not the inverse of tau");
        if (r.form.phi.at(z) * f.phi.at(y) != Scalar(1)) return fail("inverse phi law fails");
    }
    return ok();
}

std::vector<Suite> build_suites() {
    std::vector<Suite> s;
    s.push_back({"EXT-ORACLE", "extreme test agrees with vertex enumeration", small_subspace, check_ext_oracle, {}});
    s.push_back({"T3.1", "ball vertices are pulled generators", small_isometry, check_t31, {}});
    s.push_back({"L4.1", "face vertices are the face's ball vertices", small_subspace, check_l41, {}});
    s.push_back({"L4.2", "centered families have extreme points", small_subspace, check_l42, {}});
    s.push_back({"T4.1", "image of a centered family is placed over its common suppmax", small_isometry, check_t41, {}});
    s.push_back({"C4.1", "a pinned family's set is the pulled generator pair", pinned_pair, check_c41, {}});
    s.push_back({"P4.1", "separated functionals avoid pulled generators", small_isometry, check_p41, {}});
    s.push_back({"C4.2", "extreme generators are pulled back from K", small_isometry, check_c42, {}});
    s.push_back({"P5.1", "modulus equivalence witnesses", mixed_field_subspace, check_p51, {}});
    s.push_back({"P5.2", "distinguishing sets give injective generator maps", mid_subspace, check_p52, {}});
    s.push_back({"P6.1", "M_T meets every boundary", small_isometry, check_p61, {}});
    s.push_back({"P6.2", "separated pulled generators", small_isometry, check_p62, {}});
    s.push_back({"P6.3", "face construction of M(A)", unital_subspace, check_p63, {}});
    s.push_back({"C6.1", "Choquet sets meet every suppmax", mid_subspace, check_c61, {}});
    s.push_back({"R6.1", "M_T equals M of the range", small_isometry, check_r61, {}});
    s.push_back({"R6.3", "M(A) is a boundary", mid_subspace, check_r63, {}});
    s.push_back({"L7.1", "unit functionals are pulled back from a large set", small_isometry, check_l71, {}});
    s.push_back({"L7.2", "onto isometries pin every codomain point", small_onto_pair, check_l72, {}});
    s.push_back({"P7.1", "ball vertices are pulled back from M_T", small_isometry, check_p71, {}});
    s.push_back({"P7.2", "beta gives an injective generator map", isometry_or_onto, check_p72, {}});
    s.push_back({"T7.1", "alpha and beta give a bijection onto the vertices", isometry_or_onto, check_t71, {}});
    s.push_back({"T7.2", "decompose recovers weighted compositions", full_pair, check_t72, {}});
    s.push_back({"T7.2-complex", "decompose recovers weighted compositions, complex field", full_pair_complex, check_t72, {}});
    s.push_back({"C7.2-vacuity", "non-closed M_T", small_isometry, check_c72, "hypothesis never satisfiable on finite models"});
    s.push_back({"C7.3", "weighted composition constructor", small_isometry, check_c73, {}});
    s.push_back({"C7.4", "composition law", triple, check_c74, {}});
    s.push_back({"C7.5", "inverse law", onto_pair, check_c75, {}});
    return s;
}

}  // namespace

const std::vector<Suite>& suites() {
    static const std::vector<Suite> all = build_suites();
    return all;
}

const Suite& find_suite(std::string_view id) {
    for (const auto& s : suites())
        if (s.id == id) return s;
    throw LabError(ErrorCode::UnknownSuite, "unknown suite '" + std::string(id) + "'");
}

Outcome evaluate_check(const Suite& suite, const Instance& instance) {
    try {
        return suite.check(instance);
    } catch (const LabError& e) {
        return fail(std::string("error ") + to_string(e.code()) + ": " + e.what());
    } catch (const std::exception& e) {
        return fail(std::string("exception: ") + e.what());
    }
}

namespace {

struct TrialResult {
    Outcome outcome;
    std::optional<Counterexample> counterexample;
};

TrialResult run_trial(const Suite& suite, std::uint64_t trial_seed) {
    TrialResult out;
    RawInstance raw;
    try {
        raw = suite.generate(trial_seed);
        Instance inst(raw);
        out.outcome = evaluate_check(suite, inst);
    } catch (const std::exception& e) {
        out.outcome = fail(std::string("generation failed: ") + e.what());
        out.counterexample = Counterexample{raw, out.outcome.note, trial_seed};
        return out;
    }
    if (out.outcome.verdict == Verdict::Fail) {
        std::string note = out.outcome.note;
        RawInstance small = shrink(raw, suite, &note);
        out.counterexample = Counterexample{std::move(small), note, trial_seed};
    }
    return out;
}

}  // namespace

SuiteReport run_suite(std::string_view id, int trials, std::uint64_t seed) {
    const Suite& suite = find_suite(id);
    if (trials < 0) throw LabError(ErrorCode::InvalidArgument, "trial count must be nonnegative");
    SuiteReport report;
    report.suite_id = suite.id;
    report.trials = trials;

    std::vector<TrialResult> results(static_cast<std::size_t>(trials));
    const std::uint64_t base = splitmix64(seed);
    const unsigned workers = std::max(1U, std::min(std::thread::hardware_concurrency(), 16U));
    std::vector<std::future<void>> jobs;
    for (unsigned w = 0; w < workers; ++w) {
        jobs.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t t = w; t < results.size(); t += workers) results[t] = run_trial(suite, splitmix64(base + t));
        }));
    }
    for (auto& j : jobs) j.get();

    std::set<std::string> notes;
    if (!suite.note.empty()) notes.insert(suite.note);
    for (auto& r : results) {
        switch (r.outcome.verdict) {
            case Verdict::Pass: ++report.passed; break;
            case Verdict::Skip: ++report.skipped; break;
            case Verdict::Fail: report.failures.push_back(std::move(*r.counterexample)); break;
        }
        if (r.outcome.verdict != Verdict::Fail && !r.outcome.note.empty()) notes.insert(r.outcome.note);
    }
    report.notes.assign(notes.begin(), notes.end());
    return report;
}

json to_json(const SuiteReport& report) {
    json failures = json::array();
    for (const auto& f : report.failures)
        failures.push_back({{"instance", to_json(f.instance)}, {"note", f.note}, {"trial_seed", f.trial_seed}});
    return {{"suite_id", report.suite_id},
            {"trials", report.trials},
            {"passed", report.passed},
            {"skipped", report.skipped},
            {"status", report.pass() ? "pass" : "fail"},
            {"failures", failures},
            {"notes", report.notes}};
}

}  // namespace finlab
