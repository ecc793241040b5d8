#include "harness/generate.hpp"

#include "finlab/errors.hpp"

namespace finlab {

const std::vector<std::string> kDomainNames = {"a", "b", "c", "d", "e", "f", "g", "h"};
const std::vector<std::string> kCodomainNames = {"x", "y", "z", "u", "v", "w", "s", "t"};
const std::vector<std::string> kThirdNames = {"p", "q", "r", "k", "l", "m", "n", "o"};

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

long Rng::range(long lo, long hi) {
    if (hi <= lo) return lo;
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
}

Kind kind_from_string(std::string_view name) {
    if (name == "random_subspace") return Kind::RandomSubspace;
    if (name == "full_space_pair") return Kind::FullSpacePair;
    if (name == "isometry_pair") return Kind::IsometryPair;
    if (name == "onto_pair") return Kind::OntoPair;
    if (name == "composable_triple") return Kind::ComposableTriple;
    throw LabError(ErrorCode::InvalidArgument, "unknown instance kind '" + std::string(name) + "'");
}

const char* to_string(Kind kind) {
    switch (kind) {
        case Kind::RandomSubspace: return "random_subspace";
        case Kind::FullSpacePair: return "full_space_pair";
        case Kind::IsometryPair: return "isometry_pair";
        case Kind::OntoPair: return "onto_pair";
        case Kind::ComposableTriple: return "composable_triple";
    }
    return "unknown";
}

Scalar random_unimodular(Rng& rng, Field field) {
    if (field == Field::Real) return rng.coin() ? Scalar(1) : Scalar(-1);
    static const std::vector<Scalar> pool = {
        Scalar(1),
        Scalar(-1),
        Scalar(Rational(0), Rational(1)),
        Scalar(Rational(0), Rational(-1)),
        Scalar(Rational(3, 5), Rational(4, 5)),
        Scalar(Rational(-4, 5), Rational(3, 5)),
        Scalar(Rational(5, 13), Rational(-12, 13)),
        Scalar(Rational(-8, 17), Rational(-15, 17)),
    };
    return rng.pick(pool);
}

Scalar random_weight(Rng& rng, int height, Field field) {
    Scalar w(1);
    if (rng.range(0, 1) == 1) {
        const long num = rng.range(1, height);
        const long den = rng.range(1, 2);
        w = Scalar::fraction(rng.coin() ? num : -num, den);
    }
    if (field == Field::Complex && rng.coin()) w = w * random_unimodular(rng, field);
    return w;
}

Scalar random_coefficient(Rng& rng, int height, Field field) {
    const long den = rng.range(0, 3) == 0 ? 2 : 1;
    Scalar re = Scalar::fraction(rng.range(-height, height), den);
    if (field == Field::Real || rng.range(0, 2) == 0) return re;
    return Scalar(re.re(), Scalar::fraction(rng.range(-height, height), den).re());
}

RawSpace random_space(Rng& rng, const std::string& id, const std::vector<std::string>& names, std::size_t n, int height,
                      Field field, bool unit_weight) {
    RawSpace s;
    s.id = id;
    s.field = field;
    s.points.assign(names.begin(), names.begin() + static_cast<std::ptrdiff_t>(n));
    for (std::size_t z = 0; z < n; ++z) s.weight.push_back(unit_weight ? Scalar(1) : random_weight(rng, height, field));
    return s;
}

std::vector<Vec> random_basis(Rng& rng, const RawSpace& space, std::size_t d, int height) {
    const std::size_t n = space.points.size();
    for (;;) {
        std::vector<Vec> basis(d, Vec(n));
        for (auto& b : basis)
            for (auto& x : b) x = random_coefficient(rng, height, space.field);
        Mat rows(basis.begin(), basis.end());
        if (linalg::rank(rows, n) == d) return basis;
    }
}

std::vector<Vec> full_basis(std::size_t n) {
    return linalg::identity(n);
}

RawMap random_composition_map(Rng& rng, const std::string& id, const RawSpace& s1, const RawSubspace& a1,
                              const RawSpace& s2, const RawSubspace& a2, bool bijective) {
    const std::size_t n1 = s1.points.size();
    const std::size_t n2 = s2.points.size();
    if (n2 < n1 || (bijective && n1 != n2))
        throw LabError(ErrorCode::InvalidArgument, "codomain too small for a surjective tau");

    std::vector<std::size_t> order(n2);
    for (std::size_t i = 0; i < n2; ++i) order[i] = i;
    rng.shuffle(order);
    std::size_t u_size = n2;
    if (!bijective && n2 > n1 && rng.range(0, 2) == 0) u_size = static_cast<std::size_t>(rng.range(static_cast<long>(n1), static_cast<long>(n2)));

    std::vector<std::size_t> targets(n1);
    for (std::size_t i = 0; i < n1; ++i) targets[i] = i;
    rng.shuffle(targets);

    CompositionForm form;
    for (std::size_t k = 0; k < u_size; ++k) {
        const std::size_t x = order[k];
        const std::size_t y = k < n1 ? targets[k] : static_cast<std::size_t>(rng.range(0, static_cast<long>(n1) - 1));
        form.tau[x] = y;
        form.phi[x] = random_unimodular(rng, s1.field);
    }
    auto dom = std::make_shared<const Subspace>(WeightedSpace(s1.points, s1.weight, s1.field), a1.basis);
    auto cod = std::make_shared<const Subspace>(WeightedSpace(s2.points, s2.weight, s2.field), a2.basis);
    CompositionOperator op = weighted_composition_operator(dom, cod, form);
    return RawMap{id, a1.id, a2.id, op.map.matrix()};
}

RawInstance gen_instance(std::uint64_t seed, const Scale& scale, Kind kind, Field field) {
    scale.validate();
    Rng rng(splitmix64(seed));
    RawInstance raw;
    raw.seed = seed;
    raw.scale = scale;
    const long max_n = scale.max_points;
    const int h = scale.coefficient_height;

    auto add_full = [&](const std::string& sid, const std::string& aid, const std::vector<std::string>& names, std::size_t n) {
        raw.spaces.push_back(random_space(rng, sid, names, n, h, field));
        raw.subspaces.push_back({aid, sid, full_basis(n)});
    };

    switch (kind) {
        case Kind::RandomSubspace: {
            const auto n = static_cast<std::size_t>(rng.range(1, max_n));
            const auto d = static_cast<std::size_t>(rng.range(1, std::min<long>(scale.max_dim, static_cast<long>(n))));
            raw.spaces.push_back(random_space(rng, "Z", kDomainNames, n, h, field));
            raw.subspaces.push_back({"A", "Z", random_basis(rng, raw.spaces[0], d, h)});
            break;
        }
        case Kind::FullSpacePair:
        case Kind::IsometryPair:
        case Kind::OntoPair: {
            const auto n1 = static_cast<std::size_t>(rng.range(1, max_n));
            const auto n2 = kind == Kind::OntoPair ? n1 : static_cast<std::size_t>(rng.range(static_cast<long>(n1), max_n));
            if (kind == Kind::IsometryPair) {
                const auto d = static_cast<std::size_t>(rng.range(1, std::min<long>(scale.max_dim, static_cast<long>(n1))));
                raw.spaces.push_back(random_space(rng, "Z1", kDomainNames, n1, h, field));
                raw.subspaces.push_back({"A1", "Z1", random_basis(rng, raw.spaces[0], d, h)});
            } else {
                add_full("Z1", "A1", kDomainNames, n1);
            }
            add_full("Z2", "A2", kCodomainNames, n2);
            raw.maps.push_back(random_composition_map(rng, "T", raw.spaces[0], raw.subspaces[0], raw.spaces[1],
                                                      raw.subspaces[1], kind == Kind::OntoPair));
            break;
        }
        case Kind::ComposableTriple: {
            const auto n1 = static_cast<std::size_t>(rng.range(1, max_n));
            const auto n2 = static_cast<std::size_t>(rng.range(static_cast<long>(n1), max_n));
            const auto n3 = static_cast<std::size_t>(rng.range(static_cast<long>(n2), max_n));
            add_full("Z1", "A1", kDomainNames, n1);
            add_full("Z2", "A2", kCodomainNames, n2);
            add_full("Z3", "A3", kThirdNames, n3);
            raw.maps.push_back(random_composition_map(rng, "T1", raw.spaces[0], raw.subspaces[0], raw.spaces[1], raw.subspaces[1], false));
            raw.maps.push_back(random_composition_map(rng, "T2", raw.spaces[1], raw.subspaces[1], raw.spaces[2], raw.subspaces[2], false));
            break;
        }
    }
    return raw;
}

}  // namespace finlab
