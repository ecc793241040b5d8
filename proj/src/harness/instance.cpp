#include "harness/instance.hpp"

#include <algorithm>
#include <set>

#include "finlab/errors.hpp"

namespace finlab {

void Scale::validate() const {
    auto check = [](int v, int hi, const char* what) {
        if (v < 1 || v > hi)
            throw LabError(ErrorCode::ScaleOutOfBounds,
                           std::string(what) + " = " + std::to_string(v) + " outside 1.." + std::to_string(hi));
    };
    check(max_points, 8, "max_points");
    check(max_dim, 4, "max_dim");
    check(coefficient_height, 8, "coefficient_height");
}

Instance::Instance(RawInstance raw) : raw_(std::move(raw)) {
    std::set<std::string> ids;
    auto fresh = [&](const std::string& id, const char* kind) {
        if (id.empty() || !ids.insert(id).second)
            throw LabError(ErrorCode::InvalidArgument, std::string(kind) + " id '" + id + "' is empty or repeated");
    };
    std::vector<WeightedSpace> spaces;
    for (const auto& s : raw_.spaces) {
        fresh(s.id, "space");
        spaces.emplace_back(s.points, s.weight, s.field);
    }
    auto find_space = [&](const std::string& id) -> const WeightedSpace& {
        for (std::size_t i = 0; i < raw_.spaces.size(); ++i)
            if (raw_.spaces[i].id == id) return spaces[i];
        throw LabError(ErrorCode::InvalidArgument, "unknown space '" + id + "'");
    };
    for (const auto& s : raw_.subspaces) {
        fresh(s.id, "subspace");
        subspaces_.push_back(std::make_shared<const Subspace>(find_space(s.space), s.basis));
    }
    for (const auto& m : raw_.maps) {
        fresh(m.id, "map");
        maps_.emplace_back(subspace(m.domain), subspace(m.codomain), m.matrix);
    }
}

const std::shared_ptr<const Subspace>& Instance::subspace(std::string_view id) const {
    for (std::size_t i = 0; i < subspaces_.size(); ++i)
        if (raw_.subspaces[i].id == id) return subspaces_[i];
    throw LabError(ErrorCode::InvalidArgument, "unknown subspace '" + std::string(id) + "'");
}

const LinearMap& Instance::map(std::string_view id) const {
    for (std::size_t i = 0; i < maps_.size(); ++i)
        if (raw_.maps[i].id == id) return maps_[i];
    throw LabError(ErrorCode::InvalidArgument, "unknown map '" + std::string(id) + "'");
}

const std::string& Instance::subspace_id_of(const Subspace& space) const {
    for (std::size_t i = 0; i < subspaces_.size(); ++i)
        if (subspaces_[i].get() == &space || same_subspace(*subspaces_[i], space)) return raw_.subspaces[i].id;
    throw LabError(ErrorCode::InvalidArgument, "subspace does not belong to this instance");
}

namespace {

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) {
        Rational q;
        if (q.set_str(j.get<std::string>(), 10) != 0) throw LabError(ErrorCode::Parse, "bad rational '" + j.get<std::string>() + "'");
        if (sgn(q.get_den()) == 0) throw LabError(ErrorCode::Parse, "zero denominator");
        q.canonicalize();
        return q;
    }
    if (j.is_array() && j.size() == 2 && !j[0].is_array()) {
        Rational num = rational_from_json(j[0]);
        Rational den = rational_from_json(j[1]);
        if (sgn(den) == 0) throw LabError(ErrorCode::Parse, "zero denominator");
        return num / den;
    }
    throw LabError(ErrorCode::Parse, "expected a rational, got " + j.dump());
}

json integer_to_json(const mpz_class& z) {
    if (z.fits_slong_p()) return json(z.get_si());
    return json(z.get_str());
}

json rational_to_json(const Rational& q) {
    return json::array({integer_to_json(q.get_num()), integer_to_json(q.get_den())});
}

Field field_from_json(const json& j) {
    const std::string f = j.get<std::string>();
    if (f == "real") return Field::Real;
    if (f == "complex") return Field::Complex;
    throw LabError(ErrorCode::Parse, "field must be real or complex");
}

const json& require(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw LabError(ErrorCode::Parse, std::string("missing key '") + key + "'");
    return j.at(key);
}

}  // namespace

Scalar scalar_from_json(const json& j) {
    if (j.is_array() && j.size() == 2 && j[0].is_array()) return Scalar(rational_from_json(j[0]), rational_from_json(j[1]));
    return Scalar(rational_from_json(j));
}

json scalar_to_json(const Scalar& s, Field field) {
    if (field == Field::Real) return rational_to_json(s.re());
    return json::array({rational_to_json(s.re()), rational_to_json(s.im())});
}

json vec_to_json(std::span<const Scalar> v, Field field) {
    json out = json::array();
    for (const auto& x : v) out.push_back(scalar_to_json(x, field));
    return out;
}

Vec vec_from_json(const json& j) {
    if (!j.is_array()) throw LabError(ErrorCode::Parse, "expected an array of scalars");
    Vec out;
    for (const auto& x : j) out.push_back(scalar_from_json(x));
    return out;
}

RawInstance raw_from_json(const json& j) {
    try {
        RawInstance raw;
        for (const auto& s : require(j, "spaces")) {
            RawSpace space;
            space.id = require(s, "id").get<std::string>();
            space.points = require(s, "points").get<std::vector<std::string>>();
            space.field = s.contains("field") ? field_from_json(s.at("field")) : Field::Real;
            space.weight.assign(space.points.size(), Scalar(1));
            if (s.contains("weight")) {
                const json& w = s.at("weight");
                if (w.is_object()) {
                    for (auto it = w.begin(); it != w.end(); ++it) {
                        auto pos = std::find(space.points.begin(), space.points.end(), it.key());
                        if (pos == space.points.end()) throw LabError(ErrorCode::UnknownPoint, "weight at unknown point '" + it.key() + "'");
                        space.weight[static_cast<std::size_t>(pos - space.points.begin())] = scalar_from_json(it.value());
                    }
                } else {
                    space.weight = vec_from_json(w);
                }
            }
            raw.spaces.push_back(std::move(space));
        }
        if (j.contains("subspaces")) {
            for (const auto& s : j.at("subspaces")) {
                RawSubspace sub;
                sub.id = require(s, "id").get<std::string>();
                sub.space = require(s, "space").get<std::string>();
                for (const auto& b : require(s, "basis")) sub.basis.push_back(vec_from_json(b));
                raw.subspaces.push_back(std::move(sub));
            }
        }
        if (j.contains("maps")) {
            for (const auto& m : j.at("maps")) {
                RawMap map;
                map.id = require(m, "id").get<std::string>();
                map.domain = require(m, "domain").get<std::string>();
                map.codomain = require(m, "codomain").get<std::string>();
                for (const auto& row : require(m, "matrix")) map.matrix.push_back(vec_from_json(row));
                raw.maps.push_back(std::move(map));
            }
        }
        if (j.contains("seed")) raw.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("scale")) {
            const json& s = j.at("scale");
            raw.scale.max_points = s.value("max_points", raw.scale.max_points);
            raw.scale.max_dim = s.value("max_dim", raw.scale.max_dim);
            raw.scale.coefficient_height = s.value("coefficient_height", raw.scale.coefficient_height);
        }
        return raw;
    } catch (const json::exception& e) {
        throw LabError(ErrorCode::Parse, e.what());
    }
}

json to_json(const RawInstance& raw) {
    json out;
    out["spaces"] = json::array();
    auto field_of = [&](const std::string& space_id) {
        for (const auto& s : raw.spaces)
            if (s.id == space_id) return s.field;
        return Field::Real;
    };
    for (const auto& s : raw.spaces) {
        json w = json::object();
        for (std::size_t z = 0; z < s.points.size(); ++z) w[s.points[z]] = scalar_to_json(s.weight[z], s.field);
        out["spaces"].push_back({{"id", s.id}, {"points", s.points}, {"weight", w}, {"field", to_string(s.field)}});
    }
    out["subspaces"] = json::array();
    for (const auto& s : raw.subspaces) {
        json basis = json::array();
        for (const auto& b : s.basis) basis.push_back(vec_to_json(b, field_of(s.space)));
        out["subspaces"].push_back({{"id", s.id}, {"space", s.space}, {"basis", basis}});
    }
    out["maps"] = json::array();
    for (const auto& m : raw.maps) {
        Field f = Field::Real;
        for (const auto& s : raw.subspaces)
            if (s.id == m.domain) f = field_of(s.space);
        json matrix = json::array();
        for (const auto& row : m.matrix) matrix.push_back(vec_to_json(row, f));
        out["maps"].push_back({{"id", m.id}, {"domain", m.domain}, {"codomain", m.codomain}, {"matrix", matrix}});
    }
    out["seed"] = raw.seed;
    out["scale"] = {{"max_points", raw.scale.max_points},
                    {"max_dim", raw.scale.max_dim},
                    {"coefficient_height", raw.scale.coefficient_height}};
    return out;
}

Instance instance_from_json(const json& j) {
    return Instance(raw_from_json(j));
}

PointSet points_from_json(const Subspace& space, const json& j) {
    if (!j.is_array()) throw LabError(ErrorCode::Parse, "expected an array of point names");
    std::vector<std::string> names;
    for (const auto& p : j) names.push_back(p.get<std::string>());
    return space.ambient().indices_of(names);
}

json points_to_json(const Subspace& space, const PointSet& points) {
    json out = json::array();
    for (std::size_t z : points) out.push_back(space.ambient().name(z));
    return out;
}

FunctionVec function_from_json(const Subspace& space, const json& j) {
    if (j.is_object() && j.contains("coords")) return FunctionVec{space.values(vec_from_json(j.at("coords")))};
    if (j.is_object() && j.contains("values")) return function_from_json(space, j.at("values"));
    if (j.is_object()) {
        Vec values(space.num_points());
        for (auto it = j.begin(); it != j.end(); ++it) values[space.ambient().index_of(it.key())] = scalar_from_json(it.value());
        return FunctionVec{values};
    }
    Vec values = vec_from_json(j);
    if (values.size() != space.num_points())
        throw LabError(ErrorCode::DimensionMismatch, "function needs one value per point");
    return FunctionVec{values};
}

json functional_to_json(const std::string& subspace_id, const Functional& ell, Field field) {
    return {{"subspace", subspace_id}, {"coords", vec_to_json(ell.coords, field)}};
}

Functional functional_from_json(const Subspace& space, const json& j) {
    const json& c = j.is_object() ? require(j, "coords") : j;
    Functional ell{vec_from_json(c)};
    if (ell.coords.size() != space.dim()) throw LabError(ErrorCode::DimensionMismatch, "functional needs one coordinate per basis vector");
    return ell;
}

json form_to_json(const LinearMap& map, const CompositionForm& form) {
    const auto& z1 = map.domain().ambient();
    const auto& z2 = map.codomain().ambient();
    json on = json::array(), phi = json::object(), tau = json::object();
    for (const auto& [x, s] : form.phi) {
        on.push_back(z2.name(x));
        phi[z2.name(x)] = scalar_to_json(s, map.domain().field());
        tau[z2.name(x)] = z1.name(form.tau.at(x));
    }
    json out = {{"on", on}, {"phi", phi}, {"tau", tau}};
    if (!form.ambiguous.empty()) {
        json amb = json::object();
        for (const auto& [z, cls] : form.ambiguous) {
            json names = json::array();
            for (std::size_t y : cls) names.push_back(z1.name(y));
            amb[z1.name(z)] = names;
        }
        out["ambiguous"] = amb;
    }
    return out;
}

CompositionForm form_from_json(const LinearMap& map, const json& j) {
    const auto& z1 = map.domain().ambient();
    const auto& z2 = map.codomain().ambient();
    CompositionForm form;
    try {
        const json& phi = require(j, "phi");
        const json& tau = require(j, "tau");
        std::vector<std::string> on;
        if (j.contains("on")) on = j.at("on").get<std::vector<std::string>>();
        else
            for (auto it = phi.begin(); it != phi.end(); ++it) on.push_back(it.key());
        for (const auto& name : on) {
            const std::size_t x = z2.index_of(name);
            if (!phi.contains(name) || !tau.contains(name))
                throw LabError(ErrorCode::Parse, "phi and tau must both be given at '" + name + "'");
            form.phi[x] = scalar_from_json(phi.at(name));
            form.tau[x] = z1.index_of(tau.at(name).get<std::string>());
        }
    } catch (const json::exception& e) {
        throw LabError(ErrorCode::Parse, e.what());
    }
    return form;
}

json confidence_to_json(const Confidence& c) {
    return c.to_string();
}

}  // namespace finlab
