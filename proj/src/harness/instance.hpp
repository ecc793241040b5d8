#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "finlab/choquet.hpp"
#include "finlab/isometry.hpp"

namespace finlab {

using json = nlohmann::json;

struct Scale {
    int max_points = 8;
    int max_dim = 4;
    int coefficient_height = 8;

    /// Throws a scale error outside 1..8 points, 1..4 dimensions, height 1..8.
    void validate() const;
};

struct RawSpace {
    std::string id;
    std::vector<std::string> points;
    std::vector<Scalar> weight;
    Field field = Field::Real;
};

struct RawSubspace {
    std::string id;
    std::string space;
    std::vector<Vec> basis;
};

struct RawMap {
    std::string id;
    std::string domain;
    std::string codomain;
    Mat matrix;
};

/// Plain data form of an instance; what the shrinker edits and JSON stores.
struct RawInstance {
    std::vector<RawSpace> spaces;
    std::vector<RawSubspace> subspaces;
    std::vector<RawMap> maps;
    std::uint64_t seed = 0;
    Scale scale;
};

/// Validated instance with every cross-reference resolved.
class Instance {
public:
    explicit Instance(RawInstance raw);

    const RawInstance& raw() const { return raw_; }
    std::uint64_t seed() const { return raw_.seed; }

    std::size_t num_subspaces() const { return subspaces_.size(); }
    std::size_t num_maps() const { return maps_.size(); }
    const std::shared_ptr<const Subspace>& subspace(std::size_t i) const { return subspaces_.at(i); }
    const std::shared_ptr<const Subspace>& subspace(std::string_view id) const;
    const LinearMap& map(std::size_t i) const { return maps_.at(i); }
    const LinearMap& map(std::string_view id) const;
    const std::string& subspace_id(std::size_t i) const { return raw_.subspaces.at(i).id; }
    const std::string& map_id(std::size_t i) const { return raw_.maps.at(i).id; }
    /// Id of the subspace a map or functional refers to.
    const std::string& subspace_id_of(const Subspace& space) const;

private:
    RawInstance raw_;
    std::vector<std::shared_ptr<const Subspace>> subspaces_;
    std::vector<LinearMap> maps_;
};

Scalar scalar_from_json(const json& j);
json scalar_to_json(const Scalar& s, Field field);
json vec_to_json(std::span<const Scalar> v, Field field);
Vec vec_from_json(const json& j);

RawInstance raw_from_json(const json& j);
json to_json(const RawInstance& raw);
Instance instance_from_json(const json& j);

PointSet points_from_json(const Subspace& space, const json& j);
json points_to_json(const Subspace& space, const PointSet& points);

FunctionVec function_from_json(const Subspace& space, const json& j);

json functional_to_json(const std::string& subspace_id, const Functional& ell, Field field);
Functional functional_from_json(const Subspace& space, const json& j);

json form_to_json(const LinearMap& map, const CompositionForm& form);
CompositionForm form_from_json(const LinearMap& map, const json& j);

json confidence_to_json(const Confidence& c);

}  // namespace finlab
