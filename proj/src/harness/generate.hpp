#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "harness/instance.hpp"

namespace finlab {

std::uint64_t splitmix64(std::uint64_t x);

/// mt19937_64 with range reduction done by hand, so draws do not depend on
/// the standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform in [lo, hi].
    long range(long lo, long hi);
    bool coin() { return (next() & 1U) != 0; }
    template <class T>
    const T& pick(const std::vector<T>& v) {
        return v[static_cast<std::size_t>(range(0, static_cast<long>(v.size()) - 1))];
    }
    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[static_cast<std::size_t>(range(0, static_cast<long>(i) - 1))]);
    }

private:
    std::mt19937_64 engine_;
};

enum class Kind { RandomSubspace, FullSpacePair, IsometryPair, OntoPair, ComposableTriple };

Kind kind_from_string(std::string_view name);
const char* to_string(Kind kind);

RawInstance gen_instance(std::uint64_t seed, const Scale& scale, Kind kind, Field field = Field::Real);

// Building blocks shared with the suites.
Scalar random_weight(Rng& rng, int height, Field field);
Scalar random_coefficient(Rng& rng, int height, Field field);
Scalar random_unimodular(Rng& rng, Field field);
/// Point names are taken from the front of `names`.
RawSpace random_space(Rng& rng, const std::string& id, const std::vector<std::string>& names, std::size_t n, int height,
                      Field field, bool unit_weight = false);

extern const std::vector<std::string> kDomainNames;
extern const std::vector<std::string> kCodomainNames;
extern const std::vector<std::string> kThirdNames;
/// d independent basis vectors on the space (redrawn until independent).
std::vector<Vec> random_basis(Rng& rng, const RawSpace& space, std::size_t d, int height);
std::vector<Vec> full_basis(std::size_t n);
/// Weighted composition operator A1 -> A2 with a random tau onto Z1 from a
/// random U of at least |Z1| codomain points. A2 must be a full space.
RawMap random_composition_map(Rng& rng, const std::string& id, const RawSpace& s1, const RawSubspace& a1,
                              const RawSpace& s2, const RawSubspace& a2, bool bijective);

}  // namespace finlab
