#pragma once

#include <optional>

#include <json.hpp>

#include "hilbpow/catalog.hpp"

namespace hilbpow {

// One stratum of a constructible description: its class in the chosen
// coefficient ring and the punctual local model along it.
struct Stratum {
    std::string label;
    RingElement cls;
    LocalModel model;
};

struct OrbifoldSpec {
    int dim = 2;
    RingId ring = RingId::Integer;
    int trunc = 0;
    std::vector<Stratum> strata;
    std::optional<RingElement> total_class;
    // local models at the torus-fixed points, for the toric oracle
    std::vector<LocalModel> fixed_points;
};

// All violations, each naming the offending stratum; empty means valid.
std::vector<std::string> validate(const OrbifoldSpec& spec);

// The stratification integral: the product over strata of the punctual
// series raised to the class of the stratum.  Factors are folded in the
// listed order; commutativity makes the result order-independent.
MultiSeries integrate(const OrbifoldSpec& spec);

// Independent Euler-level route for global series on toric targets: the
// plain product of the local monomial-ideal counting series over the
// torus-fixed points.  Explicit models are rejected so the oracle stays
// independent of user-supplied data.
MultiSeries toric_euler_global(const std::vector<LocalModel>& fixed_points, int trunc);

LocalModel model_from_json(const nlohmann::json& j, RingId ring, int dim, int nvars, int trunc);
OrbifoldSpec orbifold_spec_from_json(const nlohmann::json& j);
OrbifoldSpec orbifold_spec_from_json(const nlohmann::json& j, int nvars);

} // namespace hilbpow
