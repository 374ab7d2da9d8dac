#pragma once

#include <string>

#include <json.hpp>

#include "willmin/energy.hpp"
#include "willmin/forest.hpp"
#include "willmin/optimize.hpp"

namespace willmin {

struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Forest JSON:
// {"base": id,
//  "components": [{"id", "genus", "ghost", "branch_multiplicities"}, ...],
//  "singular_points": [{"id", "incidences": [[component_id, local_point_id], ...]}, ...]}
// Ids are stable and semantics are order independent. Parsing validates the
// structure; SchemaError messages carry the path of the offending field.
nlohmann::json forest_to_json(const BubbleForest& forest);
BubbleForest forest_from_json(const nlohmann::json& j);

// Energy config JSON:
// {"kind": "willmore"|"helfrich"|"hawking_deficit",
//  "c": {"const": x} | {"expr": "linear-in-z"|"radial", "scale": s, "offset": o},
//  "b": number,
//  "P": null | {"const": x}}
nlohmann::json energy_config_to_json(const EnergyConfig& config);
EnergyConfig energy_config_from_json(const nlohmann::json& j);

// Doubles in emitted JSON are rounded to 12 significant digits so repeated
// runs produce byte-identical files.
double round12(double x);
nlohmann::json json_number(double x);

}  // namespace willmin
