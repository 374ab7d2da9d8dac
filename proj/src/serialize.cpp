#include "willmin/serialize.hpp"

#include <cstdio>
#include <cstdlib>

namespace willmin {

using nlohmann::json;

namespace {

void require(bool ok, const std::string& path, const std::string& what) {
  if (!ok) throw SchemaError(path + ": " + what);
}

int require_int(const json& j, const std::string& path) {
  require(j.is_number_integer(), path, "expected an integer");
  return j.get<int>();
}

}  // namespace

json forest_to_json(const BubbleForest& forest) {
  json j;
  j["base"] = forest.base;
  j["components"] = json::array();
  for (const Component& c : forest.components) {
    j["components"].push_back({{"id", c.id},
                               {"genus", c.genus},
                               {"ghost", c.ghost},
                               {"branch_multiplicities", c.branch_multiplicities}});
  }
  j["singular_points"] = json::array();
  for (const SingularPoint& sp : forest.singular_points) {
    json incidences = json::array();
    for (const auto& [cid, local] : sp.incidences) incidences.push_back({cid, local});
    j["singular_points"].push_back({{"id", sp.id}, {"incidences", incidences}});
  }
  return j;
}

BubbleForest forest_from_json(const json& j) {
  require(j.is_object(), "$", "expected an object");
  require(j.contains("base"), "$.base", "missing");
  require(j.contains("components"), "$.components", "missing");
  BubbleForest forest;
  forest.base = require_int(j.at("base"), "$.base");

  const json& comps = j.at("components");
  require(comps.is_array(), "$.components", "expected an array");
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const std::string path = "$.components[" + std::to_string(i) + "]";
    const json& jc = comps[i];
    require(jc.is_object(), path, "expected an object");
    Component c;
    require(jc.contains("id"), path + ".id", "missing");
    c.id = require_int(jc.at("id"), path + ".id");
    c.genus = jc.contains("genus") ? require_int(jc.at("genus"), path + ".genus") : 0;
    if (jc.contains("ghost")) {
      require(jc.at("ghost").is_boolean(), path + ".ghost", "expected a boolean");
      c.ghost = jc.at("ghost").get<bool>();
    }
    if (jc.contains("branch_multiplicities")) {
      const json& jm = jc.at("branch_multiplicities");
      require(jm.is_array(), path + ".branch_multiplicities", "expected an array");
      for (std::size_t k = 0; k < jm.size(); ++k)
        c.branch_multiplicities.push_back(
            require_int(jm[k], path + ".branch_multiplicities[" + std::to_string(k) + "]"));
    }
    forest.components.push_back(std::move(c));
  }

  if (j.contains("singular_points")) {
    const json& sps = j.at("singular_points");
    require(sps.is_array(), "$.singular_points", "expected an array");
    for (std::size_t i = 0; i < sps.size(); ++i) {
      const std::string path = "$.singular_points[" + std::to_string(i) + "]";
      const json& js = sps[i];
      require(js.is_object(), path, "expected an object");
      SingularPoint sp;
      require(js.contains("id"), path + ".id", "missing");
      sp.id = require_int(js.at("id"), path + ".id");
      require(js.contains("incidences"), path + ".incidences", "missing");
      const json& jinc = js.at("incidences");
      require(jinc.is_array(), path + ".incidences", "expected an array");
      for (std::size_t k = 0; k < jinc.size(); ++k) {
        const std::string ipath = path + ".incidences[" + std::to_string(k) + "]";
        require(jinc[k].is_array() && jinc[k].size() == 2, ipath,
                "expected a [component_id, local_point_id] pair");
        sp.incidences.push_back(
            {require_int(jinc[k][0], ipath + "[0]"), require_int(jinc[k][1], ipath + "[1]")});
      }
      forest.singular_points.push_back(std::move(sp));
    }
  }

  try {
    validate_structure(forest);
  } catch (const ForestError& e) {
    throw SchemaError(std::string("$.") + e.what());
  }
  return forest;
}

json energy_config_to_json(const EnergyConfig& config) {
  json j;
  switch (config.kind) {
    case EnergyKind::Willmore: j["kind"] = "willmore"; break;
    case EnergyKind::Helfrich: j["kind"] = "helfrich"; break;
    case EnergyKind::HawkingDeficit: j["kind"] = "hawking_deficit"; break;
  }
  switch (config.c.kind) {
    case ScalarField::Kind::Constant: j["c"] = {{"const", config.c.offset}}; break;
    case ScalarField::Kind::LinearZ:
      j["c"] = {{"expr", "linear-in-z"}, {"scale", config.c.scale}, {"offset", config.c.offset}};
      break;
    case ScalarField::Kind::Radial:
      j["c"] = {{"expr", "radial"}, {"scale", config.c.scale}, {"offset", config.c.offset}};
      break;
  }
  j["b"] = config.b;
  if (config.P.is_none()) j["P"] = nullptr;
  else j["P"] = {{"const", config.P.value}};
  return j;
}

EnergyConfig energy_config_from_json(const json& j) {
  require(j.is_object(), "$", "expected an object");
  EnergyConfig config;
  if (j.contains("kind")) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "willmore") config.kind = EnergyKind::Willmore;
    else if (kind == "helfrich") config.kind = EnergyKind::Helfrich;
    else if (kind == "hawking_deficit" || kind == "hawking")
      config.kind = EnergyKind::HawkingDeficit;
    else throw SchemaError("$.kind: unknown energy kind '" + kind + "'");
  }
  if (j.contains("c") && !j.at("c").is_null()) {
    const json& jc = j.at("c");
    require(jc.is_object(), "$.c", "expected an object");
    if (jc.contains("const")) {
      require(jc.at("const").is_number(), "$.c.const", "expected a number");
      config.c = ScalarField::constant(jc.at("const").get<double>());
    } else if (jc.contains("expr")) {
      const std::string expr = jc.at("expr").get<std::string>();
      const double scale = jc.value("scale", 1.0);
      const double offset = jc.value("offset", 0.0);
      if (expr == "linear-in-z") config.c = ScalarField::linear_z(scale, offset);
      else if (expr == "radial") config.c = ScalarField::radial(scale, offset);
      else throw SchemaError("$.c.expr: unknown builtin field '" + expr + "'");
    } else {
      throw SchemaError("$.c: expected {\"const\": x} or {\"expr\": name}");
    }
  }
  if (j.contains("b")) {
    require(j.at("b").is_number(), "$.b", "expected a number");
    config.b = j.at("b").get<double>();
  }
  if (j.contains("P") && !j.at("P").is_null()) {
    const json& jp = j.at("P");
    require(jp.is_object() && jp.contains("const"), "$.P", "expected null or {\"const\": x}");
    config.P = NormalField::constant(jp.at("const").get<double>());
  }
  return config;
}

double round12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

json json_number(double x) { return json(round12(x)); }

}  // namespace willmin
