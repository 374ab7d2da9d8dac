#include <doctest.h>

#include <cmath>
#include <sstream>

#include "oracles.hpp"
#include "willmin/mesh_io.hpp"
#include "willmin/serialize.hpp"
#include "willmin/shapes.hpp"

using namespace willmin;

namespace {

void check_same_mesh(const TriMesh& a, const TriMesh& b) {
  REQUIRE(a.vertex_count() == b.vertex_count());
  REQUIRE(a.face_count() == b.face_count());
  for (int v = 0; v < a.vertex_count(); ++v)
    CHECK(norm(a.positions()[v] - b.positions()[v]) < 1e-8 * (1 + norm(a.positions()[v])));
  for (int f = 0; f < a.face_count(); ++f) CHECK(a.faces()[f] == b.faces()[f]);
}

}  // namespace

TEST_CASE("obj round trip") {
  const TriMesh mesh = perturbed_sphere(2, 0.05, 3);
  std::stringstream buf;
  write_obj(buf, mesh);
  check_same_mesh(read_obj(buf), mesh);
}

TEST_CASE("off round trip") {
  const TriMesh mesh = torus(2.0, 0.5, 24, 12);
  std::stringstream buf;
  write_off(buf, mesh);
  check_same_mesh(read_off(buf), mesh);
}

TEST_CASE("obj: slash-style face indices and n-gons") {
  std::stringstream buf;
  buf << "v 0 0 0\nv 1 0 0\nv 1 1 0\nv 0 1 0\nv 0.5 0.5 1\n"
      << "# quad base plus four side triangles, all 1-based with decoration\n"
      << "f 1/1 4/2/1 3//2 2/4\n"
      << "f 1/1 2 5\nf 2 3 5\nf 3 4 5\nf 4/9/9 1 5\n";
  const TriMesh pyramid = read_obj(buf);
  CHECK(pyramid.vertex_count() == 5);
  CHECK(pyramid.face_count() == 6);  // quad became two triangles
}

TEST_CASE("obj: out-of-range index fails with a message") {
  std::stringstream buf;
  buf << "v 0 0 0\nv 1 0 0\nv 0 1 0\nf 1 2 7\n";
  CHECK_THROWS_AS(read_obj(buf), MeshError);
}

TEST_CASE("writers use 9 significant digits") {
  std::vector<Vec3d> pos = icosphere(2).positions();
  pos[0] = {1.0 / 3.0, -2.0 / 7.0, 0.123456789123};
  const TriMesh mesh = icosphere(2).with_positions(pos);
  std::stringstream buf;
  write_obj(buf, mesh);
  std::string first_line;
  std::getline(buf, first_line);
  CHECK(first_line == "v 0.333333333 -0.285714286 0.123456789");
}

TEST_CASE("forest json round trip") {
  BubbleForest f;
  f.base = 5;
  f.components.push_back({5, 1, false, {2, 1}});
  f.components.push_back({9, 0, true, {}});
  f.components.push_back({2, 0, false, {}});
  f.singular_points.push_back({0, {{5, 0}, {9, 0}}});
  f.singular_points.push_back({3, {{9, 1}, {2, 0}}});

  const nlohmann::json j = forest_to_json(f);
  const BubbleForest back = forest_from_json(j);
  CHECK(forests_equivalent(f, back));
  CHECK(back.base == 5);
  CHECK(back.components.size() == 3);
}

TEST_CASE("forest json: schema violations name the offending path") {
  nlohmann::json j;
  j["base"] = 0;
  j["components"] = nlohmann::json::array({{{"id", 0}}});
  j["singular_points"] =
      nlohmann::json::array({{{"id", 0}, {"incidences", {{0, 0}, {3, 0}}}}});
  try {
    forest_from_json(j);
    FAIL("expected SchemaError");
  } catch (const SchemaError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("incidences") != std::string::npos);
    CHECK(msg.find("3") != std::string::npos);
  }

  nlohmann::json bad_base;
  bad_base["base"] = "zero";
  bad_base["components"] = nlohmann::json::array({{{"id", 0}}});
  CHECK_THROWS_AS(forest_from_json(bad_base), SchemaError);
}

TEST_CASE("energy config json round trip") {
  EnergyConfig config;
  config.kind = EnergyKind::Helfrich;
  config.c = ScalarField::linear_z(0.7, -0.1);
  config.b = -0.01;
  config.P = NormalField::constant(0.3);

  const EnergyConfig back = energy_config_from_json(energy_config_to_json(config));
  CHECK(back.kind == EnergyKind::Helfrich);
  CHECK(back.c.kind == ScalarField::Kind::LinearZ);
  CHECK(back.c.scale == doctest::Approx(0.7));
  CHECK(back.c.offset == doctest::Approx(-0.1));
  CHECK(back.b == doctest::Approx(-0.01));
  CHECK(back.P.kind == NormalField::Kind::Constant);

  const nlohmann::json spec_form = {{"kind", "helfrich"}, {"c", {{"const", -1.0}}},
                                    {"b", 0.0},           {"P", nullptr}};
  const EnergyConfig parsed = energy_config_from_json(spec_form);
  CHECK(parsed.kind == EnergyKind::Helfrich);
  CHECK(parsed.c.kind == ScalarField::Kind::Constant);
  CHECK(parsed.c.offset == doctest::Approx(-1.0));
  CHECK(parsed.P.is_none());

  CHECK_THROWS_AS(energy_config_from_json({{"kind", "entropy"}}), SchemaError);
  CHECK_THROWS_AS(energy_config_from_json({{"c", {{"expr", "sine"}}}}), SchemaError);
}

TEST_CASE("round12 stabilizes emitted numbers") {
  CHECK(round12(0.1 + 0.2) == round12(0.3));
  CHECK(round12(4.0 * std::atan(1.0)) == doctest::Approx(3.14159265359).epsilon(1e-12));
}
