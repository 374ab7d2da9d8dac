#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "oracles.hpp"

// End-to-end tests driving the built CLI binary with procedurally
// generated fixtures.

namespace {

using nlohmann::json;
using oracles::kPi;

const std::string cli = WILLMIN_CLI_PATH;

struct RunResult {
  int exit_code;
  std::string out;
};

std::string tmp_path(const std::string& name) {
  return std::string("willmin_clitest_") + name;
}

RunResult run(const std::string& args) {
  const std::string out_file = tmp_path("stdout.txt");
  const std::string cmd = cli + " " + args + " > " + out_file + " 2> " + tmp_path("stderr.txt");
  const int status = std::system(cmd.c_str());
  std::ifstream in(out_file);
  std::stringstream buf;
  buf << in.rdbuf();
  return {WEXITSTATUS(status), buf.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

}  // namespace

TEST_CASE("cli: gen + eval on the bundled fixture shapes") {
  REQUIRE(run("gen --shape icosphere --subdiv 2 --out " + tmp_path("ico2.obj")).exit_code == 0);
  REQUIRE(run("gen --shape icosphere --subdiv 3 --out " + tmp_path("ico3.obj")).exit_code == 0);
  REQUIRE(run("gen --shape icosphere --subdiv 4 --out " + tmp_path("ico4.obj")).exit_code == 0);
  REQUIRE(run("gen --shape torus --major 2 --minor 0.5 --out " + tmp_path("torus.off")).exit_code == 0);
  REQUIRE(run("gen --shape ellipsoid --subdiv 3 --ax 2 --ay 1 --az 1 --out " +
              tmp_path("egg.obj")).exit_code == 0);

  const RunResult ico = run("eval --mesh " + tmp_path("ico4.obj"));
  REQUIRE(ico.exit_code == 0);
  const json j = json::parse(ico.out);
  CHECK(std::abs(j["area"].get<double>() - 4 * kPi) < 0.01 * 4 * kPi);
  CHECK(std::abs(j["volume"].get<double>() - 4 * kPi / 3) < 0.01 * 4 * kPi / 3);
  CHECK(std::abs(j["willmore"].get<double>() - 4 * kPi) < 0.01 * 4 * kPi);
  CHECK(std::abs(j["gauss_bonnet_defect"].get<double>()) < 1e-9 * j["vertices"].get<double>());

  const json torus_j = json::parse(run("eval --mesh " + tmp_path("torus.off")).out);
  CHECK(torus_j["euler_characteristic"].get<int>() == 0);
  CHECK(torus_j["genus"].get<int>() == 1);
  CHECK(std::abs(torus_j["gauss_bonnet_defect"].get<double>()) <
        1e-9 * torus_j["vertices"].get<double>());

  const json egg = json::parse(run("eval --mesh " + tmp_path("egg.obj")).out);
  CHECK(egg["willmore"].get<double>() > 4 * kPi);
}

TEST_CASE("cli: eval is byte-identical across runs") {
  REQUIRE(run("gen --shape icosphere --subdiv 2 --out " + tmp_path("det.obj")).exit_code == 0);
  const RunResult a = run("eval --mesh " + tmp_path("det.obj") + " --energy helfrich --c -1");
  const RunResult b = run("eval --mesh " + tmp_path("det.obj") + " --energy helfrich --c -1");
  CHECK(a.out == b.out);
  CHECK(!a.out.empty());
}

TEST_CASE("cli: eval rejects a broken mesh with exit 1") {
  write_file(tmp_path("broken.obj"), "v 0 0 0\nv 1 0 0\nv 0 1 0\nf 1 2 3\n");
  CHECK(run("eval --mesh " + tmp_path("broken.obj")).exit_code == 1);
  CHECK(run("eval --mesh does_not_exist.obj").exit_code == 1);
}

TEST_CASE("cli: minimize converges on the round-sphere target") {
  REQUIRE(run("gen --shape ellipsoid --subdiv 2 --ax 1.1 --ay 1.0 --az 0.92 --out " +
              tmp_path("start.obj")).exit_code == 0);
  const RunResult res =
      run("minimize --mesh " + tmp_path("start.obj") +
          " --energy willmore --area 12.5663706 --seed 1 --threads 1 --out " +
          tmp_path("min.obj") + " --log " + tmp_path("min.csv") + " --summary " +
          tmp_path("min.json"));
  REQUIRE(res.exit_code == 0);

  const json summary = json::parse(slurp(tmp_path("min.json")));
  CHECK(std::abs(summary["willmore"].get<double>() - 4 * kPi) < 0.02 * 4 * kPi);
  CHECK(std::abs(summary["area"].get<double>() - 12.5663706) < 1e-3 * 12.5663706);
  CHECK(summary["converged"].get<bool>());

  // CSV log: header plus the spec'd columns.
  std::ifstream csv(tmp_path("min.csv"));
  std::string header;
  std::getline(csv, header);
  CHECK(header == "iter,energy,area,volume,lambda,p,mu_pen,grad_norm");
  std::string first_row;
  CHECK(std::getline(csv, first_row));

  // Final mesh was written and is readable.
  const json final_eval = json::parse(run("eval --mesh " + tmp_path("min.obj")).out);
  CHECK(std::abs(final_eval["area"].get<double>() - 12.5663706) < 1e-3 * 12.5663706);
}

TEST_CASE("cli: infeasible volume exits 1 citing the isoperimetric bound") {
  REQUIRE(run("gen --shape icosphere --subdiv 2 --out " + tmp_path("sph.obj")).exit_code == 0);
  const std::string out_err = tmp_path("stderr.txt");
  const int code = std::system((cli + " minimize --mesh " + tmp_path("sph.obj") +
                                " --area 12.566 --volume 9.0 > /dev/null 2> " + out_err)
                                   .c_str());
  CHECK(WEXITSTATUS(code) == 1);
  const std::string err = slurp(out_err);
  CHECK(err.find("isoperimetric") != std::string::npos);
}

TEST_CASE("cli: helfrich c=-2 run ends near zero energy") {
  REQUIRE(run("gen --shape icosphere --subdiv 2 --out " + tmp_path("hstart.obj")).exit_code == 0);
  const RunResult res = run("minimize --mesh " + tmp_path("hstart.obj") +
                            " --energy helfrich --c -2 --b 0 --area 12.5663706 --summary " +
                            tmp_path("h.json"));
  REQUIRE(res.exit_code == 0);
  const json summary = json::parse(slurp(tmp_path("h.json")));
  CHECK(summary["final_energy"].get<double>() < 1.0);
}

TEST_CASE("cli: non-convergence exits 2") {
  REQUIRE(run("gen --shape ellipsoid --subdiv 2 --ax 1.6 --ay 1.0 --az 0.7 --out " +
              tmp_path("hard.obj")).exit_code == 0);
  // One outer round of two inner steps cannot reach a 1e-9 area tolerance.
  const RunResult res = run("minimize --mesh " + tmp_path("hard.obj") +
                            " --area 12.5663706 --tol-rel 1e-9 --max-outer 1 --max-inner 2");
  CHECK(res.exit_code == 2);
}

TEST_CASE("cli: forest subcommands") {
  write_file(tmp_path("chain.json"), R"({
    "base": 0,
    "components": [
      {"id": 0, "genus": 0, "ghost": false, "branch_multiplicities": []},
      {"id": 1, "genus": 0, "ghost": true,  "branch_multiplicities": []},
      {"id": 2, "genus": 0, "ghost": false, "branch_multiplicities": []}
    ],
    "singular_points": [
      {"id": 0, "incidences": [[0, 0], [1, 0]]},
      {"id": 1, "incidences": [[1, 1], [2, 0]]}
    ]
  })");

  const RunResult reduced = run("forest reduce " + tmp_path("chain.json") + " --out " +
                                tmp_path("reduced.json"));
  REQUIRE(reduced.exit_code == 0);
  const json jr = json::parse(slurp(tmp_path("reduced.json")));
  CHECK(jr["components"].size() == 2);

  // Idempotent on re-run.
  const RunResult again = run("forest reduce " + tmp_path("reduced.json"));
  REQUIRE(again.exit_code == 0);
  const json jr2 = json::parse(again.out);
  CHECK(jr2["components"] == jr["components"]);
  CHECK(jr2["singular_points"].size() == jr["singular_points"].size());

  const RunResult validated = run("forest validate " + tmp_path("reduced.json"));
  CHECK(validated.exit_code == 0);
  const json jv = json::parse(validated.out);
  CHECK(jv["haunting_valid"].get<bool>());
  CHECK(jv["irreducible"].get<bool>());

  const RunResult lemma = run("forest lemma --max-vertices 10");
  REQUIRE(lemma.exit_code == 0);
  const json jl = json::parse(lemma.out);
  CHECK(jl["counterexamples"].empty());
  CHECK(jl["trees_per_size"][10].get<int>() == 106);

  const RunResult gb = run("forest gb --genus 0 --branches \"\"");
  REQUIRE(gb.exit_code == 0);
  CHECK(std::abs(json::parse(gb.out)["total_curvature"].get<double>() - 8 * kPi) < 1e-9);

  const RunResult gb2 = run("forest gb --genus 0 --branches 2");
  CHECK(std::abs(json::parse(gb2.out)["total_curvature"].get<double>() - 16 * kPi) < 1e-9);

  // Schema violation: exit 1 and the offending path on stderr.
  write_file(tmp_path("bad.json"), R"({"base": 0, "components": [{"id": 0}],
    "singular_points": [{"id": 0, "incidences": [[0, 0], [9, 0]]}]})");
  const std::string err_file = tmp_path("stderr.txt");
  const int code = std::system(
      (cli + " forest validate " + tmp_path("bad.json") + " > /dev/null 2> " + err_file).c_str());
  CHECK(WEXITSTATUS(code) == 1);
  const std::string err = slurp(err_file);
  CHECK(err.find("incidences") != std::string::npos);
}
