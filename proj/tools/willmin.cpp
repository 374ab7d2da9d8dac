// willmin: constrained bending-energy minimization on closed triangle
// meshes, plus bubble-forest combinatorics. Subcommands:
//   gen       procedural fixture meshes (icosphere, ellipsoid, torus, ...)
//   eval      report all energies and geometric invariants of a mesh
//   minimize  area/volume constrained minimization of a configured energy
//   forest    reduce / validate / lemma / gb on bubble-forest JSON
// Exit codes: 0 success, 1 input error, 2 non-convergence.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "willmin/curvature.hpp"
#include "willmin/energy.hpp"
#include "willmin/forest.hpp"
#include "willmin/geometry.hpp"
#include "willmin/gradient.hpp"
#include "willmin/mesh_io.hpp"
#include "willmin/optimize.hpp"
#include "willmin/serialize.hpp"
#include "willmin/shapes.hpp"

namespace {

using nlohmann::json;
using namespace willmin;

int log_level() {
  const char* env = std::getenv("WILLMIN_LOG");
  if (!env) return 1;
  return std::atoi(env);
}

void info(const std::string& msg) {
  if (log_level() >= 2) std::cerr << "willmin: " << msg << "\n";
}

struct EnergyFlags {
  std::string energy = "willmore";
  double c = 0;
  double b = 0;
  std::string P = "none";
  std::string config_path;  // optional full EnergyConfig JSON

  void add_to(CLI::App& app) {
    app.add_option("--energy", energy, "Energy kind: willmore|helfrich|hawking")
        ->check(CLI::IsMember({"willmore", "helfrich", "hawking"}));
    app.add_option("--c", c, "Constant spontaneous curvature (helfrich)");
    app.add_option("--b", b, "Nonlocal coefficient b (helfrich)");
    app.add_option("--P", P, "Hawking field: none|const:<x>");
    app.add_option("--energy-config", config_path,
                   "JSON file with a full energy config (overrides the flags)");
  }

  EnergyConfig build() const {
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw std::runtime_error("cannot open energy config: " + config_path);
      json j = json::parse(in);
      return energy_config_from_json(j);
    }
    EnergyConfig config;
    if (energy == "willmore") config.kind = EnergyKind::Willmore;
    else if (energy == "helfrich") config.kind = EnergyKind::Helfrich;
    else config.kind = EnergyKind::HawkingDeficit;
    config.c = ScalarField::constant(c);
    config.b = b;
    if (P == "none" || P.empty()) config.P = NormalField::none();
    else if (P.rfind("const:", 0) == 0)
      config.P = NormalField::constant(std::stod(P.substr(6)));
    else throw std::runtime_error("bad --P value '" + P + "', expected none|const:<x>");
    return config;
  }
};

json eval_report(const TriMesh& mesh, const EnergyConfig& config) {
  json j;
  j["vertices"] = mesh.vertex_count();
  j["faces"] = mesh.face_count();
  j["euler_characteristic"] = mesh.euler_characteristic();
  j["genus"] = (2 - mesh.euler_characteristic()) / 2;
  j["area"] = json_number(total_area(mesh));
  j["volume"] = json_number(enclosed_volume(mesh));
  j["willmore"] = json_number(willmore(mesh));
  j["helfrich"] = json_number(helfrich(mesh, config));
  j["hawking_deficit"] = json_number(hawking_deficit(mesh, config));
  j["hawking_energy"] = json_number(hawking_energy(mesh, config));
  j["gauss_bonnet_defect"] = json_number(gauss_bonnet_defect(mesh));
  j["integrated_mean_curvature"] = json_number(integrated_mean_curvature(mesh));
  return j;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << text;
}

std::string csv_row(const IterationRow& r) {
  char buf[320];
  std::snprintf(buf, sizeof buf, "%d,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g\n", r.iter,
                r.energy, r.area, r.volume, r.lambda, r.p, r.mu_pen, r.grad_norm);
  return buf;
}

int run_gen(const std::string& shape, int subdiv, double radius, double ax, double ay,
            double az, double major, double minor, int seg_major, int seg_minor,
            const std::string& out) {
  TriMesh mesh = [&] {
    if (shape == "icosphere") return icosphere(subdiv, radius);
    if (shape == "ellipsoid") return ellipsoid(subdiv, ax, ay, az);
    if (shape == "torus") return torus(major, minor, seg_major, seg_minor);
    if (shape == "tetrahedron") return tetrahedron(radius);
    throw std::runtime_error("unknown shape: " + shape);
  }();
  write_mesh(out, mesh);
  info("wrote " + out);
  return 0;
}

int run_minimize(const EnergyFlags& eflags, const std::string& mesh_path, double area,
                 std::optional<double> volume, const OptimizeOptions& options,
                 const std::string& out, const std::string& log_path,
                 const std::string& summary_path) {
  const EnergyConfig config = eflags.build();
  TriMesh mesh = read_mesh(mesh_path);

  ConstraintSpec constraints;
  constraints.area = area;
  constraints.volume = volume;
  constraints.tol_rel = options.tol_rel;

  // The feasibility gate runs before optimization and is an input error.
  const double b = config.kind == EnergyKind::Helfrich ? config.b : 0.0;
  const FeasibilityReport gate = feasibility(area, volume, b);
  if (!gate.feasible) {
    std::cerr << "willmin: infeasible constraints:";
    if (!gate.isoperimetric_ok)
      std::cerr << " isoperimetric bound 3*sqrt(4*pi)*v <= a^(3/2) is violated"
                << " (margin " << gate.isoperimetric_margin << ");";
    if (!gate.ab_ok)
      std::cerr << " -a*b <= 1 is violated (1 + a*b = " << gate.ab_margin << ");";
    std::cerr << "\n";
    return 1;
  }

  OptimState state = minimize_constrained(mesh, config, constraints, options);

  if (!out.empty()) write_mesh(out, state.mesh);
  if (!log_path.empty()) {
    std::string csv = "iter,energy,area,volume,lambda,p,mu_pen,grad_norm\n";
    for (const IterationRow& r : state.history) csv += csv_row(r);
    write_text(log_path, csv);
  }

  json summary;
  summary["final_energy"] = json_number(energy_value(state.mesh, config));
  summary["area"] = json_number(total_area(state.mesh));
  summary["volume"] = json_number(enclosed_volume(state.mesh));
  summary["lambda"] = json_number(state.lambda);
  summary["p"] = json_number(state.p);
  summary["willmore"] = json_number(willmore(state.mesh));
  summary["el_residual_norm"] =
      json_number(el_residual_norm(state.mesh, config, state.lambda, state.p));
  summary["converged"] = state.converged;
  summary["outer_iterations"] = state.outer_iterations;
  summary["inner_iterations"] = state.inner_iterations;
  const std::string summary_text = summary.dump(2) + "\n";
  if (!summary_path.empty()) write_text(summary_path, summary_text);
  std::cout << summary_text;

  if (state.termination == Termination::MeshDegeneration) {
    std::cerr << "willmin: " << state.message << "\n";
    return 2;
  }
  if (!state.converged) {
    std::cerr << "willmin: non-convergence: " << state.message << "\n";
    return 2;
  }
  return 0;
}

json coloring_report_json(const ColoringReport& report) {
  json j;
  j["max_vertices"] = report.max_vertices;
  j["trees_checked"] = report.trees_checked;
  j["colorings_checked"] = report.colorings_checked;
  j["trees_per_size"] = report.trees_per_size;
  j["counterexamples"] = json::array();
  for (const auto& ce : report.counterexamples) {
    json e = json::array();
    for (const auto& [u, v] : ce.edges) e.push_back({u, v});
    j["counterexamples"].push_back({{"edges", e}, {"white", ce.white}});
  }
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"willmin: constrained Willmore/Helfrich/Hawking energy toolkit"};
  app.require_subcommand(1);

  // --- gen ---
  auto* gen = app.add_subcommand("gen", "Generate a fixture mesh");
  std::string gen_shape = "icosphere", gen_out = "mesh.obj";
  int gen_subdiv = 3, gen_seg_major = 48, gen_seg_minor = 24;
  double gen_radius = 1.0, gen_ax = 1, gen_ay = 1, gen_az = 1, gen_major = 2, gen_minor = 0.5;
  gen->add_option("--shape", gen_shape, "icosphere|ellipsoid|torus|tetrahedron")->required();
  gen->add_option("--subdiv", gen_subdiv, "Icosphere subdivision level");
  gen->add_option("--radius", gen_radius, "Sphere radius / tetrahedron edge");
  gen->add_option("--ax", gen_ax, "Ellipsoid semi-axis x");
  gen->add_option("--ay", gen_ay, "Ellipsoid semi-axis y");
  gen->add_option("--az", gen_az, "Ellipsoid semi-axis z");
  gen->add_option("--major", gen_major, "Torus major radius");
  gen->add_option("--minor", gen_minor, "Torus tube radius");
  gen->add_option("--seg-major", gen_seg_major, "Torus major segments");
  gen->add_option("--seg-minor", gen_seg_minor, "Torus minor segments");
  gen->add_option("--out", gen_out, "Output mesh path (.obj or .off)")->required();

  // --- eval ---
  auto* eval = app.add_subcommand("eval", "Evaluate energies and invariants of a mesh");
  std::string eval_mesh, eval_json_out;
  EnergyFlags eval_energy;
  eval->add_option("--mesh", eval_mesh, "Input mesh (.obj or .off)")->required();
  eval_energy.add_to(*eval);
  eval->add_option("--json", eval_json_out, "Write the report to this file as well");

  // --- minimize ---
  auto* minimize = app.add_subcommand("minimize", "Constrained energy minimization");
  std::string min_mesh, min_out, min_log, min_summary;
  EnergyFlags min_energy;
  double min_area = 0;
  std::optional<double> min_volume;
  OptimizeOptions options;
  minimize->add_option("--mesh", min_mesh, "Input mesh")->required();
  min_energy.add_to(*minimize);
  minimize->add_option("--area", min_area, "Target area")->required();
  minimize->add_option("--volume", min_volume, "Target enclosed volume");
  minimize->add_option("--gtol", options.gtol, "Inner gradient-norm tolerance");
  minimize->add_option("--max-outer", options.max_outer, "Outer iteration cap");
  minimize->add_option("--max-inner", options.max_inner, "Inner iteration cap per outer round");
  minimize->add_option("--tol-rel", options.tol_rel, "Relative constraint tolerance");
  minimize->add_option("--seed", options.seed, "Seed recorded in logs");
  minimize->add_option("--threads", options.threads, "Threads for gradient assembly (1 = deterministic)");
  minimize->add_option("--out", min_out, "Final mesh output path");
  minimize->add_option("--log", min_log, "Per-iteration CSV log path");
  minimize->add_option("--summary", min_summary, "JSON summary path");

  // --- forest ---
  auto* forest_cmd = app.add_subcommand("forest", "Bubble-forest operations");
  forest_cmd->require_subcommand(1);

  auto* reduce = forest_cmd->add_subcommand("reduce", "Reduce a haunted forest to irreducible form");
  std::string reduce_in, reduce_out;
  reduce->add_option("input", reduce_in, "Forest JSON")->required();
  reduce->add_option("--out", reduce_out, "Output JSON path (default: stdout)");

  auto* validate = forest_cmd->add_subcommand("validate", "Validate structure and haunting");
  std::string validate_in;
  validate->add_option("input", validate_in, "Forest JSON")->required();

  auto* lemma = forest_cmd->add_subcommand("lemma", "Exhaustive coloring-lemma check");
  int lemma_max = 10;
  lemma->add_option("--max-vertices", lemma_max, "Largest tree size to enumerate");

  auto* gb = forest_cmd->add_subcommand("gb", "Branched Gauss-Bonnet total curvature");
  int gb_genus = 0;
  std::string gb_branches;
  gb->add_option("--genus", gb_genus, "Genus q")->required();
  gb->add_option("--branches", gb_branches, "Comma-separated branch multiplicities (may be empty)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen)
      return run_gen(gen_shape, gen_subdiv, gen_radius, gen_ax, gen_ay, gen_az, gen_major,
                     gen_minor, gen_seg_major, gen_seg_minor, gen_out);

    if (*eval) {
      const TriMesh mesh = read_mesh(eval_mesh);
      const json report = eval_report(mesh, eval_energy.build());
      const std::string text = report.dump(2) + "\n";
      if (!eval_json_out.empty()) write_text(eval_json_out, text);
      std::cout << text;
      return 0;
    }

    if (*minimize)
      return run_minimize(min_energy, min_mesh, min_area, min_volume, options, min_out,
                          min_log, min_summary);

    if (*reduce) {
      std::ifstream in(reduce_in);
      if (!in) throw std::runtime_error("cannot open forest file: " + reduce_in);
      const BubbleForest forest = forest_from_json(json::parse(in));
      const BubbleForest reduced = reduce_to_irreducible(forest);
      const std::string text = forest_to_json(reduced).dump(2) + "\n";
      if (!reduce_out.empty()) write_text(reduce_out, text);
      else std::cout << text;
      return 0;
    }

    if (*validate) {
      std::ifstream in(validate_in);
      if (!in) throw std::runtime_error("cannot open forest file: " + validate_in);
      const BubbleForest forest = forest_from_json(json::parse(in));
      const HauntingReport haunting = validate_haunting(forest);
      json j;
      j["structure_valid"] = true;  // forest_from_json validated it
      j["is_bubble_tree"] = is_bubble_tree(forest);
      j["is_bubble_forest"] = is_bubble_forest(forest);
      j["haunting_valid"] = haunting.valid;
      j["irreducible"] = haunting.irreducible;
      j["violations"] = haunting.violations;
      std::cout << j.dump(2) << "\n";
      return haunting.valid ? 0 : 1;
    }

    if (*lemma) {
      const ColoringReport report = coloring_lemma_check(lemma_max);
      std::cout << coloring_report_json(report).dump(2) << "\n";
      return report.counterexamples.empty() ? 0 : 2;
    }

    if (*gb) {
      std::vector<int> mult;
      std::stringstream ss(gb_branches);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) mult.push_back(std::stoi(tok));
      }
      json j;
      j["genus"] = gb_genus;
      j["branch_multiplicities"] = mult;
      j["total_curvature"] = json_number(gauss_bonnet_branched(gb_genus, mult));
      std::cout << j.dump(2) << "\n";
      return 0;
    }
  } catch (const SchemaError& e) {
    std::cerr << "willmin: schema violation at " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "willmin: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "willmin: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
