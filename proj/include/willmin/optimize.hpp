#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "willmin/energy.hpp"
#include "willmin/trimesh.hpp"

namespace willmin {

// Area / volume constraint targets and the associated Lagrange multipliers.
struct ConstraintSpec {
  double area = 0;                      // target area, > 0
  std::optional<double> volume;         // optional target enclosed volume
  double tol_rel = 1e-3;                // relative constraint tolerance
  double lambda = 0;                    // initial area multiplier
  double p = 0;                         // initial volume multiplier
};

struct OptimizeOptions {
  double gtol = 1e-5;       // stop the inner loop when ||grad AL|| drops below this
  int max_outer = 50;
  int max_inner = 500;
  double tol_rel = 1e-3;    // overrides ConstraintSpec::tol_rel when set by CLI
  std::uint64_t seed = 0;   // recorded for reproducibility of callers' mesh setup
  int threads = 1;

  // Augmented-Lagrangian penalty schedule: start at mu0, multiply by
  // mu_growth whenever the constraint violation fails to halve between
  // outer iterations, capped at mu_cap.
  double mu0 = 10;
  double mu_growth = 5;
  double mu_cap = 1e8;

  // Backtracking line search.
  double armijo = 1e-4;
  double backtrack = 0.5;
  double min_step = 1e-14;  // below this the inner loop is considered stalled
};

// One row per accepted inner step (the CSV log mirrors these fields).
struct IterationRow {
  int iter = 0;
  double energy = 0;
  double area = 0;
  double volume = 0;
  double lambda = 0;
  double p = 0;
  double mu_pen = 0;
  double grad_norm = 0;
  double aug_value = 0;  // augmented Lagrangian after the step
};

enum class Termination { Converged, MaxIterations, MeshDegeneration };

struct OptimState {
  TriMesh mesh;
  double lambda = 0;
  double p = 0;
  double mu_pen = 0;
  int outer_iterations = 0;
  int inner_iterations = 0;
  bool converged = false;
  Termination termination = Termination::MaxIterations;
  std::string message;
  std::vector<IterationRow> history;
};

// Minimizes the configured energy over vertex positions subject to
// |area - a|/a <= tol_rel and, when given, |volume - v|/v <= tol_rel,
// with an augmented-Lagrangian outer loop (multiplier updates
// lambda += mu (A - a), p += mu (V - v)) around gradient descent with
// Armijo backtracking. Throws std::invalid_argument if the targets fail
// the feasibility gate, before any optimization starts.
OptimState minimize_constrained(const TriMesh& mesh, const EnergyConfig& config,
                                const ConstraintSpec& constraints,
                                const OptimizeOptions& options = {});

// Which norm of the second fundamental form enters the Euler-Lagrange
// residual. TraceFree is the resolved convention: it is the one consistent
// with the first variation of the discrete energy on round spheres (the
// Willmore residual vanishes there for any radius, which fails for the
// full |A|^2). A test pins this choice.
enum class SecondFormNorm { TraceFree, Full };

// Pointwise residual of the constrained Euler-Lagrange equation
//   lap H + H |A0|^2 = 1/2 H c^2 + H^2 c + (H + 2c) dc(nu) - tr_S Hess c
//                      - 1/2 lambda H - 1/2 p
//                      - (c + b int H) |A0|^2 + 1/2 b H^2 int H
// in flat ambient space (Ric = 0), as the left side minus the right side.
VertexScalars el_residual(const TriMesh& mesh, const EnergyConfig& config, double lambda,
                          double p, SecondFormNorm norm_kind = SecondFormNorm::TraceFree);

// Area-weighted RMS of the residual field; the summary statistic logged by
// the CLI and used by refinement tests.
double el_residual_norm(const TriMesh& mesh, const EnergyConfig& config, double lambda,
                        double p);

// On a round sphere of radius r with constant c the residual vanishes iff
//   0 = c^2/r + 4c/r^2 - lambda/r - p/2 + 16 pi b / r.
// Returns the p that satisfies this for a chosen lambda.
double sphere_multiplier_p(double radius, double c, double b, double lambda);

}  // namespace willmin
