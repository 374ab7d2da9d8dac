#include "willmin/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "willmin/curvature.hpp"
#include "willmin/geometry.hpp"
#include "willmin/gradient.hpp"

namespace willmin {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct AugmentedValue {
  double energy = 0;
  double area = 0;
  double volume = 0;
  double value = 0;  // augmented Lagrangian
};

AugmentedValue evaluate(const TriMesh& mesh, const EnergyConfig& config,
                        const ConstraintSpec& cs, double lambda, double p, double mu) {
  AugmentedValue out;
  out.energy = energy_value(mesh, config);
  out.area = total_area(mesh);
  out.volume = enclosed_volume(mesh);
  const double ca = out.area - cs.area;
  out.value = out.energy + lambda * ca + 0.5 * mu * ca * ca;
  if (cs.volume) {
    const double cv = out.volume - *cs.volume;
    out.value += p * cv + 0.5 * mu * cv * cv;
  }
  return out;
}

double min_face_area(const TriMesh& mesh) {
  const auto& pos = mesh.positions();
  double m = std::numeric_limits<double>::max();
  for (const auto& f : mesh.faces())
    m = std::min(m, 0.5 * norm(cross(pos[f[1]] - pos[f[0]], pos[f[2]] - pos[f[0]])));
  return m;
}

}  // namespace

OptimState minimize_constrained(const TriMesh& mesh, const EnergyConfig& config,
                                const ConstraintSpec& constraints,
                                const OptimizeOptions& options) {
  ConstraintSpec cs = constraints;
  if (cs.area <= 0) throw std::invalid_argument("minimize_constrained: target area must be positive");
  cs.tol_rel = options.tol_rel > 0 ? options.tol_rel : cs.tol_rel;

  // Feasibility gate, evaluated before any optimization starts.
  const double b = config.kind == EnergyKind::Helfrich ? config.b : 0.0;
  const FeasibilityReport gate = feasibility(cs.area, cs.volume, b);
  if (!gate.feasible) {
    std::string msg = "minimize_constrained: infeasible constraint targets:";
    if (!gate.isoperimetric_ok)
      msg += " isoperimetric bound 3 sqrt(4 pi) v <= a^(3/2) violated by " +
             std::to_string(-gate.isoperimetric_margin);
    if (!gate.ab_ok) msg += " -a b <= 1 violated (1 + a b = " + std::to_string(gate.ab_margin) + ")";
    throw std::invalid_argument(msg);
  }
  if (cs.volume && enclosed_volume(mesh) <= 0)
    throw std::invalid_argument(
        "minimize_constrained: mesh has non-positive enclosed volume; orientation must be outward");

  OptimState state{mesh};
  state.lambda = cs.lambda;
  state.p = cs.p;
  state.mu_pen = options.mu0;

  const double degenerate_area =
      TriMesh::kDegenerateAreaFactor * mesh.bbox_diag() * mesh.bbox_diag();

  double step = 1.0;
  double prev_violation = std::numeric_limits<double>::max();
  int global_iter = 0;

  for (int outer = 0; outer < options.max_outer; ++outer) {
    state.outer_iterations = outer + 1;
    AugmentedValue cur = evaluate(state.mesh, config, cs, state.lambda, state.p, state.mu_pen);
    bool inner_done = false;  // gradient small or line search stalled

    for (int inner = 0; inner < options.max_inner; ++inner) {
      VertexVectors grad = energy_gradient(state.mesh, config, options.threads);
      const VertexVectors agrad = area_gradient(state.mesh);
      const double ca = cur.area - cs.area;
      const double wa = state.lambda + state.mu_pen * ca;
      double wv = 0;
      VertexVectors vgrad;
      if (cs.volume) {
        vgrad = volume_gradient(state.mesh);
        wv = state.p + state.mu_pen * (cur.volume - *cs.volume);
      }
      double grad_sq = 0;
      for (int i = 0; i < state.mesh.vertex_count(); ++i) {
        grad[i] += wa * agrad[i];
        if (cs.volume) grad[i] += wv * vgrad[i];
        grad_sq += norm_sq(grad[i]);
      }
      const double grad_norm = std::sqrt(grad_sq);
      if (grad_norm < options.gtol) {
        inner_done = true;
        break;
      }

      // Backtracking line search along the negative gradient; the accepted
      // step never increases the augmented Lagrangian.
      step = std::min(step * 1.5, 1e6);
      bool accepted = false;
      while (step >= options.min_step) {
        std::vector<Vec3d> trial = state.mesh.positions();
        for (int i = 0; i < state.mesh.vertex_count(); ++i) trial[i] -= step * grad[i];
        const TriMesh trial_mesh = state.mesh.with_positions(std::move(trial));
        const AugmentedValue t =
            evaluate(trial_mesh, config, cs, state.lambda, state.p, state.mu_pen);
        if (t.value <= cur.value - options.armijo * step * grad_sq) {
          if (min_face_area(trial_mesh) <= degenerate_area) {
            state.termination = Termination::MeshDegeneration;
            state.message = "mesh degeneration: face area fell below the validity threshold";
            state.converged = false;
            return state;
          }
          state.mesh = trial_mesh;
          cur = t;
          accepted = true;
          break;
        }
        step *= options.backtrack;
      }
      if (!accepted) {
        inner_done = true;  // stalled; update multipliers anyway
        break;
      }

      ++global_iter;
      state.inner_iterations = global_iter;
      state.history.push_back(IterationRow{global_iter, cur.energy, cur.area, cur.volume,
                                           state.lambda, state.p, state.mu_pen, grad_norm,
                                           cur.value});
    }

    const double viol_area = std::abs(cur.area - cs.area) / cs.area;
    const double viol_volume =
        cs.volume ? std::abs(cur.volume - *cs.volume) / std::abs(*cs.volume) : 0.0;
    const double violation = std::max(viol_area, viol_volume);

    if (violation <= cs.tol_rel && inner_done) {
      state.converged = true;
      state.termination = Termination::Converged;
      return state;
    }

    state.lambda += state.mu_pen * (cur.area - cs.area);
    if (cs.volume) state.p += state.mu_pen * (cur.volume - *cs.volume);
    if (violation > 0.5 * prev_violation)
      state.mu_pen = std::min(state.mu_pen * options.mu_growth, options.mu_cap);
    prev_violation = violation;
  }

  state.converged = false;
  state.termination = Termination::MaxIterations;
  state.message = "did not satisfy constraints within the outer iteration budget";
  return state;
}

VertexScalars el_residual(const TriMesh& mesh, const EnergyConfig& config, double lambda,
                          double p, SecondFormNorm norm_kind) {
  const VertexScalars h = mean_curvature(mesh);
  const VertexScalars lap_h = laplace_beltrami(mesh, h);
  const VertexVectors normals = vertex_normals(mesh);
  const VertexScalars areas = vertex_areas(mesh);
  const ShapeOperatorField shape = fit_shape_operator(mesh);
  const VertexScalars& a_sq =
      norm_kind == SecondFormNorm::TraceFree ? shape.a0_norm_sq : shape.a_norm_sq;
  const auto& pos = mesh.positions();

  double int_h = 0;
  for (int v = 0; v < mesh.vertex_count(); ++v) int_h += h[v] * areas[v];

  VertexScalars res(mesh.vertex_count());
  for (int v = 0; v < mesh.vertex_count(); ++v) {
    const double c = config.c.eval(pos[v]);
    const double dc_nu = dot(config.c.gradient(pos[v]), normals[v]);
    const double tr_hess =
        config.c.hessian_trace(pos[v]) - config.c.hessian_quad(pos[v], normals[v]);
    const double lhs = lap_h[v] + h[v] * a_sq[v];
    const double rhs = 0.5 * h[v] * c * c + h[v] * h[v] * c + (h[v] + 2 * c) * dc_nu -
                       tr_hess - 0.5 * lambda * h[v] - 0.5 * p -
                       (c + config.b * int_h) * a_sq[v] +
                       0.5 * config.b * h[v] * h[v] * int_h;
    res[v] = lhs - rhs;
  }
  return res;
}

double el_residual_norm(const TriMesh& mesh, const EnergyConfig& config, double lambda,
                        double p) {
  const VertexScalars res = el_residual(mesh, config, lambda, p);
  const VertexScalars areas = vertex_areas(mesh);
  double num = 0, den = 0;
  for (int v = 0; v < mesh.vertex_count(); ++v) {
    num += res[v] * res[v] * areas[v];
    den += areas[v];
  }
  return std::sqrt(num / den);
}

double sphere_multiplier_p(double radius, double c, double b, double lambda) {
  return 2 * (c * c / radius + 4 * c / (radius * radius) + 16 * kPi * b / radius -
              lambda / radius);
}

}  // namespace willmin
