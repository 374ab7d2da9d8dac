#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "willmin/energy.hpp"
#include "willmin/geometry.hpp"
#include "willmin/optimize.hpp"
#include "willmin/shapes.hpp"

using namespace willmin;
using oracles::kPi;
using oracles::rel_err;

namespace {

TriMesh scaled_to_area(const TriMesh& mesh, double target_area) {
  const double s = std::sqrt(target_area / total_area(mesh));
  std::vector<Vec3d> pos = mesh.positions();
  for (Vec3d& p : pos) p *= s;
  return mesh.with_positions(std::move(pos));
}

double max_abs(const VertexScalars& values) {
  double worst = 0;
  for (double v : values) worst = std::max(worst, std::abs(v));
  return worst;
}

double sphericity(const TriMesh& mesh) {
  Vec3d center{0, 0, 0};
  for (const Vec3d& p : mesh.positions()) center += p;
  center *= 1.0 / mesh.vertex_count();
  double rmin = 1e300, rmax = 0;
  for (const Vec3d& p : mesh.positions()) {
    const double r = norm(p - center);
    rmin = std::min(rmin, r);
    rmax = std::max(rmax, r);
  }
  return rmax / rmin;
}

}  // namespace

TEST_CASE("el_residual: willmore case vanishes on the unit sphere") {
  EnergyConfig config;
  const VertexScalars res = el_residual(icosphere(4), config, 0, 0);
  CHECK(max_abs(res) < 0.05);
}

TEST_CASE("el_residual: sphere relation for constant c and nonzero b") {
  EnergyConfig config;
  config.kind = EnergyKind::Helfrich;
  config.c = ScalarField::constant(1.0);
  config.b = 0.01;
  const double lambda = 0.7;
  const double p = sphere_multiplier_p(1.0, 1.0, 0.01, lambda);
  const VertexScalars res = el_residual(icosphere(4), config, lambda, p);
  CHECK(max_abs(res) < 0.1);

  // Breaking the relation leaves an O(1) residual.
  const VertexScalars off = el_residual(icosphere(4), config, lambda, p + 2.0);
  CHECK(max_abs(off) > 0.5);
}

TEST_CASE("el_residual: decreases monotonically under refinement") {
  EnergyConfig config;
  double prev = 1e300;
  for (int level : {2, 3, 4}) {
    const double worst = max_abs(el_residual(icosphere(level), config, 0, 0));
    CHECK(worst < prev);
    prev = worst;
  }
}

TEST_CASE("el_residual: trace-free norm is the convention consistent with spheres") {
  // With the full |A|^2 the Willmore residual on a radius-r sphere is
  // ~ H^3/2 = 4/r^3; with the trace-free norm it is discretization noise.
  EnergyConfig config;
  for (double r : {0.5, 1.0, 2.0}) {
    const TriMesh sphere = icosphere(3, r);
    const double tracefree = max_abs(el_residual(sphere, config, 0, 0, SecondFormNorm::TraceFree));
    const double full = max_abs(el_residual(sphere, config, 0, 0, SecondFormNorm::Full));
    CHECK(tracefree < 0.2 * full);
    CHECK(full > 2.0 / (r * r * r));  // ~ 4/r^3 up to discretization
  }
}

TEST_CASE("minimize: ellipsoid relaxes to the round sphere under area constraint") {
  const TriMesh start = scaled_to_area(ellipsoid(3, 1.2, 1.0, 0.85), 4 * kPi);
  EnergyConfig config;  // Willmore
  ConstraintSpec constraints;
  constraints.area = 4 * kPi;

  const OptimState state = minimize_constrained(start, config, constraints);
  CHECK(state.converged);
  CHECK(willmore(state.mesh) <= 4 * kPi * 1.02);
  CHECK(std::abs(total_area(state.mesh) - 4 * kPi) / (4 * kPi) <= 1e-3);
  CHECK(sphericity(state.mesh) < 1.05);
}

TEST_CASE("minimize: augmented Lagrangian is non-increasing over accepted steps") {
  const TriMesh start = scaled_to_area(ellipsoid(2, 1.2, 1.0, 0.85), 4 * kPi);
  EnergyConfig config;
  ConstraintSpec constraints;
  constraints.area = 4 * kPi;
  const OptimState state = minimize_constrained(start, config, constraints);

  // Compare within runs of constant multipliers (the AL value jumps when
  // lambda, p, mu are updated between outer rounds).
  for (std::size_t i = 1; i < state.history.size(); ++i) {
    const IterationRow& a = state.history[i - 1];
    const IterationRow& b = state.history[i];
    if (a.lambda != b.lambda || a.mu_pen != b.mu_pen || a.p != b.p) continue;
    CHECK(b.aug_value <= a.aug_value + 1e-9 * std::abs(a.aug_value));
  }
}

TEST_CASE("minimize: volume constrained helfrich run") {
  const TriMesh start = scaled_to_area(perturbed_sphere(3, 0.02, 8), 4 * kPi);
  EnergyConfig config;
  config.kind = EnergyKind::Helfrich;
  ConstraintSpec constraints;
  constraints.area = 4 * kPi;
  constraints.volume = 0.95 * (4 * kPi / 3);

  const OptimState state = minimize_constrained(start, config, constraints);
  CHECK(state.converged);
  CHECK(std::abs(total_area(state.mesh) - 4 * kPi) / (4 * kPi) <= 1e-3);
  CHECK(std::abs(enclosed_volume(state.mesh) - *constraints.volume) / *constraints.volume <= 1e-3);
  CHECK(energy_value(state.mesh, config) >= 16 * kPi - 0.5);
}

TEST_CASE("minimize: infeasible volume is rejected before optimizing") {
  EnergyConfig config;
  ConstraintSpec constraints;
  constraints.area = 4 * kPi;
  constraints.volume = 1.2 * (4 * kPi / 3);  // reduced volume > 1
  CHECK_THROWS_AS(minimize_constrained(icosphere(2), config, constraints),
                  std::invalid_argument);

  // -a b <= 1 violated.
  EnergyConfig helf;
  helf.kind = EnergyKind::Helfrich;
  helf.b = -2;
  ConstraintSpec unit;
  unit.area = 1;
  CHECK_THROWS_AS(minimize_constrained(icosphere(2), helf, unit), std::invalid_argument);
}

TEST_CASE("minimize: multipliers are consistent with the EL residual") {
  const TriMesh start = scaled_to_area(ellipsoid(3, 1.2, 1.0, 0.85), 4 * kPi);
  EnergyConfig config;
  ConstraintSpec constraints;
  constraints.area = 4 * kPi;
  const OptimState state = minimize_constrained(start, config, constraints);
  REQUIRE(state.converged);

  const double floor = el_residual_norm(icosphere(3), config, 0, 0);
  const double at_solution = el_residual_norm(state.mesh, config, state.lambda, state.p);
  CHECK(at_solution < 10 * floor);
}

TEST_CASE("minimize: rotated start yields the same energy trajectory") {
  const TriMesh start = scaled_to_area(ellipsoid(2, 1.2, 1.0, 0.85), 4 * kPi);
  const double a = 0.61;
  const double ca = std::cos(a), sa = std::sin(a);
  std::vector<Vec3d> pos = start.positions();
  for (Vec3d& p : pos) p = {ca * p.x - sa * p.y, sa * p.x + ca * p.y, p.z};
  const TriMesh rotated = start.with_positions(std::move(pos));

  EnergyConfig config;
  ConstraintSpec constraints;
  constraints.area = 4 * kPi;
  OptimizeOptions options;
  options.max_inner = 20;
  options.max_outer = 2;

  const OptimState s0 = minimize_constrained(start, config, constraints, options);
  const OptimState s1 = minimize_constrained(rotated, config, constraints, options);
  REQUIRE(s0.history.size() == s1.history.size());
  for (std::size_t i = 0; i < s0.history.size(); ++i) {
    CHECK(rel_err(s1.history[i].energy, s0.history[i].energy) < 1e-9);
    CHECK(rel_err(s1.history[i].area, s0.history[i].area) < 1e-9);
  }
}

TEST_CASE("minimize: history carries the logged columns") {
  const TriMesh start = scaled_to_area(ellipsoid(2, 1.1, 1.0, 0.9), 4 * kPi);
  EnergyConfig config;
  ConstraintSpec constraints;
  constraints.area = 4 * kPi;
  OptimizeOptions options;
  options.max_inner = 10;
  options.max_outer = 1;
  const OptimState state = minimize_constrained(start, config, constraints, options);
  REQUIRE(!state.history.empty());
  int prev_iter = 0;
  for (const IterationRow& row : state.history) {
    CHECK(row.iter == prev_iter + 1);
    CHECK(row.mu_pen >= options.mu0);
    CHECK(row.grad_norm > 0);
    prev_iter = row.iter;
  }
}
