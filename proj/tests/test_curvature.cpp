#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "willmin/curvature.hpp"
#include "willmin/shapes.hpp"

using namespace willmin;
using oracles::kPi;

TEST_CASE("tracefree norm: vanishes on round spheres") {
  for (int level : {3, 4}) {
    const TraceFreeResult result = tracefree_A_norm_sq(icosphere(level));
    double worst = 0;
    for (double v : result.values) {
      CHECK(v >= 0);
      worst = std::max(worst, v);
    }
    CHECK(worst < 0.05);
  }
}

TEST_CASE("tracefree norm: thin torus tube matches kappa^2/2") {
  // Tube curvature kappa = 1/r; the other principal curvature is O(1/R).
  const double R = 20.0, r = 0.5;
  const TriMesh tube = torus(R, r, 256, 24);
  const TraceFreeResult result = tracefree_A_norm_sq(tube);
  const double expected = 0.5 * (1 / r) * (1 / r);  // kappa^2 / 2
  double mean = 0;
  for (double v : result.values) mean += v;
  mean /= result.values.size();
  CHECK(oracles::rel_err(mean, expected) < 0.10);
}

TEST_CASE("tracefree norm: torus matches the closed-form principal curvatures") {
  const double R = 2.0, r = 0.6;
  const TriMesh donut = torus(R, r, 96, 48);
  const TraceFreeResult result = tracefree_A_norm_sq(donut);
  const auto& pos = donut.positions();
  for (int v = 0; v < donut.vertex_count(); ++v) {
    const double expected = oracles::torus_curvature(R, r, pos[v]).a0_norm_sq();
    CHECK(std::abs(result.values[v] - expected) < 0.05 * std::max(expected, 0.5));
  }
}

TEST_CASE("tracefree norm: ellipsoid (2,1,1) matches the analytic shape operator") {
  const TriMesh egg = ellipsoid(4, 2, 1, 1);
  const TraceFreeResult result = tracefree_A_norm_sq(egg);
  const auto& pos = egg.positions();

  double max_exact = 0;
  std::vector<double> exact(egg.vertex_count());
  for (int v = 0; v < egg.vertex_count(); ++v) {
    exact[v] = oracles::ellipsoid_curvature(2, 1, 1, pos[v]).a0_norm_sq();
    max_exact = std::max(max_exact, exact[v]);
  }
  // Pointwise 5% where the field is appreciable; absolute floor near the
  // umbilics where the exact value crosses zero.
  for (int v = 0; v < egg.vertex_count(); ++v) {
    const double tol = 0.05 * std::max(exact[v], 0.1 * max_exact);
    CHECK(std::abs(result.values[v] - exact[v]) <= tol);
  }
}

TEST_CASE("shape operator: fitted H agrees with the analytic ellipsoid H") {
  const TriMesh egg = ellipsoid(3, 2, 1, 1);
  const ShapeOperatorField field = fit_shape_operator(egg);
  const auto& pos = egg.positions();
  for (int v = 0; v < egg.vertex_count(); ++v) {
    const double expected = oracles::ellipsoid_curvature(2, 1, 1, pos[v]).h;
    CHECK(oracles::rel_err(field.h[v], expected) < 0.05);
  }
}

TEST_CASE("shape operator: |A|^2 - |A0|^2 = H^2/2") {
  const ShapeOperatorField field = fit_shape_operator(perturbed_sphere(2, 0.05, 17));
  for (std::size_t v = 0; v < field.h.size(); ++v) {
    const double lhs = field.a_norm_sq[v] - field.a0_norm_sq[v];
    const double rhs = 0.5 * field.h[v] * field.h[v];
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9).scale(1.0));
  }
}

TEST_CASE("shape operator: clamp counter reports no artifacts on clean meshes") {
  CHECK(tracefree_A_norm_sq(icosphere(3)).clamped_count == 0);
}
