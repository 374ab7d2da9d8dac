#include "willmin/energy.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "willmin/geometry.hpp"
#include "willmin/local_energy.hpp"

namespace willmin {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Sum of the local densities plus the nonlocal b-term; single source of
// truth shared with the gradient assembly.
double energy_sum(const TriMesh& mesh, const EnergyConfig& config) {
  const auto& pos = mesh.positions();
  const std::vector<double> signs = mean_curvature_signs(mesh);
  const VertexVectors normals =
      config.kind == EnergyKind::HawkingDeficit ? vertex_normals(mesh) : VertexVectors{};
  auto at = [&](int i) { return pos[i]; };

  double local_sum = 0, h_total = 0;
  for (int v = 0; v < mesh.vertex_count(); ++v) {
    const Vec3d n = normals.empty() ? Vec3d{0, 0, 0} : normals[v];
    const auto lv = detail::energy_local<double>(mesh, config, v, signs[v], n, at);
    local_sum += lv.e;
    h_total += lv.h_weighted;
  }
  if (detail::uses_nonlocal_term(config)) local_sum += config.b * h_total * h_total;
  return local_sum;
}

}  // namespace

double willmore(const TriMesh& mesh) {
  EnergyConfig config;
  config.kind = EnergyKind::Willmore;
  return energy_sum(mesh, config);
}

double helfrich(const TriMesh& mesh, const EnergyConfig& config) {
  EnergyConfig c = config;
  c.kind = EnergyKind::Helfrich;
  return energy_sum(mesh, c);
}

double hawking_deficit(const TriMesh& mesh, const EnergyConfig& config) {
  EnergyConfig c = config;
  c.kind = EnergyKind::HawkingDeficit;
  return energy_sum(mesh, c);
}

double hawking_energy(const TriMesh& mesh, const EnergyConfig& config) {
  const double area = total_area(mesh);
  const double deficit = hawking_deficit(mesh, config);
  return std::sqrt(area / (16 * kPi)) * (1 - deficit / (16 * kPi));
}

double energy_value(const TriMesh& mesh, const EnergyConfig& config) {
  return energy_sum(mesh, config);
}

BoundReport willmore_bound_from_helfrich(double lambda_cap, double c_sup, double b,
                                         double a) {
  if (a <= 0) throw std::invalid_argument("willmore_bound_from_helfrich: area must be positive");
  BoundReport report;
  const double C = 4 * c_sup;  // Cauchy-Schwarz constant, see header

  // q * W - C * sqrt(a) * sqrt(W) - lambda_cap <= 0 with q = 4 (b >= 0)
  // or q = 4 (1 - |b| a) (b < 0, |b| a < 1). The bound is the square of the
  // larger root in s = sqrt(W).
  auto solve = [&](double q) -> double {
    const double half_lin = 0.5 * C * std::sqrt(a);
    const double disc = half_lin * half_lin + q * lambda_cap;
    if (disc < 0) return 0;  // inequality infeasible: no surface satisfies the hypotheses
    const double s = (half_lin + std::sqrt(disc)) / q;
    return s > 0 ? s * s : 0;
  };

  if (b >= 0) {
    report.bound_case = BoundReport::Case::NonNegativeB;
    report.upper = solve(4.0);
    report.lower = 0;
  } else if (std::abs(b) * a < 1) {
    report.bound_case = BoundReport::Case::NegativeBSubcritical;
    report.upper = solve(4.0 * (1 - std::abs(b) * a));
    // Any eps with |b| a <= 1 - eps works; use the midpoint of the valid range.
    report.lower = helfrich_lower_bound(c_sup, b, a, 0.5 * (1 - std::abs(b) * a));
  } else {
    report.bound_case = BoundReport::Case::NoBound;
    report.upper.reset();
    report.lower = -std::numeric_limits<double>::infinity();
  }
  return report;
}

double helfrich_lower_bound(double c_sup, double b, double a, double eps) {
  if (!(eps > 0 && eps < 1))
    throw std::invalid_argument("helfrich_lower_bound: eps must lie in (0,1)");
  if (b >= 0) return 0;
  if (std::abs(b) * a > 1 - eps)
    throw std::invalid_argument("helfrich_lower_bound: requires |b| a <= 1 - eps");
  return (1 - 1 / eps) * c_sup * c_sup * a;
}

FeasibilityReport feasibility(double a, std::optional<double> v, double b) {
  FeasibilityReport report;
  if (a <= 0) return report;  // infeasible, margins zero

  // Relative slack so the round sphere, which saturates the isoperimetric
  // inequality exactly, is accepted despite rounding.
  constexpr double kRelSlack = 1e-12;
  if (v) {
    const double lhs = 3 * std::sqrt(4 * kPi) * *v;
    const double rhs = std::pow(a, 1.5);
    report.isoperimetric_margin = rhs - lhs;
    report.isoperimetric_ok = *v > 0 && lhs <= rhs * (1 + kRelSlack);
  } else {
    report.isoperimetric_ok = true;
  }
  report.ab_margin = 1 + a * b;
  report.ab_ok = report.ab_margin >= -kRelSlack;
  report.feasible = report.isoperimetric_ok && report.ab_ok;
  return report;
}

double willmore_ambient_comparison(double w_m, double p_sup, double area) {
  return w_m + 0.25 * p_sup * p_sup * area;
}

}  // namespace willmin
