#pragma once

#include <optional>

#include "willmin/fields.hpp"
#include "willmin/trimesh.hpp"

namespace willmin {

enum class EnergyKind { Willmore, Helfrich, HawkingDeficit };

// Selects the functional to evaluate/minimize and its parameters.
//   Willmore:        W = 1/4 * sum_v H^2 A_v
//   Helfrich:        H_{c,b} = sum_v (H + c(x_v))^2 A_v + b * (sum_v H A_v)^2
//   Hawking deficit: sum_v (H^2 - P(x_v, nu_v)^2) A_v
// Note the 1/4 prefactor on Willmore and none on Helfrich; with c = 0 and
// b = 0 the Helfrich value is exactly 4x the Willmore value, which tests
// assert to pin the convention.
struct EnergyConfig {
  EnergyKind kind = EnergyKind::Willmore;
  ScalarField c = ScalarField::constant(0);
  double b = 0;
  NormalField P = NormalField::none();
};

double willmore(const TriMesh& mesh);
double helfrich(const TriMesh& mesh, const EnergyConfig& config);
double hawking_deficit(const TriMesh& mesh, const EnergyConfig& config);

// sqrt(area/(16 pi)) * (1 - deficit/(16 pi)); zero on the unit round sphere
// with P = 0.
double hawking_energy(const TriMesh& mesh, const EnergyConfig& config);

// Dispatch on config.kind.
double energy_value(const TriMesh& mesh, const EnergyConfig& config);

// A-priori Willmore bound for surfaces with Helfrich energy <= lambda_cap
// and area a. The two cases mirror how the quadratic inequality
//   4 W <= lambda_cap + C(c) a^(1/2) W^(1/2) - b (int H)^2
// is closed: for b >= 0 the last term is dropped; for b < 0 with |b| a < 1
// it is absorbed as 4|b| a W into the left side. The constant C(c) = 4 sup|c|
// comes from Cauchy-Schwarz: |int 2 H c| <= 2 sup|c| a^(1/2) (4 W)^(1/2).
struct BoundReport {
  enum class Case { NonNegativeB, NegativeBSubcritical, NoBound };
  Case bound_case = Case::NoBound;
  std::optional<double> upper;  // present iff bound_case != NoBound
  double lower = 0;             // lower bound for the Helfrich energy itself
};

BoundReport willmore_bound_from_helfrich(double lambda_cap, double c_sup, double b,
                                         double a);

// Lower bound for H_{c,b} on surfaces of area a: 0 for b >= 0 (the energy
// is then nonnegative), and (1 - 1/eps) * c_sup^2 * a for b < 0, valid when
// |b| a <= 1 - eps. Requires eps in (0,1).
double helfrich_lower_bound(double c_sup, double b, double a, double eps);

// Constraint feasibility for targets (a, v) and nonlocal coefficient b:
// the isoperimetric condition 3 sqrt(4 pi) v <= a^(3/2) and -a b <= 1.
struct FeasibilityReport {
  bool feasible = false;
  bool isoperimetric_ok = false;
  bool ab_ok = false;
  double isoperimetric_margin = 0;  // a^(3/2) - 3 sqrt(4 pi) v (0 when no volume target)
  double ab_margin = 0;             // 1 + a b
};

FeasibilityReport feasibility(double a, std::optional<double> v, double b);

// Upper bound for the Willmore energy measured in flat ambient space given
// the value W_M measured in a curved ambient M with |tr K| <= P_sup:
// W_M + 1/4 * P_sup^2 * area.
double willmore_ambient_comparison(double w_m, double p_sup, double area);

}  // namespace willmin
