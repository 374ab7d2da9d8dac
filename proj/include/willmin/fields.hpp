#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "willmin/dual.hpp"
#include "willmin/trimesh.hpp"
#include "willmin/vec3.hpp"

namespace willmin {

// Spontaneous-curvature style scalar field on R^3. Only a fixed set of
// builtin shapes is supported; no expression parser.
//   constant:    f(x) = offset
//   linear-in-z: f(x) = offset + scale * z
//   radial:      f(x) = offset + scale * |x|
// Evaluation is templated so the energy stencils can differentiate through
// vertex positions; gradient/Hessian contractions are closed-form, for the
// Euler-Lagrange residual.
struct ScalarField {
  enum class Kind { Constant, LinearZ, Radial };

  Kind kind = Kind::Constant;
  double offset = 0;
  double scale = 0;

  static ScalarField constant(double value) { return {Kind::Constant, value, 0}; }
  static ScalarField linear_z(double scale, double offset = 0) {
    return {Kind::LinearZ, offset, scale};
  }
  static ScalarField radial(double scale, double offset = 0) {
    return {Kind::Radial, offset, scale};
  }

  bool is_zero() const {
    return offset == 0 && (kind == Kind::Constant || scale == 0);
  }

  template <class T>
  T eval(const Vec3<T>& x) const {
    switch (kind) {
      case Kind::Constant: return T(offset);
      case Kind::LinearZ: return T(offset) + T(scale) * x.z;
      case Kind::Radial: return T(offset) + T(scale) * norm(x);
    }
    return T(0);
  }

  Vec3d gradient(const Vec3d& x) const {
    switch (kind) {
      case Kind::Constant: return {0, 0, 0};
      case Kind::LinearZ: return {0, 0, scale};
      case Kind::Radial: {
        const double r = norm(x);
        if (r == 0) return {0, 0, 0};
        return (scale / r) * x;
      }
    }
    return {0, 0, 0};
  }

  double hessian_trace(const Vec3d& x) const {
    if (kind != Kind::Radial) return 0;
    const double r = norm(x);
    return r > 0 ? 2 * scale / r : 0;
  }

  // n^T Hess(f) n for a unit vector n.
  double hessian_quad(const Vec3d& x, const Vec3d& n) const {
    if (kind != Kind::Radial) return 0;
    const double r = norm(x);
    if (r == 0) return 0;
    const double xn = dot(x, n);
    return scale * (dot(n, n) / r - xn * xn / (r * r * r));
  }

  // sup |f| over the mesh vertices (finite by construction on a bounded mesh).
  double sup_abs(const TriMesh& mesh) const {
    double s = 0;
    for (const Vec3d& p : mesh.positions()) s = std::max(s, std::abs(eval(p)));
    return s;
  }
};

// Prescribed field P(x, nu) entering the Hawking deficit. Builtins ignore
// the arguments (none / constant), so no derivative flows through the
// vertex normal.
struct NormalField {
  enum class Kind { None, Constant };

  Kind kind = Kind::None;
  double value = 0;

  static NormalField none() { return {Kind::None, 0}; }
  static NormalField constant(double value) { return {Kind::Constant, value}; }

  bool is_none() const { return kind == Kind::None; }

  template <class T>
  T eval(const Vec3<T>& /*x*/, const Vec3d& /*normal*/) const {
    return T(kind == Kind::Constant ? value : 0.0);
  }
};

}  // namespace willmin
