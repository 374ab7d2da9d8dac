#pragma once

#include "willmin/energy.hpp"
#include "willmin/vertex_kernel.hpp"

namespace willmin {
namespace detail {

// Per-vertex energy density, templated so the same code evaluates the
// energy (T = double) and its exact gradient (T = Dual, seeded per stencil
// coordinate). `e` is the local energy term; `h_weighted` is H_v * A_v,
// accumulated globally for the nonlocal b * (int H)^2 part.
//
// `sign_v` orients |grad area| along the vertex normal and is held fixed
// during differentiation; it is locally constant away from flat points.
template <class T>
struct EnergyLocal {
  T e{};
  T h_weighted{};
};

template <class T, class PosFn>
EnergyLocal<T> energy_local(const TriMesh& mesh, const EnergyConfig& config, int v,
                            double sign_v, const Vec3d& normal_v, PosFn&& pos) {
  using std::sqrt;
  const VertexLocal<T> local = vertex_area_and_grad<T>(mesh, v, pos);
  EnergyLocal<T> out;
  switch (config.kind) {
    case EnergyKind::Willmore:
      // 1/4 H^2 A = 1/4 |grad area|^2 / A; no sign needed.
      out.e = norm_sq(local.area_grad) / local.area * 0.25;
      out.h_weighted = T(0);
      break;
    case EnergyKind::Helfrich: {
      const T h_mag = sqrt(norm_sq(local.area_grad));
      const T h = T(sign_v) * h_mag / local.area;
      const T c = config.c.template eval<T>(pos(v));
      const T hc = h + c;
      out.e = hc * hc * local.area;
      out.h_weighted = T(sign_v) * h_mag;  // H_v A_v
      break;
    }
    case EnergyKind::HawkingDeficit: {
      const T p = config.P.template eval<T>(pos(v), normal_v);
      out.e = norm_sq(local.area_grad) / local.area - p * p * local.area;
      out.h_weighted = T(0);
      break;
    }
  }
  return out;
}

inline bool uses_nonlocal_term(const EnergyConfig& config) {
  return config.kind == EnergyKind::Helfrich && config.b != 0;
}

}  // namespace detail
}  // namespace willmin
