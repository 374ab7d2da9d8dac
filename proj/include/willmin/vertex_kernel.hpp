#pragma once

#include "willmin/dual.hpp"
#include "willmin/trimesh.hpp"
#include "willmin/vec3.hpp"

namespace willmin {

// Per-vertex geometric stencil, templated on the scalar type.
//
// Conventions (used throughout the library):
//   - orientation: faces wind counter-clockwise seen from outside, so face
//     normals point outward;
//   - mean curvature H is the trace of the second fundamental form taken
//     with respect to the outward unit normal: H = kappa_1 + kappa_2, and
//     the unit round sphere has H = +2;
//   - the area gradient at a vertex equals the integrated mean curvature
//     vector, grad_v(total area) = A_v * H_vec(v). This is the classical
//     cotangent formula written via face normals.
//
// Everything a vertex stencil computes depends only on the closed 1-ring
// of that vertex, which is what makes exact per-stencil differentiation
// with dual numbers cheap.

template <class T>
struct VertexLocal {
  T area{};           // barycentric vertex area (1/3 of incident face areas)
  Vec3<T> area_grad;  // d(total mesh area)/d(position of this vertex)
};

// PosFn: callable (int vertex_id) -> Vec3<T>.
template <class T, class PosFn>
VertexLocal<T> vertex_area_and_grad(const TriMesh& mesh, int v, PosFn&& pos) {
  VertexLocal<T> out;
  out.area = T(0);
  out.area_grad = Vec3<T>{T(0), T(0), T(0)};
  const auto& faces = mesh.faces();
  for (int f : mesh.faces_around(v)) {
    const auto& tri = faces[f];
    // Rotate indices so the stencil vertex comes first.
    int i = tri[0], j = tri[1], k = tri[2];
    if (j == v) { i = tri[1]; j = tri[2]; k = tri[0]; }
    else if (k == v) { i = tri[2]; j = tri[0]; k = tri[1]; }
    const Vec3<T> pi = pos(i), pj = pos(j), pk = pos(k);
    const Vec3<T> n = cross(pj - pi, pk - pi);  // 2*A_f * outward unit normal
    const T two_area = norm(n);
    out.area += two_area * (1.0 / 6.0);
    // grad of this face's area w.r.t. x_v: 0.5 * n_hat x (x_k - x_j)
    out.area_grad += cross(n, pk - pj) * (T(0.5) / two_area);
  }
  return out;
}

}  // namespace willmin
