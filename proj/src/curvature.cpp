#include "willmin/curvature.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <vector>

#include "willmin/geometry.hpp"

namespace willmin {

namespace {

// Unique vertices within graph distance 2 of v, excluding v itself.
std::vector<int> two_ring(const TriMesh& mesh, int v) {
  std::vector<int> out = mesh.vertices_around(v);
  for (int n : mesh.vertices_around(v)) {
    for (int nn : mesh.vertices_around(n)) {
      if (nn != v) out.push_back(nn);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

ShapeOperatorField fit_shape_operator(const TriMesh& mesh) {
  const auto& pos = mesh.positions();
  const VertexVectors normals = vertex_normals(mesh);
  const int nv = mesh.vertex_count();

  ShapeOperatorField out;
  out.kappa1.resize(nv);
  out.kappa2.resize(nv);
  out.h.resize(nv);
  out.a_norm_sq.resize(nv);
  out.a0_norm_sq.resize(nv);
  out.clamped_count = 0;

  for (int v = 0; v < nv; ++v) {
    const Vec3d n = normals[v];
    // Tangent frame orthogonal to the vertex normal.
    Vec3d t1 = std::abs(n.x) < 0.9 ? cross(n, Vec3d{1, 0, 0}) : cross(n, Vec3d{0, 1, 0});
    t1 = normalized(t1);
    const Vec3d t2 = cross(n, t1);

    const std::vector<int> ring = two_ring(mesh, v);
    const int m = static_cast<int>(ring.size());
    // Height field over the tangent plane: w = a u^2 + b uv + c v^2 (+ d u + e v).
    // The linear terms absorb errors in the estimated normal; with fewer
    // than 5 samples they are dropped so the system stays determined.
    const bool with_linear = m >= 5;
    const int cols = with_linear ? 5 : 3;
    Eigen::MatrixXd M(m, cols);
    Eigen::VectorXd rhs(m);
    for (int s = 0; s < m; ++s) {
      const Vec3d d = pos[ring[s]] - pos[v];
      const double u = dot(d, t1), w = dot(d, t2);
      M(s, 0) = u * u;
      M(s, 1) = u * w;
      M(s, 2) = w * w;
      if (with_linear) {
        M(s, 3) = u;
        M(s, 4) = w;
      }
      rhs(s) = dot(d, n);
    }
    const Eigen::VectorXd sol =
        M.colPivHouseholderQr().solve(rhs);

    // Graph w(u,v) with upward normal along +n. First/second fundamental
    // forms of the graph at the origin; sign flipped so the outward-normal
    // shape operator of a sphere is positive.
    const double wu = with_linear ? sol(3) : 0.0;
    const double wv = with_linear ? sol(4) : 0.0;
    const double W = std::sqrt(1 + wu * wu + wv * wv);
    const double g11 = 1 + wu * wu, g12 = wu * wv, g22 = 1 + wv * wv;
    const double h11 = -2 * sol(0) / W, h12 = -sol(1) / W, h22 = -2 * sol(2) / W;

    const double det_g = g11 * g22 - g12 * g12;
    const double trace = (g22 * h11 - 2 * g12 * h12 + g11 * h22) / det_g;  // kappa1 + kappa2
    const double det_s = (h11 * h22 - h12 * h12) / det_g;                  // kappa1 * kappa2

    double disc = 0.25 * trace * trace - det_s;
    if (disc < 0) {
      ++out.clamped_count;
      disc = 0;
    }
    const double root = std::sqrt(disc);
    out.kappa1[v] = 0.5 * trace + root;
    out.kappa2[v] = 0.5 * trace - root;
    out.h[v] = trace;
    out.a_norm_sq[v] = out.kappa1[v] * out.kappa1[v] + out.kappa2[v] * out.kappa2[v];
    out.a0_norm_sq[v] = 2.0 * disc;  // (kappa1 - kappa2)^2 / 2
  }
  return out;
}

TraceFreeResult tracefree_A_norm_sq(const TriMesh& mesh) {
  ShapeOperatorField field = fit_shape_operator(mesh);
  return {std::move(field.a0_norm_sq), field.clamped_count};
}

VertexScalars full_A_norm_sq(const TriMesh& mesh) {
  return fit_shape_operator(mesh).a_norm_sq;
}

}  // namespace willmin
