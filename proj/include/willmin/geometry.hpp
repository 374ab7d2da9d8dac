#pragma once

#include "willmin/trimesh.hpp"

namespace willmin {

// Discrete geometric quantities of a closed oriented triangle mesh.
// Sign conventions are documented in vertex_kernel.hpp; in short, normals
// point outward and the unit round sphere has mean curvature H = +2.

double total_area(const TriMesh& mesh);

// Signed enclosed volume via the divergence formula
// V = (1/3) * sum_f centroid_f . n_f * A_f = (1/6) * sum_f det(a, b, c).
// Independent of the base point for closed meshes, hence translation
// invariant; positive for outward orientation.
double enclosed_volume(const TriMesh& mesh);

std::vector<double> face_areas(const TriMesh& mesh);
VertexVectors face_normals(const TriMesh& mesh);  // unit, outward

// Barycentric vertex areas; positive, and they sum to total_area.
VertexScalars vertex_areas(const TriMesh& mesh);

// Angle-weighted unit vertex normals.
VertexVectors vertex_normals(const TriMesh& mesh);

struct MeanCurvatureField {
  VertexScalars h;        // signed scalar mean curvature per vertex
  VertexVectors h_vec;    // mean curvature vector, h_vec = (grad area)/A_v
  int thin_angle_count;   // triangle corners with angle < 1e-3 rad (cotangent blow-up risk)
};

// Cotangent-Laplacian mean curvature: H_vec(v) = grad_v(area)/A_v, and
// H(v) = sign(<H_vec, normal>) * |H_vec|.
MeanCurvatureField compute_mean_curvature(const TriMesh& mesh);
VertexScalars mean_curvature(const TriMesh& mesh);

// Signs sigma_v = sign(<grad_v area, vertex normal>) used to orient |H|.
std::vector<double> mean_curvature_signs(const TriMesh& mesh);

// Pointwise cotangent Laplace-Beltrami of a vertex scalar field:
// (Lu)_v = (1/(2 A_v)) * sum_edges (cot a + cot b) (u_j - u_v).
// Applied to the coordinate functions it returns -H_vec.
VertexScalars laplace_beltrami(const TriMesh& mesh, const VertexScalars& u);

// sum_v H_v A_v, the total (integrated) mean curvature.
double integrated_mean_curvature(const TriMesh& mesh);

// Discrete Gauss-Bonnet defect: sum_v (2*pi - angle sum at v) - 2*pi*chi.
// Zero to rounding for every valid closed mesh of any genus.
double gauss_bonnet_defect(const TriMesh& mesh);

constexpr double kThinAngleThreshold = 1e-3;  // radians

}  // namespace willmin
