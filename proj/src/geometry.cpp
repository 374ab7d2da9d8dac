#include "willmin/geometry.hpp"

#include <cmath>

#include "willmin/vertex_kernel.hpp"

namespace willmin {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double total_area(const TriMesh& mesh) {
  const auto& pos = mesh.positions();
  double area = 0;
  for (const auto& f : mesh.faces())
    area += 0.5 * norm(cross(pos[f[1]] - pos[f[0]], pos[f[2]] - pos[f[0]]));
  return area;
}

double enclosed_volume(const TriMesh& mesh) {
  const auto& pos = mesh.positions();
  double vol = 0;
  for (const auto& f : mesh.faces())
    vol += dot(pos[f[0]], cross(pos[f[1]], pos[f[2]])) / 6.0;
  return vol;
}

std::vector<double> face_areas(const TriMesh& mesh) {
  const auto& pos = mesh.positions();
  std::vector<double> areas(mesh.face_count());
  for (int f = 0; f < mesh.face_count(); ++f) {
    const auto& tri = mesh.faces()[f];
    areas[f] = 0.5 * norm(cross(pos[tri[1]] - pos[tri[0]], pos[tri[2]] - pos[tri[0]]));
  }
  return areas;
}

VertexVectors face_normals(const TriMesh& mesh) {
  const auto& pos = mesh.positions();
  VertexVectors normals(mesh.face_count());
  for (int f = 0; f < mesh.face_count(); ++f) {
    const auto& tri = mesh.faces()[f];
    normals[f] = normalized(cross(pos[tri[1]] - pos[tri[0]], pos[tri[2]] - pos[tri[0]]));
  }
  return normals;
}

VertexScalars vertex_areas(const TriMesh& mesh) {
  VertexScalars areas(mesh.vertex_count(), 0.0);
  const auto& pos = mesh.positions();
  for (const auto& f : mesh.faces()) {
    const double a = 0.5 * norm(cross(pos[f[1]] - pos[f[0]], pos[f[2]] - pos[f[0]]));
    for (int c = 0; c < 3; ++c) areas[f[c]] += a / 3.0;
  }
  return areas;
}

VertexVectors vertex_normals(const TriMesh& mesh) {
  const auto& pos = mesh.positions();
  VertexVectors normals(mesh.vertex_count(), Vec3d{0, 0, 0});
  for (const auto& f : mesh.faces()) {
    for (int c = 0; c < 3; ++c) {
      const Vec3d& p = pos[f[c]];
      const Vec3d u = pos[f[(c + 1) % 3]] - p;
      const Vec3d w = pos[f[(c + 2) % 3]] - p;
      const double angle =
          std::atan2(norm(cross(u, w)), dot(u, w));  // corner angle, robust near 0 and pi
      normals[f[c]] += angle * normalized(cross(u, w));
    }
  }
  for (Vec3d& n : normals) n = normalized(n);
  return normals;
}

MeanCurvatureField compute_mean_curvature(const TriMesh& mesh) {
  const auto& pos = mesh.positions();
  const VertexVectors normals = vertex_normals(mesh);
  MeanCurvatureField field;
  field.h.resize(mesh.vertex_count());
  field.h_vec.resize(mesh.vertex_count());
  field.thin_angle_count = 0;

  for (const auto& f : mesh.faces()) {
    for (int c = 0; c < 3; ++c) {
      const Vec3d u = pos[f[(c + 1) % 3]] - pos[f[c]];
      const Vec3d w = pos[f[(c + 2) % 3]] - pos[f[c]];
      if (std::atan2(norm(cross(u, w)), dot(u, w)) < kThinAngleThreshold)
        ++field.thin_angle_count;
    }
  }

  auto at = [&](int i) { return pos[i]; };
  for (int v = 0; v < mesh.vertex_count(); ++v) {
    const auto local = vertex_area_and_grad<double>(mesh, v, at);
    const Vec3d hvec = (1.0 / local.area) * local.area_grad;
    field.h_vec[v] = hvec;
    const double mag = norm(hvec);
    field.h[v] = dot(hvec, normals[v]) >= 0 ? mag : -mag;
  }
  return field;
}

VertexScalars mean_curvature(const TriMesh& mesh) {
  return compute_mean_curvature(mesh).h;
}

std::vector<double> mean_curvature_signs(const TriMesh& mesh) {
  const auto& pos = mesh.positions();
  const VertexVectors normals = vertex_normals(mesh);
  std::vector<double> signs(mesh.vertex_count(), 1.0);
  auto at = [&](int i) { return pos[i]; };
  for (int v = 0; v < mesh.vertex_count(); ++v) {
    const auto local = vertex_area_and_grad<double>(mesh, v, at);
    signs[v] = dot(local.area_grad, normals[v]) >= 0 ? 1.0 : -1.0;
  }
  return signs;
}

VertexScalars laplace_beltrami(const TriMesh& mesh, const VertexScalars& u) {
  const auto& pos = mesh.positions();
  const VertexScalars areas = vertex_areas(mesh);
  VertexScalars integrated(mesh.vertex_count(), 0.0);
  auto cot_at = [&](int apex, int a, int b) {
    const Vec3d e1 = pos[a] - pos[apex];
    const Vec3d e2 = pos[b] - pos[apex];
    return dot(e1, e2) / norm(cross(e1, e2));
  };
  for (const auto& e : mesh.edges()) {
    const double w = 0.5 * (cot_at(e.opp_ab, e.a, e.b) + cot_at(e.opp_ba, e.a, e.b));
    const double du = u[e.b] - u[e.a];
    integrated[e.a] += w * du;
    integrated[e.b] -= w * du;
  }
  for (int v = 0; v < mesh.vertex_count(); ++v) integrated[v] /= areas[v];
  return integrated;
}

double integrated_mean_curvature(const TriMesh& mesh) {
  const MeanCurvatureField field = compute_mean_curvature(mesh);
  const VertexScalars areas = vertex_areas(mesh);
  double total = 0;
  for (int v = 0; v < mesh.vertex_count(); ++v) total += field.h[v] * areas[v];
  return total;
}

double gauss_bonnet_defect(const TriMesh& mesh) {
  const auto& pos = mesh.positions();
  VertexScalars angle_sum(mesh.vertex_count(), 0.0);
  for (const auto& f : mesh.faces()) {
    for (int c = 0; c < 3; ++c) {
      const Vec3d u = pos[f[(c + 1) % 3]] - pos[f[c]];
      const Vec3d w = pos[f[(c + 2) % 3]] - pos[f[c]];
      angle_sum[f[c]] += std::atan2(norm(cross(u, w)), dot(u, w));
    }
  }
  double defect_sum = 0;
  for (double s : angle_sum) defect_sum += 2 * kPi - s;
  return defect_sum - 2 * kPi * mesh.euler_characteristic();
}

}  // namespace willmin
