#include "willmin/shapes.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <utility>

namespace willmin {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct MeshBuilder {
  std::vector<Vec3d> vertices;
  std::vector<TriMesh::Face> faces;

  int add_vertex(const Vec3d& p) {
    vertices.push_back(p);
    return static_cast<int>(vertices.size()) - 1;
  }
  void add_face(int a, int b, int c) { faces.push_back({a, b, c}); }
  TriMesh build() { return TriMesh(std::move(vertices), std::move(faces)); }
};

// Midpoint subdivision with shared-edge vertex cache.
void subdivide(MeshBuilder& mb) {
  std::map<std::pair<int, int>, int> midpoint;
  auto mid = [&](int a, int b) {
    auto key = std::minmax(a, b);
    auto it = midpoint.find(key);
    if (it != midpoint.end()) return it->second;
    const int m = mb.add_vertex(0.5 * (mb.vertices[a] + mb.vertices[b]));
    midpoint.emplace(key, m);
    return m;
  };
  std::vector<TriMesh::Face> refined;
  refined.reserve(mb.faces.size() * 4);
  for (const auto& [a, b, c] : mb.faces) {
    const int ab = mid(a, b), bc = mid(b, c), ca = mid(c, a);
    refined.push_back({a, ab, ca});
    refined.push_back({b, bc, ab});
    refined.push_back({c, ca, bc});
    refined.push_back({ab, bc, ca});
  }
  mb.faces = std::move(refined);
}

MeshBuilder icosahedron() {
  const double t = (1.0 + std::sqrt(5.0)) / 2.0;
  MeshBuilder mb;
  const Vec3d pts[12] = {
      {-1, t, 0}, {1, t, 0}, {-1, -t, 0}, {1, -t, 0},
      {0, -1, t}, {0, 1, t}, {0, -1, -t}, {0, 1, -t},
      {t, 0, -1}, {t, 0, 1}, {-t, 0, -1}, {-t, 0, 1}};
  for (const Vec3d& p : pts) mb.add_vertex(p);
  const int f[20][3] = {
      {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
      {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
      {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
      {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};
  for (const auto& tri : f) mb.add_face(tri[0], tri[1], tri[2]);
  return mb;
}

}  // namespace

TriMesh icosphere(int subdivisions, double radius) {
  MeshBuilder mb = icosahedron();
  for (int s = 0; s < subdivisions; ++s) {
    subdivide(mb);
    for (Vec3d& p : mb.vertices) p = normalized(p);
  }
  for (Vec3d& p : mb.vertices) p = radius * normalized(p);
  return mb.build();
}

TriMesh ellipsoid(int subdivisions, double a, double b, double c) {
  MeshBuilder mb = icosahedron();
  for (int s = 0; s < subdivisions; ++s) {
    subdivide(mb);
    for (Vec3d& p : mb.vertices) p = normalized(p);
  }
  for (Vec3d& p : mb.vertices) {
    const Vec3d u = normalized(p);
    p = {a * u.x, b * u.y, c * u.z};
  }
  return mb.build();
}

TriMesh torus(double major_radius, double tube_radius, int major_segments,
              int minor_segments) {
  MeshBuilder mb;
  for (int i = 0; i < major_segments; ++i) {
    const double u = 2 * kPi * i / major_segments;
    for (int j = 0; j < minor_segments; ++j) {
      const double v = 2 * kPi * j / minor_segments;
      const double w = major_radius + tube_radius * std::cos(v);
      mb.add_vertex({w * std::cos(u), w * std::sin(u), tube_radius * std::sin(v)});
    }
  }
  auto idx = [&](int i, int j) {
    return (i % major_segments) * minor_segments + (j % minor_segments);
  };
  for (int i = 0; i < major_segments; ++i) {
    for (int j = 0; j < minor_segments; ++j) {
      const int v00 = idx(i, j), v10 = idx(i + 1, j);
      const int v01 = idx(i, j + 1), v11 = idx(i + 1, j + 1);
      mb.add_face(v00, v10, v11);
      mb.add_face(v00, v11, v01);
    }
  }
  return mb.build();
}

TriMesh tetrahedron(double edge_length) {
  // Vertices of a regular tetrahedron inscribed in a cube have edge 2*sqrt(2).
  const double s = edge_length / (2.0 * std::sqrt(2.0));
  MeshBuilder mb;
  const int a = mb.add_vertex({s, s, s});
  const int b = mb.add_vertex({s, -s, -s});
  const int c = mb.add_vertex({-s, s, -s});
  const int d = mb.add_vertex({-s, -s, s});
  mb.add_face(a, c, b);
  mb.add_face(a, b, d);
  mb.add_face(a, d, c);
  mb.add_face(b, c, d);
  return mb.build();
}

TriMesh perturbed_sphere(int subdivisions, double amplitude, std::uint32_t seed) {
  TriMesh sphere = icosphere(subdivisions);
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<Vec3d> pos = sphere.positions();
  for (Vec3d& p : pos) {
    const Vec3d n = normalized(p);
    const Vec3d noise{unit(rng), unit(rng), unit(rng)};
    p += amplitude * (unit(rng) * n + 0.3 * noise);
  }
  return sphere.with_positions(std::move(pos));
}

TriMesh hex_drum(double radius, double height) {
  MeshBuilder mb;
  const int top_center = mb.add_vertex({0, 0, height});
  const int bot_center = mb.add_vertex({0, 0, 0});
  int top[6], bot[6];
  for (int i = 0; i < 6; ++i) {
    const double a = 2 * kPi * i / 6;
    top[i] = mb.add_vertex({radius * std::cos(a), radius * std::sin(a), height});
    bot[i] = mb.add_vertex({radius * std::cos(a), radius * std::sin(a), 0});
  }
  for (int i = 0; i < 6; ++i) {
    const int j = (i + 1) % 6;
    mb.add_face(top_center, top[i], top[j]);   // cap normal +z
    mb.add_face(bot_center, bot[j], bot[i]);   // cap normal -z
    mb.add_face(top[i], bot[i], bot[j]);       // side, outward
    mb.add_face(top[i], bot[j], top[j]);
  }
  return mb.build();
}

TriMesh genus2_plate() {
  const int nx = 5, ny = 3;
  const double h = 0.4;  // plate thickness
  auto is_hole = [](int i, int j) {
    return j == 1 && (i == 1 || i == 3);
  };
  auto solid = [&](int i, int j) {
    return i >= 0 && i < nx && j >= 0 && j < ny && !is_hole(i, j);
  };

  MeshBuilder mb;
  std::map<std::tuple<int, int, int>, int> vid;  // (i, j, layer)
  auto vertex = [&](int i, int j, int layer) {
    auto key = std::make_tuple(i, j, layer);
    auto it = vid.find(key);
    if (it != vid.end()) return it->second;
    const int v = mb.add_vertex({static_cast<double>(i), static_cast<double>(j),
                                 layer ? h : 0.0});
    vid.emplace(key, v);
    return v;
  };

  for (int i = 0; i < nx; ++i) {
    for (int j = 0; j < ny; ++j) {
      if (!solid(i, j)) continue;
      const int t00 = vertex(i, j, 1), t10 = vertex(i + 1, j, 1);
      const int t01 = vertex(i, j + 1, 1), t11 = vertex(i + 1, j + 1, 1);
      mb.add_face(t00, t10, t11);  // top, normal +z
      mb.add_face(t00, t11, t01);
      const int b00 = vertex(i, j, 0), b10 = vertex(i + 1, j, 0);
      const int b01 = vertex(i, j + 1, 0), b11 = vertex(i + 1, j + 1, 0);
      mb.add_face(b00, b11, b10);  // bottom, normal -z
      mb.add_face(b00, b01, b11);

      // Vertical walls wherever a solid cell borders a hole or the outside.
      // Wall corner order below is chosen so the outward normal points away
      // from the solid cell.
      auto wall = [&](int ax, int ay, int bx, int by) {
        const int ta = vertex(ax, ay, 1), tb = vertex(bx, by, 1);
        const int ba = vertex(ax, ay, 0), bb = vertex(bx, by, 0);
        mb.add_face(ta, ba, bb);
        mb.add_face(ta, bb, tb);
      };
      if (!solid(i, j - 1)) wall(i, j, i + 1, j);          // south edge
      if (!solid(i, j + 1)) wall(i + 1, j + 1, i, j + 1);  // north edge
      if (!solid(i - 1, j)) wall(i, j + 1, i, j);          // west edge
      if (!solid(i + 1, j)) wall(i + 1, j, i + 1, j + 1);  // east edge
    }
  }
  return mb.build();
}

}  // namespace willmin
