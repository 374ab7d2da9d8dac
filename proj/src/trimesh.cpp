#include "willmin/trimesh.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <unordered_map>

namespace willmin {

namespace {

// Packs an ordered vertex pair into one key; vertex ids fit in 32 bits.
inline std::uint64_t edge_key(int a, int b) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

}  // namespace

TriMesh::TriMesh(std::vector<Vec3d> vertices, std::vector<Face> faces)
    : pos_(std::move(vertices)) {
  const int nv = static_cast<int>(pos_.size());
  const int nf = static_cast<int>(faces.size());
  if (nv < 4 || nf < 4) throw MeshError("mesh too small to be a closed surface");

  auto topo = std::make_shared<Topology>();
  topo->faces = std::move(faces);
  topo->vertex_faces.resize(nv);
  topo->vertex_ring.resize(nv);

  for (int f = 0; f < nf; ++f) {
    const Face& tri = topo->faces[f];
    for (int c = 0; c < 3; ++c) {
      const int v = tri[c];
      if (v < 0 || v >= nv)
        throw MeshError("face " + std::to_string(f) + " references invalid vertex " +
                        std::to_string(v));
    }
    if (tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2])
      throw MeshError("face " + std::to_string(f) + " repeats a vertex");
    for (int c = 0; c < 3; ++c) topo->vertex_faces[tri[c]].push_back(f);
  }

  for (int v = 0; v < nv; ++v) {
    if (topo->vertex_faces[v].empty())
      throw MeshError("vertex " + std::to_string(v) + " has no incident face");
  }

  // Directed-edge census: closed + consistently oriented means every
  // undirected edge occurs exactly once in each direction.
  std::unordered_map<std::uint64_t, int> directed;  // key -> opposite vertex
  directed.reserve(static_cast<std::size_t>(nf) * 3);
  for (int f = 0; f < nf; ++f) {
    const Face& tri = topo->faces[f];
    for (int c = 0; c < 3; ++c) {
      const int a = tri[c], b = tri[(c + 1) % 3], opp = tri[(c + 2) % 3];
      if (!directed.emplace(edge_key(a, b), opp).second)
        throw MeshError("directed edge (" + std::to_string(a) + "," + std::to_string(b) +
                        ") appears twice; orientation is inconsistent or surface is non-manifold");
    }
  }
  for (const auto& [key, opp] : directed) {
    const int a = static_cast<int>(key >> 32);
    const int b = static_cast<int>(key & 0xffffffffu);
    auto rev = directed.find(edge_key(b, a));
    if (rev == directed.end())
      throw MeshError("edge (" + std::to_string(a) + "," + std::to_string(b) +
                      ") has no partner; surface has boundary");
    if (a < b) topo->edges.push_back(Edge{a, b, opp, rev->second});
  }

  for (const Edge& e : topo->edges) {
    topo->vertex_ring[e.a].push_back(e.b);
    topo->vertex_ring[e.b].push_back(e.a);
  }
  for (auto& ring : topo->vertex_ring) std::sort(ring.begin(), ring.end());

  topo_ = std::move(topo);
  compute_bbox();

  const double min_area = kDegenerateAreaFactor * bbox_diag_ * bbox_diag_;
  for (int f = 0; f < face_count(); ++f) {
    const Face& tri = topo_->faces[f];
    const Vec3d u = pos_[tri[1]] - pos_[tri[0]];
    const Vec3d w = pos_[tri[2]] - pos_[tri[0]];
    if (0.5 * norm(cross(u, w)) <= min_area)
      throw MeshError("face " + std::to_string(f) + " is degenerate");
  }
}

TriMesh::TriMesh(std::vector<Vec3d> vertices, std::shared_ptr<const Topology> topo)
    : pos_(std::move(vertices)), topo_(std::move(topo)) {
  compute_bbox();
}

void TriMesh::compute_bbox() {
  Vec3d lo{std::numeric_limits<double>::max(), std::numeric_limits<double>::max(),
           std::numeric_limits<double>::max()};
  Vec3d hi{-lo.x, -lo.y, -lo.z};
  for (const Vec3d& p : pos_) {
    lo.x = std::min(lo.x, p.x); lo.y = std::min(lo.y, p.y); lo.z = std::min(lo.z, p.z);
    hi.x = std::max(hi.x, p.x); hi.y = std::max(hi.y, p.y); hi.z = std::max(hi.z, p.z);
  }
  bbox_diag_ = norm(hi - lo);
}

TriMesh TriMesh::with_positions(std::vector<Vec3d> vertices) const {
  if (static_cast<int>(vertices.size()) != vertex_count())
    throw MeshError("position buffer size does not match vertex count");
  return TriMesh(std::move(vertices), topo_);
}

}  // namespace willmin
