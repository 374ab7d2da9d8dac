#pragma once

#include <array>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "willmin/vec3.hpp"

namespace willmin {

struct MeshError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using VertexScalars = std::vector<double>;
using VertexVectors = std::vector<Vec3d>;

// Indexed closed triangle mesh with derived adjacency. Construction
// validates that the mesh is a closed, consistently oriented 2-manifold
// with no degenerate faces:
//   - every undirected edge is shared by exactly two faces, and appears
//     once in each direction (global orientation consistency);
//   - every face area exceeds 1e-12 * (bbox diagonal)^2;
//   - every vertex has at least one incident face.
// Topology is immutable and shared; position updates produce a new mesh
// via with_positions().
class TriMesh {
 public:
  using Face = std::array<int, 3>;

  // An interior edge with its two opposite vertices (one per incident face).
  struct Edge {
    int a, b;          // endpoint vertex ids, a < b
    int opp_ab;        // vertex opposite the edge in the face containing a->b
    int opp_ba;        // vertex opposite the edge in the face containing b->a
  };

  TriMesh(std::vector<Vec3d> vertices, std::vector<Face> faces);

  const std::vector<Vec3d>& positions() const { return pos_; }
  const std::vector<Face>& faces() const { return topo_->faces; }

  int vertex_count() const { return static_cast<int>(pos_.size()); }
  int face_count() const { return static_cast<int>(topo_->faces.size()); }
  int edge_count() const { return static_cast<int>(topo_->edges.size()); }
  int euler_characteristic() const {
    return vertex_count() - edge_count() + face_count();
  }

  // Face ids incident to vertex v.
  const std::vector<int>& faces_around(int v) const { return topo_->vertex_faces[v]; }
  // Unique neighbor vertex ids of v (the 1-ring).
  const std::vector<int>& vertices_around(int v) const { return topo_->vertex_ring[v]; }
  const std::vector<Edge>& edges() const { return topo_->edges; }

  double bbox_diag() const { return bbox_diag_; }

  // New mesh sharing this topology. Degeneracy is not re-checked here;
  // optimizers moving vertices must guard mesh quality themselves.
  TriMesh with_positions(std::vector<Vec3d> vertices) const;

  static constexpr double kDegenerateAreaFactor = 1e-12;

 private:
  struct Topology {
    std::vector<Face> faces;
    std::vector<std::vector<int>> vertex_faces;
    std::vector<std::vector<int>> vertex_ring;
    std::vector<Edge> edges;
  };

  TriMesh(std::vector<Vec3d> vertices, std::shared_ptr<const Topology> topo);
  void compute_bbox();

  std::vector<Vec3d> pos_;
  std::shared_ptr<const Topology> topo_;
  double bbox_diag_ = 0;
};

}  // namespace willmin
