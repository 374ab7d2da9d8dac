#pragma once

#include "willmin/trimesh.hpp"

namespace willmin {

// Per-vertex shape operator from a least-squares quadric fit over the
// 2-ring, in the frame of the angle-weighted vertex normal. Principal
// curvatures follow the outward-normal convention (unit sphere: +1, +1).
struct ShapeOperatorField {
  VertexScalars kappa1, kappa2;   // principal curvatures, kappa1 >= kappa2
  VertexScalars h;                // kappa1 + kappa2 (fitted, independent of the cotan H)
  VertexScalars a_norm_sq;        // |A|^2  = kappa1^2 + kappa2^2
  VertexScalars a0_norm_sq;       // |A0|^2 = |A|^2 - H^2/2 = (kappa1 - kappa2)^2 / 2
  int clamped_count;              // vertices where |A0|^2 < 0 was clamped to 0
};

ShapeOperatorField fit_shape_operator(const TriMesh& mesh);

struct TraceFreeResult {
  VertexScalars values;
  int clamped_count;
};

// |A0|^2, the squared norm of the trace-free second fundamental form.
// Zero exactly on round spheres (umbilic surfaces). Negative fit artifacts
// are clamped to zero and counted.
TraceFreeResult tracefree_A_norm_sq(const TriMesh& mesh);

// |A|^2, the squared norm of the full second fundamental form.
VertexScalars full_A_norm_sq(const TriMesh& mesh);

}  // namespace willmin
