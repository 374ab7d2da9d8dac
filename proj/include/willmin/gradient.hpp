#pragma once

#include "willmin/energy.hpp"
#include "willmin/trimesh.hpp"

namespace willmin {

struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact gradient of the discrete energy with respect to vertex positions,
// assembled by forward-mode differentiation of the per-vertex stencils.
// Throws NumericalError naming the first offending vertex if any component
// is non-finite. `threads` > 1 splits the stencil loop deterministically.
VertexVectors energy_gradient(const TriMesh& mesh, const EnergyConfig& config,
                              int threads = 1);

// Exact gradients of the constraint functionals.
VertexVectors area_gradient(const TriMesh& mesh);
VertexVectors volume_gradient(const TriMesh& mesh);

// Central finite differences of the scalar energy; the reference oracle
// for energy_gradient. O(V^2) cost, fine at validation scale.
VertexVectors fd_gradient(const TriMesh& mesh, const EnergyConfig& config, double h);

}  // namespace willmin
