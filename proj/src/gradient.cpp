#include "willmin/gradient.hpp"

#include <cmath>
#include <string>
#include <thread>
#include <vector>

#include "willmin/geometry.hpp"
#include "willmin/local_energy.hpp"

namespace willmin {

namespace {

// Runs fn(chunk_index, begin, end) over [0, n) split into contiguous
// chunks, one per thread. Chunking by index keeps results deterministic
// for a fixed thread count.
template <class Fn>
void for_chunks(int n, int threads, Fn&& fn) {
  threads = std::max(1, std::min(threads, n));
  if (threads == 1) {
    fn(0, 0, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    const int begin = static_cast<int>(static_cast<long long>(n) * t / threads);
    const int end = static_cast<int>(static_cast<long long>(n) * (t + 1) / threads);
    pool.emplace_back([&fn, t, begin, end] { fn(t, begin, end); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace

VertexVectors energy_gradient(const TriMesh& mesh, const EnergyConfig& config,
                              int threads) {
  const auto& pos = mesh.positions();
  const int nv = mesh.vertex_count();
  const std::vector<double> signs = mean_curvature_signs(mesh);
  const VertexVectors normals =
      config.kind == EnergyKind::HawkingDeficit ? vertex_normals(mesh) : VertexVectors{};
  const bool nonlocal = detail::uses_nonlocal_term(config);

  // The b-term contributes 2 b (int H) * d(int H); int H is evaluated once,
  // through the same kernel the derivatives flow through.
  double h_total = 0;
  if (nonlocal) {
    auto at = [&](int i) { return pos[i]; };
    for (int v = 0; v < nv; ++v)
      h_total += detail::energy_local<double>(mesh, config, v, signs[v], Vec3d{0, 0, 0}, at)
                     .h_weighted;
  }
  const double h_total_factor = nonlocal ? 2 * config.b * h_total : 0;

  const int nthreads = std::max(1, threads);
  std::vector<VertexVectors> partial(nthreads, VertexVectors(nv, Vec3d{0, 0, 0}));

  for_chunks(nv, nthreads, [&](int chunk, int begin, int end) {
    VertexVectors& grad = partial[chunk];
    std::vector<int> stencil;
    for (int v = begin; v < end; ++v) {
      stencil.assign(1, v);
      const auto& ring = mesh.vertices_around(v);
      stencil.insert(stencil.end(), ring.begin(), ring.end());
      const Vec3d n = normals.empty() ? Vec3d{0, 0, 0} : normals[v];

      for (int u : stencil) {
        for (int k = 0; k < 3; ++k) {
          auto seeded = [&](int i) {
            Vec3<Dual> p{Dual(pos[i].x), Dual(pos[i].y), Dual(pos[i].z)};
            if (i == u) p[k].d = 1;
            return p;
          };
          const auto lv = detail::energy_local<Dual>(mesh, config, v, signs[v], n, seeded);
          grad[u][k] += lv.e.d + h_total_factor * lv.h_weighted.d;
        }
      }
    }
  });

  VertexVectors grad(nv, Vec3d{0, 0, 0});
  for (const VertexVectors& part : partial)
    for (int v = 0; v < nv; ++v) grad[v] += part[v];

  for (int v = 0; v < nv; ++v) {
    if (!std::isfinite(grad[v].x) || !std::isfinite(grad[v].y) || !std::isfinite(grad[v].z))
      throw NumericalError("non-finite energy gradient at vertex " + std::to_string(v));
  }
  return grad;
}

VertexVectors area_gradient(const TriMesh& mesh) {
  const auto& pos = mesh.positions();
  VertexVectors grad(mesh.vertex_count(), Vec3d{0, 0, 0});
  for (const auto& f : mesh.faces()) {
    const Vec3d n = cross(pos[f[1]] - pos[f[0]], pos[f[2]] - pos[f[0]]);
    const double two_area = norm(n);
    for (int c = 0; c < 3; ++c) {
      const Vec3d opp = pos[f[(c + 2) % 3]] - pos[f[(c + 1) % 3]];
      grad[f[c]] += cross(n, opp) * (0.5 / two_area);
    }
  }
  return grad;
}

VertexVectors volume_gradient(const TriMesh& mesh) {
  const auto& pos = mesh.positions();
  VertexVectors grad(mesh.vertex_count(), Vec3d{0, 0, 0});
  for (const auto& f : mesh.faces()) {
    grad[f[0]] += cross(pos[f[1]], pos[f[2]]) * (1.0 / 6.0);
    grad[f[1]] += cross(pos[f[2]], pos[f[0]]) * (1.0 / 6.0);
    grad[f[2]] += cross(pos[f[0]], pos[f[1]]) * (1.0 / 6.0);
  }
  return grad;
}

VertexVectors fd_gradient(const TriMesh& mesh, const EnergyConfig& config, double h) {
  VertexVectors grad(mesh.vertex_count());
  std::vector<Vec3d> work = mesh.positions();
  for (int v = 0; v < mesh.vertex_count(); ++v) {
    for (int k = 0; k < 3; ++k) {
      const double saved = work[v][k];
      work[v][k] = saved + h;
      const double e_plus = energy_value(mesh.with_positions(work), config);
      work[v][k] = saved - h;
      const double e_minus = energy_value(mesh.with_positions(work), config);
      work[v][k] = saved;
      grad[v][k] = (e_plus - e_minus) / (2 * h);
    }
  }
  return grad;
}

}  // namespace willmin
