#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "willmin/trimesh.hpp"  // for VertexScalars typedef consistency; not meshes

namespace willmin {

struct ForestError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One component of a stratified surface. Bubbles (non-base components of a
// bubble forest) must have genus 0. Each branch point of multiplicity
// theta^2 = m + 1 is recorded by its m value.
struct Component {
  int id = 0;
  int genus = 0;
  bool ghost = false;
  std::vector<int> branch_multiplicities;
};

// A gluing point. Each incidence is (component id, local point id); local
// point ids are unique within a component across all singular points,
// because two gluings at the same surface point would be one singular
// point. At least two sheets meet at a singular point.
struct SingularPoint {
  int id = 0;
  std::vector<std::pair<int, int>> incidences;
};

struct BubbleForest {
  int base = 0;
  std::vector<Component> components;
  std::vector<SingularPoint> singular_points;
};

// Throws ForestError (message names the offending field, JSON-path style)
// unless ids are unique and consistent, incidences are valid, local points
// are not reused, and the dual graph is connected.
void validate_structure(const BubbleForest& forest);

// Dual multigraph: one vertex per component; each singular point yields an
// edge per unordered pair of its incidences, so loops (two sheets of one
// component) and multi-edges are represented.
struct DualGraph {
  std::vector<int> vertex_ids;
  struct EdgeRec { int u, v, singular_id; };  // u <= v; u == v is a loop
  std::vector<EdgeRec> edges;
  bool connected = false;

  int degree(int component_id) const;  // loops count twice
  bool is_simple_tree() const;         // connected, no loops/multi-edges, |E| = |V|-1
};

DualGraph dual_graph(const BubbleForest& forest);

// Bubble tree: dual graph is a simple tree and every component has genus 0.
bool is_bubble_tree(const BubbleForest& forest);
// Bubble forest: dual graph is a simple tree and every non-base component
// has genus 0 (the base may carry genus).
bool is_bubble_forest(const BubbleForest& forest);

struct HauntingReport {
  bool valid = false;        // ghosts form a proper subset of the components
  bool irreducible = false;  // valid and every ghost has dual degree >= 3
  std::vector<std::string> violations;
};

HauntingReport validate_haunting(const BubbleForest& forest);

// Deletes degree-1 ghosts and contracts degree-2 ghosts (merging their two
// singular points into one carrying the non-ghost incidences) until every
// remaining ghost has degree >= 3. Requires a forest whose dual graph is a
// simple tree. Regular components and their mutual attachments are
// preserved; the result is irreducible and the operation is idempotent.
// If the base is removed, the surviving component with the smallest id
// becomes the base (regular components preferred).
BubbleForest reduce_to_irreducible(const BubbleForest& forest);

// Order-independent structural fingerprint (singular point ids are
// renamed away); equal signatures mean equal forests.
std::string canonical_signature(const BubbleForest& forest);
bool forests_equivalent(const BubbleForest& a, const BubbleForest& b);

// Total integral of scalar curvature for a closed branched surface:
// 8 pi (1 - genus) + 4 pi b with b = sum of branch multiplicities.
double gauss_bonnet_branched(int genus, std::span<const int> branch_multiplicities);

// Upper bound for the branch count from the flat-ambient Willmore energy:
// b <= (W - 4 pi (1 - genus)) / (2 pi); negative values clamp to zero with
// the none_possible flag set.
struct BranchBound {
  double bound = 0;
  bool none_possible = false;
};
BranchBound branch_point_bound(double willmore_ambient, int genus);

// --- tree enumeration and the coloring lemma -----------------------------

// All non-isomorphic free trees on n vertices, as edge lists on vertices
// 0..n-1. Generated from canonical rooted level sequences, deduplicated by
// the center-rooted canonical form.
std::vector<std::vector<std::pair<int, int>>> enumerate_free_trees(int n);

// Exhaustively checks, over every free tree with up to max_vertices
// vertices and every coloring in which white vertices have degree >= 3,
// that black vertices outnumber white ones.
struct ColoringReport {
  int max_vertices = 0;
  long long trees_checked = 0;
  long long colorings_checked = 0;
  std::vector<long long> trees_per_size;  // index = vertex count
  struct Counterexample {
    std::vector<std::pair<int, int>> edges;
    std::vector<bool> white;
  };
  std::vector<Counterexample> counterexamples;
};

ColoringReport coloring_lemma_check(int max_vertices);

}  // namespace willmin
