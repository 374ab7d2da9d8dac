#include "willmin/forest.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace willmin {

namespace {

constexpr double kPi = 3.14159265358979323846;

const Component* find_component(const BubbleForest& forest, int id) {
  for (const Component& c : forest.components)
    if (c.id == id) return &c;
  return nullptr;
}

}  // namespace

void validate_structure(const BubbleForest& forest) {
  if (forest.components.empty()) throw ForestError("components: must be non-empty");

  std::set<int> comp_ids;
  for (std::size_t i = 0; i < forest.components.size(); ++i) {
    const Component& c = forest.components[i];
    if (!comp_ids.insert(c.id).second)
      throw ForestError("components[" + std::to_string(i) + "].id: duplicate id " +
                        std::to_string(c.id));
    if (c.genus < 0)
      throw ForestError("components[" + std::to_string(i) + "].genus: must be >= 0");
    for (std::size_t j = 0; j < c.branch_multiplicities.size(); ++j) {
      if (c.branch_multiplicities[j] < 1)
        throw ForestError("components[" + std::to_string(i) + "].branch_multiplicities[" +
                          std::to_string(j) + "]: must be >= 1");
    }
  }
  if (!comp_ids.count(forest.base))
    throw ForestError("base: unknown component id " + std::to_string(forest.base));

  std::set<int> sp_ids;
  std::set<std::pair<int, int>> used_local;
  for (std::size_t i = 0; i < forest.singular_points.size(); ++i) {
    const SingularPoint& sp = forest.singular_points[i];
    const std::string path = "singular_points[" + std::to_string(i) + "]";
    if (!sp_ids.insert(sp.id).second)
      throw ForestError(path + ".id: duplicate id " + std::to_string(sp.id));
    if (sp.incidences.size() < 2)
      throw ForestError(path + ".incidences: fewer than two sheets meet here");
    for (std::size_t j = 0; j < sp.incidences.size(); ++j) {
      const auto& [cid, local] = sp.incidences[j];
      if (!comp_ids.count(cid))
        throw ForestError(path + ".incidences[" + std::to_string(j) +
                          "]: unknown component id " + std::to_string(cid));
      if (!used_local.insert({cid, local}).second)
        throw ForestError(path + ".incidences[" + std::to_string(j) + "]: local point " +
                          std::to_string(local) + " of component " + std::to_string(cid) +
                          " is used by more than one incidence");
    }
  }

  if (!dual_graph(forest).connected)
    throw ForestError("singular_points: dual graph is not connected");
}

int DualGraph::degree(int component_id) const {
  int d = 0;
  for (const EdgeRec& e : edges) {
    if (e.u == component_id) ++d;
    if (e.v == component_id) ++d;  // loops count twice
  }
  return d;
}

bool DualGraph::is_simple_tree() const {
  if (!connected) return false;
  if (edges.size() + 1 != vertex_ids.size()) return false;
  std::set<std::pair<int, int>> seen;
  for (const EdgeRec& e : edges) {
    if (e.u == e.v) return false;                       // loop
    if (!seen.insert({e.u, e.v}).second) return false;  // multi-edge
  }
  return true;
}

DualGraph dual_graph(const BubbleForest& forest) {
  DualGraph g;
  for (const Component& c : forest.components) g.vertex_ids.push_back(c.id);

  for (const SingularPoint& sp : forest.singular_points) {
    for (std::size_t i = 0; i < sp.incidences.size(); ++i) {
      for (std::size_t j = i + 1; j < sp.incidences.size(); ++j) {
        const int a = sp.incidences[i].first, b = sp.incidences[j].first;
        g.edges.push_back({std::min(a, b), std::max(a, b), sp.id});
      }
    }
  }

  // Connectivity by union-find over component ids.
  std::map<int, int> parent;
  for (int id : g.vertex_ids) parent[id] = id;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : g.edges) parent[find(e.u)] = find(e.v);
  std::set<int> roots;
  for (int id : g.vertex_ids) roots.insert(find(id));
  g.connected = roots.size() == 1;
  return g;
}

bool is_bubble_tree(const BubbleForest& forest) {
  if (!dual_graph(forest).is_simple_tree()) return false;
  for (const Component& c : forest.components)
    if (c.genus != 0) return false;
  return true;
}

bool is_bubble_forest(const BubbleForest& forest) {
  if (!dual_graph(forest).is_simple_tree()) return false;
  for (const Component& c : forest.components)
    if (c.id != forest.base && c.genus != 0) return false;
  return true;
}

HauntingReport validate_haunting(const BubbleForest& forest) {
  HauntingReport report;
  const DualGraph g = dual_graph(forest);

  std::size_t ghost_count = 0;
  for (const Component& c : forest.components) ghost_count += c.ghost ? 1 : 0;
  if (ghost_count == forest.components.size()) {
    report.violations.push_back("all components are ghosts; the map would be constant");
    report.valid = false;
    report.irreducible = false;
    return report;
  }
  report.valid = true;

  report.irreducible = true;
  for (const Component& c : forest.components) {
    if (!c.ghost) continue;
    const int deg = g.degree(c.id);
    if (deg < 3) {
      report.irreducible = false;
      report.violations.push_back("ghost component " + std::to_string(c.id) +
                                  " has degree " + std::to_string(deg) + " (< 3)");
    }
  }
  return report;
}

BubbleForest reduce_to_irreducible(const BubbleForest& forest) {
  validate_structure(forest);
  if (!dual_graph(forest).is_simple_tree())
    throw ForestError("reduce_to_irreducible: dual graph must be a simple tree");
  const HauntingReport haunting = validate_haunting(forest);
  if (!haunting.valid)
    throw ForestError("reduce_to_irreducible: invalid haunting (all components ghosts)");

  BubbleForest f = forest;
  int next_sp_id = 0;
  for (const SingularPoint& sp : f.singular_points) next_sp_id = std::max(next_sp_id, sp.id + 1);

  auto erase_component = [&](int id) {
    std::erase_if(f.components, [&](const Component& c) { return c.id == id; });
  };

  // Each pass removes degree-1 ghosts first, then contracts one degree-2
  // ghost, and repeats until no ghost has degree < 3. The brute-force
  // rewriting oracle in the tests checks that the order does not matter.
  for (;;) {
    const DualGraph g = dual_graph(f);
    int deg1_ghost = -1, deg2_ghost = -1;
    for (const Component& c : f.components) {
      if (!c.ghost) continue;
      const int deg = g.degree(c.id);
      if (deg <= 1 && deg1_ghost < 0) deg1_ghost = c.id;
      else if (deg == 2 && deg2_ghost < 0) deg2_ghost = c.id;
    }

    if (deg1_ghost >= 0) {
      // Delete the ghost together with its gluing point.
      std::erase_if(f.singular_points, [&](const SingularPoint& sp) {
        return std::any_of(sp.incidences.begin(), sp.incidences.end(),
                           [&](const auto& inc) { return inc.first == deg1_ghost; });
      });
      erase_component(deg1_ghost);
      continue;
    }
    if (deg2_ghost >= 0) {
      // Merge the ghost's two singular points into one, keeping the
      // incidences that do not belong to the ghost.
      SingularPoint merged;
      merged.id = next_sp_id++;
      std::erase_if(f.singular_points, [&](const SingularPoint& sp) {
        const bool touches =
            std::any_of(sp.incidences.begin(), sp.incidences.end(),
                        [&](const auto& inc) { return inc.first == deg2_ghost; });
        if (touches) {
          for (const auto& inc : sp.incidences)
            if (inc.first != deg2_ghost) merged.incidences.push_back(inc);
        }
        return touches;
      });
      f.singular_points.push_back(std::move(merged));
      erase_component(deg2_ghost);
      continue;
    }
    break;
  }

  if (f.components.empty())
    throw ForestError("reduce_to_irreducible: reduction emptied the forest");

  // Re-seat the base if it was deleted: smallest surviving id, regular
  // components preferred.
  if (!find_component(f, f.base)) {
    int best = -1;
    bool best_regular = false;
    for (const Component& c : f.components) {
      const bool regular = !c.ghost;
      if (best < 0 || (regular && !best_regular) ||
          (regular == best_regular && c.id < best)) {
        best = c.id;
        best_regular = regular;
      }
    }
    f.base = best;
  }
  return f;
}

std::string canonical_signature(const BubbleForest& forest) {
  std::ostringstream out;
  std::vector<const Component*> comps;
  for (const Component& c : forest.components) comps.push_back(&c);
  std::sort(comps.begin(), comps.end(),
            [](const Component* a, const Component* b) { return a->id < b->id; });
  out << "base=" << forest.base << ";";
  for (const Component* c : comps) {
    std::vector<int> mult = c->branch_multiplicities;
    std::sort(mult.begin(), mult.end());
    out << "c" << c->id << "(g" << c->genus << (c->ghost ? ",ghost" : "") << ",m[";
    for (int m : mult) out << m << ",";
    out << "]);";
  }
  std::vector<std::string> points;
  for (const SingularPoint& sp : forest.singular_points) {
    std::vector<std::pair<int, int>> inc = sp.incidences;
    std::sort(inc.begin(), inc.end());
    std::ostringstream ps;
    for (const auto& [cid, local] : inc) ps << "(" << cid << "," << local << ")";
    points.push_back(ps.str());
  }
  std::sort(points.begin(), points.end());
  for (const std::string& p : points) out << "p" << p << ";";
  return out.str();
}

bool forests_equivalent(const BubbleForest& a, const BubbleForest& b) {
  return canonical_signature(a) == canonical_signature(b);
}

double gauss_bonnet_branched(int genus, std::span<const int> branch_multiplicities) {
  int b = 0;
  for (int m : branch_multiplicities) b += m;
  return 8 * kPi * (1 - genus) + 4 * kPi * b;
}

BranchBound branch_point_bound(double willmore_ambient, int genus) {
  const double raw = (willmore_ambient - 4 * kPi * (1 - genus)) / (2 * kPi);
  if (raw < 0) return {0.0, true};
  return {raw, false};
}

// --- tree enumeration -----------------------------------------------------

namespace {

// Beyer-Hedetniemi: all canonical level sequences of rooted trees on n
// vertices (root at level 0, parent of i is the nearest j < i with
// level[j] = level[i] - 1).
std::vector<std::vector<int>> rooted_level_sequences(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> L(n);
  for (int i = 0; i < n; ++i) L[i] = i;  // path
  out.push_back(L);
  if (n <= 2) return out;
  for (;;) {
    int p = -1;
    for (int i = n - 1; i >= 0; --i) {
      if (L[i] >= 2) { p = i; break; }
    }
    if (p < 0) break;
    int q = -1;
    for (int i = p - 1; i >= 0; --i) {
      if (L[i] == L[p] - 1) { q = i; break; }
    }
    for (int i = p; i < n; ++i) L[i] = L[i - (p - q)];
    out.push_back(L);
  }
  return out;
}

std::vector<std::vector<int>> adjacency_from_levels(const std::vector<int>& L) {
  const int n = static_cast<int>(L.size());
  std::vector<std::vector<int>> adj(n);
  std::vector<int> last_at_level(n, -1);
  last_at_level[0] = 0;
  for (int i = 1; i < n; ++i) {
    const int parent = last_at_level[L[i] - 1];
    adj[i].push_back(parent);
    adj[parent].push_back(i);
    last_at_level[L[i]] = i;
  }
  return adj;
}

// Tree centers by leaf peeling (one or two).
std::vector<int> tree_centers(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  if (n == 1) return {0};
  std::vector<int> degree(n);
  std::vector<int> layer;
  for (int v = 0; v < n; ++v) {
    degree[v] = static_cast<int>(adj[v].size());
    if (degree[v] == 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    std::vector<int> next;
    remaining -= static_cast<int>(layer.size());
    for (int v : layer) {
      degree[v] = 0;
      for (int u : adj[v])
        if (degree[u] > 0 && --degree[u] == 1) next.push_back(u);
    }
    layer = std::move(next);
  }
  return layer;
}

// AHU canonical encoding of a rooted tree.
std::string ahu_encode(const std::vector<std::vector<int>>& adj, int v, int parent) {
  std::vector<std::string> children;
  for (int u : adj[v])
    if (u != parent) children.push_back(ahu_encode(adj, u, v));
  std::sort(children.begin(), children.end());
  std::string s = "(";
  for (const std::string& c : children) s += c;
  s += ")";
  return s;
}

std::string free_tree_canonical(const std::vector<std::vector<int>>& adj) {
  const std::vector<int> centers = tree_centers(adj);
  std::string best;
  for (int c : centers) {
    std::string enc = ahu_encode(adj, c, -1);
    if (best.empty() || enc < best) best = std::move(enc);
  }
  return best;
}

}  // namespace

std::vector<std::vector<std::pair<int, int>>> enumerate_free_trees(int n) {
  std::vector<std::vector<std::pair<int, int>>> trees;
  if (n <= 0) return trees;
  if (n == 1) {
    trees.push_back({});
    return trees;
  }
  std::set<std::string> seen;
  for (const auto& L : rooted_level_sequences(n)) {
    const auto adj = adjacency_from_levels(L);
    if (!seen.insert(free_tree_canonical(adj)).second) continue;
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v)
      for (int u : adj[v])
        if (v < u) edges.push_back({v, u});
    trees.push_back(std::move(edges));
  }
  return trees;
}

ColoringReport coloring_lemma_check(int max_vertices) {
  if (max_vertices < 1 || max_vertices > 16)
    throw std::invalid_argument("coloring_lemma_check: max_vertices must be in [1,16]");
  ColoringReport report;
  report.max_vertices = max_vertices;
  report.trees_per_size.assign(max_vertices + 1, 0);

  for (int n = 1; n <= max_vertices; ++n) {
    const auto trees = enumerate_free_trees(n);
    report.trees_per_size[n] = static_cast<long long>(trees.size());
    for (const auto& edges : trees) {
      ++report.trees_checked;
      std::vector<int> degree(n, 0);
      for (const auto& [u, v] : edges) { ++degree[u]; ++degree[v]; }
      std::vector<int> eligible;  // vertices that may be colored white
      for (int v = 0; v < n; ++v)
        if (degree[v] >= 3) eligible.push_back(v);

      const int subsets = 1 << eligible.size();
      for (int mask = 0; mask < subsets; ++mask) {
        ++report.colorings_checked;
        const int whites = __builtin_popcount(static_cast<unsigned>(mask));
        const int blacks = n - whites;
        if (!(blacks > whites)) {
          ColoringReport::Counterexample ce;
          ce.edges = edges;
          ce.white.assign(n, false);
          for (std::size_t i = 0; i < eligible.size(); ++i)
            if (mask & (1 << i)) ce.white[eligible[i]] = true;
          report.counterexamples.push_back(std::move(ce));
        }
      }
    }
  }
  return report;
}

}  // namespace willmin
