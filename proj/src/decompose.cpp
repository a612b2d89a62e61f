#include <algorithm>
#include <stdexcept>

#include "graph.hpp"
#include "ramsplit/errors.hpp"
#include "ramsplit/model.hpp"

namespace ramsplit {

std::string to_string(PointRole r) {
  switch (r) {
    case PointRole::IsolatedTree: return "isolated-tree";
    case PointRole::Cycle: return "cycle";
    case PointRole::Connecting: return "connecting";
    case PointRole::Tail: return "tail";
  }
  return "unknown";
}

// An edge lies on a chordless cycle iff it is not a bridge: the shortest
// cycle through a non-bridge edge is chordless (a doubled edge is a 2-cycle).
// So cycle components are the endpoints of non-bridge edges, clusters are
// the connected pieces of the non-bridge subgraph, and everything else is a
// forest hanging between clusters.
Decomposition decompose(const Model& m, const std::set<ComponentId>& ram) {
  for (const auto& c : ram) m.component(c);
  auto g = detail::induced(m, ram);
  const int n = static_cast<int>(g.vertices.size());
  const auto is_bridge = detail::bridges(g);

  Decomposition out;
  std::vector<bool> on_cycle(n, false);
  detail::UnionFind clusters(n);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (is_bridge[e]) continue;
    on_cycle[g.edges[e].u] = on_cycle[g.edges[e].v] = true;
    clusters.unite(g.edges[e].u, g.edges[e].v);
    out.point_roles[g.edges[e].id] = PointRole::Cycle;
  }

  detail::UnionFind forest(n);
  for (const auto& edge : g.edges) {
    if (!on_cycle[edge.u] && !on_cycle[edge.v]) forest.unite(edge.u, edge.v);
  }

  std::map<int, std::set<ComponentId>> cluster_sets;
  std::map<int, std::set<ComponentId>> forest_sets;
  for (int v = 0; v < n; ++v) {
    if (on_cycle[v]) {
      cluster_sets[clusters.find(v)].insert(g.vertices[v]);
    } else {
      forest_sets[forest.find(v)].insert(g.vertices[v]);
    }
  }

  struct Attachments {
    std::vector<int> edges;
    std::set<int> clusters;
  };
  std::map<int, Attachments> attach;
  std::map<int, std::vector<int>> internal;
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    const auto& edge = g.edges[e];
    bool cu = on_cycle[edge.u], cv = on_cycle[edge.v];
    if (cu && cv) {
      if (is_bridge[e]) out.point_roles[edge.id] = PointRole::Connecting;
    } else if (!cu && !cv) {
      internal[forest.find(edge.u)].push_back(e);
    } else {
      int tree_end = cu ? edge.v : edge.u;
      int cycle_end = cu ? edge.u : edge.v;
      auto& a = attach[forest.find(tree_end)];
      a.edges.push_back(e);
      a.clusters.insert(clusters.find(cycle_end));
    }
  }

  for (const auto& [root, members] : forest_sets) {
    const Attachments& a = attach[root];
    PointRole role;
    if (a.edges.empty()) {
      role = PointRole::IsolatedTree;
      out.isolated_trees.push_back(members);
    } else if (a.clusters.size() >= 2) {
      role = PointRole::Connecting;
      out.connecting_paths.push_back(members);
    } else if (a.edges.size() == 1) {
      role = PointRole::Tail;
      out.tails.push_back(members);
    } else {
      throw std::logic_error("non-cycle set meets one cluster twice");
    }
    for (int e : internal[root]) out.point_roles[g.edges[e].id] = role;
    for (int e : a.edges) out.point_roles[g.edges[e].id] = role;
  }
  for (const auto& [root, members] : cluster_sets) out.cycle_clusters.push_back(members);

  for (auto* v : {&out.isolated_trees, &out.cycle_clusters, &out.connecting_paths, &out.tails}) {
    std::sort(v->begin(), v->end());
  }
  return out;
}

}  // namespace ramsplit
