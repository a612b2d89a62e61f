#pragma once

// Index-based multigraph views of a Model, shared by the graph algorithms.

#include <map>
#include <set>
#include <vector>

#include "ramsplit/model.hpp"

namespace ramsplit::detail {

struct Multigraph {
  struct Edge {
    int u;
    int v;
    LocationId id;
  };
  std::vector<ComponentId> vertices;
  std::map<ComponentId, int> index;
  std::vector<Edge> edges;
  std::vector<std::vector<int>> incident;  // edge indices per vertex, in edge (id) order

  int other(int edge, int vertex) const {
    return edges[edge].u == vertex ? edges[edge].v : edges[edge].u;
  }
};

/// Multigraph induced on `subset`; self-intersections are dropped.
Multigraph induced(const Model& m, const std::set<ComponentId>& subset);
Multigraph whole(const Model& m);

/// Connected-component label per vertex; returns the number of components.
int connected_components(const Multigraph& g, std::vector<int>& label);

/// is_bridge[e] for every edge (parallel edges are never bridges).
std::vector<bool> bridges(const Multigraph& g);

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
  }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace ramsplit::detail
