// oracles.hpp - brute-force reference implementations for cross-checking.
//
// Each oracle recomputes a quantity straight from its definition, by a
// different algorithm than the production code, and is intentionally slow.
// Size guards are hard errors, not silent skips; callers filter first.

#ifndef BLOCKECC_ORACLES_HPP
#define BLOCKECC_ORACLES_HPP

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "blockecc/graph.hpp"

namespace blockecc {

inline void oracle_guard(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument("oracle size guard: " + what);
}

// All-pairs distances by Floyd-Warshall. -1 encodes unreachable. n <= 64.
inline std::vector<std::vector<int>> oracle_all_pairs(const Graph& g) {
  const int n = g.vertex_count();
  oracle_guard(n <= 64, "all-pairs oracle requires n <= 64");
  const int inf = 1 << 28;
  std::vector<std::vector<int>> d(static_cast<std::size_t>(n),
                                  std::vector<int>(static_cast<std::size_t>(n), inf));
  for (int v = 0; v < n; ++v) {
    d[v][v] = 0;
    for (int w : g.neighbors(v)) d[v][w] = 1;
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (d[i][k] == inf) continue;
      for (int j = 0; j < n; ++j) {
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
      }
    }
  }
  for (auto& row : d) {
    for (int& x : row) {
      if (x >= inf) x = -1;
    }
  }
  return d;
}

// Articulation points by deletion: v is one iff G - v has more components
// among the remaining vertices than G does. Connected input, n <= 64.
inline std::vector<int> oracle_articulation_points(const Graph& g) {
  const int n = g.vertex_count();
  oracle_guard(n <= 64, "articulation oracle requires n <= 64");
  std::vector<int> cuts;
  if (n <= 2) return cuts;
  for (int v = 0; v < n; ++v) {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    seen[static_cast<std::size_t>(v)] = 1;
    int start = v == 0 ? 1 : 0;
    std::vector<int> stack{start};
    seen[static_cast<std::size_t>(start)] = 1;
    int reached = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(u)) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          ++reached;
          stack.push_back(w);
        }
      }
    }
    if (reached < n - 1) cuts.push_back(v);
  }
  return cuts;
}

namespace detail {

struct EdgeUnionFind {
  std::vector<int> parent;
  explicit EdgeUnionFind(int m) : parent(static_cast<std::size_t>(m)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      x = parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

// Enumerates every simple cycle once (smallest vertex first, orientation
// fixed by second < last) and merges the edges of each cycle.
inline void merge_cycle_edges(const Graph& g, const std::vector<Edge>& edges,
                              EdgeUnionFind& uf) {
  const int n = g.vertex_count();
  auto edge_id = [&](int u, int v) {
    Edge e(u, v);
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    return static_cast<int>(it - edges.begin());
  };
  std::vector<char> on_path(static_cast<std::size_t>(n), 0);
  std::vector<int> path;
  for (int s = 0; s < n; ++s) {
    path.assign(1, s);
    on_path.assign(static_cast<std::size_t>(n), 0);
    on_path[static_cast<std::size_t>(s)] = 1;
    // Iterative DFS over simple paths that stay above s.
    struct Frame {
      int vertex;
      std::size_t next;
    };
    std::vector<Frame> stack{{s, 0}};
    while (!stack.empty()) {
      Frame& fr = stack.back();
      const auto& nb = g.neighbors(fr.vertex);
      if (fr.next >= nb.size()) {
        on_path[static_cast<std::size_t>(fr.vertex)] = 0;
        path.pop_back();
        stack.pop_back();
        continue;
      }
      int w = nb[fr.next++];
      if (w == s && path.size() >= 3 && path[1] < path.back()) {
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
          uf.unite(edge_id(path[i], path[i + 1]), edge_id(path.back(), s));
        }
      }
      if (w <= s || on_path[static_cast<std::size_t>(w)]) continue;
      on_path[static_cast<std::size_t>(w)] = 1;
      path.push_back(w);
      stack.push_back({w, 0});
    }
  }
}

}  // namespace detail

// Block partition from the definition: two edges are in a common block iff
// some simple cycle passes through both (reflexive-transitive closure).
// Returns edge sets, each sorted, ordered by smallest edge. m <= 14.
inline std::vector<std::vector<Edge>> oracle_blocks(const Graph& g) {
  oracle_guard(g.edge_count() <= 14, "block oracle requires m <= 14");
  std::vector<Edge> edges = g.edges();
  detail::EdgeUnionFind uf(static_cast<int>(edges.size()));
  detail::merge_cycle_edges(g, edges, uf);
  std::vector<std::vector<Edge>> classes;
  std::vector<int> root_class(edges.size(), -1);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    int r = uf.find(static_cast<int>(i));
    if (root_class[static_cast<std::size_t>(r)] < 0) {
      root_class[static_cast<std::size_t>(r)] = static_cast<int>(classes.size());
      classes.emplace_back();
    }
    classes[static_cast<std::size_t>(root_class[static_cast<std::size_t>(r)])].push_back(
        edges[i]);
  }
  for (auto& c : classes) std::sort(c.begin(), c.end());
  std::sort(classes.begin(), classes.end());
  return classes;
}

// Separation from the definition: a separates u and v iff every simple
// u-v path visits a. Exits early on the first path that avoids a. n <= 10.
inline bool oracle_separates(const Graph& g, int a, int u, int v) {
  const int n = g.vertex_count();
  oracle_guard(n <= 10, "separation oracle requires n <= 10");
  if (u == a || v == a) throw std::invalid_argument("endpoint equals separator");
  if (u == v) return false;
  std::vector<char> on_path(static_cast<std::size_t>(n), 0);
  bool found_avoiding = false;
  bool found_any = false;
  // Recursive enumeration of simple paths from u to v.
  auto walk = [&](auto&& self, int x, bool through_a) -> void {
    if (found_avoiding) return;
    if (x == v) {
      found_any = true;
      if (!through_a) found_avoiding = true;
      return;
    }
    on_path[static_cast<std::size_t>(x)] = 1;
    for (int w : g.neighbors(x)) {
      if (!on_path[static_cast<std::size_t>(w)]) {
        self(self, w, through_a || w == a);
      }
      if (found_avoiding) break;
    }
    on_path[static_cast<std::size_t>(x)] = 0;
  };
  walk(walk, u, false);
  if (found_avoiding) return false;
  return found_any;
}

}  // namespace blockecc

#endif  // BLOCKECC_ORACLES_HPP
