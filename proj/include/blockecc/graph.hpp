// graph.hpp - simple undirected graph, BFS metrics, edge-list parsing, DOT export.
//
// Vertices are dense ids 0..n-1. Graphs are simple: no loops, no parallel
// edges. Adjacency lists are kept sorted, which makes every traversal in the
// library deterministic and serialization canonical.

#ifndef BLOCKECC_GRAPH_HPP
#define BLOCKECC_GRAPH_HPP

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace blockecc {

// Parse failure for edge-list input. line is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Raised by operations whose contract requires a connected input.
class DisconnectedError : public std::runtime_error {
 public:
  explicit DisconnectedError(const std::string& what) : std::runtime_error(what) {}
};

// Undirected edge, normalized so u < v.
struct Edge {
  int u = 0;
  int v = 0;
  Edge() = default;
  Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {}
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(static_cast<std::size_t>(check_size(n))) {}

  int vertex_count() const { return static_cast<int>(adj_.size()); }

  int edge_count() const { return m_; }

  // Inserts edge {u,v}. Rejects loops, duplicates, and out-of-range ids.
  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (has_edge(u, v)) {
      throw std::invalid_argument("duplicate edge " + std::to_string(u) + " " +
                                  std::to_string(v));
    }
    insert_sorted(adj_[static_cast<std::size_t>(u)], v);
    insert_sorted(adj_[static_cast<std::size_t>(v)], u);
    ++m_;
  }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& nb = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  // Neighbors of v in ascending order.
  const std::vector<int>& neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
  }

  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

  int max_degree() const {
    int d = 0;
    for (const auto& nb : adj_) d = std::max(d, static_cast<int>(nb.size()));
    return d;
  }

  // All edges with u < v, ascending lexicographically.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < vertex_count(); ++u) {
      for (int v : adj_[static_cast<std::size_t>(u)]) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adj_ == b.adj_;
  }

 private:
  static int check_size(int n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    return n;
  }
  void check_vertex(int v) const {
    if (v < 0 || v >= vertex_count()) {
      throw std::invalid_argument("vertex " + std::to_string(v) + " out of range [0, " +
                                  std::to_string(vertex_count()) + ")");
    }
  }
  static void insert_sorted(std::vector<int>& xs, int v) {
    xs.insert(std::lower_bound(xs.begin(), xs.end(), v), v);
  }

  std::vector<std::vector<int>> adj_;
  int m_ = 0;
};

// BFS distances from one source. kUnreachable marks vertices in other
// components. dist[source] == 0; dist of adjacent vertices differs by <= 1.
struct DistanceRow {
  static constexpr int kUnreachable = -1;
  int source = 0;
  std::vector<int> dist;
};

inline DistanceRow bfs_distances(const Graph& g, int source) {
  const int n = g.vertex_count();
  if (source < 0 || source >= n) {
    throw std::invalid_argument("bfs source out of range");
  }
  DistanceRow row;
  row.source = source;
  row.dist.assign(static_cast<std::size_t>(n), DistanceRow::kUnreachable);
  std::vector<int> queue;
  queue.reserve(static_cast<std::size_t>(n));
  queue.push_back(source);
  row.dist[static_cast<std::size_t>(source)] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    int du = row.dist[static_cast<std::size_t>(u)];
    for (int w : g.neighbors(u)) {
      if (row.dist[static_cast<std::size_t>(w)] == DistanceRow::kUnreachable) {
        row.dist[static_cast<std::size_t>(w)] = du + 1;
        queue.push_back(w);
      }
    }
  }
  return row;
}

// Shortest-path distance. Throws DisconnectedError if v is unreachable from u.
inline int distance(const Graph& g, int u, int v) {
  DistanceRow row = bfs_distances(g, u);
  int d = row.dist[static_cast<std::size_t>(v)];
  if (d == DistanceRow::kUnreachable) {
    throw DisconnectedError("no path between " + std::to_string(u) + " and " +
                            std::to_string(v));
  }
  return d;
}

// Connectivity. Graphs with fewer than two vertices count as connected.
inline bool is_connected(const Graph& g) {
  if (g.vertex_count() <= 1) return true;
  DistanceRow row = bfs_distances(g, 0);
  return std::none_of(row.dist.begin(), row.dist.end(),
                      [](int d) { return d == DistanceRow::kUnreachable; });
}

inline std::vector<DistanceRow> all_pairs_bfs(const Graph& g) {
  std::vector<DistanceRow> rows;
  rows.reserve(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) rows.push_back(bfs_distances(g, v));
  return rows;
}

// --- edge-list format ------------------------------------------------------
//
// First significant line: "n m". Then exactly m lines "u v". A '#' starts a
// comment that runs to end of line; blank lines are skipped.

inline Graph parse_edge_list(std::istream& in) {
  int line_no = 0;
  int n = -1, m = -1;
  Graph g;
  int edges_read = 0;
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream fields(raw);
    if (n < 0) {
      if (!(fields >> n >> m)) {
        // A line of pure whitespace is not the header.
        std::istringstream probe(raw);
        std::string tok;
        if (probe >> tok) throw ParseError(line_no, "expected header \"n m\"");
        n = -1;
        continue;
      }
      if (n < 0 || m < 0) throw ParseError(line_no, "header counts must be nonnegative");
      std::string extra;
      if (fields >> extra) throw ParseError(line_no, "trailing tokens after header");
      g = Graph(n);
      continue;
    }
    int u, v;
    if (!(fields >> u >> v)) {
      std::istringstream probe(raw);
      std::string tok;
      if (probe >> tok) throw ParseError(line_no, "expected edge \"u v\"");
      continue;
    }
    std::string extra;
    if (fields >> extra) throw ParseError(line_no, "trailing tokens after edge");
    if (edges_read >= m) throw ParseError(line_no, "more edges than declared");
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw ParseError(line_no, "vertex id outside [0, " + std::to_string(n) + ")");
    }
    try {
      g.add_edge(u, v);
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
    ++edges_read;
  }
  if (n < 0) throw ParseError(line_no, "missing header \"n m\"");
  if (edges_read != m) {
    throw ParseError(line_no, "declared " + std::to_string(m) + " edges, found " +
                                  std::to_string(edges_read));
  }
  return g;
}

inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

// Canonical form: header, then edges ascending. Reparsing reproduces g.
inline void write_edge_list(const Graph& g, std::ostream& out) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(g, out);
  return out.str();
}

// Graphviz export; edge order is the canonical ascending order.
inline std::string export_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
  for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace blockecc

#endif  // BLOCKECC_GRAPH_HPP
