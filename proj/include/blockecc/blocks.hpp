// blocks.hpp - block decomposition, block-cutpoint tree, articulation
// components, separation predicates, and block-level distances.
//
// A block is a maximal subgraph without a cutpoint of its own: a maximal
// 2-connected subgraph, a bridge with its endpoints, or an isolated vertex.
// Two blocks share at most one vertex, always an articulation point. Every
// edge lies in exactly one block; K1 is a single vertex-only block.

#ifndef BLOCKECC_BLOCKS_HPP
#define BLOCKECC_BLOCKS_HPP

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "blockecc/graph.hpp"

namespace blockecc {

struct Block {
  std::vector<int> vertices;  // ascending
  std::vector<Edge> edges;    // ascending; empty only for the K1 block

  bool is_bridge() const { return edges.size() == 1; }
  // In a block, edge count equals vertex count exactly for cycles.
  bool is_cycle() const { return edges.size() >= 3 && edges.size() == vertices.size(); }
  bool contains_vertex(int v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v);
  }
};

struct BlockDecomposition {
  int n = 0;
  std::vector<Block> blocks;
  std::vector<int> articulation_points;        // ascending
  std::vector<char> is_articulation;           // size n
  std::vector<std::vector<int>> blocks_at;     // per vertex, ascending block ids

  int block_count() const { return static_cast<int>(blocks.size()); }

  // Block owning edge {u,v}. The edge must exist.
  int block_of_edge(int u, int v) const {
    auto it = edge_block_.find(edge_key(u, v));
    if (it == edge_block_.end()) {
      throw std::invalid_argument("no block for edge " + std::to_string(u) + " " +
                                  std::to_string(v));
    }
    return it->second;
  }

  // Decomposition for a connected graph, blocks indexed in the order the
  // depth-first search closes them (deterministic for a given graph).
  friend BlockDecomposition decompose(const Graph& g);

 private:
  static std::uint64_t edge_key(int u, int v) {
    Edge e(u, v);
    return (static_cast<std::uint64_t>(e.u) << 32) | static_cast<std::uint32_t>(e.v);
  }
  std::unordered_map<std::uint64_t, int> edge_block_;
};

inline BlockDecomposition decompose(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("decompose requires at least one vertex");
  if (!is_connected(g)) throw DisconnectedError("decompose requires a connected graph");

  BlockDecomposition dec;
  dec.n = n;
  dec.is_articulation.assign(static_cast<std::size_t>(n), 0);
  dec.blocks_at.assign(static_cast<std::size_t>(n), {});

  if (n == 1) {
    dec.blocks.push_back(Block{{0}, {}});
    dec.blocks_at[0].push_back(0);
    return dec;
  }

  std::vector<int> disc(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<Edge> edge_stack;
  int timer = 0;

  struct Frame {
    int vertex;
    int parent;
    std::size_t next;
  };
  std::vector<Frame> stack;
  stack.push_back({0, -1, 0});
  disc[0] = low[0] = timer++;
  int root_children = 0;

  auto close_block = [&](int u, int w) {
    // Pop the edge stack down to and including tree edge {u,w}.
    Block blk;
    Edge stop(u, w);
    while (true) {
      Edge e = edge_stack.back();
      edge_stack.pop_back();
      blk.edges.push_back(e);
      if (e == stop) break;
    }
    std::sort(blk.edges.begin(), blk.edges.end());
    for (const Edge& e : blk.edges) {
      blk.vertices.push_back(e.u);
      blk.vertices.push_back(e.v);
    }
    std::sort(blk.vertices.begin(), blk.vertices.end());
    blk.vertices.erase(std::unique(blk.vertices.begin(), blk.vertices.end()),
                       blk.vertices.end());
    int id = static_cast<int>(dec.blocks.size());
    for (const Edge& e : blk.edges) {
      dec.edge_block_.emplace(BlockDecomposition::edge_key(e.u, e.v), id);
    }
    dec.blocks.push_back(std::move(blk));
  };

  while (!stack.empty()) {
    Frame& fr = stack.back();
    int u = fr.vertex;
    const auto& nb = g.neighbors(u);
    if (fr.next < nb.size()) {
      int w = nb[fr.next++];
      if (disc[static_cast<std::size_t>(w)] < 0) {
        if (u == 0) ++root_children;
        edge_stack.emplace_back(u, w);
        disc[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = timer++;
        stack.push_back({w, u, 0});
      } else if (w != fr.parent &&
                 disc[static_cast<std::size_t>(w)] < disc[static_cast<std::size_t>(u)]) {
        edge_stack.emplace_back(u, w);
        low[static_cast<std::size_t>(u)] =
            std::min(low[static_cast<std::size_t>(u)], disc[static_cast<std::size_t>(w)]);
      }
    } else {
      stack.pop_back();
      if (!stack.empty()) {
        int p = stack.back().vertex;
        low[static_cast<std::size_t>(p)] =
            std::min(low[static_cast<std::size_t>(p)], low[static_cast<std::size_t>(u)]);
        if (low[static_cast<std::size_t>(u)] >= disc[static_cast<std::size_t>(p)]) {
          close_block(p, u);
          if (p != 0) dec.is_articulation[static_cast<std::size_t>(p)] = 1;
        }
      }
    }
  }
  if (root_children >= 2) dec.is_articulation[0] = 1;

  for (int v = 0; v < n; ++v) {
    if (dec.is_articulation[static_cast<std::size_t>(v)]) dec.articulation_points.push_back(v);
  }
  for (int b = 0; b < dec.block_count(); ++b) {
    for (int v : dec.blocks[static_cast<std::size_t>(b)].vertices) {
      dec.blocks_at[static_cast<std::size_t>(v)].push_back(b);
    }
  }
  return dec;
}

// --- block-cutpoint tree -----------------------------------------------------
//
// Bipartite tree on block nodes and cut nodes; a block node is adjacent to
// the cut nodes of the articulation points it contains.

struct BCTree {
  int num_blocks = 0;
  std::vector<int> cut_vertices;               // ascending vertex ids
  std::vector<int> cut_index_of;               // per vertex, index or -1
  std::vector<std::vector<int>> block_to_cuts; // per block, ascending cut indices
  std::vector<std::vector<int>> cut_to_blocks; // per cut index, ascending block ids

  int cut_count() const { return static_cast<int>(cut_vertices.size()); }
  int node_count() const { return num_blocks + cut_count(); }

  int block_degree(int b) const {
    return static_cast<int>(block_to_cuts[static_cast<std::size_t>(b)].size());
  }
  int cut_degree(int c) const {
    return static_cast<int>(cut_to_blocks[static_cast<std::size_t>(c)].size());
  }

  // At most one node of degree >= 3 (a path has none, a starlike tree one).
  bool path_or_starlike() const {
    int branch_nodes = 0;
    for (int b = 0; b < num_blocks; ++b) {
      if (block_degree(b) >= 3) ++branch_nodes;
    }
    for (int c = 0; c < cut_count(); ++c) {
      if (cut_degree(c) >= 3) ++branch_nodes;
    }
    return branch_nodes <= 1;
  }
};

inline BCTree build_bc_tree(const Graph& g, const BlockDecomposition& dec) {
  BCTree bc;
  bc.num_blocks = dec.block_count();
  bc.cut_vertices = dec.articulation_points;
  bc.cut_index_of.assign(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < bc.cut_vertices.size(); ++i) {
    bc.cut_index_of[static_cast<std::size_t>(bc.cut_vertices[i])] = static_cast<int>(i);
  }
  bc.block_to_cuts.assign(static_cast<std::size_t>(bc.num_blocks), {});
  bc.cut_to_blocks.assign(bc.cut_vertices.size(), {});
  for (int b = 0; b < bc.num_blocks; ++b) {
    for (int v : dec.blocks[static_cast<std::size_t>(b)].vertices) {
      int c = bc.cut_index_of[static_cast<std::size_t>(v)];
      if (c >= 0) {
        bc.block_to_cuts[static_cast<std::size_t>(b)].push_back(c);
        bc.cut_to_blocks[static_cast<std::size_t>(c)].push_back(b);
      }
    }
  }
  return bc;
}

inline BCTree build_bc_tree(const Graph& g) { return build_bc_tree(g, decompose(g)); }

// DOT export: block nodes are boxes "B<i>", cut nodes are circles "a<v>".
inline std::string export_dot(const BCTree& bc) {
  std::ostringstream out;
  out << "graph BC {\n";
  for (int b = 0; b < bc.num_blocks; ++b) {
    out << "  \"B" << b << "\" [shape=box];\n";
  }
  for (int c = 0; c < bc.cut_count(); ++c) {
    out << "  \"a" << bc.cut_vertices[static_cast<std::size_t>(c)]
        << "\" [shape=circle];\n";
  }
  for (int b = 0; b < bc.num_blocks; ++b) {
    for (int c : bc.block_to_cuts[static_cast<std::size_t>(b)]) {
      out << "  \"B" << b << "\" -- \"a" << bc.cut_vertices[static_cast<std::size_t>(c)]
          << "\";\n";
    }
  }
  out << "}\n";
  return out.str();
}

// --- articulation components -------------------------------------------------
//
// The components at an articulation point a (or at a block B) are the shadows
// of the connected pieces of the BC-tree with a's node (B's node) removed.
// Each component keeps its attachment vertex: a itself for components at a
// vertex, the shared articulation point a_i for components at a block.

struct ArticulationComponent {
  int attachment = 0;          // original vertex id shared with the anchor
  std::vector<int> vertices;   // ascending original ids, attachment included
  std::vector<int> blocks;     // ascending block ids of the whole graph
  Graph subgraph;              // standalone copy; ids index into vertices
  int attachment_local = 0;    // attachment's id inside subgraph

  int local_id(int original) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), original);
    if (it == vertices.end() || *it != original) {
      throw std::invalid_argument("vertex not in component");
    }
    return static_cast<int>(it - vertices.begin());
  }
  bool contains_vertex(int v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v);
  }
  bool contains_block(int b) const {
    return std::binary_search(blocks.begin(), blocks.end(), b);
  }
};

namespace detail {

inline ArticulationComponent make_component(const Graph& g, const BlockDecomposition& dec,
                                            std::vector<int> block_ids, int attachment) {
  ArticulationComponent comp;
  comp.attachment = attachment;
  std::sort(block_ids.begin(), block_ids.end());
  comp.blocks = std::move(block_ids);
  for (int b : comp.blocks) {
    const Block& blk = dec.blocks[static_cast<std::size_t>(b)];
    comp.vertices.insert(comp.vertices.end(), blk.vertices.begin(), blk.vertices.end());
  }
  std::sort(comp.vertices.begin(), comp.vertices.end());
  comp.vertices.erase(std::unique(comp.vertices.begin(), comp.vertices.end()),
                      comp.vertices.end());
  comp.subgraph = Graph(static_cast<int>(comp.vertices.size()));
  for (int b : comp.blocks) {
    for (const Edge& e : dec.blocks[static_cast<std::size_t>(b)].edges) {
      comp.subgraph.add_edge(comp.local_id(e.u), comp.local_id(e.v));
    }
  }
  comp.attachment_local = comp.local_id(attachment);
  (void)g;
  return comp;
}

// Blocks of the BC-tree piece reachable from block seed without entering
// banned_cut (or banned_block).
inline std::vector<int> bc_flood(const BCTree& bc, int seed_block, int banned_cut,
                                 int banned_block) {
  std::vector<int> found;
  std::vector<char> seen_block(static_cast<std::size_t>(bc.num_blocks), 0);
  std::vector<char> seen_cut(static_cast<std::size_t>(bc.cut_count()), 0);
  std::vector<int> stack{seed_block};
  seen_block[static_cast<std::size_t>(seed_block)] = 1;
  while (!stack.empty()) {
    int b = stack.back();
    stack.pop_back();
    found.push_back(b);
    for (int c : bc.block_to_cuts[static_cast<std::size_t>(b)]) {
      if (c == banned_cut || seen_cut[static_cast<std::size_t>(c)]) continue;
      seen_cut[static_cast<std::size_t>(c)] = 1;
      for (int nb : bc.cut_to_blocks[static_cast<std::size_t>(c)]) {
        if (nb == banned_block || seen_block[static_cast<std::size_t>(nb)]) continue;
        seen_block[static_cast<std::size_t>(nb)] = 1;
        stack.push_back(nb);
      }
    }
  }
  return found;
}

}  // namespace detail

// One component per block containing a; each includes a as its attachment.
inline std::vector<ArticulationComponent> articulation_components_at_vertex(
    const Graph& g, const BlockDecomposition& dec, const BCTree& bc, int a) {
  if (a < 0 || a >= dec.n) throw std::invalid_argument("vertex out of range");
  int cut = bc.cut_index_of[static_cast<std::size_t>(a)];
  if (cut < 0) {
    throw std::invalid_argument("vertex " + std::to_string(a) +
                                " is not an articulation point");
  }
  std::vector<ArticulationComponent> comps;
  for (int b : bc.cut_to_blocks[static_cast<std::size_t>(cut)]) {
    comps.push_back(
        detail::make_component(g, dec, detail::bc_flood(bc, b, cut, -1), a));
  }
  std::sort(comps.begin(), comps.end(),
            [](const ArticulationComponent& x, const ArticulationComponent& y) {
              return x.blocks.front() < y.blocks.front();
            });
  return comps;
}

// One component per articulation point of block b; empty for a lone block.
inline std::vector<ArticulationComponent> articulation_components_at_block(
    const Graph& g, const BlockDecomposition& dec, const BCTree& bc, int b) {
  if (b < 0 || b >= dec.block_count()) throw std::invalid_argument("block out of range");
  std::vector<ArticulationComponent> comps;
  for (int c : bc.block_to_cuts[static_cast<std::size_t>(b)]) {
    int attachment = bc.cut_vertices[static_cast<std::size_t>(c)];
    std::vector<int> blocks;
    for (int nb : bc.cut_to_blocks[static_cast<std::size_t>(c)]) {
      if (nb == b) continue;
      for (int found : detail::bc_flood(bc, nb, c, b)) blocks.push_back(found);
    }
    std::sort(blocks.begin(), blocks.end());
    blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
    comps.push_back(detail::make_component(g, dec, std::move(blocks), attachment));
  }
  std::sort(comps.begin(), comps.end(),
            [](const ArticulationComponent& x, const ArticulationComponent& y) {
              return x.attachment < y.attachment;
            });
  return comps;
}

// --- separation --------------------------------------------------------------

// True iff u and v lie in different components of G - a. Requires u, v != a.
inline bool vertex_separates(const Graph& g, int a, int u, int v) {
  const int n = g.vertex_count();
  if (a < 0 || a >= n || u < 0 || u >= n || v < 0 || v >= n) {
    throw std::invalid_argument("vertex out of range");
  }
  if (u == a || v == a) {
    throw std::invalid_argument("separation endpoints must differ from the cutpoint");
  }
  if (u == v) return false;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  seen[static_cast<std::size_t>(a)] = 1;
  seen[static_cast<std::size_t>(u)] = 1;
  std::vector<int> stack{u};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    if (x == v) return false;
    for (int w : g.neighbors(x)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        stack.push_back(w);
      }
    }
  }
  return true;
}

// Argument for block-level separation queries: a vertex or a block.
struct ElementRef {
  enum class Kind { Vertex, Block };
  Kind kind = Kind::Vertex;
  int id = 0;
};

inline ElementRef vertex_ref(int v) { return {ElementRef::Kind::Vertex, v}; }
inline ElementRef block_ref(int b) { return {ElementRef::Kind::Block, b}; }

// True iff x and y lie in different articulation components at block b.
// A non-articulation vertex of b (and b itself) lies in no component, so any
// query involving one returns false.
inline bool block_separates(const Graph& g, const BlockDecomposition& dec,
                            const BCTree& bc, int b, ElementRef x, ElementRef y) {
  if (b < 0 || b >= dec.block_count()) throw std::invalid_argument("block out of range");
  auto check = [&](ElementRef e) {
    if (e.kind == ElementRef::Kind::Vertex) {
      if (e.id < 0 || e.id >= dec.n) throw std::invalid_argument("vertex out of range");
    } else if (e.id < 0 || e.id >= dec.block_count()) {
      throw std::invalid_argument("block out of range");
    }
  };
  check(x);
  check(y);
  auto comps = articulation_components_at_block(g, dec, bc, b);
  auto locate = [&](ElementRef e) -> int {
    for (std::size_t i = 0; i < comps.size(); ++i) {
      if (e.kind == ElementRef::Kind::Vertex ? comps[i].contains_vertex(e.id)
                                             : comps[i].contains_block(e.id)) {
        return static_cast<int>(i);
      }
    }
    return -1;
  };
  int cx = locate(x);
  int cy = locate(y);
  return cx >= 0 && cy >= 0 && cx != cy;
}

inline bool block_separates(const Graph& g, int b, ElementRef x, ElementRef y) {
  BlockDecomposition dec = decompose(g);
  BCTree bc = build_bc_tree(g, dec);
  return block_separates(g, dec, bc, b, x, y);
}

// --- block distances ----------------------------------------------------------

// Distances from block b to every vertex (multi-source BFS from V(b)).
inline std::vector<int> block_distance_row(const Graph& g, const BlockDecomposition& dec,
                                           int b) {
  if (b < 0 || b >= dec.block_count()) throw std::invalid_argument("block out of range");
  const int n = g.vertex_count();
  std::vector<int> dist(static_cast<std::size_t>(n), DistanceRow::kUnreachable);
  std::vector<int> queue;
  for (int v : dec.blocks[static_cast<std::size_t>(b)].vertices) {
    dist[static_cast<std::size_t>(v)] = 0;
    queue.push_back(v);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    for (int w : g.neighbors(u)) {
      if (dist[static_cast<std::size_t>(w)] == DistanceRow::kUnreachable) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

// dist(B, v) = min over u in B of dist(u, v).
inline int vertex_block_distance(const Graph& g, const BlockDecomposition& dec, int b,
                                 int v) {
  if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("vertex out of range");
  return block_distance_row(g, dec, b)[static_cast<std::size_t>(v)];
}

// dist(B1, B2) = min over u in B1, v in B2 of dist(u, v).
inline int block_block_distance(const Graph& g, const BlockDecomposition& dec, int b1,
                                int b2) {
  if (b2 < 0 || b2 >= dec.block_count()) throw std::invalid_argument("block out of range");
  std::vector<int> row = block_distance_row(g, dec, b1);
  int best = -1;
  for (int v : dec.blocks[static_cast<std::size_t>(b2)].vertices) {
    int d = row[static_cast<std::size_t>(v)];
    if (best < 0 || d < best) best = d;
  }
  return best;
}

// --- separation additivity -----------------------------------------------------
//
// For every separating triple, the distance through the separator decomposes:
//   a separates x,y:            dist(x,y) = dist(x,a) + dist(a,y)
//   B separates x,y (via a_i):  dist(x,y) = dist(x,B) + dist(a1,a2) + dist(B,y)
// where x and y range over vertices and blocks, with the block-to-anchor terms
// read as block distances. Returns one message per violated identity.

inline std::vector<std::string> check_separation_additivity(const Graph& g,
                                                            const BlockDecomposition& dec,
                                                            const BCTree& bc) {
  std::vector<std::string> violations;
  const int n = g.vertex_count();
  const int nb = dec.block_count();
  std::vector<DistanceRow> vd = all_pairs_bfs(g);
  std::vector<std::vector<int>> bd(static_cast<std::size_t>(nb));
  for (int b = 0; b < nb; ++b) bd[static_cast<std::size_t>(b)] = block_distance_row(g, dec, b);
  auto bbd = [&](int b1, int b2) {
    int best = -1;
    for (int v : dec.blocks[static_cast<std::size_t>(b2)].vertices) {
      int d = bd[static_cast<std::size_t>(b1)][static_cast<std::size_t>(v)];
      if (best < 0 || d < best) best = d;
    }
    return best;
  };
  auto report = [&](const std::string& kind, int anchor, const std::string& x,
                    const std::string& y, int lhs, int rhs) {
    std::ostringstream msg;
    msg << kind << ' ' << anchor << " separates " << x << " and " << y << " but " << lhs
        << " != " << rhs;
    violations.push_back(msg.str());
  };

  // Elements of one component, with the anchor vertex excluded.
  struct Elements {
    std::vector<int> verts;
    std::vector<int> blocks;
    int attachment;
  };
  auto collect = [&](const ArticulationComponent& comp, int skip_vertex) {
    Elements e;
    e.attachment = comp.attachment;
    for (int v : comp.vertices) {
      if (v != skip_vertex) e.verts.push_back(v);
    }
    e.blocks = comp.blocks;
    return e;
  };

  for (int a : dec.articulation_points) {
    auto comps = articulation_components_at_vertex(g, dec, bc, a);
    std::vector<Elements> els;
    els.reserve(comps.size());
    for (const auto& c : comps) els.push_back(collect(c, a));
    const auto& da = vd[static_cast<std::size_t>(a)].dist;
    for (std::size_t i = 0; i < els.size(); ++i) {
      for (std::size_t j = i + 1; j < els.size(); ++j) {
        for (int x : els[i].verts) {
          const auto& dx = vd[static_cast<std::size_t>(x)].dist;
          for (int y : els[j].verts) {
            int lhs = dx[static_cast<std::size_t>(y)];
            int rhs = dx[static_cast<std::size_t>(a)] + da[static_cast<std::size_t>(y)];
            if (lhs != rhs) {
              report("vertex", a, "v" + std::to_string(x), "v" + std::to_string(y), lhs,
                     rhs);
            }
          }
          for (int y : els[j].blocks) {
            int lhs = bd[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)];
            int rhs = dx[static_cast<std::size_t>(a)] +
                      bd[static_cast<std::size_t>(y)][static_cast<std::size_t>(a)];
            if (lhs != rhs) {
              report("vertex", a, "v" + std::to_string(x), "B" + std::to_string(y), lhs,
                     rhs);
            }
          }
        }
        for (int x : els[i].blocks) {
          for (int y : els[j].verts) {
            int lhs = bd[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
            int rhs = bd[static_cast<std::size_t>(x)][static_cast<std::size_t>(a)] +
                      da[static_cast<std::size_t>(y)];
            if (lhs != rhs) {
              report("vertex", a, "B" + std::to_string(x), "v" + std::to_string(y), lhs,
                     rhs);
            }
          }
          for (int y : els[j].blocks) {
            int lhs = bbd(x, y);
            int rhs = bd[static_cast<std::size_t>(x)][static_cast<std::size_t>(a)] +
                      bd[static_cast<std::size_t>(y)][static_cast<std::size_t>(a)];
            if (lhs != rhs) {
              report("vertex", a, "B" + std::to_string(x), "B" + std::to_string(y), lhs,
                     rhs);
            }
          }
        }
      }
    }
  }

  for (int b = 0; b < nb; ++b) {
    auto comps = articulation_components_at_block(g, dec, bc, b);
    if (comps.size() < 2) continue;
    std::vector<Elements> els;
    els.reserve(comps.size());
    for (const auto& c : comps) els.push_back(collect(c, -1));
    const auto& db = bd[static_cast<std::size_t>(b)];
    for (std::size_t i = 0; i < els.size(); ++i) {
      for (std::size_t j = i + 1; j < els.size(); ++j) {
        int mid = vd[static_cast<std::size_t>(els[i].attachment)]
                      .dist[static_cast<std::size_t>(els[j].attachment)];
        for (int x : els[i].verts) {
          const auto& dx = vd[static_cast<std::size_t>(x)].dist;
          for (int y : els[j].verts) {
            int lhs = dx[static_cast<std::size_t>(y)];
            int rhs = db[static_cast<std::size_t>(x)] + mid + db[static_cast<std::size_t>(y)];
            if (lhs != rhs) {
              report("block", b, "v" + std::to_string(x), "v" + std::to_string(y), lhs,
                     rhs);
            }
          }
          for (int y : els[j].blocks) {
            int lhs = bd[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)];
            int rhs = db[static_cast<std::size_t>(x)] + mid + bbd(b, y);
            if (lhs != rhs) {
              report("block", b, "v" + std::to_string(x), "B" + std::to_string(y), lhs,
                     rhs);
            }
          }
        }
        for (int x : els[i].blocks) {
          for (int y : els[j].verts) {
            int lhs = bd[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
            int rhs = bbd(b, x) + mid + db[static_cast<std::size_t>(y)];
            if (lhs != rhs) {
              report("block", b, "B" + std::to_string(x), "v" + std::to_string(y), lhs,
                     rhs);
            }
          }
          for (int y : els[j].blocks) {
            int lhs = bbd(x, y);
            int rhs = bbd(b, x) + mid + bbd(b, y);
            if (lhs != rhs) {
              report("block", b, "B" + std::to_string(x), "B" + std::to_string(y), lhs,
                     rhs);
            }
          }
        }
      }
    }
  }
  return violations;
}

inline std::vector<std::string> check_separation_additivity(const Graph& g) {
  BlockDecomposition dec = decompose(g);
  BCTree bc = build_bc_tree(g, dec);
  return check_separation_additivity(g, dec, bc);
}

}  // namespace blockecc

#endif  // BLOCKECC_BLOCKS_HPP
