// eccentricity.hpp - vertex and block eccentricity, radius, diameter,
// centers, classification, and the structural checkers built on them.
//
// Block eccentricity of B: becc(B) = max over vertices v of dist(B, v),
// where dist(B, v) = min over u in B of dist(u, v). Block radius brad is the
// minimum becc over blocks; blocks realizing it are the central blocks.
// Classification: type A iff brad == rad, type B iff brad < rad.

#ifndef BLOCKECC_ECCENTRICITY_HPP
#define BLOCKECC_ECCENTRICITY_HPP

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "blockecc/blocks.hpp"
#include "blockecc/graph.hpp"

namespace blockecc {

enum class GraphType { A, B };

inline char type_letter(GraphType t) { return t == GraphType::A ? 'A' : 'B'; }

// Classification witness. Type A carries the unique central articulation
// point; type B carries the unique central block. K1 has rad == brad == 0 and
// is flagged degenerate: type A by definition, skipped by theorem checkers.
struct TypeVerdict {
  GraphType type = GraphType::B;
  bool degenerate = false;
  int central_point = -1;
  int central_block = -1;
};

struct EccentricityReport {
  std::vector<int> ecc;                    // per vertex
  std::vector<int> becc;                   // per block
  int rad = 0;
  int brad = 0;
  int diam = 0;
  std::vector<int> center;                 // vertices of minimum eccentricity
  std::vector<int> central_blocks;         // blocks of minimum block eccentricity
  std::vector<int> periphery;              // vertices of maximum eccentricity
  std::vector<int> peripheral_blocks;      // blocks meeting the periphery
  std::vector<std::vector<int>> eccentric; // per vertex, its eccentric vertices
  TypeVerdict verdict;
};

inline std::vector<int> vertex_eccentricities(const Graph& g) {
  if (!is_connected(g)) throw DisconnectedError("eccentricity requires a connected graph");
  std::vector<int> ecc(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int v = 0; v < g.vertex_count(); ++v) {
    DistanceRow row = bfs_distances(g, v);
    ecc[static_cast<std::size_t>(v)] = *std::max_element(row.dist.begin(), row.dist.end());
  }
  return ecc;
}

// Vertices realizing ecc(v).
inline std::vector<int> eccentric_vertices(const Graph& g, int v) {
  if (!is_connected(g)) throw DisconnectedError("eccentricity requires a connected graph");
  DistanceRow row = bfs_distances(g, v);
  int e = *std::max_element(row.dist.begin(), row.dist.end());
  std::vector<int> out;
  for (int u = 0; u < g.vertex_count(); ++u) {
    if (row.dist[static_cast<std::size_t>(u)] == e) out.push_back(u);
  }
  return out;
}

inline int block_eccentricity(const Graph& g, const BlockDecomposition& dec, int b) {
  std::vector<int> row = block_distance_row(g, dec, b);
  return *std::max_element(row.begin(), row.end());
}

// dist'(B, v) = max over u in B of dist(u, v).
inline int upper_distance(const Graph& g, const BlockDecomposition& dec, int b, int v) {
  if (b < 0 || b >= dec.block_count()) throw std::invalid_argument("block out of range");
  DistanceRow row = bfs_distances(g, v);
  int best = 0;
  for (int u : dec.blocks[static_cast<std::size_t>(b)].vertices) {
    int d = row.dist[static_cast<std::size_t>(u)];
    if (d == DistanceRow::kUnreachable) {
      throw DisconnectedError("upper distance requires a connected graph");
    }
    best = std::max(best, d);
  }
  return best;
}

// becc'(B) = max over v in B of ecc(v). The maximum over all blocks equals
// the vertex diameter, since some block contains a peripheral vertex.
inline int upper_eccentricity(const Graph& g, const BlockDecomposition& dec, int b) {
  if (b < 0 || b >= dec.block_count()) throw std::invalid_argument("block out of range");
  int best = 0;
  for (int v : dec.blocks[static_cast<std::size_t>(b)].vertices) {
    DistanceRow row = bfs_distances(g, v);
    int e = *std::max_element(row.dist.begin(), row.dist.end());
    best = std::max(best, e);
  }
  return best;
}

// The block as a graph of its own, vertices renumbered by ascending original
// id. Within-block distances agree with whole-graph distances.
inline Graph block_subgraph(const BlockDecomposition& dec, int b) {
  if (b < 0 || b >= dec.block_count()) throw std::invalid_argument("block out of range");
  const Block& blk = dec.blocks[static_cast<std::size_t>(b)];
  Graph sub(static_cast<int>(blk.vertices.size()));
  auto local = [&](int v) {
    return static_cast<int>(std::lower_bound(blk.vertices.begin(), blk.vertices.end(), v) -
                            blk.vertices.begin());
  };
  for (const Edge& e : blk.edges) sub.add_edge(local(e.u), local(e.v));
  return sub;
}

inline int graph_diameter(const Graph& g) {
  if (!is_connected(g)) throw DisconnectedError("diameter requires a connected graph");
  int best = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    DistanceRow row = bfs_distances(g, v);
    best = std::max(best, *std::max_element(row.dist.begin(), row.dist.end()));
  }
  return best;
}

inline EccentricityReport full_report(const Graph& g, const BlockDecomposition& dec) {
  if (!is_connected(g)) throw DisconnectedError("report requires a connected graph");
  const int n = g.vertex_count();
  EccentricityReport rep;
  rep.ecc.resize(static_cast<std::size_t>(n));
  rep.eccentric.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    DistanceRow row = bfs_distances(g, v);
    int e = *std::max_element(row.dist.begin(), row.dist.end());
    rep.ecc[static_cast<std::size_t>(v)] = e;
    for (int u = 0; u < n; ++u) {
      if (row.dist[static_cast<std::size_t>(u)] == e) {
        rep.eccentric[static_cast<std::size_t>(v)].push_back(u);
      }
    }
  }
  rep.rad = *std::min_element(rep.ecc.begin(), rep.ecc.end());
  rep.diam = *std::max_element(rep.ecc.begin(), rep.ecc.end());
  for (int v = 0; v < n; ++v) {
    if (rep.ecc[static_cast<std::size_t>(v)] == rep.rad) rep.center.push_back(v);
    if (rep.ecc[static_cast<std::size_t>(v)] == rep.diam) rep.periphery.push_back(v);
  }

  rep.becc.resize(static_cast<std::size_t>(dec.block_count()));
  for (int b = 0; b < dec.block_count(); ++b) {
    rep.becc[static_cast<std::size_t>(b)] = block_eccentricity(g, dec, b);
  }
  rep.brad = *std::min_element(rep.becc.begin(), rep.becc.end());
  for (int b = 0; b < dec.block_count(); ++b) {
    if (rep.becc[static_cast<std::size_t>(b)] == rep.brad) rep.central_blocks.push_back(b);
    const Block& blk = dec.blocks[static_cast<std::size_t>(b)];
    bool peripheral = std::any_of(rep.periphery.begin(), rep.periphery.end(),
                                  [&](int v) { return blk.contains_vertex(v); });
    if (peripheral) rep.peripheral_blocks.push_back(b);
  }

  rep.verdict.degenerate = (n == 1);
  if (rep.brad == rep.rad) {
    rep.verdict.type = GraphType::A;
    rep.verdict.central_point = rep.center.front();
  } else {
    rep.verdict.type = GraphType::B;
    rep.verdict.central_block = rep.central_blocks.front();
  }
  return rep;
}

inline EccentricityReport full_report(const Graph& g) {
  return full_report(g, decompose(g));
}

// --- checkers ----------------------------------------------------------------
//
// Each checker recomputes its claim from scratch and returns violations as
// messages; an empty vector is a pass. Claims that require at least two
// blocks are vacuous below that.

namespace detail {

inline std::string becc_tag(int b, int val) {
  return "B" + std::to_string(b) + "(becc " + std::to_string(val) + ")";
}

}  // namespace detail

// Every central block contains the entire center. The graph is type A
// (brad == rad) iff there are at least two central blocks, in which case the
// center is a single articulation point and the central blocks are precisely
// the blocks through it. Type B has a unique central block; other blocks may
// still touch the center without being central.
inline std::vector<std::string> check_central_block_theorem(const Graph& g,
                                                            const BlockDecomposition& dec,
                                                            const EccentricityReport& rep) {
  std::vector<std::string> out;
  if (dec.block_count() < 2) return out;

  for (int b : rep.central_blocks) {
    const Block& blk = dec.blocks[static_cast<std::size_t>(b)];
    for (int v : rep.center) {
      if (!blk.contains_vertex(v)) {
        out.push_back("central block " + std::to_string(b) +
                      " misses central point " + std::to_string(v));
      }
    }
  }

  bool type_a = rep.brad == rep.rad;
  bool multiple = rep.central_blocks.size() >= 2;
  if (type_a != multiple) {
    out.push_back(std::string("brad") + (type_a ? " == " : " != ") +
                  "rad but central block count is " +
                  std::to_string(rep.central_blocks.size()));
  }
  if (type_a) {
    if (rep.center.size() != 1) {
      out.push_back("type A with " + std::to_string(rep.center.size()) +
                    " central points");
    } else {
      int a = rep.center.front();
      if (!dec.is_articulation[static_cast<std::size_t>(a)]) {
        out.push_back("type A central point " + std::to_string(a) +
                      " is not an articulation point");
      }
      if (dec.blocks_at[static_cast<std::size_t>(a)] != rep.central_blocks) {
        out.push_back("type A: blocks at the central point differ from central blocks");
      }
    }
  } else if (rep.central_blocks.size() != 1) {
    out.push_back("type B with " + std::to_string(rep.central_blocks.size()) +
                  " central blocks");
  }
  return out;
}

// Location of eccentric vertices relative to the articulation components at
// the center. Type A: every vertex of a component has an eccentric vertex
// outside it, and the central point reaches into two components. Type B:
// vertices of a component have no eccentric vertex inside it.
inline std::vector<std::string> check_eccentric_location(const Graph& g,
                                                         const BlockDecomposition& dec,
                                                         const BCTree& bc,
                                                         const EccentricityReport& rep) {
  std::vector<std::string> out;
  if (dec.block_count() < 2) return out;

  if (rep.verdict.type == GraphType::A) {
    int a = rep.verdict.central_point;
    if (!dec.is_articulation[static_cast<std::size_t>(a)]) {
      out.push_back("central point is not an articulation point; skipping location check");
      return out;
    }
    auto comps = articulation_components_at_vertex(g, dec, bc, a);
    for (std::size_t i = 0; i < comps.size(); ++i) {
      for (int v : comps[i].vertices) {
        if (v == a) continue;
        const auto& ev = rep.eccentric[static_cast<std::size_t>(v)];
        bool outside = std::any_of(ev.begin(), ev.end(),
                                   [&](int u) { return !comps[i].contains_vertex(u); });
        if (!outside) {
          out.push_back("vertex " + std::to_string(v) +
                        " has all eccentric vertices inside its component at " +
                        std::to_string(a));
        }
      }
    }
    // The central point itself must look into at least two components.
    std::vector<char> hit(comps.size(), 0);
    for (int u : rep.eccentric[static_cast<std::size_t>(a)]) {
      for (std::size_t i = 0; i < comps.size(); ++i) {
        if (u != a && comps[i].contains_vertex(u)) hit[i] = 1;
      }
    }
    if (std::count(hit.begin(), hit.end(), 1) < 2) {
      out.push_back("central point " + std::to_string(a) +
                    " has eccentric vertices in fewer than two components");
    }
  } else {
    int cb = rep.verdict.central_block;
    auto comps = articulation_components_at_block(g, dec, bc, cb);
    for (const auto& comp : comps) {
      for (int v : comp.vertices) {
        const auto& ev = rep.eccentric[static_cast<std::size_t>(v)];
        for (int u : ev) {
          if (comp.contains_vertex(u)) {
            out.push_back("vertex " + std::to_string(v) + " has eccentric vertex " +
                          std::to_string(u) + " inside its component at block " +
                          std::to_string(cb));
            break;
          }
        }
      }
    }
  }
  return out;
}

// Radius versus diameter through the central block. Type A: diam == 2 rad.
// Type B, with D the diameter of the central block as a standalone graph:
//   2 rad - D <= diam <= 2 rad,  diam <= 2 brad + D,  rad - brad <= D.
inline std::vector<std::string> check_radius_diameter_bounds(const Graph& g,
                                                             const BlockDecomposition& dec,
                                                             const EccentricityReport& rep) {
  std::vector<std::string> out;
  auto fail = [&](const std::string& msg) { out.push_back(msg); };
  if (rep.verdict.type == GraphType::A) {
    if (rep.diam != 2 * rep.rad) {
      fail("type A but diam " + std::to_string(rep.diam) + " != 2 rad " +
           std::to_string(2 * rep.rad));
    }
    return out;
  }
  int cb = rep.verdict.central_block;
  Graph sub = block_subgraph(dec, cb);
  const Block& blk = dec.blocks[static_cast<std::size_t>(cb)];
  // Within-block distances must agree with whole-graph distances.
  for (int lu = 0; lu < sub.vertex_count(); ++lu) {
    DistanceRow inner = bfs_distances(sub, lu);
    DistanceRow outer = bfs_distances(g, blk.vertices[static_cast<std::size_t>(lu)]);
    for (int lv = 0; lv < sub.vertex_count(); ++lv) {
      int dv = outer.dist[static_cast<std::size_t>(
          blk.vertices[static_cast<std::size_t>(lv)])];
      if (inner.dist[static_cast<std::size_t>(lv)] != dv) {
        fail("central block is not isometric at local pair " + std::to_string(lu) + "," +
             std::to_string(lv));
      }
    }
  }
  int d = graph_diameter(sub);
  if (!(2 * rep.rad - d <= rep.diam)) {
    fail("diam " + std::to_string(rep.diam) + " < 2 rad - diam(B) = " +
         std::to_string(2 * rep.rad - d));
  }
  if (!(rep.diam <= 2 * rep.rad)) {
    fail("diam " + std::to_string(rep.diam) + " > 2 rad " + std::to_string(2 * rep.rad));
  }
  if (!(rep.diam <= 2 * rep.brad + d)) {
    fail("diam " + std::to_string(rep.diam) + " > 2 brad + diam(B) = " +
         std::to_string(2 * rep.brad + d));
  }
  if (!(rep.rad - rep.brad <= d)) {
    fail("rad - brad = " + std::to_string(rep.rad - rep.brad) + " > diam(B) = " +
         std::to_string(d));
  }
  return out;
}

// A self-centered graph (rad == diam) has no articulation point at all.
inline std::vector<std::string> check_self_centered(const Graph& g,
                                                    const BlockDecomposition& dec,
                                                    const EccentricityReport& rep) {
  std::vector<std::string> out;
  if (rep.rad == rep.diam && dec.block_count() > 1) {
    out.push_back("self-centered graph with " + std::to_string(dec.block_count()) +
                  " blocks");
  }
  (void)g;
  return out;
}

// max over blocks of becc'(B) equals the vertex diameter.
inline std::vector<std::string> check_upper_eccentricity_diameter(
    const Graph& g, const BlockDecomposition& dec, const EccentricityReport& rep) {
  std::vector<std::string> out;
  int best = 0;
  for (int b = 0; b < dec.block_count(); ++b) {
    int ue = 0;
    for (int v : dec.blocks[static_cast<std::size_t>(b)].vertices) {
      ue = std::max(ue, rep.ecc[static_cast<std::size_t>(v)]);
    }
    best = std::max(best, ue);
  }
  if (best != rep.diam) {
    out.push_back("max upper block eccentricity " + std::to_string(best) +
                  " != diam " + std::to_string(rep.diam));
  }
  (void)g;
  return out;
}

// Convenience one-argument forms.
inline std::vector<std::string> check_central_block_theorem(const Graph& g) {
  BlockDecomposition dec = decompose(g);
  return check_central_block_theorem(g, dec, full_report(g, dec));
}
inline std::vector<std::string> check_eccentric_location(const Graph& g) {
  BlockDecomposition dec = decompose(g);
  BCTree bc = build_bc_tree(g, dec);
  return check_eccentric_location(g, dec, bc, full_report(g, dec));
}
inline std::vector<std::string> check_radius_diameter_bounds(const Graph& g) {
  BlockDecomposition dec = decompose(g);
  return check_radius_diameter_bounds(g, dec, full_report(g, dec));
}
inline std::vector<std::string> check_self_centered(const Graph& g) {
  BlockDecomposition dec = decompose(g);
  return check_self_centered(g, dec, full_report(g, dec));
}
inline std::vector<std::string> check_upper_eccentricity_diameter(const Graph& g) {
  BlockDecomposition dec = decompose(g);
  return check_upper_eccentricity_diameter(g, dec, full_report(g, dec));
}

}  // namespace blockecc

#endif  // BLOCKECC_ECCENTRICITY_HPP
