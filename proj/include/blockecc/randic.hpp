// randic.hpp - Randic connectivity index and radius/diameter bounds.
//
// Rand(G) = sum over edges uv of 1/sqrt(deg u * deg v). Checked claims:
//   star bound      sqrt(n-1) <= Rand(G) <= n/2 for connected graphs
//   wedge bound     Rand(G) >= sum Rand(G_i) + sqrt(deg a) - sum sqrt(deg_i a)
//                   where the G_i are the articulation components at a
//   radius bound    Rand(G) >= rad(G) unless G is a path of even order
//   diameter bound  Rand(G) >= diam(G) + sqrt(2) - (n+1)/2 for n >= 2
// For cacti the pipeline in verify_cactus_theorem reduces the graph to its
// pruned core by leaf block deletions, each of which cannot raise the index,
// and then applies the sharpened bound Rand >= rad + sqrt(2) - 3/2.
//
// All real comparisons use the fixed tolerance kRandicTol.

#ifndef BLOCKECC_RANDIC_HPP
#define BLOCKECC_RANDIC_HPP

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "blockecc/blocks.hpp"
#include "blockecc/eccentricity.hpp"
#include "blockecc/graph.hpp"
#include "blockecc/prune.hpp"

namespace blockecc {

inline constexpr double kRandicTol = 1e-9;

struct EdgeWeight {
  Edge edge;
  double w = 0.0;       // 1/sqrt(deg u * deg v), in (0, 1]
  double w_star = 0.0;  // (1/sqrt(deg u) - 1/sqrt(deg v))^2 / 2, asymmetry term
};

// Per-edge weights in ascending edge order.
inline std::vector<EdgeWeight> edge_weights(const Graph& g) {
  std::vector<EdgeWeight> out;
  out.reserve(static_cast<std::size_t>(g.edge_count()));
  for (const Edge& e : g.edges()) {
    double ru = 1.0 / std::sqrt(static_cast<double>(g.degree(e.u)));
    double rv = 1.0 / std::sqrt(static_cast<double>(g.degree(e.v)));
    out.push_back({e, ru * rv, 0.5 * (ru - rv) * (ru - rv)});
  }
  return out;
}

inline int isolated_vertex_count(const Graph& g) {
  int n0 = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) ++n0;
  }
  return n0;
}

inline double randic_index(const Graph& g) {
  double sum = 0.0;
  for (const EdgeWeight& ew : edge_weights(g)) sum += ew.w;
  return sum;
}

// Equivalent form (n - n0)/2 - sum of the asymmetry terms, where n0 counts
// isolated vertices. Agreement with randic_index is a checked property, not
// an assumption.
inline double randic_index_alt(const Graph& g) {
  double sum = static_cast<double>(g.vertex_count() - isolated_vertex_count(g)) / 2.0;
  for (const EdgeWeight& ew : edge_weights(g)) sum -= ew.w_star;
  return sum;
}

// Every block is a single edge, a single vertex, or a cycle; equivalently no
// two cycles share an edge.
inline bool is_cactus(const Graph& g, const BlockDecomposition& dec) {
  for (const Block& b : dec.blocks) {
    if (b.edges.size() > 1 && !b.is_cycle()) return false;
  }
  return true;
}

inline bool is_cactus(const Graph& g) { return is_cactus(g, decompose(g)); }

// Maximum degree at most four.
inline bool is_chemical(const Graph& g) { return g.max_degree() <= 4; }

// A path on an even number of vertices, the one family exempt from the
// radius bound. Assumes g connected.
inline bool is_even_path(const Graph& g) {
  int n = g.vertex_count();
  if (n < 2 || n % 2 != 0) return false;
  int leaves = 0;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) > 2) return false;
    if (g.degree(v) == 1) ++leaves;
  }
  return leaves == 2;
}

// --- wedge inequality ----------------------------------------------------------

struct WedgeCheck {
  int vertex = 0;
  double whole = 0.0;  // Rand(G)
  double bound = 0.0;  // sum Rand(G_i) + sqrt(deg a) - sum sqrt(deg_i a)
  double slack = 0.0;  // whole - bound
  std::vector<double> component_indices;  // Rand of each standalone component
  bool holds = false;
  bool component_monotone = false;  // Rand(G) >= Rand(G_i) for every i
};

// Evaluates the wedge bound at articulation point a. Components are taken as
// standalone graphs, each keeping its own copy of a.
inline WedgeCheck check_wedge_inequality(const Graph& g, const BlockDecomposition& dec,
                                         const BCTree& bc, int a) {
  WedgeCheck check;
  check.vertex = a;
  check.whole = randic_index(g);
  double bound = std::sqrt(static_cast<double>(g.degree(a)));
  check.component_monotone = true;
  for (const ArticulationComponent& comp :
       articulation_components_at_vertex(g, dec, bc, a)) {
    double part = randic_index(comp.subgraph);
    check.component_indices.push_back(part);
    bound += part - std::sqrt(static_cast<double>(comp.subgraph.degree(comp.attachment_local)));
    if (check.whole < part - kRandicTol) check.component_monotone = false;
  }
  check.bound = bound;
  check.slack = check.whole - bound;
  check.holds = check.slack >= -kRandicTol;
  return check;
}

inline WedgeCheck check_wedge_inequality(const Graph& g, int a) {
  BlockDecomposition dec = decompose(g);
  BCTree bc = build_bc_tree(g, dec);
  return check_wedge_inequality(g, dec, bc, a);
}

// --- conjecture report ----------------------------------------------------------

struct RandicReport {
  int n = 0;
  int n0 = 0;  // isolated vertices, nonzero only for K1
  int rad = 0;
  int diam = 0;
  double index = 0.0;
  double index_alt = 0.0;
  bool cactus = false;
  bool chemical = false;
  bool even_path = false;
  double slack_radius = 0.0;          // index - rad
  double slack_radius_strong = 0.0;   // index - (rad + sqrt(2) - 3/2)
  double slack_diameter = 0.0;        // index - (diam + sqrt(2) - (n+1)/2)
  bool radius_bound_holds = false;    // vacuous for even paths
  bool diameter_bound_holds = false;
  bool diameter_bound_applies = false;  // false only for the one-vertex graph
};

// Fills every slack field without asserting sign; the caller decides which
// bounds are theorems for its graph class and which are conjecture searches.
inline RandicReport check_conjectures(const Graph& g) {
  if (!is_connected(g)) throw DisconnectedError("check_conjectures requires a connected graph");
  RandicReport rep;
  rep.n = g.vertex_count();
  rep.n0 = isolated_vertex_count(g);
  std::vector<int> ecc = vertex_eccentricities(g);
  rep.rad = *std::min_element(ecc.begin(), ecc.end());
  rep.diam = *std::max_element(ecc.begin(), ecc.end());
  rep.index = randic_index(g);
  rep.index_alt = randic_index_alt(g);
  rep.cactus = is_cactus(g);
  rep.chemical = is_chemical(g);
  rep.even_path = is_even_path(g);
  const double sqrt2 = std::sqrt(2.0);
  rep.slack_radius = rep.index - rep.rad;
  rep.slack_radius_strong = rep.index - (rep.rad + sqrt2 - 1.5);
  rep.slack_diameter = rep.index - (rep.diam + sqrt2 - (rep.n + 1) / 2.0);
  rep.radius_bound_holds = rep.even_path || rep.slack_radius >= -kRandicTol;
  rep.diameter_bound_applies = rep.n >= 2;
  rep.diameter_bound_holds = !rep.diameter_bound_applies || rep.slack_diameter >= -kRandicTol;
  return rep;
}

// --- leaf block deletion ---------------------------------------------------------

struct LeafBlockDeletion {
  Graph graph;
  std::vector<int> to_original;  // new id -> id in the graph deleted from
  int attachment = 0;            // cut vertex the block hung from, old ids
};

// Removes a block that meets exactly one cut vertex, keeping that vertex.
inline LeafBlockDeletion delete_leaf_block(const Graph& g, const BlockDecomposition& dec,
                                           const BCTree& bc, int block_id) {
  if (block_id < 0 || block_id >= dec.block_count()) {
    throw std::invalid_argument("block id out of range");
  }
  const auto& cuts = bc.block_to_cuts[static_cast<std::size_t>(block_id)];
  if (dec.block_count() < 2 || cuts.size() != 1) {
    throw std::invalid_argument("block " + std::to_string(block_id) + " is not a leaf block");
  }
  const Block& blk = dec.blocks[static_cast<std::size_t>(block_id)];
  LeafBlockDeletion del;
  del.attachment = bc.cut_vertices[static_cast<std::size_t>(cuts.front())];
  std::vector<char> drop(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int v : blk.vertices) drop[static_cast<std::size_t>(v)] = 1;
  drop[static_cast<std::size_t>(del.attachment)] = 0;
  std::vector<int> from_old(static_cast<std::size_t>(g.vertex_count()), -1);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!drop[static_cast<std::size_t>(v)]) {
      from_old[static_cast<std::size_t>(v)] = static_cast<int>(del.to_original.size());
      del.to_original.push_back(v);
    }
  }
  del.graph = Graph(static_cast<int>(del.to_original.size()));
  std::set<Edge> gone(blk.edges.begin(), blk.edges.end());
  for (const Edge& e : g.edges()) {
    if (!gone.count(e)) {
      del.graph.add_edge(from_old[static_cast<std::size_t>(e.u)],
                         from_old[static_cast<std::size_t>(e.v)]);
    }
  }
  return del;
}

// --- cactus pipeline -------------------------------------------------------------

struct LeafStep {
  int attachment = 0;        // original vertex id
  double index_before = 0.0;
  double index_after = 0.0;
  double wedge_slack = 0.0;
};

struct CactusTheoremReport {
  int n = 0;
  int rad = 0;
  int diam = 0;
  double index = 0.0;
  double pruned_index = 0.0;
  bool pruned_chemical = false;
  bool radius_preserved = false;
  bool diameter_preserved = false;
  bool deletion_monotone = false;   // every deletion step kept the index from rising
  bool leaf_eliminable = false;     // deletions reached exactly the pruned core
  bool strong_radius_bound = false; // index >= rad + sqrt(2) - 3/2
  bool diameter_bound = false;      // index >= diam + sqrt(2) - (n+1)/2, n >= 2
  bool diameter_bound_applies = false;
  bool weak_radius_bound = false;   // index >= rad, vacuous for even paths
  bool even_path = false;
  std::vector<LeafStep> steps;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

// Runs the full reduction argument on one cactus: prune, then peel leaf
// blocks until only the pruned core remains, checking the wedge bound and
// index monotonicity at every step, then the radius and diameter bounds.
inline CactusTheoremReport verify_cactus_theorem(const Graph& g) {
  BlockDecomposition dec = decompose(g);
  if (!is_cactus(g, dec)) throw std::invalid_argument("verify_cactus_theorem requires a cactus");

  CactusTheoremReport rep;
  rep.n = g.vertex_count();
  rep.index = randic_index(g);
  rep.even_path = is_even_path(g);
  std::vector<int> ecc = vertex_eccentricities(g);
  rep.rad = *std::min_element(ecc.begin(), ecc.end());
  rep.diam = *std::max_element(ecc.begin(), ecc.end());
  auto fail = [&](const std::string& msg) { rep.failures.push_back(msg); };

  PruneResult pr = prune(g);
  rep.pruned_index = randic_index(pr.pruned);
  rep.pruned_chemical = is_chemical(pr.pruned);
  if (!rep.pruned_chemical) {
    fail("pruned cactus has a vertex of degree " + std::to_string(pr.pruned.max_degree()));
  }
  std::vector<int> pruned_ecc = vertex_eccentricities(pr.pruned);
  rep.radius_preserved = *std::min_element(pruned_ecc.begin(), pruned_ecc.end()) == rep.rad;
  rep.diameter_preserved = *std::max_element(pruned_ecc.begin(), pruned_ecc.end()) == rep.diam;
  if (!rep.radius_preserved) fail("pruning changed the radius");
  if (!rep.diameter_preserved) fail("pruning changed the diameter");

  // Peel deleted blocks one leaf at a time, smallest block id first. Each
  // step must satisfy the wedge bound at the attachment and not raise the
  // index.
  std::set<Edge> core_edges;
  for (const Edge& e : pr.pruned.edges()) {
    core_edges.insert(Edge(pr.map_vertex(e.u), pr.map_vertex(e.v)));
  }
  Graph cur = g;
  std::vector<int> cur_to_orig(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) cur_to_orig[static_cast<std::size_t>(v)] = v;
  rep.deletion_monotone = true;
  while (true) {
    BlockDecomposition dec_c = decompose(cur);
    if (dec_c.block_count() < 2) break;
    BCTree bc_c = build_bc_tree(cur, dec_c);
    int target = -1;
    for (int b = 0; b < dec_c.block_count() && target < 0; ++b) {
      if (bc_c.block_to_cuts[static_cast<std::size_t>(b)].size() != 1) continue;
      const Edge& e = dec_c.blocks[static_cast<std::size_t>(b)].edges.front();
      Edge orig(cur_to_orig[static_cast<std::size_t>(e.u)],
                cur_to_orig[static_cast<std::size_t>(e.v)]);
      if (!core_edges.count(orig)) target = b;
    }
    if (target < 0) break;

    const auto& cuts = bc_c.block_to_cuts[static_cast<std::size_t>(target)];
    int attach = bc_c.cut_vertices[static_cast<std::size_t>(cuts.front())];
    WedgeCheck wedge = check_wedge_inequality(cur, dec_c, bc_c, attach);
    LeafStep step;
    step.attachment = cur_to_orig[static_cast<std::size_t>(attach)];
    step.index_before = randic_index(cur);
    step.wedge_slack = wedge.slack;
    if (!wedge.holds) {
      rep.deletion_monotone = false;
      fail("wedge bound fails at vertex " + std::to_string(step.attachment));
    }
    if (!wedge.component_monotone) {
      rep.deletion_monotone = false;
      fail("a component at vertex " + std::to_string(step.attachment) +
           " has a larger index than the whole graph");
    }
    LeafBlockDeletion del = delete_leaf_block(cur, dec_c, bc_c, target);
    step.index_after = randic_index(del.graph);
    if (step.index_after > step.index_before + kRandicTol) {
      rep.deletion_monotone = false;
      fail("deleting a leaf block raised the index at vertex " +
           std::to_string(step.attachment));
    }
    std::vector<int> next_map(del.to_original.size());
    for (std::size_t i = 0; i < del.to_original.size(); ++i) {
      next_map[i] = cur_to_orig[static_cast<std::size_t>(del.to_original[i])];
    }
    cur = std::move(del.graph);
    cur_to_orig = std::move(next_map);
    rep.steps.push_back(step);
  }

  std::set<Edge> final_edges;
  for (const Edge& e : cur.edges()) {
    final_edges.insert(Edge(cur_to_orig[static_cast<std::size_t>(e.u)],
                            cur_to_orig[static_cast<std::size_t>(e.v)]));
  }
  rep.leaf_eliminable =
      final_edges == core_edges && cur.vertex_count() == pr.pruned.vertex_count();
  if (!rep.leaf_eliminable) fail("leaf deletions did not reach the pruned core");
  if (rep.pruned_index > rep.index + kRandicTol) {
    fail("pruned core has a larger index than the input");
  }

  const double sqrt2 = std::sqrt(2.0);
  rep.strong_radius_bound = rep.index >= rep.rad + sqrt2 - 1.5 - kRandicTol;
  if (!rep.strong_radius_bound) fail("index below rad + sqrt(2) - 3/2");
  rep.diameter_bound_applies = rep.n >= 2;
  rep.diameter_bound = !rep.diameter_bound_applies ||
                       rep.index >= rep.diam + sqrt2 - (rep.n + 1) / 2.0 - kRandicTol;
  if (!rep.diameter_bound) fail("index below diam + sqrt(2) - (n+1)/2");
  rep.weak_radius_bound = rep.even_path || rep.index >= rep.rad - kRandicTol;
  if (!rep.weak_radius_bound) fail("index below the radius");
  return rep;
}

}  // namespace blockecc

#endif  // BLOCKECC_RANDIC_HPP
