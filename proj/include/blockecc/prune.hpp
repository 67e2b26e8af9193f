// prune.hpp - radius-preserving pruning.
//
// For each articulation component at the center (the unique central point
// for type A, the unique central block for type B), keep one vertex of
// maximal distance from the anchor, one geodesic from it back to the anchor,
// and every block the geodesic takes an edge from. Everything else in the
// component is deleted. Single-block graphs are returned unchanged.
//
// The pruned graph keeps the centers, central blocks, vertex and block
// radius, and diameter of the input, and its block-cutpoint tree is a path
// or a starlike tree; verify_replacement re-derives all of that from scratch.

#ifndef BLOCKECC_PRUNE_HPP
#define BLOCKECC_PRUNE_HPP

#include <algorithm>
#include <functional>
#include <memory>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "blockecc/blocks.hpp"
#include "blockecc/eccentricity.hpp"
#include "blockecc/graph.hpp"
#include "blockecc/rng.hpp"

namespace blockecc {

// Resolves ties: receives a nonempty ascending candidate list and must return
// one of its elements. Used for both the farthest-vertex pick and each
// geodesic step.
using ChoicePolicy = std::function<int(const std::vector<int>&)>;

// Default policy: smallest id.
inline ChoicePolicy first_choice_policy() {
  return [](const std::vector<int>& candidates) { return candidates.front(); };
}

inline ChoicePolicy random_choice_policy(std::uint64_t seed) {
  auto rng = std::make_shared<SplitMix64>(seed);
  return [rng](const std::vector<int>& candidates) {
    return candidates[static_cast<std::size_t>(
        rng->below(static_cast<std::uint64_t>(candidates.size())))];
  };
}

// One retained geodesic and the tie-break context it was chosen from.
struct PruneChoice {
  int attachment = 0;           // anchor vertex of the component
  std::vector<int> candidates;  // farthest vertices, ascending
  int chosen = 0;
  std::vector<int> geodesic;    // chosen first, anchor last, original ids
};

struct PruneResult {
  Graph pruned;
  std::vector<int> to_original;    // pruned id -> original id, ascending
  std::vector<int> from_original;  // original id -> pruned id, -1 if deleted
  std::vector<int> retained_blocks;
  std::vector<int> deleted_blocks;
  std::vector<PruneChoice> choices;

  bool identity() const { return deleted_blocks.empty(); }
  int map_vertex(int pruned_id) const {
    return to_original[static_cast<std::size_t>(pruned_id)];
  }
};

inline PruneResult prune_with_choices(const Graph& g, const ChoicePolicy& policy) {
  BlockDecomposition dec = decompose(g);
  BCTree bc = build_bc_tree(g, dec);
  PruneResult result;

  auto finish = [&](const std::set<int>& retained_set) {
    for (int b = 0; b < dec.block_count(); ++b) {
      if (retained_set.count(b)) {
        result.retained_blocks.push_back(b);
      } else {
        result.deleted_blocks.push_back(b);
      }
    }
    std::vector<int> keep;
    for (int b : result.retained_blocks) {
      const Block& blk = dec.blocks[static_cast<std::size_t>(b)];
      keep.insert(keep.end(), blk.vertices.begin(), blk.vertices.end());
    }
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    result.to_original = keep;
    result.from_original.assign(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
      result.from_original[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
    }
    result.pruned = Graph(static_cast<int>(keep.size()));
    for (int b : result.retained_blocks) {
      for (const Edge& e : dec.blocks[static_cast<std::size_t>(b)].edges) {
        result.pruned.add_edge(result.from_original[static_cast<std::size_t>(e.u)],
                               result.from_original[static_cast<std::size_t>(e.v)]);
      }
    }
  };

  if (dec.block_count() == 1) {
    std::set<int> all{0};
    finish(all);
    return result;
  }

  EccentricityReport rep = full_report(g, dec);
  std::vector<int> anchor_dist;
  std::vector<ArticulationComponent> comps;
  std::set<int> retained;
  if (rep.verdict.type == GraphType::A) {
    int a = rep.verdict.central_point;
    if (rep.center.size() != 1 || !dec.is_articulation[static_cast<std::size_t>(a)]) {
      throw std::logic_error("type A graph without a unique central articulation point");
    }
    anchor_dist = bfs_distances(g, a).dist;
    comps = articulation_components_at_vertex(g, dec, bc, a);
  } else {
    int cb = rep.verdict.central_block;
    anchor_dist = block_distance_row(g, dec, cb);
    comps = articulation_components_at_block(g, dec, bc, cb);
    retained.insert(cb);
  }

  auto pick = [&](const std::vector<int>& candidates) {
    int chosen = policy(candidates);
    if (!std::binary_search(candidates.begin(), candidates.end(), chosen)) {
      throw std::invalid_argument("choice policy returned " + std::to_string(chosen) +
                                  ", not a candidate");
    }
    return chosen;
  };

  for (const ArticulationComponent& comp : comps) {
    int far = 0;
    for (int v : comp.vertices) {
      far = std::max(far, anchor_dist[static_cast<std::size_t>(v)]);
    }
    PruneChoice choice;
    choice.attachment = comp.attachment;
    for (int v : comp.vertices) {
      if (anchor_dist[static_cast<std::size_t>(v)] == far) choice.candidates.push_back(v);
    }
    choice.chosen = pick(choice.candidates);
    int cur = choice.chosen;
    choice.geodesic.push_back(cur);
    while (anchor_dist[static_cast<std::size_t>(cur)] > 0) {
      std::vector<int> nexts;
      for (int w : g.neighbors(cur)) {
        if (anchor_dist[static_cast<std::size_t>(w)] ==
            anchor_dist[static_cast<std::size_t>(cur)] - 1) {
          nexts.push_back(w);
        }
      }
      int next = pick(nexts);
      retained.insert(dec.block_of_edge(cur, next));
      choice.geodesic.push_back(next);
      cur = next;
    }
    result.choices.push_back(std::move(choice));
  }

  finish(retained);
  return result;
}

inline PruneResult prune(const Graph& g) {
  return prune_with_choices(g, first_choice_policy());
}

// --- verification --------------------------------------------------------------

struct ReplacementChecklist {
  bool connected_subgraph = false;
  bool bc_subtree = false;
  bool path_or_starlike = false;
  bool invariants_preserved = false;    // centers, central blocks, both radii
  bool periphery_and_diameter = false;  // periphery subset, equal diameter
  std::vector<std::string> failures;

  bool all_passed() const {
    return connected_subgraph && bc_subtree && path_or_starlike &&
           invariants_preserved && periphery_and_diameter;
  }
};

// Checks every claim of the replacement guarantee from scratch, trusting
// nothing in the result beyond the vertex map.
inline ReplacementChecklist verify_replacement(const Graph& g, const PruneResult& r) {
  ReplacementChecklist list;
  auto fail = [&](const std::string& msg) { list.failures.push_back(msg); };

  // Claim 1: a connected subgraph under a valid vertex map.
  bool map_ok = !r.to_original.empty() &&
                std::is_sorted(r.to_original.begin(), r.to_original.end()) &&
                r.to_original.front() >= 0 && r.to_original.back() < g.vertex_count() &&
                std::adjacent_find(r.to_original.begin(), r.to_original.end()) ==
                    r.to_original.end() &&
                static_cast<int>(r.to_original.size()) == r.pruned.vertex_count();
  if (!map_ok) fail("vertex map is not an injection into the original graph");
  bool edges_ok = map_ok;
  if (map_ok) {
    for (const Edge& e : r.pruned.edges()) {
      if (!g.has_edge(r.map_vertex(e.u), r.map_vertex(e.v))) {
        edges_ok = false;
        fail("pruned edge does not exist in the original graph");
        break;
      }
    }
  }
  list.connected_subgraph = map_ok && edges_ok && is_connected(r.pruned);
  if (map_ok && edges_ok && !is_connected(r.pruned)) fail("pruned graph is disconnected");
  if (!list.connected_subgraph) return list;

  BlockDecomposition dec_g = decompose(g);
  BlockDecomposition dec_p = decompose(r.pruned);
  EccentricityReport rep_g = full_report(g, dec_g);
  EccentricityReport rep_p = full_report(r.pruned, dec_p);

  // Claim 2: every pruned block is a whole block of g and cut vertices map
  // to cut vertices, so the pruned BC-tree embeds in the original one.
  bool subtree = true;
  std::vector<int> block_image(static_cast<std::size_t>(dec_p.block_count()), -1);
  std::vector<char> image_used(static_cast<std::size_t>(dec_g.block_count()), 0);
  for (int b = 0; b < dec_p.block_count(); ++b) {
    const Block& blk = dec_p.blocks[static_cast<std::size_t>(b)];
    if (blk.edges.empty()) {
      // A vertex-only block arises only for K1, where the claim is trivial.
      if (g.vertex_count() != 1) {
        subtree = false;
        fail("pruned graph has an isolated vertex");
      }
      block_image[static_cast<std::size_t>(b)] = 0;
      continue;
    }
    int target = -1;
    bool consistent = true;
    for (const Edge& e : blk.edges) {
      int owner = dec_g.block_of_edge(r.map_vertex(e.u), r.map_vertex(e.v));
      if (target < 0) target = owner;
      if (owner != target) consistent = false;
    }
    if (!consistent || target < 0 ||
        dec_g.blocks[static_cast<std::size_t>(target)].edges.size() != blk.edges.size() ||
        image_used[static_cast<std::size_t>(target)]) {
      subtree = false;
      fail("pruned block " + std::to_string(b) + " is not a whole original block");
      continue;
    }
    image_used[static_cast<std::size_t>(target)] = 1;
    block_image[static_cast<std::size_t>(b)] = target;
  }
  for (int v : dec_p.articulation_points) {
    if (!dec_g.is_articulation[static_cast<std::size_t>(r.map_vertex(v))]) {
      subtree = false;
      fail("pruned cut vertex " + std::to_string(v) + " maps to a non-cut vertex");
    }
  }
  list.bc_subtree = subtree;

  // Claim 3: the pruned BC-tree is a path or a starlike tree.
  BCTree bc_p = build_bc_tree(r.pruned, dec_p);
  list.path_or_starlike = bc_p.path_or_starlike();
  if (!list.path_or_starlike) fail("pruned BC-tree has two or more branch nodes");

  // Claim 4: centers, central blocks, vertex radius, block radius.
  auto map_vertices = [&](const std::vector<int>& vs) {
    std::vector<int> out;
    out.reserve(vs.size());
    for (int v : vs) out.push_back(r.map_vertex(v));
    std::sort(out.begin(), out.end());
    return out;
  };
  bool inv = rep_p.rad == rep_g.rad && rep_p.brad == rep_g.brad;
  if (rep_p.rad != rep_g.rad) fail("vertex radius changed");
  if (rep_p.brad != rep_g.brad) fail("block radius changed");
  if (map_vertices(rep_p.center) != rep_g.center) {
    inv = false;
    fail("center changed");
  }
  if (subtree) {
    std::vector<int> mapped_central;
    for (int b : rep_p.central_blocks) {
      mapped_central.push_back(block_image[static_cast<std::size_t>(b)]);
    }
    std::sort(mapped_central.begin(), mapped_central.end());
    if (mapped_central != rep_g.central_blocks) {
      inv = false;
      fail("central blocks changed");
    }
  }
  list.invariants_preserved = inv && subtree;

  // Claim 5: periphery only shrinks and the diameter stays.
  bool peri = rep_p.diam == rep_g.diam;
  if (!peri) fail("diameter changed");
  std::vector<int> mapped_periphery = map_vertices(rep_p.periphery);
  if (!std::includes(rep_g.periphery.begin(), rep_g.periphery.end(),
                     mapped_periphery.begin(), mapped_periphery.end())) {
    peri = false;
    fail("pruned periphery is not contained in the original periphery");
  }
  list.periphery_and_diameter = peri;
  return list;
}

// Pruning twice changes nothing: the second pass deletes no blocks and
// reproduces the same graph.
inline bool prune_idempotent(const PruneResult& first) {
  PruneResult second = prune(first.pruned);
  return second.deleted_blocks.empty() && second.pruned == first.pruned;
}

}  // namespace blockecc

#endif  // BLOCKECC_PRUNE_HPP
