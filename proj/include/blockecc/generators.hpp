// generators.hpp - deterministic graph generators for property testing.
//
// Every generator is a pure function of its GenSpec: the same spec produces
// the same graph on every platform (see rng.hpp). All outputs are connected.

#ifndef BLOCKECC_GENERATORS_HPP
#define BLOCKECC_GENERATORS_HPP

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "blockecc/fixtures.hpp"
#include "blockecc/graph.hpp"
#include "blockecc/rng.hpp"

namespace blockecc {

enum class Model {
  Path,            // n >= 1
  Cycle,           // n >= 3
  Tree,            // n >= 1, random attachment
  ConnectedGnm,    // random spanning tree plus extra edges
  Cactus,          // grown by attaching cycles (length 3..6) and bridges
  Spider,          // one center, legs of given lengths
  CycleWithPaths,  // 2n-cycle (a single edge for n = 1) with a length-l path
                   // hung on every core vertex
  PyramidWedge,    // two k-pyramids sharing their apex
  Fixture,         // named fixture graph
};

struct GenSpec {
  Model model = Model::Path;
  int n = 1;               // vertex count or core parameter
  int m = 0;               // edge count (ConnectedGnm)
  int l = 0;               // path length (CycleWithPaths)
  std::vector<int> legs;   // leg lengths (Spider)
  std::string fixture;     // fixture name (Fixture)
  std::uint64_t seed = 0;  // stream for the randomized models
};

inline std::string model_name(Model m) {
  switch (m) {
    case Model::Path: return "path";
    case Model::Cycle: return "cycle";
    case Model::Tree: return "tree";
    case Model::ConnectedGnm: return "connected-gnm";
    case Model::Cactus: return "cactus";
    case Model::Spider: return "spider";
    case Model::CycleWithPaths: return "cycle-with-paths";
    case Model::PyramidWedge: return "pyramid-wedge";
    case Model::Fixture: return "fixture";
  }
  return "?";
}

inline Model model_from_name(const std::string& name) {
  if (name == "path") return Model::Path;
  if (name == "cycle") return Model::Cycle;
  if (name == "tree") return Model::Tree;
  if (name == "connected-gnm") return Model::ConnectedGnm;
  if (name == "cactus") return Model::Cactus;
  if (name == "spider") return Model::Spider;
  if (name == "cycle-with-paths") return Model::CycleWithPaths;
  if (name == "pyramid-wedge") return Model::PyramidWedge;
  if (name == "fixture") return Model::Fixture;
  throw std::invalid_argument("unknown model: " + name);
}

// Replay label, e.g. "cactus(n=17, seed=123)".
inline std::string describe(const GenSpec& spec) {
  std::ostringstream out;
  out << model_name(spec.model) << '(';
  switch (spec.model) {
    case Model::Path:
    case Model::Cycle:
    case Model::PyramidWedge:
      out << "n=" << spec.n;
      break;
    case Model::Tree:
    case Model::Cactus:
      out << "n=" << spec.n << ", seed=" << spec.seed;
      break;
    case Model::ConnectedGnm:
      out << "n=" << spec.n << ", m=" << spec.m << ", seed=" << spec.seed;
      break;
    case Model::Spider:
      out << "legs=";
      for (std::size_t i = 0; i < spec.legs.size(); ++i) {
        out << (i ? "," : "") << spec.legs[i];
      }
      break;
    case Model::CycleWithPaths:
      out << "n=" << spec.n << ", l=" << spec.l;
      break;
    case Model::Fixture:
      out << spec.fixture;
      break;
  }
  out << ')';
  return out.str();
}

namespace gen {

inline Graph path(int n) {
  if (n < 1) throw std::invalid_argument("path requires n >= 1");
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle requires n >= 3");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

// Random recursive tree: vertex v attaches to a uniform earlier vertex.
inline Graph tree(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("tree requires n >= 1");
  Graph g(n);
  SplitMix64 rng(seed);
  for (int v = 1; v < n; ++v) {
    g.add_edge(v, static_cast<int>(rng.below(static_cast<std::uint64_t>(v))));
  }
  return g;
}

// Connected G(n, m): random spanning tree, then extra edges drawn uniformly
// from the missing pairs.
inline Graph connected_gnm(int n, int m, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("connected-gnm requires n >= 1");
  long long max_m = static_cast<long long>(n) * (n - 1) / 2;
  if (m < n - 1 || m > max_m) {
    throw std::invalid_argument("connected-gnm requires n-1 <= m <= n(n-1)/2");
  }
  SplitMix64 rng(seed);
  Graph g(n);
  for (int v = 1; v < n; ++v) {
    g.add_edge(v, static_cast<int>(rng.below(static_cast<std::uint64_t>(v))));
  }
  int need = m - (n - 1);
  while (need > 0) {
    int u = rng.range(0, n - 1);
    int v = rng.range(0, n - 1);
    if (u == v || g.has_edge(u, v)) continue;
    g.add_edge(u, v);
    --need;
  }
  return g;
}

// Cactus grown from a single vertex: each step attaches either a bridge or a
// cycle of length 3..6 at a uniformly chosen existing vertex, capped so the
// graph ends with exactly n vertices.
inline Graph cactus(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("cactus requires n >= 1");
  SplitMix64 rng(seed);
  Graph g(n);
  int built = 1;
  while (built < n) {
    int at = static_cast<int>(rng.below(static_cast<std::uint64_t>(built)));
    int room = n - built;
    bool make_cycle = room >= 2 && rng.below(2) == 0;
    if (make_cycle) {
      int len = 3 + static_cast<int>(rng.below(4));  // cycle length 3..6
      len = std::min(len, room + 1);
      int prev = at;
      for (int k = 0; k < len - 1; ++k) {
        g.add_edge(prev, built);
        prev = built++;
      }
      g.add_edge(prev, at);
    } else {
      g.add_edge(at, built++);
    }
  }
  return g;
}

// Star of paths: center 0, one path per entry of legs.
inline Graph spider(const std::vector<int>& legs) {
  if (legs.empty()) throw std::invalid_argument("spider requires at least one leg");
  int n = 1;
  for (int len : legs) {
    if (len < 1) throw std::invalid_argument("spider legs must have length >= 1");
    n += len;
  }
  Graph g(n);
  int next = 1;
  for (int len : legs) {
    int prev = 0;
    for (int k = 0; k < len; ++k) {
      g.add_edge(prev, next);
      prev = next++;
    }
  }
  return g;
}

// Core cycle of 2n vertices (one edge when n == 1) with a path of length l
// attached to every core vertex. diam = 2l + n and rad = l + n.
inline Graph cycle_with_paths(int n, int l) {
  if (n < 1) throw std::invalid_argument("cycle-with-paths requires n >= 1");
  if (l < 0) throw std::invalid_argument("cycle-with-paths requires l >= 0");
  int core = 2 * n;
  Graph g(core + core * l);
  if (n == 1) {
    g.add_edge(0, 1);
  } else {
    for (int v = 0; v < core; ++v) g.add_edge(v, (v + 1) % core);
  }
  int next = core;
  for (int v = 0; v < core; ++v) {
    int prev = v;
    for (int k = 0; k < l; ++k) {
      g.add_edge(prev, next);
      prev = next++;
    }
  }
  return g;
}

// Two pyramids over a k-cycle sharing their apex, vertex 0.
inline Graph pyramid_wedge(int k) {
  if (k < 3) throw std::invalid_argument("pyramid-wedge requires cycle length >= 3");
  Graph g(1 + 2 * k);
  for (int side = 0; side < 2; ++side) {
    int base = 1 + side * k;
    for (int i = 0; i < k; ++i) {
      g.add_edge(base + i, base + (i + 1) % k);
      g.add_edge(0, base + i);
    }
  }
  return g;
}

}  // namespace gen

inline Graph generate(const GenSpec& spec) {
  switch (spec.model) {
    case Model::Path: return gen::path(spec.n);
    case Model::Cycle: return gen::cycle(spec.n);
    case Model::Tree: return gen::tree(spec.n, spec.seed);
    case Model::ConnectedGnm: return gen::connected_gnm(spec.n, spec.m, spec.seed);
    case Model::Cactus: return gen::cactus(spec.n, spec.seed);
    case Model::Spider: return gen::spider(spec.legs);
    case Model::CycleWithPaths: return gen::cycle_with_paths(spec.n, spec.l);
    case Model::PyramidWedge: return gen::pyramid_wedge(spec.n);
    case Model::Fixture: return fixtures::by_name(spec.fixture);
  }
  throw std::invalid_argument("unknown model");
}

}  // namespace blockecc

#endif  // BLOCKECC_GENERATORS_HPP
