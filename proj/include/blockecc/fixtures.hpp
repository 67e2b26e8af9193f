// fixtures.hpp - small named graphs with hand-checked structure, used by the
// unit tests and mixed into the default verification corpus.

#ifndef BLOCKECC_FIXTURES_HPP
#define BLOCKECC_FIXTURES_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "blockecc/graph.hpp"

namespace blockecc {
namespace fixtures {

// 4-cycle 0-1-2-3 with one leaf per cycle vertex: 4 at 0, 5 at 1, 6 at 2,
// 7 at 3. rad 3 (the cycle), diam 4 (leaf to opposite leaf), cycle becc 1.
inline Graph c4l() {
  Graph g(8);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(3, 0);
  g.add_edge(0, 4);
  g.add_edge(1, 5);
  g.add_edge(2, 6);
  g.add_edge(3, 7);
  return g;
}

// 6-cycle 0..5 with a pendant 6 at vertex 1, a pendant 7 at vertex 3, and a
// length-2 path 5-8-9 at vertex 5. Unique center vertex 5 with ecc 3; the
// 6-cycle is the unique central block with becc 2.
inline Graph hex() {
  Graph g(10);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(3, 4);
  g.add_edge(4, 5);
  g.add_edge(5, 0);
  g.add_edge(1, 6);
  g.add_edge(3, 7);
  g.add_edge(5, 8);
  g.add_edge(8, 9);
  return g;
}

// Two square pyramids sharing their peak, vertex 0. Cycle 1-2-3-4 and cycle
// 5-6-7-8, with 0 adjacent to all eight. The peak is the unique center with
// ecc 1; every other vertex has ecc 2.
inline Graph pyr2() {
  Graph g(9);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(3, 4);
  g.add_edge(4, 1);
  g.add_edge(5, 6);
  g.add_edge(6, 7);
  g.add_edge(7, 8);
  g.add_edge(8, 5);
  for (int v = 1; v <= 8; ++v) g.add_edge(0, v);
  return g;
}

// 4-cycle 0-1-2-3 with a triangle 0-4-5 at vertex 0 and a triangle 1-6-7 at
// vertex 1. The 4-cycle is the unique central block (becc 1); the two
// articulation points 0 and 1 are the center (ecc 2).
inline Graph tt4() {
  Graph g(8);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(3, 0);
  g.add_edge(0, 4);
  g.add_edge(4, 5);
  g.add_edge(5, 0);
  g.add_edge(1, 6);
  g.add_edge(6, 7);
  g.add_edge(7, 1);
  return g;
}

// Small tree: a=0, x=1, y=2, z=3, w=4 with edges a-x, x-y, x-z, a-w.
// Type B with central block {a,x}; pruning keeps the path w-a-x-y.
inline Graph spiderz() {
  Graph g(5);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(1, 3);
  g.add_edge(0, 4);
  return g;
}

inline const std::vector<std::string>& names() {
  static const std::vector<std::string> all = {"c4l", "hex", "pyr2", "tt4", "spiderz"};
  return all;
}

inline Graph by_name(const std::string& name) {
  if (name == "c4l") return c4l();
  if (name == "hex") return hex();
  if (name == "pyr2") return pyr2();
  if (name == "tt4") return tt4();
  if (name == "spiderz") return spiderz();
  throw std::invalid_argument("unknown fixture: " + name);
}

}  // namespace fixtures
}  // namespace blockecc

#endif  // BLOCKECC_FIXTURES_HPP
