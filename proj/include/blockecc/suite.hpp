// suite.hpp - quantified property checks over seeded graph corpora.
//
// Every theorem checker in the library is exposed here as a named property
// that can be run over a corpus of generated graphs. A violation records the
// generating GenSpec, so any failure can be replayed from the report alone.

#ifndef BLOCKECC_SUITE_HPP
#define BLOCKECC_SUITE_HPP

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "blockecc/blocks.hpp"
#include "blockecc/eccentricity.hpp"
#include "blockecc/generators.hpp"
#include "blockecc/graph.hpp"
#include "blockecc/prune.hpp"
#include "blockecc/randic.hpp"
#include "blockecc/rng.hpp"

namespace blockecc {

struct Violation {
  GenSpec spec;
  std::string detail;
};

struct PropertyResult {
  std::string name;
  int trials = 0;
  std::vector<Violation> violations;
  double wall_ms = 0.0;
};

struct SuiteReport {
  std::vector<PropertyResult> results;

  int violation_count() const {
    int total = 0;
    for (const PropertyResult& r : results) total += static_cast<int>(r.violations.size());
    return total;
  }
  bool passed() const { return violation_count() == 0; }
};

inline const std::vector<std::string>& all_property_names() {
  static const std::vector<std::string> names = {
      "separation-additivity", "prop-becc",         "prop-brad",
      "central-block-theorem", "eccentric-location", "rd-bounds",
      "self-centered",         "replacement",        "randic-agreement",
      "randic-star-bound",     "wedge-inequality",   "leaf-block-monotone",
      "cactus-randic",         "upper-ecc-diam"};
  return names;
}

// --- corpora ---------------------------------------------------------------------

// Mixed default corpus: 40% cacti, 20% trees, 20% sparse connected graphs,
// 10% cycle-with-paths grids, 10% named fixtures. Trial t draws its own
// seed stream, so corpora with different lengths share a prefix.
inline std::vector<GenSpec> default_corpus(int trials, std::uint64_t seed, int max_n) {
  if (max_n < 3) throw std::invalid_argument("default_corpus requires max_n >= 3");
  std::vector<GenSpec> specs;
  specs.reserve(static_cast<std::size_t>(trials));
  const auto& fixture_names = fixtures::names();
  for (int t = 0; t < trials; ++t) {
    std::uint64_t child = split_seed(seed, static_cast<std::uint64_t>(t));
    SplitMix64 rng(child);
    GenSpec spec;
    spec.seed = child;
    switch (t % 10) {
      case 0:
      case 1:
      case 2:
      case 3:
        spec.model = Model::Cactus;
        spec.n = rng.range(1, max_n);
        break;
      case 4:
      case 5:
        spec.model = Model::Tree;
        spec.n = rng.range(1, max_n);
        break;
      case 6:
      case 7: {
        spec.model = Model::ConnectedGnm;
        spec.n = rng.range(2, max_n);
        long long cap = static_cast<long long>(spec.n) * (spec.n - 1) / 2;
        long long hi = std::min<long long>(cap, static_cast<long long>(spec.n) - 1 + spec.n);
        spec.m = static_cast<int>(rng.range(spec.n - 1, static_cast<int>(hi)));
        break;
      }
      case 8:
        spec.model = Model::CycleWithPaths;
        spec.n = rng.range(1, 6);
        spec.l = rng.range(0, 5);
        break;
      default:
        spec.model = Model::Fixture;
        spec.fixture = fixture_names[static_cast<std::size_t>(
            rng.below(static_cast<std::uint64_t>(fixture_names.size())))];
        break;
    }
    specs.push_back(spec);
  }
  return specs;
}

// All-cactus corpus for the Randic pipeline.
inline std::vector<GenSpec> cactus_corpus(int trials, std::uint64_t seed, int max_n) {
  if (max_n < 1) throw std::invalid_argument("cactus_corpus requires max_n >= 1");
  std::vector<GenSpec> specs;
  specs.reserve(static_cast<std::size_t>(trials));
  for (int t = 0; t < trials; ++t) {
    std::uint64_t child = split_seed(seed, static_cast<std::uint64_t>(t));
    SplitMix64 rng(child);
    GenSpec spec;
    spec.model = Model::Cactus;
    spec.seed = child;
    spec.n = rng.range(1, max_n);
    specs.push_back(spec);
  }
  return specs;
}

// The five named fixtures.
inline std::vector<GenSpec> fixture_corpus() {
  std::vector<GenSpec> specs;
  for (const std::string& name : fixtures::names()) {
    GenSpec spec;
    spec.model = Model::Fixture;
    spec.fixture = name;
    specs.push_back(spec);
  }
  return specs;
}

// Cycle-with-paths grid, n in [1,6] and l in [0,5].
inline std::vector<GenSpec> grid_corpus() {
  std::vector<GenSpec> specs;
  for (int n = 1; n <= 6; ++n) {
    for (int l = 0; l <= 5; ++l) {
      GenSpec spec;
      spec.model = Model::CycleWithPaths;
      spec.n = n;
      spec.l = l;
      specs.push_back(spec);
    }
  }
  return specs;
}

// General graphs for the conjecture fuzz: mostly sparse connected graphs,
// some trees, plus paths and cycles so the even-path exemption is exercised.
inline std::vector<GenSpec> general_corpus(int trials, std::uint64_t seed, int max_n) {
  if (max_n < 3) throw std::invalid_argument("general_corpus requires max_n >= 3");
  std::vector<GenSpec> specs;
  specs.reserve(static_cast<std::size_t>(trials));
  for (int t = 0; t < trials; ++t) {
    std::uint64_t child = split_seed(seed, static_cast<std::uint64_t>(t));
    SplitMix64 rng(child);
    GenSpec spec;
    spec.seed = child;
    int stripe = t % 20;
    if (stripe < 14) {
      spec.model = Model::ConnectedGnm;
      spec.n = rng.range(2, max_n);
      long long cap = static_cast<long long>(spec.n) * (spec.n - 1) / 2;
      long long hi = std::min<long long>(cap, static_cast<long long>(spec.n) - 1 + 2 * spec.n);
      spec.m = static_cast<int>(rng.range(spec.n - 1, static_cast<int>(hi)));
    } else if (stripe < 18) {
      spec.model = Model::Tree;
      spec.n = rng.range(1, max_n);
    } else if (stripe == 18) {
      spec.model = Model::Path;
      spec.n = rng.range(2, max_n);
    } else {
      spec.model = Model::Cycle;
      spec.n = rng.range(3, max_n);
    }
    specs.push_back(spec);
  }
  return specs;
}

// --- property checkers -------------------------------------------------------------

namespace detail {

// becc agrees with a direct recomputation from the all-pairs table and never
// exceeds the eccentricity of any vertex of the block.
inline std::vector<std::string> property_becc(const Graph& g) {
  std::vector<std::string> failures;
  BlockDecomposition dec = decompose(g);
  std::vector<DistanceRow> dist = all_pairs_bfs(g);
  std::vector<int> ecc = vertex_eccentricities(g);
  for (int b = 0; b < dec.block_count(); ++b) {
    const Block& blk = dec.blocks[static_cast<std::size_t>(b)];
    int direct = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
      int to_block = std::numeric_limits<int>::max();
      for (int u : blk.vertices) {
        to_block = std::min(to_block,
                            dist[static_cast<std::size_t>(u)].dist[static_cast<std::size_t>(v)]);
      }
      direct = std::max(direct, to_block);
    }
    int fast = block_eccentricity(g, dec, b);
    if (fast != direct) {
      failures.push_back("block " + std::to_string(b) + " eccentricity " + std::to_string(fast) +
                         " differs from direct recomputation " + std::to_string(direct));
    }
    for (int u : blk.vertices) {
      if (fast > ecc[static_cast<std::size_t>(u)]) {
        failures.push_back("block " + std::to_string(b) + " eccentricity exceeds ecc(" +
                           std::to_string(u) + ")");
      }
    }
  }
  return failures;
}

// brad and rad are the minima of their families and brad never exceeds rad.
inline std::vector<std::string> property_brad(const Graph& g) {
  std::vector<std::string> failures;
  BlockDecomposition dec = decompose(g);
  EccentricityReport rep = full_report(g, dec);
  int min_becc = *std::min_element(rep.becc.begin(), rep.becc.end());
  int min_ecc = *std::min_element(rep.ecc.begin(), rep.ecc.end());
  if (rep.brad != min_becc) failures.push_back("brad is not the minimum block eccentricity");
  if (rep.rad != min_ecc) failures.push_back("rad is not the minimum vertex eccentricity");
  if (rep.brad > rep.rad) {
    failures.push_back("brad " + std::to_string(rep.brad) + " exceeds rad " +
                       std::to_string(rep.rad));
  }
  return failures;
}

inline std::vector<std::string> property_replacement(const Graph& g, std::uint64_t seed) {
  std::vector<std::string> failures;
  auto run = [&](const ChoicePolicy& policy, const std::string& label) {
    PruneResult result = prune_with_choices(g, policy);
    ReplacementChecklist list = verify_replacement(g, result);
    for (const std::string& msg : list.failures) failures.push_back(label + ": " + msg);
    return result;
  };
  PruneResult deterministic = run(first_choice_policy(), "deterministic");
  for (int k = 0; k < 3; ++k) {
    run(random_choice_policy(split_seed(seed, 101 + static_cast<std::uint64_t>(k))),
        "random chooser " + std::to_string(k));
  }
  if (!prune_idempotent(deterministic)) failures.push_back("pruning twice changed the graph");
  return failures;
}

inline std::vector<std::string> property_randic_agreement(const Graph& g) {
  double a = randic_index(g);
  double b = randic_index_alt(g);
  if (std::abs(a - b) > kRandicTol) {
    std::ostringstream msg;
    msg << "formulations disagree: " << a << " vs " << b;
    return {msg.str()};
  }
  return {};
}

inline std::vector<std::string> property_randic_star_bound(const Graph& g) {
  std::vector<std::string> failures;
  double index = randic_index(g);
  double lower = std::sqrt(static_cast<double>(g.vertex_count() - 1));
  double upper = static_cast<double>(g.vertex_count()) / 2.0;
  if (index < lower - kRandicTol) failures.push_back("index below sqrt(n-1)");
  if (index > upper + kRandicTol) failures.push_back("index above n/2");
  return failures;
}

inline std::vector<std::string> property_wedge(const Graph& g) {
  std::vector<std::string> failures;
  BlockDecomposition dec = decompose(g);
  if (dec.articulation_points.empty()) return failures;
  BCTree bc = build_bc_tree(g, dec);
  for (int a : dec.articulation_points) {
    WedgeCheck check = check_wedge_inequality(g, dec, bc, a);
    if (!check.holds) {
      std::ostringstream msg;
      msg << "wedge bound fails at vertex " << a << " with slack " << check.slack;
      failures.push_back(msg.str());
    }
    if (!check.component_monotone) {
      failures.push_back("component at vertex " + std::to_string(a) +
                         " has larger index than the whole graph");
    }
  }
  return failures;
}

inline std::vector<std::string> property_leaf_monotone(const Graph& g) {
  std::vector<std::string> failures;
  BlockDecomposition dec = decompose(g);
  if (dec.block_count() < 2) return failures;
  BCTree bc = build_bc_tree(g, dec);
  double before = randic_index(g);
  for (int b = 0; b < dec.block_count(); ++b) {
    if (bc.block_to_cuts[static_cast<std::size_t>(b)].size() != 1) continue;
    LeafBlockDeletion del = delete_leaf_block(g, dec, bc, b);
    double after = randic_index(del.graph);
    if (after > before + kRandicTol) {
      std::ostringstream msg;
      msg << "deleting leaf block " << b << " raised the index by " << (after - before);
      failures.push_back(msg.str());
    }
  }
  return failures;
}

inline std::vector<std::string> property_cactus_randic(const Graph& g) {
  if (!is_cactus(g)) return {};
  CactusTheoremReport rep = verify_cactus_theorem(g);
  return rep.failures;
}

}  // namespace detail

// Runs one named property on one graph. The seed feeds the randomized prune
// choosers; everything else is deterministic in g.
inline std::vector<std::string> run_property(const std::string& name, const Graph& g,
                                             std::uint64_t seed) {
  if (name == "separation-additivity") return check_separation_additivity(g);
  if (name == "prop-becc") return detail::property_becc(g);
  if (name == "prop-brad") return detail::property_brad(g);
  if (name == "central-block-theorem") return check_central_block_theorem(g);
  if (name == "eccentric-location") return check_eccentric_location(g);
  if (name == "rd-bounds") return check_radius_diameter_bounds(g);
  if (name == "self-centered") return check_self_centered(g);
  if (name == "replacement") return detail::property_replacement(g, seed);
  if (name == "randic-agreement") return detail::property_randic_agreement(g);
  if (name == "randic-star-bound") return detail::property_randic_star_bound(g);
  if (name == "wedge-inequality") return detail::property_wedge(g);
  if (name == "leaf-block-monotone") return detail::property_leaf_monotone(g);
  if (name == "cactus-randic") return detail::property_cactus_randic(g);
  if (name == "upper-ecc-diam") return check_upper_eccentricity_diameter(g);
  throw std::invalid_argument("unknown property: " + name);
}

// Runs the named properties over the corpus. Trials are independent and run
// in corpus order, so the report is deterministic.
inline SuiteReport run_suite(const std::vector<GenSpec>& corpus,
                             const std::vector<std::string>& properties) {
  const auto& known = all_property_names();
  for (const std::string& p : properties) {
    if (std::find(known.begin(), known.end(), p) == known.end()) {
      throw std::invalid_argument("unknown property: " + p);
    }
  }
  std::vector<Graph> graphs;
  graphs.reserve(corpus.size());
  for (const GenSpec& spec : corpus) graphs.push_back(generate(spec));

  SuiteReport report;
  for (const std::string& p : properties) {
    PropertyResult result;
    result.name = p;
    auto start = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      ++result.trials;
      for (const std::string& msg : run_property(p, graphs[i], corpus[i].seed)) {
        result.violations.push_back({corpus[i], msg});
      }
    }
    auto stop = std::chrono::steady_clock::now();
    result.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    report.results.push_back(std::move(result));
  }
  return report;
}

inline SuiteReport run_suite(const std::vector<GenSpec>& corpus) {
  return run_suite(corpus, all_property_names());
}

// --- conjecture fuzz ------------------------------------------------------------

struct FuzzEntry {
  GenSpec spec;
  int n = 0;
  int rad = 0;
  double index = 0.0;
  double slack_radius = 0.0;
};

struct FuzzReport {
  int trials = 0;
  std::vector<FuzzEntry> smallest;    // non-exempt graphs, ascending slack
  std::vector<FuzzEntry> even_paths;  // exempt family, listed separately
  std::vector<FuzzEntry> violations;  // non-exempt with negative slack
  double min_slack = 0.0;

  bool passed() const { return violations.empty(); }
};

// Searches random general graphs for Rand(G) < rad(G). Even paths are the
// known exception and never count as violations.
inline FuzzReport fuzz_randic(int trials, std::uint64_t seed, int max_n, int top_k) {
  FuzzReport report;
  report.trials = trials;
  std::vector<FuzzEntry> regular;
  for (const GenSpec& spec : general_corpus(trials, seed, max_n)) {
    Graph g = generate(spec);
    RandicReport rr = check_conjectures(g);
    FuzzEntry entry{spec, rr.n, rr.rad, rr.index, rr.slack_radius};
    if (rr.even_path) {
      report.even_paths.push_back(entry);
    } else {
      regular.push_back(entry);
      if (rr.slack_radius < -kRandicTol) report.violations.push_back(entry);
    }
  }
  std::stable_sort(regular.begin(), regular.end(),
                   [](const FuzzEntry& a, const FuzzEntry& b) {
                     return a.slack_radius < b.slack_radius;
                   });
  std::stable_sort(report.even_paths.begin(), report.even_paths.end(),
                   [](const FuzzEntry& a, const FuzzEntry& b) {
                     return a.slack_radius < b.slack_radius;
                   });
  if (static_cast<int>(regular.size()) > top_k) {
    regular.resize(static_cast<std::size_t>(top_k));
  }
  if (static_cast<int>(report.even_paths.size()) > top_k) {
    report.even_paths.resize(static_cast<std::size_t>(top_k));
  }
  report.smallest = std::move(regular);
  report.min_slack = report.smallest.empty() ? 0.0 : report.smallest.front().slack_radius;
  return report;
}

}  // namespace blockecc

#endif  // BLOCKECC_SUITE_HPP
