// acceptance.cpp - release gate. Eight criteria, one PASS/FAIL line each;
// the exit code is the number of failed criteria.
//
// Criterion 6 exercises the full cactus pipeline including the claim that
// the pruned graph is chemical. That claim is false for starlike cacti
// whose hub keeps degree five or more (the prune is the identity on them),
// so the criterion reports an honest FAIL with a per-claim breakdown while
// every metric and bound claim is required to hold on all trials.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "blockecc/eccentricity.hpp"
#include "blockecc/fixtures.hpp"
#include "blockecc/generators.hpp"
#include "blockecc/oracles.hpp"
#include "blockecc/prune.hpp"
#include "blockecc/randic.hpp"
#include "blockecc/suite.hpp"

namespace {

using namespace blockecc;

struct Outcome {
  bool pass = false;
  std::string detail;
  std::vector<std::string> extra;  // indented context lines
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Appends "label" to msgs when ok is false; returns ok for chaining.
bool expect(bool ok, const std::string& label, std::vector<std::string>& msgs) {
  if (!ok) msgs.push_back(label);
  return ok;
}

// --- criterion 1: fixture worked examples, exact integers --------------------

Outcome criterion_fixtures() {
  std::vector<std::string> bad;

  {
    Graph g = fixtures::c4l();
    BlockDecomposition dec = decompose(g);
    EccentricityReport rep = full_report(g, dec);
    int cycle = dec.block_of_edge(0, 1);
    expect(rep.becc[static_cast<std::size_t>(cycle)] == 1, "c4l cycle becc", bad);
    for (int b = 0; b < dec.block_count(); ++b) {
      if (b != cycle) expect(rep.becc[static_cast<std::size_t>(b)] == 3, "c4l pendant becc", bad);
    }
    for (int v = 0; v < 4; ++v) expect(rep.ecc[static_cast<std::size_t>(v)] == 3, "c4l cycle ecc", bad);
    expect(rep.verdict.type == GraphType::B, "c4l type", bad);
  }
  {
    Graph g = fixtures::hex();
    BlockDecomposition dec = decompose(g);
    EccentricityReport rep = full_report(g, dec);
    int cycle = dec.block_of_edge(0, 1);
    expect(rep.center == std::vector<int>{5}, "hex center", bad);
    expect(rep.ecc[5] == 3, "hex center ecc", bad);
    expect(rep.central_blocks == std::vector<int>{cycle}, "hex central block", bad);
    expect(rep.becc[static_cast<std::size_t>(cycle)] == 2, "hex cycle becc", bad);
  }
  {
    Graph g = fixtures::pyr2();
    EccentricityReport rep = full_report(g);
    expect(rep.verdict.type == GraphType::A, "pyr2 type", bad);
    expect(rep.ecc[0] == 1, "pyr2 peak ecc", bad);
    for (int v = 1; v < 9; ++v) {
      expect(rep.ecc[static_cast<std::size_t>(v)] == 2, "pyr2 rim ecc", bad);
      expect(rep.eccentric[static_cast<std::size_t>(v)].size() == 5, "pyr2 eccentric count", bad);
    }
  }
  {
    Graph g = fixtures::tt4();
    BlockDecomposition dec = decompose(g);
    EccentricityReport rep = full_report(g, dec);
    expect(rep.verdict.type == GraphType::B, "tt4 type", bad);
    expect(rep.becc[static_cast<std::size_t>(dec.block_of_edge(2, 3))] == 1, "tt4 square becc", bad);
    expect(rep.ecc[0] == 2 && rep.ecc[1] == 2, "tt4 articulation ecc", bad);
    expect(rep.eccentric[4].size() == 3, "tt4 triangle eccentric count", bad);
    expect(rep.eccentric[6].size() == 3, "tt4 triangle eccentric count", bad);
  }

  Outcome out;
  out.pass = bad.empty();
  out.detail = out.pass ? "all fixture values match exactly"
                        : "mismatch: " + bad.front();
  return out;
}

// --- criterion 2: cycle-with-paths radius/diameter formulas -------------------

Outcome criterion_grid() {
  std::vector<std::string> bad;
  for (int n = 1; n <= 6; ++n) {
    for (int l = 1; l <= 5; ++l) {
      Graph g = gen::cycle_with_paths(n, l);
      BlockDecomposition dec = decompose(g);
      EccentricityReport rep = full_report(g, dec);
      std::ostringstream tag;
      tag << "n=" << n << " l=" << l;
      expect(rep.diam == 2 * l + n, tag.str() + " diam", bad);
      expect(rep.rad == l + n, tag.str() + " rad", bad);
      if (rep.verdict.type != GraphType::B) {
        bad.push_back(tag.str() + " type");
        continue;
      }
      int core_diam = graph_diameter(block_subgraph(dec, rep.verdict.central_block));
      expect(rep.diam == 2 * rep.rad - core_diam, tag.str() + " equality", bad);
    }
  }
  Outcome out;
  out.pass = bad.empty();
  out.detail = out.pass ? "diam = 2l+n, rad = l+n, diam = 2 rad - diam(B) for all 30 grids"
                        : "mismatch: " + bad.front();
  return out;
}

// --- criterion 3: closed forms and formulation agreement ----------------------

Outcome criterion_closed_forms(const std::vector<Graph>& corpus) {
  std::vector<std::string> bad;
  const double sqrt2 = std::sqrt(2.0);
  expect(std::fabs(randic_index(gen::path(2)) - 1.0) <= kRandicTol, "P2", bad);
  for (int n = 3; n <= 50; ++n) {
    double want = (n - 3) / 2.0 + sqrt2;
    if (std::fabs(randic_index(gen::path(n)) - want) > kRandicTol) {
      bad.push_back("P" + std::to_string(n));
    }
    if (std::fabs(randic_index(gen::cycle(n)) - n / 2.0) > kRandicTol) {
      bad.push_back("C" + std::to_string(n));
    }
  }
  int checked = 0;
  for (const Graph& g : corpus) {
    if (std::fabs(randic_index(g) - randic_index_alt(g)) > kRandicTol) {
      bad.push_back("formulation disagreement on corpus graph " + std::to_string(checked));
    }
    ++checked;
  }
  Outcome out;
  out.pass = bad.empty();
  std::ostringstream detail;
  if (out.pass) {
    detail << "paths and cycles to n=50 exact, formulations agree on " << checked
           << " corpus graphs";
  } else {
    detail << "mismatch: " << bad.front();
  }
  out.detail = detail.str();
  return out;
}

// --- criteria 4 and 5: property suites over the default corpus ----------------

Outcome run_properties(const std::vector<GenSpec>& specs, const std::vector<Graph>& graphs,
                       const std::vector<std::string>& properties) {
  long long violations = 0;
  std::string first;
  for (const std::string& prop : properties) {
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      for (const std::string& msg : run_property(prop, graphs[i], specs[i].seed)) {
        ++violations;
        if (first.empty()) first = prop + " on " + describe(specs[i]) + ": " + msg;
      }
    }
  }
  Outcome out;
  out.pass = violations == 0;
  std::ostringstream detail;
  if (out.pass) {
    detail << properties.size() << " properties x " << graphs.size() << " graphs, 0 violations";
  } else {
    detail << violations << " violations, first: " << first;
  }
  out.detail = detail.str();
  return out;
}

// --- criterion 6: the cactus pipeline ------------------------------------------

Outcome criterion_cactus(const std::vector<GenSpec>& specs, const std::vector<Graph>& graphs) {
  long long chemical_fail = 0, radius_fail = 0, diameter_fail = 0, monotone_fail = 0;
  long long eliminable_fail = 0, strong_fail = 0, diam_bound_fail = 0, weak_fail = 0;
  int worst_degree = 0;
  std::string first_metric_failure;

  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Graph& g = graphs[i];
    CactusTheoremReport rep = verify_cactus_theorem(g);
    if (!rep.pruned_chemical) {
      ++chemical_fail;
      int d = prune(g).pruned.max_degree();
      if (d > worst_degree) worst_degree = d;
    }
    auto metric = [&](bool ok, long long& counter, const char* what) {
      if (!ok) {
        ++counter;
        if (first_metric_failure.empty()) {
          first_metric_failure = std::string(what) + " on " + describe(specs[i]);
        }
      }
    };
    metric(rep.radius_preserved, radius_fail, "radius preservation");
    metric(rep.diameter_preserved, diameter_fail, "diameter preservation");
    metric(rep.deletion_monotone, monotone_fail, "deletion monotonicity");
    metric(rep.leaf_eliminable, eliminable_fail, "leaf elimination");
    metric(rep.strong_radius_bound, strong_fail, "strong radius bound");
    metric(rep.diameter_bound || !rep.diameter_bound_applies, diam_bound_fail,
           "diameter bound");
    metric(rep.weak_radius_bound || rep.even_path, weak_fail, "weak radius bound");
  }

  long long total = static_cast<long long>(graphs.size());
  Outcome out;
  out.pass = chemical_fail == 0 && radius_fail == 0 && diameter_fail == 0 &&
             monotone_fail == 0 && eliminable_fail == 0 && strong_fail == 0 &&
             diam_bound_fail == 0 && weak_fail == 0;
  std::ostringstream detail;
  if (out.pass) {
    detail << "full pipeline holds on " << total << "/" << total << " cacti";
  } else if (radius_fail + diameter_fail + monotone_fail + eliminable_fail + strong_fail +
                 diam_bound_fail + weak_fail ==
             0) {
    detail << "pruned-subgraph chemicality fails on " << chemical_fail << "/" << total
           << " cacti (worst retained hub degree " << worst_degree
           << "); every other claim holds on " << total << "/" << total;
  } else {
    detail << "metric claim failed: " << first_metric_failure;
  }
  out.detail = detail.str();
  std::ostringstream b1, b2;
  b1 << "chemicality " << (total - chemical_fail) << "/" << total
     << ", radius " << (total - radius_fail) << "/" << total << ", diameter "
     << (total - diameter_fail) << "/" << total << ", monotone " << (total - monotone_fail)
     << "/" << total;
  b2 << "eliminable " << (total - eliminable_fail) << "/" << total << ", strong bound "
     << (total - strong_fail) << "/" << total << ", diam bound " << (total - diam_bound_fail)
     << "/" << total << ", weak bound " << (total - weak_fail) << "/" << total;
  out.extra.push_back(b1.str());
  out.extra.push_back(b2.str());
  return out;
}

// --- criterion 7: oracle equivalence --------------------------------------------

Outcome criterion_oracles(const std::vector<Graph>& corpus) {
  long long disagreements = 0;
  long long pairs_checked = 0, art_checked = 0, block_checked = 0, sep_checked = 0;
  std::string first;
  auto flag = [&](const std::string& what) {
    ++disagreements;
    if (first.empty()) first = what;
  };

  for (std::size_t idx = 0; idx < corpus.size(); ++idx) {
    const Graph& g = corpus[idx];
    const int n = g.vertex_count();
    std::string tag = "graph " + std::to_string(idx);
    BlockDecomposition dec = decompose(g);

    if (n <= 64) {
      ++art_checked;
      if (oracle_articulation_points(g) != dec.articulation_points) {
        flag(tag + ": articulation oracle");
      }
      ++pairs_checked;
      std::vector<std::vector<int>> slow = oracle_all_pairs(g);
      std::vector<DistanceRow> fast = all_pairs_bfs(g);
      for (int v = 0; v < n; ++v) {
        if (fast[static_cast<std::size_t>(v)].dist != slow[static_cast<std::size_t>(v)]) {
          flag(tag + ": all-pairs oracle at " + std::to_string(v));
          break;
        }
      }
    }

    if (g.edge_count() <= 14) {
      ++block_checked;
      std::vector<std::vector<Edge>> fast;
      for (const Block& b : dec.blocks) {
        if (!b.edges.empty()) fast.push_back(b.edges);
      }
      for (auto& c : fast) std::sort(c.begin(), c.end());
      std::sort(fast.begin(), fast.end());
      std::vector<std::vector<Edge>> slow = oracle_blocks(g);
      for (auto& c : slow) std::sort(c.begin(), c.end());
      std::sort(slow.begin(), slow.end());
      if (fast != slow) flag(tag + ": block oracle");
    }

    if (n <= 10) {
      ++sep_checked;
      for (int a = 0; a < n; ++a) {
        for (int u = 0; u < n; ++u) {
          for (int v = u + 1; v < n; ++v) {
            if (u == a || v == a) continue;
            if (vertex_separates(g, a, u, v) != oracle_separates(g, a, u, v)) {
              flag(tag + ": separation oracle");
            }
          }
        }
      }
    }
  }

  Outcome out;
  out.pass = disagreements == 0;
  std::ostringstream detail;
  if (out.pass) {
    detail << "0 disagreements (all-pairs " << pairs_checked << ", articulation "
           << art_checked << ", blocks " << block_checked << ", separation " << sep_checked
           << " graphs)";
  } else {
    detail << disagreements << " disagreements, first: " << first;
  }
  out.detail = detail.str();
  return out;
}

// --- criterion 8: conjecture fuzz ----------------------------------------------

Outcome criterion_fuzz() {
  FuzzReport rep = fuzz_randic(10000, 7, 60, 10);
  Outcome out;
  out.pass = rep.passed();
  std::ostringstream detail;
  if (out.pass) {
    detail << rep.trials << " general graphs, no non-exempt index below the radius"
           << ", min slack " << rep.min_slack;
  } else {
    detail << rep.violations.size() << " graphs with index below radius, first "
           << describe(rep.violations.front().spec);
  }
  out.detail = detail.str();
  for (const FuzzEntry& e : rep.smallest) {
    std::ostringstream line;
    line.precision(12);
    line << "slack " << e.slack_radius << "  n=" << e.n << " rad=" << e.rad
         << " index=" << e.index << "  " << describe(e.spec);
    out.extra.push_back(line.str());
  }
  for (const FuzzEntry& e : rep.even_paths) {
    std::ostringstream line;
    line.precision(12);
    line << "exempt even path, slack " << e.slack_radius << "  " << describe(e.spec);
    out.extra.push_back(line.str());
  }
  return out;
}

int report(int number, const Outcome& out, double elapsed, double budget) {
  bool pass = out.pass && (budget <= 0.0 || elapsed < budget);
  std::printf("CRITERION %d: %s - %s (%.2f s)\n", number, pass ? "PASS" : "FAIL",
              out.detail.c_str(), elapsed);
  for (const std::string& line : out.extra) std::printf("    %s\n", line.c_str());
  std::fflush(stdout);
  return pass ? 0 : 1;
}

}  // namespace

int main() {
  auto setup_start = std::chrono::steady_clock::now();
  std::vector<GenSpec> default_specs = default_corpus(10000, 42, 60);
  std::vector<Graph> default_graphs;
  default_graphs.reserve(default_specs.size());
  for (const GenSpec& spec : default_specs) default_graphs.push_back(generate(spec));
  std::vector<GenSpec> cactus_specs = cactus_corpus(10000, 42, 60);
  std::vector<Graph> cactus_graphs;
  cactus_graphs.reserve(cactus_specs.size());
  for (const GenSpec& spec : cactus_specs) cactus_graphs.push_back(generate(spec));
  std::printf("corpus: %zu default + %zu cactus graphs generated in %.2f s\n",
              default_graphs.size(), cactus_graphs.size(), seconds_since(setup_start));

  int failures = 0;
  auto run = [&failures](int number, double budget, auto&& fn) {
    auto start = std::chrono::steady_clock::now();
    Outcome out = fn();
    failures += report(number, out, seconds_since(start), budget);
  };

  run(1, 1.0, [] { return criterion_fixtures(); });
  run(2, 1.0, [] { return criterion_grid(); });
  run(3, 0.0, [&] { return criterion_closed_forms(default_graphs); });
  run(4, 120.0, [&] {
    return run_properties(default_specs, default_graphs,
                          {"separation-additivity", "prop-becc", "prop-brad",
                           "central-block-theorem", "eccentric-location", "rd-bounds",
                           "self-centered", "upper-ecc-diam"});
  });
  run(5, 180.0, [&] { return run_properties(default_specs, default_graphs, {"replacement"}); });
  run(6, 120.0, [&] { return criterion_cactus(cactus_specs, cactus_graphs); });
  run(7, 0.0, [&] { return criterion_oracles(default_graphs); });
  run(8, 0.0, [] { return criterion_fuzz(); });

  std::printf("%d/8 criteria passed\n", 8 - failures);
  return failures;
}
