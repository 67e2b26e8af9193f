// blockecc_cli.cpp - single-binary front end for the block eccentricity library.
//
// Exit codes: 0 success or no violation, 1 property violation or
// counterexample, 2 usage or parse error, 3 precondition failure
// (empty or disconnected input).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "blockecc/blocks.hpp"
#include "blockecc/eccentricity.hpp"
#include "blockecc/generators.hpp"
#include "blockecc/graph.hpp"
#include "blockecc/prune.hpp"
#include "blockecc/randic.hpp"
#include "blockecc/report_json.hpp"
#include "blockecc/suite.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;

blockecc::Graph read_graph(const std::string& path) {
  if (path == "-") return blockecc::parse_edge_list(std::cin);
  std::ifstream in(path);
  if (!in) throw blockecc::ParseError(0, "cannot open " + path);
  return blockecc::parse_edge_list(in);
}

void print_json(const blockecc::ordered_json& j) { std::cout << j.dump(2) << "\n"; }

std::string join_ints(const std::vector<int>& xs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out << " ";
    out << xs[i];
  }
  return out.str();
}

int cmd_analyze(const std::string& input, const std::string& format) {
  blockecc::Graph g = read_graph(input);
  if (g.vertex_count() == 0) {
    std::cerr << "error: empty graph\n";
    return kExitPrecondition;
  }
  blockecc::EccentricityReport rep = blockecc::full_report(g);
  if (format == "json") {
    print_json(blockecc::eccentricity_to_json(rep));
  } else {
    std::cout << "n=" << g.vertex_count() << " m=" << g.edge_count()
              << " blocks=" << rep.becc.size() << " type=" << blockecc::type_letter(rep.verdict.type);
    if (rep.verdict.degenerate) std::cout << " (degenerate)";
    std::cout << "\n";
    std::cout << "rad=" << rep.rad << " diam=" << rep.diam << " brad=" << rep.brad << "\n";
    std::cout << "center: " << join_ints(rep.center) << "\n";
    std::cout << "central blocks: " << join_ints(rep.central_blocks) << "\n";
    std::cout << "periphery: " << join_ints(rep.periphery) << "\n";
    std::cout << "peripheral blocks: " << join_ints(rep.peripheral_blocks) << "\n";
    std::cout << "ecc: " << join_ints(rep.ecc) << "\n";
    std::cout << "becc: " << join_ints(rep.becc) << "\n";
  }
  return kExitOk;
}

int cmd_bc_tree(const std::string& input, const std::string& format) {
  blockecc::Graph g = read_graph(input);
  if (g.vertex_count() == 0) {
    std::cerr << "error: empty graph\n";
    return kExitPrecondition;
  }
  blockecc::BlockDecomposition dec = blockecc::decompose(g);
  blockecc::BCTree bc = blockecc::build_bc_tree(g, dec);
  if (format == "json") {
    blockecc::ordered_json j;
    blockecc::ordered_json blocks = blockecc::ordered_json::array();
    for (const blockecc::Block& b : dec.blocks) blocks.push_back(b.vertices);
    j["blocks"] = blocks;
    j["cutVertices"] = bc.cut_vertices;
    blockecc::ordered_json edges = blockecc::ordered_json::array();
    for (int b = 0; b < bc.num_blocks; ++b) {
      for (int c : bc.block_to_cuts[static_cast<std::size_t>(b)]) {
        edges.push_back({b, bc.cut_vertices[static_cast<std::size_t>(c)]});
      }
    }
    j["edges"] = edges;
    j["pathOrStarlike"] = bc.path_or_starlike();
    print_json(j);
  } else {
    std::cout << blockecc::export_dot(bc);
  }
  return kExitOk;
}

int cmd_prune(const std::string& input, const std::string& sidecar) {
  blockecc::Graph g = read_graph(input);
  if (g.vertex_count() == 0) {
    std::cerr << "error: empty graph\n";
    return kExitPrecondition;
  }
  blockecc::PruneResult result = blockecc::prune(g);
  std::cout << blockecc::to_edge_list(result.pruned);
  if (!sidecar.empty()) {
    blockecc::ReplacementChecklist list = blockecc::verify_replacement(g, result);
    std::ofstream out(sidecar);
    if (!out) {
      std::cerr << "error: cannot write " << sidecar << "\n";
      return kExitUsage;
    }
    out << blockecc::prune_to_json(result, list).dump(2) << "\n";
  }
  return kExitOk;
}

int cmd_randic(const std::string& input, const std::string& format) {
  blockecc::Graph g = read_graph(input);
  if (g.vertex_count() == 0) {
    std::cerr << "error: empty graph\n";
    return kExitPrecondition;
  }
  blockecc::RandicReport rep = blockecc::check_conjectures(g);
  if (format == "json") {
    print_json(blockecc::randic_to_json(rep));
  } else {
    std::ostringstream out;
    out.precision(12);
    out << "n=" << rep.n << " rad=" << rep.rad << " diam=" << rep.diam << "\n";
    out << "index=" << rep.index << " (alt " << rep.index_alt << ")\n";
    out << "cactus=" << (rep.cactus ? "yes" : "no")
        << " chemical=" << (rep.chemical ? "yes" : "no")
        << " evenPath=" << (rep.even_path ? "yes" : "no") << "\n";
    out << "slackRadius=" << rep.slack_radius << " slackDiameter=" << rep.slack_diameter
        << "\n";
    std::cout << out.str();
  }
  return kExitOk;
}

int cmd_gen(const blockecc::GenSpec& spec) {
  blockecc::Graph g = blockecc::generate(spec);
  std::cout << blockecc::to_edge_list(g);
  return kExitOk;
}

int cmd_verify(std::vector<std::string> properties, const std::string& corpus_name,
               int trials, std::uint64_t seed, int max_n, const std::string& format) {
  if (properties.empty()) properties = blockecc::all_property_names();
  std::vector<blockecc::GenSpec> corpus;
  if (corpus_name == "default") {
    corpus = blockecc::default_corpus(trials, seed, max_n);
  } else if (corpus_name == "cactus") {
    corpus = blockecc::cactus_corpus(trials, seed, max_n);
  } else if (corpus_name == "fixtures") {
    corpus = blockecc::fixture_corpus();
  } else if (corpus_name == "grid") {
    corpus = blockecc::grid_corpus();
  } else {
    std::cerr << "error: unknown corpus " << corpus_name << "\n";
    return kExitUsage;
  }
  blockecc::SuiteReport report = blockecc::run_suite(corpus, properties);
  if (format == "json") {
    print_json(blockecc::suite_to_json(report));
  } else {
    for (const blockecc::PropertyResult& r : report.results) {
      std::cout << r.name << ": " << r.trials << " trials, " << r.violations.size()
                << " violations, " << static_cast<long long>(r.wall_ms) << " ms\n";
      for (const blockecc::Violation& v : r.violations) {
        std::cout << "  " << blockecc::describe(v.spec) << ": " << v.detail << "\n";
      }
    }
    std::cout << (report.passed() ? "PASS" : "FAIL") << " (" << report.violation_count()
              << " violations)\n";
  }
  return report.passed() ? kExitOk : kExitViolation;
}

int cmd_fuzz(int trials, std::uint64_t seed, int max_n, int top_k, const std::string& format) {
  blockecc::FuzzReport report = blockecc::fuzz_randic(trials, seed, max_n, top_k);
  if (format == "json") {
    print_json(blockecc::fuzz_to_json(report));
  } else {
    std::ostringstream out;
    out.precision(12);
    out << "trials=" << report.trials << " minSlack=" << report.min_slack << "\n";
    out << "smallest slack (non-exempt):\n";
    for (const blockecc::FuzzEntry& e : report.smallest) {
      out << "  " << blockecc::describe(e.spec) << " slack=" << e.slack_radius << "\n";
    }
    if (!report.even_paths.empty()) {
      out << "even paths (exempt):\n";
      for (const blockecc::FuzzEntry& e : report.even_paths) {
        out << "  " << blockecc::describe(e.spec) << " slack=" << e.slack_radius << "\n";
      }
    }
    for (const blockecc::FuzzEntry& e : report.violations) {
      out << "VIOLATION " << blockecc::describe(e.spec) << " slack=" << e.slack_radius << "\n";
    }
    out << (report.passed() ? "PASS" : "FAIL") << "\n";
    std::cout << out.str();
  }
  return report.passed() ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"block-level eccentricity, pruning, and Randic index toolkit"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string format = "json";
  std::string sidecar;

  CLI::App* analyze = app.add_subcommand("analyze", "eccentricity and block report");
  analyze->add_option("input", input, "edge-list file or - for stdin");
  analyze->add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  CLI::App* bctree = app.add_subcommand("bc-tree", "block-cutpoint tree");
  std::string bc_format = "dot";
  bctree->add_option("input", input, "edge-list file or - for stdin");
  bctree->add_option("--format", bc_format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}));

  CLI::App* prune_cmd = app.add_subcommand("prune", "radius-preserving pruned subgraph");
  prune_cmd->add_option("input", input, "edge-list file or - for stdin");
  prune_cmd->add_option("--sidecar", sidecar, "write choice log and checklist JSON here");

  CLI::App* randic = app.add_subcommand("randic", "Randic index and bound slacks");
  randic->add_option("input", input, "edge-list file or - for stdin");
  randic->add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  CLI::App* gen = app.add_subcommand("gen", "generate a graph as an edge list");
  std::string model_str = "cactus";
  blockecc::GenSpec spec;
  gen->add_option("--model", model_str,
                  "path, cycle, tree, connected-gnm, cactus, spider, cycle-with-paths, "
                  "pyramid-wedge, fixture");
  gen->add_option("--n", spec.n, "vertex count / model size");
  gen->add_option("--m", spec.m, "edge count (connected-gnm)");
  gen->add_option("--l", spec.l, "path length (cycle-with-paths)");
  gen->add_option("--legs", spec.legs, "leg count (spider)");
  gen->add_option("--fixture", spec.fixture, "fixture name (fixture model)");
  gen->add_option("--seed", spec.seed, "generator seed");

  CLI::App* verify = app.add_subcommand("verify", "run property suite over a corpus");
  std::vector<std::string> properties;
  std::string corpus_name = "default";
  int trials = 10000;
  std::uint64_t seed = 42;
  int max_n = 60;
  verify->add_option("--property", properties, "property name, repeatable (default: all)");
  verify->add_option("--corpus", corpus_name, "default, cactus, fixtures, or grid")
      ->check(CLI::IsMember({"default", "cactus", "fixtures", "grid"}));
  verify->add_option("--trials", trials, "corpus size")->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", seed, "corpus seed");
  verify->add_option("--max-n", max_n, "largest graph order");
  verify->add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  CLI::App* fuzz = app.add_subcommand("fuzz", "search general graphs for Rand < rad");
  int fuzz_trials = 10000;
  std::uint64_t fuzz_seed = 7;
  int fuzz_max_n = 60;
  int top_k = 10;
  fuzz->add_option("--trials", fuzz_trials, "number of graphs")->check(CLI::NonNegativeNumber);
  fuzz->add_option("--seed", fuzz_seed, "corpus seed");
  fuzz->add_option("--max-n", fuzz_max_n, "largest graph order");
  fuzz->add_option("--top", top_k, "table size")->check(CLI::NonNegativeNumber);
  fuzz->add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(input, format);
    if (bctree->parsed()) return cmd_bc_tree(input, bc_format);
    if (prune_cmd->parsed()) return cmd_prune(input, sidecar);
    if (randic->parsed()) return cmd_randic(input, format);
    if (gen->parsed()) {
      spec.model = blockecc::model_from_name(model_str);
      return cmd_gen(spec);
    }
    if (verify->parsed()) {
      return cmd_verify(properties, corpus_name, trials, seed, max_n, format);
    }
    if (fuzz->parsed()) return cmd_fuzz(fuzz_trials, fuzz_seed, fuzz_max_n, top_k, format);
  } catch (const blockecc::ParseError& e) {
    std::cerr << "parse error (line " << e.line() << "): " << e.what() << "\n";
    return kExitUsage;
  } catch (const blockecc::DisconnectedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
