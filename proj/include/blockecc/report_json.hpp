// report_json.hpp - JSON views of the report types.
//
// JSON is the stable machine-readable surface: key order is fixed, arrays
// are ascending, and every real number is rounded to 12 significant digits
// before serialization so identical invocations produce byte-identical
// output.

#ifndef BLOCKECC_REPORT_JSON_HPP
#define BLOCKECC_REPORT_JSON_HPP

#include <cstdio>
#include <string>

#include "json.hpp"

#include "blockecc/eccentricity.hpp"
#include "blockecc/generators.hpp"
#include "blockecc/prune.hpp"
#include "blockecc/randic.hpp"
#include "blockecc/suite.hpp"

namespace blockecc {

using ordered_json = nlohmann::ordered_json;

// Rounds to 12 significant digits. The rounded double then serializes via
// the library's shortest round-trip form, which is stable across runs.
inline double json_real(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return std::stod(buf);
}

inline ordered_json eccentricity_to_json(const EccentricityReport& rep) {
  ordered_json j;
  j["ecc"] = rep.ecc;
  j["becc"] = rep.becc;
  j["rad"] = rep.rad;
  j["brad"] = rep.brad;
  j["diam"] = rep.diam;
  j["center"] = rep.center;
  j["centralBlocks"] = rep.central_blocks;
  j["periphery"] = rep.periphery;
  j["peripheralBlocks"] = rep.peripheral_blocks;
  j["type"] = std::string(1, type_letter(rep.verdict.type));
  ordered_json witness;
  if (rep.verdict.type == GraphType::A) {
    witness["centralPoint"] = rep.verdict.central_point;
    witness["centralBlocks"] = rep.central_blocks;
    witness["degenerate"] = rep.verdict.degenerate;
  } else {
    witness["centralBlock"] = rep.verdict.central_block;
  }
  j["witness"] = witness;
  return j;
}

inline ordered_json randic_to_json(const RandicReport& rep) {
  ordered_json j;
  j["n"] = rep.n;
  j["n0"] = rep.n0;
  j["rad"] = rep.rad;
  j["diam"] = rep.diam;
  j["index"] = json_real(rep.index);
  j["indexAlt"] = json_real(rep.index_alt);
  j["cactus"] = rep.cactus;
  j["chemical"] = rep.chemical;
  j["evenPath"] = rep.even_path;
  j["slackRadius"] = json_real(rep.slack_radius);
  j["slackRadiusStrong"] = json_real(rep.slack_radius_strong);
  j["slackDiameter"] = json_real(rep.slack_diameter);
  j["radiusBoundHolds"] = rep.radius_bound_holds;
  j["diameterBoundHolds"] = rep.diameter_bound_holds;
  j["diameterBoundApplies"] = rep.diameter_bound_applies;
  return j;
}

// Sidecar for the prune command: tie-break log, block bookkeeping, and the
// recomputed replacement checklist.
inline ordered_json prune_to_json(const PruneResult& result, const ReplacementChecklist& list) {
  ordered_json j;
  j["vertexMap"] = result.to_original;
  ordered_json log = ordered_json::array();
  for (const PruneChoice& c : result.choices) {
    ordered_json entry;
    entry["attachment"] = c.attachment;
    entry["candidates"] = c.candidates;
    entry["chosen"] = c.chosen;
    entry["geodesic"] = c.geodesic;
    log.push_back(entry);
  }
  j["choiceLog"] = log;
  j["retainedBlocks"] = result.retained_blocks;
  j["deletedBlocks"] = result.deleted_blocks;
  ordered_json checklist;
  checklist["connectedSubgraph"] = list.connected_subgraph;
  checklist["bcSubtree"] = list.bc_subtree;
  checklist["pathOrStarlike"] = list.path_or_starlike;
  checklist["invariantsPreserved"] = list.invariants_preserved;
  checklist["peripheryAndDiameter"] = list.periphery_and_diameter;
  checklist["failures"] = list.failures;
  j["checklist"] = checklist;
  return j;
}

inline ordered_json genspec_to_json(const GenSpec& spec) {
  ordered_json j;
  j["model"] = model_name(spec.model);
  if (spec.model == Model::Fixture) {
    j["fixture"] = spec.fixture;
  } else {
    j["n"] = spec.n;
    if (spec.model == Model::ConnectedGnm) j["m"] = spec.m;
    if (spec.model == Model::CycleWithPaths) j["l"] = spec.l;
    if (spec.model == Model::Spider) j["legs"] = spec.legs;
    j["seed"] = spec.seed;
  }
  return j;
}

inline ordered_json suite_to_json(const SuiteReport& report) {
  ordered_json j;
  ordered_json props = ordered_json::array();
  for (const PropertyResult& r : report.results) {
    ordered_json p;
    p["property"] = r.name;
    p["trials"] = r.trials;
    p["violationCount"] = r.violations.size();
    ordered_json viols = ordered_json::array();
    for (const Violation& v : r.violations) {
      ordered_json entry;
      entry["spec"] = genspec_to_json(v.spec);
      entry["replay"] = describe(v.spec);
      entry["detail"] = v.detail;
      viols.push_back(entry);
    }
    p["violations"] = viols;
    p["wallMs"] = json_real(r.wall_ms);
    props.push_back(p);
  }
  j["properties"] = props;
  j["violationCount"] = report.violation_count();
  j["passed"] = report.passed();
  return j;
}

inline ordered_json fuzz_entry_to_json(const FuzzEntry& entry) {
  ordered_json j;
  j["spec"] = genspec_to_json(entry.spec);
  j["replay"] = describe(entry.spec);
  j["n"] = entry.n;
  j["rad"] = entry.rad;
  j["index"] = json_real(entry.index);
  j["slackRadius"] = json_real(entry.slack_radius);
  return j;
}

inline ordered_json fuzz_to_json(const FuzzReport& report) {
  ordered_json j;
  j["trials"] = report.trials;
  j["minSlack"] = json_real(report.min_slack);
  ordered_json smallest = ordered_json::array();
  for (const FuzzEntry& e : report.smallest) smallest.push_back(fuzz_entry_to_json(e));
  j["smallest"] = smallest;
  ordered_json exempt = ordered_json::array();
  for (const FuzzEntry& e : report.even_paths) exempt.push_back(fuzz_entry_to_json(e));
  j["evenPaths"] = exempt;
  ordered_json viols = ordered_json::array();
  for (const FuzzEntry& e : report.violations) viols.push_back(fuzz_entry_to_json(e));
  j["violations"] = viols;
  j["passed"] = report.passed();
  return j;
}

}  // namespace blockecc

#endif  // BLOCKECC_REPORT_JSON_HPP
