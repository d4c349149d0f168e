// Scripted reproductions of the worked fibration examples: each pipeline
// starts from a relator family, rewrites it with logged moves and relation
// substitutions, and checks fiber counts and invariants at every stage
// against the expected values.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "relator/invariants.hpp"
#include "relator/log.hpp"
#include "relator/word.hpp"

namespace relator {

struct CheckRecord {
  std::string label;
  std::string expected;
  std::string computed;
  std::string source;  // free text: where the expected value comes from
  bool ok = false;
};

struct SubstitutionRecord {
  std::string relation;
  std::int64_t de = 0;  // observed on the ambient word
  std::int64_t dsigma = 0;
  std::int64_t rel_de = 0;  // from the relation's own fiber terms
  std::int64_t rel_dsigma = 0;
  bool ok = false;
};

struct PipelineResult {
  std::string id;
  bool ok = false;
  std::vector<std::string> log_lines;  // one or two JSON-lines documents
  std::vector<CheckRecord> checks;
  std::vector<SubstitutionRecord> substitutions;
  std::vector<std::string> mismatches;
  Word final;
  FiberCounts final_counts;
  InvariantReport final_report;
  bool blowdown = false;
};

std::vector<std::string> pipeline_ids();

// Runs the pipeline with the given id; throws std::invalid_argument for an
// unknown id. Internal failures are reported via ok/mismatches, not thrown.
PipelineResult reproduce(const std::string& id);

std::string counts_text(const FiberCounts& fc);
std::string invariants_text(const InvariantReport& r);

}  // namespace relator
