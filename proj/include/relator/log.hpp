// Hashed, replayable derivation logs for relator rewrites.
//
// A derivation log is a JSON-lines document: one header line, one line per
// rewrite step, one footer line.  Every line carries 64-bit FNV-1a digests of
// the canonical word text before and after the step, so a log can be replayed
// and verified letter-for-letter later.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "relator/invariants.hpp"
#include "relator/moves.hpp"
#include "relator/relations.hpp"
#include "relator/word.hpp"

namespace relator {

class log_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// FNV-1a, 64-bit.
std::uint64_t fnv1a64(std::string_view s);
std::string hash_hex(std::uint64_t h);
// Digest of the canonical text of a word.
std::string word_hash(const Word& w);

// One rewrite step: either an elementary move or a relation substitution.
// Moves that conjugate by a word keep the word as text so the step can be
// re-parsed against whatever configuration the ambient word has when the
// step is applied.
struct Step {
  bool is_substitution = false;

  // Move form.
  MoveKind kind = MoveKind::commute;
  std::size_t pos = 0;
  int rotate = 0;
  std::string by_text;
  std::vector<std::string> chain;
  int k = 0;
  bool reverse = false;

  // Substitution form.
  RelationRef rel;
  std::size_t at = 0;
  bool forward = true;

  // Optional free-text annotation, copied into the log line.
  std::string note;

  // Expected digests, set when the step came from a previously emitted log.
  // Empty strings mean "not recorded"; non-empty values are verified on
  // replay.
  std::string expected_pre;
  std::string expected_post;
};

Step move_step(const Move& m, std::string note = "");
Step substitution_step(const RelationRef& ref, std::size_t at, bool forward,
                       std::string note = "");

nlohmann::json step_op_json(const Step& s);
Step step_from_op_json(const nlohmann::json& op);

Word apply_step(const Word& w, const Step& s);

nlohmann::json fiber_counts_json(const FiberCounts& fc);
nlohmann::json report_json(const InvariantReport& r);

// Parses a rewrite script: either a JSON array whose elements are operation
// objects (optionally wrapped as {"op": ..., "pre_hash": ..., "post_hash":
// ...}), or a JSON-lines derivation log, whose "step" lines are replayed and
// whose header/footer lines are ignored.
std::vector<Step> parse_script(const std::string& text);

struct LogDocument {
  std::vector<std::string> lines;  // JSON lines: header, steps, footer
  Word final;
  bool has_counts = false;  // final word is positive, so fibers were counted
  bool has_report = false;  // fiber counts yielded integral invariants
  FiberCounts counts;
  InvariantReport report;
};

// Applies the steps in order, verifying any expected digests, and renders
// the full log document.  Throws log_error on a digest mismatch and
// move_error / relation_error on an illegal step.
LogDocument make_log(const Word& start, const std::vector<Step>& steps,
                     bool blowdown, const std::string& label);

}  // namespace relator
