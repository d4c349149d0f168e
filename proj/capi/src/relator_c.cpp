#include "relator_c.h"

#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>
#include <type_traits>

#include <json.hpp>

#include "relator/config.hpp"
#include "relator/homology.hpp"
#include "relator/invariants.hpp"
#include "relator/log.hpp"
#include "relator/moves.hpp"
#include "relator/pipelines.hpp"
#include "relator/relations.hpp"
#include "relator/version.hpp"
#include "relator/word.hpp"

using nlohmann::json;
using namespace relator;

static_assert(RLT_ABI_VERSION == static_cast<unsigned>(kAbiVersion),
              "header and library disagree on the abi version");
static_assert(RLT_OK == 0 && RLT_CHECK_FAILED == 1 && RLT_USAGE == 2 && RLT_INTERNAL == 3,
              "status codes double as process exit codes and must stay stable");
static_assert(std::is_unsigned_v<decltype(RLT_ABI_VERSION)>, "abi version must be unsigned");

struct rlt_ctx {
  std::string last_error;
};

namespace {

size_t copy_string(const std::string& s, char* buffer, size_t buffer_size) {
  if (buffer && buffer_size > 0) {
    size_t n = s.size() < buffer_size - 1 ? s.size() : buffer_size - 1;
    std::memcpy(buffer, s.data(), n);
    buffer[n] = '\0';
  }
  return s.size();
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) return nullptr;
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

rlt_status fail(rlt_ctx* ctx, rlt_status st, const std::string& msg) {
  if (ctx) ctx->last_error = msg;
  return st;
}

// Resolves {"family": ..., "genus": ..., "n": ...} or {"word": ..., "genus":
// ...} to a word; any failure here is a usage error.
Word spec_word(const char* spec_json) {
  if (!spec_json) throw word_error("missing relator spec");
  json j = json::parse(spec_json);
  if (!j.is_object()) throw word_error("relator spec must be a JSON object");
  if (j.contains("family")) {
    std::string name = j.at("family").get<std::string>();
    int g = 0;
    if (j.contains("genus"))
      g = j.at("genus").get<int>();
    else if (name == "torus_elliptic")
      g = 1;
    else
      throw word_error("family spec needs \"genus\"");
    int n = j.contains("n") ? j.at("n").get<int>() : 1;
    return family(name, g, n);
  }
  if (j.contains("word")) {
    if (!j.contains("genus")) throw word_error("word spec needs \"genus\"");
    int g = j.at("genus").get<int>();
    if (g < 1) throw word_error("genus must be positive");
    return parse_word(j.at("word").get<std::string>(), standard_chain_config_ptr(g));
  }
  throw word_error("relator spec needs \"family\" or \"word\"");
}

json word_summary(const Word& w) {
  json j;
  j["word"] = word_text(w);
  j["config"] = w.cfg->name;
  j["genus"] = w.cfg->surface.genus;
  j["letters"] = w.size();
  return j;
}

std::string joined(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) {
    out += l;
    out += '\n';
  }
  return out;
}

}  // namespace

extern "C" uint32_t rlt_abi_version(void) { return RLT_ABI_VERSION; }

extern "C" size_t rlt_version(char* buffer, size_t buffer_size) {
  return copy_string(kToolVersion, buffer, buffer_size);
}

extern "C" rlt_ctx* rlt_ctx_new(void) { return new (std::nothrow) rlt_ctx; }

extern "C" void rlt_ctx_free(rlt_ctx* ctx) { delete ctx; }

extern "C" size_t rlt_last_error(const rlt_ctx* ctx, char* buffer, size_t buffer_size) {
  if (!ctx) return copy_string("", buffer, buffer_size);
  return copy_string(ctx->last_error, buffer, buffer_size);
}

extern "C" rlt_status rlt_verify(rlt_ctx* ctx, const char* spec_json, char** out_json) {
  if (out_json) *out_json = nullptr;
  if (!ctx || !out_json) return RLT_USAGE;
  ctx->last_error.clear();
  std::optional<Word> w;
  try {
    w = spec_word(spec_json);
  } catch (const std::exception& ex) {
    return fail(ctx, RLT_USAGE, ex.what());
  }
  try {
    TrivialityResult t = is_homologically_trivial(Relator{*w});
    json j = word_summary(*w);
    j["trivial"] = t.trivial;
    j["matrix"] = t.trivial ? json() : json(t.witness.text());
    *out_json = dup_string(j.dump(2) + "\n");
    if (t.trivial) return RLT_OK;
    return fail(ctx, RLT_CHECK_FAILED, "word acts nontrivially on homology");
  } catch (const std::exception& ex) {
    return fail(ctx, RLT_INTERNAL, ex.what());
  }
}

extern "C" rlt_status rlt_invariants(rlt_ctx* ctx, const char* spec_json, int blowdown,
                                     char** out_json) {
  if (out_json) *out_json = nullptr;
  if (!ctx || !out_json) return RLT_USAGE;
  ctx->last_error.clear();
  std::optional<Word> w;
  std::optional<FiberCounts> counts;
  try {
    w = spec_word(spec_json);
    counts = count_fibers(*w);
  } catch (const std::exception& ex) {
    return fail(ctx, RLT_USAGE, ex.what());
  }
  try {
    InvariantReport rep = make_report(w->cfg->surface.genus, *counts, blowdown != 0);
    json j = word_summary(*w);
    j["fiber_counts"] = fiber_counts_json(*counts);
    j["invariants"] = report_json(rep);
    *out_json = dup_string(j.dump(2) + "\n");
    return RLT_OK;
  } catch (const invariant_error& ex) {
    // e.g. a fractional signature: the computation ran and rejected the word
    return fail(ctx, RLT_CHECK_FAILED, ex.what());
  } catch (const std::exception& ex) {
    return fail(ctx, RLT_INTERNAL, ex.what());
  }
}

extern "C" rlt_status rlt_rewrite(rlt_ctx* ctx, const char* spec_json,
                                  const char* script_json, char** out_log) {
  if (out_log) *out_log = nullptr;
  if (!ctx || !out_log) return RLT_USAGE;
  ctx->last_error.clear();
  std::optional<Word> w;
  std::vector<Step> steps;
  try {
    w = spec_word(spec_json);
    if (!script_json) throw log_error("missing script");
    steps = parse_script(script_json);
  } catch (const std::exception& ex) {
    return fail(ctx, RLT_USAGE, ex.what());
  }
  try {
    LogDocument doc = make_log(*w, steps, false, "rewrite");
    *out_log = dup_string(joined(doc.lines));
    return RLT_OK;
  } catch (const log_error& ex) {
    return fail(ctx, RLT_CHECK_FAILED, ex.what());
  } catch (const move_error& ex) {
    return fail(ctx, RLT_CHECK_FAILED, ex.what());
  } catch (const relation_error& ex) {
    return fail(ctx, RLT_CHECK_FAILED, ex.what());
  } catch (const config_error& ex) {
    return fail(ctx, RLT_CHECK_FAILED, ex.what());
  } catch (const word_error& ex) {
    return fail(ctx, RLT_CHECK_FAILED, ex.what());
  } catch (const std::exception& ex) {
    return fail(ctx, RLT_INTERNAL, ex.what());
  }
}

extern "C" rlt_status rlt_reproduce(rlt_ctx* ctx, const char* id, char** out_json) {
  if (out_json) *out_json = nullptr;
  if (!ctx || !out_json) return RLT_USAGE;
  ctx->last_error.clear();
  if (!id) return fail(ctx, RLT_USAGE, "missing pipeline id");
  try {
    PipelineResult res = reproduce(id);
    json j;
    j["id"] = res.id;
    j["ok"] = res.ok;
    j["log_lines"] = res.log_lines;
    json checks = json::array();
    for (const auto& c : res.checks) {
      json cj;
      cj["label"] = c.label;
      cj["expected"] = c.expected;
      cj["computed"] = c.computed;
      cj["source"] = c.source;
      cj["ok"] = c.ok;
      checks.push_back(cj);
    }
    j["checks"] = checks;
    json subs = json::array();
    for (const auto& s : res.substitutions) {
      json sj;
      sj["relation"] = s.relation;
      sj["observed"] = {{"de", s.de}, {"dsigma", s.dsigma}};
      sj["relation_terms"] = {{"de", s.rel_de}, {"dsigma", s.rel_dsigma}};
      sj["ok"] = s.ok;
      subs.push_back(sj);
    }
    j["substitutions"] = subs;
    j["mismatches"] = res.mismatches;
    if (res.final.cfg) {
      json fj = word_summary(res.final);
      fj["fiber_counts"] = fiber_counts_json(res.final_counts);
      fj["invariants"] = report_json(res.final_report);
      j["final"] = fj;
    }
    *out_json = dup_string(j.dump(2) + "\n");
    if (res.ok) return RLT_OK;
    std::string msg = "reproduction checks failed";
    if (!res.mismatches.empty()) msg += ": " + res.mismatches.front();
    return fail(ctx, RLT_CHECK_FAILED, msg);
  } catch (const std::invalid_argument& ex) {
    return fail(ctx, RLT_USAGE, ex.what());
  } catch (const std::exception& ex) {
    return fail(ctx, RLT_INTERNAL, ex.what());
  }
}

extern "C" rlt_status rlt_library(rlt_ctx* ctx, char** out_json) {
  if (out_json) *out_json = nullptr;
  if (!ctx || !out_json) return RLT_USAGE;
  ctx->last_error.clear();
  try {
    *out_json = dup_string(library_json());
    return RLT_OK;
  } catch (const std::exception& ex) {
    return fail(ctx, RLT_INTERNAL, ex.what());
  }
}

extern "C" void rlt_string_free(char* s) { std::free(s); }
