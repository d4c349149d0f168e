#include "relator/log.hpp"

#include <utility>

#include "relator/version.hpp"

namespace relator {
namespace {

using nlohmann::json;

std::string direction_text(bool forward) { return forward ? "forward" : "reverse"; }

bool parse_direction(const json& j, const char* what) {
  std::string d = j.get<std::string>();
  if (d == "forward") return true;
  if (d == "reverse") return false;
  throw log_error(std::string(what) + ": direction must be \"forward\" or \"reverse\"");
}

json rel_ref_json(const RelationRef& ref) {
  json j;
  j["builtin"] = ref.name;
  if (ref.name == "chain_even" || ref.name == "chain_odd") {
    j["m"] = ref.m;
    j["g"] = ref.g;
    j["placement"] = ref.placement;
  } else if (ref.name == "gsr") {
    j["g"] = ref.g;
  }
  return j;
}

RelationRef rel_ref_from_json(const json& j) {
  RelationRef ref;
  ref.name = j.at("builtin").get<std::string>();
  if (j.contains("m")) ref.m = j.at("m").get<int>();
  if (j.contains("g")) ref.g = j.at("g").get<int>();
  if (j.contains("placement")) ref.placement = j.at("placement").get<std::string>();
  return ref;
}

std::string dump_sorted(const json& j) {
  // nlohmann::json objects iterate in key order already
  return j.dump();
}

}  // namespace

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= static_cast<std::uint64_t>(c);
    h *= 1099511628211ull;
  }
  return h;
}

std::string hash_hex(std::uint64_t h) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

std::string word_hash(const Word& w) { return hash_hex(fnv1a64(word_text(w))); }

Step move_step(const Move& m, std::string note) {
  Step s;
  s.is_substitution = false;
  s.kind = m.kind;
  s.pos = m.pos;
  s.rotate = m.rotate;
  if (!m.by.empty()) s.by_text = word_text(m.by);
  s.chain = m.chain;
  s.k = m.k;
  s.reverse = m.reverse;
  s.note = std::move(note);
  return s;
}

Step substitution_step(const RelationRef& ref, std::size_t at, bool forward,
                       std::string note) {
  Step s;
  s.is_substitution = true;
  s.rel = ref;
  s.at = at;
  s.forward = forward;
  s.note = std::move(note);
  return s;
}

json step_op_json(const Step& s) {
  json op;
  if (s.is_substitution) {
    op["kind"] = "substitute";
    op["relation"] = rel_ref_json(s.rel);
    op["at"] = s.at;
    op["direction"] = direction_text(s.forward);
    return op;
  }
  op["kind"] = to_string(s.kind);
  switch (s.kind) {
    case MoveKind::commute:
    case MoveKind::braid_forward:
    case MoveKind::braid_backward:
    case MoveKind::hurwitz_left:
    case MoveKind::hurwitz_right:
      op["pos"] = s.pos;
      break;
    case MoveKind::global_conjugate:
      if (s.rotate != 0)
        op["rotate"] = s.rotate;
      else
        op["by"] = s.by_text;
      break;
    case MoveKind::power_collect:
      op["pos"] = s.pos;
      op["chain"] = s.chain;
      op["k"] = s.k;
      op["direction"] = direction_text(!s.reverse);
      break;
  }
  return op;
}

Step step_from_op_json(const json& op) {
  if (!op.is_object() || !op.contains("kind"))
    throw log_error("script step must be an object with a \"kind\" field");
  std::string kind = op.at("kind").get<std::string>();
  Step s;
  if (kind == "substitute") {
    s.is_substitution = true;
    s.rel = rel_ref_from_json(op.at("relation"));
    s.at = op.at("at").get<std::size_t>();
    s.forward = op.contains("direction") ? parse_direction(op.at("direction"), "substitute") : true;
    return s;
  }
  s.kind = move_kind_from_string(kind);
  switch (s.kind) {
    case MoveKind::commute:
    case MoveKind::braid_forward:
    case MoveKind::braid_backward:
    case MoveKind::hurwitz_left:
    case MoveKind::hurwitz_right:
      s.pos = op.at("pos").get<std::size_t>();
      break;
    case MoveKind::global_conjugate:
      if (op.contains("rotate")) {
        s.rotate = op.at("rotate").get<int>();
        if (s.rotate == 0) throw log_error("global_conjugate: rotate must be nonzero");
      } else if (op.contains("by")) {
        s.by_text = op.at("by").get<std::string>();
        if (s.by_text.empty()) throw log_error("global_conjugate: empty conjugating word");
      } else {
        throw log_error("global_conjugate: needs \"rotate\" or \"by\"");
      }
      break;
    case MoveKind::power_collect:
      s.pos = op.at("pos").get<std::size_t>();
      s.chain = op.at("chain").get<std::vector<std::string>>();
      s.k = op.at("k").get<int>();
      s.reverse = op.contains("direction") ? !parse_direction(op.at("direction"), "power_collect") : false;
      break;
  }
  return s;
}

Word apply_step(const Word& w, const Step& s) {
  if (s.is_substitution) {
    Relation rel = resolve_relation(s.rel);
    return substitute(w, rel, s.at, s.forward);
  }
  Move m;
  m.kind = s.kind;
  m.pos = s.pos;
  m.rotate = s.rotate;
  if (!s.by_text.empty()) m.by = parse_word(s.by_text, w.cfg).letters;
  m.chain = s.chain;
  m.k = s.k;
  m.reverse = s.reverse;
  return apply_move(w, m);
}

json fiber_counts_json(const FiberCounts& fc) {
  json j;
  j["nonseparating"] = fc.s0;
  json sep = json::object();
  for (const auto& [h, n] : fc.s) sep[std::to_string(h)] = n;
  j["separating"] = sep;
  j["trivial"] = fc.n_trivial;
  j["total"] = fc.total();
  return j;
}

json report_json(const InvariantReport& r) {
  json j;
  j["e"] = r.e;
  j["sigma"] = r.sigma;
  j["c1sq"] = r.c1sq;
  j["chi"] = r.chi;
  j["blowdown_applied"] = r.blowdown_applied;
  j["blowdowns"] = r.blowdowns;
  return j;
}

std::vector<Step> parse_script(const std::string& text) {
  std::vector<Step> steps;
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw log_error("empty script");
  if (text[first] == '[') {
    json arr = json::parse(text);
    if (!arr.is_array()) throw log_error("script must be a JSON array or a JSON-lines log");
    for (const auto& elem : arr) {
      if (elem.is_object() && elem.contains("op")) {
        Step s = step_from_op_json(elem.at("op"));
        if (elem.contains("pre_hash")) s.expected_pre = elem.at("pre_hash").get<std::string>();
        if (elem.contains("post_hash")) s.expected_post = elem.at("post_hash").get<std::string>();
        steps.push_back(std::move(s));
      } else {
        steps.push_back(step_from_op_json(elem));
      }
    }
    return steps;
  }
  // JSON-lines: replay the "step" lines, ignore header/footer.
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    std::string line = text.substr(pos, eol - pos);
    pos = eol + 1;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    json j = json::parse(line);
    if (!j.is_object() || !j.contains("type")) throw log_error("log line without a \"type\" field");
    std::string type = j.at("type").get<std::string>();
    if (type != "step") continue;
    Step s = step_from_op_json(j.at("op"));
    if (j.contains("pre_hash")) s.expected_pre = j.at("pre_hash").get<std::string>();
    if (j.contains("post_hash")) s.expected_post = j.at("post_hash").get<std::string>();
    if (j.contains("note")) s.note = j.at("note").get<std::string>();
    steps.push_back(std::move(s));
  }
  if (steps.empty()) throw log_error("script contains no steps");
  return steps;
}

LogDocument make_log(const Word& start, const std::vector<Step>& steps,
                     bool blowdown, const std::string& label) {
  LogDocument doc;
  doc.final = start;

  json header;
  header["type"] = "header";
  header["tool_version"] = kToolVersion;
  header["schema"] = kLibrarySchemaVersion;
  if (!label.empty()) header["label"] = label;
  json sj;
  sj["config"] = start.cfg->name;
  sj["genus"] = start.cfg->surface.genus;
  sj["word"] = word_text(start);
  header["start"] = sj;
  header["start_hash"] = word_hash(start);
  doc.lines.push_back(dump_sorted(header));

  for (std::size_t i = 0; i < steps.size(); ++i) {
    const Step& s = steps[i];
    std::string pre = word_hash(doc.final);
    if (!s.expected_pre.empty() && s.expected_pre != pre)
      throw log_error("hash mismatch before step " + std::to_string(i) + ": expected " +
                      s.expected_pre + ", word is " + pre);
    Word next = apply_step(doc.final, s);
    std::string post = word_hash(next);
    if (!s.expected_post.empty() && s.expected_post != post)
      throw log_error("hash mismatch after step " + std::to_string(i) + ": expected " +
                      s.expected_post + ", word is " + post);
    json line;
    line["type"] = "step";
    line["index"] = i;
    line["op"] = step_op_json(s);
    line["pre_hash"] = pre;
    line["post_hash"] = post;
    if (!s.note.empty()) line["note"] = s.note;
    doc.lines.push_back(dump_sorted(line));
    doc.final = std::move(next);
  }

  json footer;
  footer["type"] = "footer";
  footer["word"] = word_text(doc.final);
  footer["hash"] = word_hash(doc.final);
  footer["letters"] = doc.final.size();
  try {
    doc.counts = count_fibers(doc.final);
    doc.has_counts = true;
  } catch (const invariant_error&) {
    doc.has_counts = false;
  }
  footer["fiber_counts"] = doc.has_counts ? fiber_counts_json(doc.counts) : nlohmann::json();
  footer["invariants"] = nlohmann::json();
  if (doc.has_counts) {
    try {
      doc.report = make_report(doc.final.cfg->surface.genus, doc.counts, blowdown);
      doc.has_report = true;
      footer["invariants"] = report_json(doc.report);
    } catch (const invariant_error&) {
      // countable fibers whose signature is not integral: counts only
    }
  }
  doc.lines.push_back(dump_sorted(footer));
  return doc;
}

}  // namespace relator
