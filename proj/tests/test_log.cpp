#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "relator/log.hpp"
#include "relator/version.hpp"

using namespace relator;
using nlohmann::json;

TEST_CASE("fnv1a 64-bit known vectors") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ull);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
  CHECK(fnv1a64("foobar") == 0x85944171f73967e8ull);
  CHECK(hash_hex(0xcbf29ce484222325ull) == "cbf29ce484222325");
  CHECK(hash_hex(0) == "0000000000000000");
}

TEST_CASE("word hashes depend on the canonical text") {
  auto cfg = standard_chain_config_ptr(2);
  Word a = parse_word("c1 c2", cfg);
  Word b = parse_word("c1   c2", cfg);
  Word c = parse_word("c2 c1", cfg);
  CHECK(word_hash(a) == word_hash(b));
  CHECK(word_hash(a) != word_hash(c));
}

TEST_CASE("step serialization round trips") {
  std::vector<Step> steps;
  {
    Move m;
    m.kind = MoveKind::commute;
    m.pos = 3;
    steps.push_back(move_step(m));
  }
  {
    Move m;
    m.kind = MoveKind::global_conjugate;
    m.rotate = 2;
    steps.push_back(move_step(m));
  }
  {
    Move m;
    m.kind = MoveKind::global_conjugate;
    m.by = {plain_letter("c1"), plain_letter("c2", -1)};
    steps.push_back(move_step(m));
  }
  {
    Move m;
    m.kind = MoveKind::power_collect;
    m.pos = 4;
    m.chain = {"c1", "c2", "c3"};
    m.k = 2;
    m.reverse = true;
    steps.push_back(move_step(m));
  }
  steps.push_back(substitution_step(
      RelationRef{"chain_even", 2, 3, "back"}, 7, false, "undo"));

  for (const Step& s : steps) {
    json op = step_op_json(s);
    Step back = step_from_op_json(op);
    CHECK(step_op_json(back) == op);
  }

  json commute = step_op_json(steps[0]);
  CHECK(commute.at("kind") == "commute");
  CHECK(commute.at("pos") == 3);
  json sub = step_op_json(steps.back());
  CHECK(sub.at("kind") == "substitute");
  CHECK(sub.at("relation").at("builtin") == "chain_even");
  CHECK(sub.at("direction") == "reverse");
}

TEST_CASE("empty script log is header plus footer") {
  Word w = family("B", 2, 1);
  LogDocument doc = make_log(w, {}, false, "identity");
  REQUIRE(doc.lines.size() == 2);
  json header = json::parse(doc.lines.front());
  json footer = json::parse(doc.lines.back());
  CHECK(header.at("type") == "header");
  CHECK(header.at("tool_version") == kToolVersion);
  CHECK(header.at("schema") == kLibrarySchemaVersion);
  CHECK(header.at("start").at("word") == word_text(w));
  CHECK(footer.at("type") == "footer");
  CHECK(footer.at("word") == word_text(w));
  CHECK(footer.at("hash") == header.at("start_hash"));
  CHECK(doc.has_counts);
  CHECK(footer.at("fiber_counts").at("nonseparating") == 30);
  CHECK(footer.at("invariants").at("e") == 26);
  CHECK(word_text(doc.final) == word_text(w));
}

TEST_CASE("logs replay with verified hashes") {
  Word w = parse_word("(c1 c2)^2", standard_chain_config_ptr(1));
  Move m;
  m.kind = MoveKind::power_collect;
  m.pos = 0;
  m.chain = {"c1", "c2"};
  m.k = 1;
  LogDocument doc = make_log(w, {move_step(m, "regroup")}, false, "demo");
  REQUIRE(doc.lines.size() == 3);
  json step = json::parse(doc.lines[1]);
  CHECK(step.at("type") == "step");
  CHECK(step.at("index") == 0);
  CHECK(step.at("note") == "regroup");
  CHECK(step.at("pre_hash") == word_hash(w));
  CHECK(step.at("post_hash") == word_hash(doc.final));

  // feed the emitted log back as a script
  std::string text;
  for (const auto& line : doc.lines) text += line + "\n";
  std::vector<Step> replayed = parse_script(text);
  REQUIRE(replayed.size() == 1);
  CHECK(replayed[0].expected_pre == word_hash(w));
  LogDocument again = make_log(w, replayed, false, "replay");
  CHECK(word_text(again.final) == word_text(doc.final));

  // corrupt the expected hash: replay must fail
  replayed[0].expected_post = std::string(16, '0');
  CHECK_THROWS_AS(make_log(w, replayed, false, "corrupt"), log_error);
}

TEST_CASE("scripts parse from arrays, wrapped arrays, and logs") {
  std::vector<Step> plain = parse_script(R"([{"kind": "commute", "pos": 0}])");
  REQUIRE(plain.size() == 1);
  CHECK(plain[0].kind == MoveKind::commute);
  CHECK(plain[0].expected_pre.empty());

  std::vector<Step> wrapped = parse_script(
      R"([{"op": {"kind": "hurwitz_left", "pos": 2}, "pre_hash": "abc"}])");
  REQUIRE(wrapped.size() == 1);
  CHECK(wrapped[0].kind == MoveKind::hurwitz_left);
  CHECK(wrapped[0].expected_pre == "abc");

  CHECK(parse_script("[]").empty());
  CHECK_THROWS_AS(parse_script("   "), log_error);
  CHECK_THROWS_AS(parse_script(R"([{"pos": 1}])"), log_error);
  CHECK_THROWS_AS(parse_script(R"({"kind": "commute"})"), log_error);
}

TEST_CASE("illegal steps surface as move errors") {
  Word w = parse_word("c1 c2", standard_chain_config_ptr(1));
  Move m;
  m.kind = MoveKind::commute;
  m.pos = 0;  // c1 and c2 meet: commute is illegal
  CHECK_THROWS_AS(make_log(w, {move_step(m)}, false, "bad"), move_error);
}

TEST_CASE("non-positive final words leave footer counts empty") {
  Word w = parse_word("c1^-1", standard_chain_config_ptr(1));
  LogDocument doc = make_log(w, {}, false, "inverse");
  CHECK_FALSE(doc.has_counts);
  json footer = json::parse(doc.lines.back());
  CHECK(footer.at("fiber_counts").is_null());
  CHECK(footer.at("invariants").is_null());
}
