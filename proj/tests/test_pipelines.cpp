#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "relator/pipelines.hpp"

using namespace relator;
using nlohmann::json;

TEST_CASE("every shipped derivation checks out") {
  for (const std::string& id : pipeline_ids()) {
    PipelineResult res = reproduce(id);
    INFO(id);
    for (const auto& m : res.mismatches) {
      INFO(m);
    }
    CHECK(res.ok);
    CHECK(res.mismatches.empty());
    CHECK(!res.checks.empty());
    CHECK(!res.log_lines.empty());
    for (const auto& c : res.checks) {
      INFO(c.label << ": " << c.computed << " vs " << c.expected);
      CHECK(c.ok);
      CHECK((c.source == "published value" || c.source == "derived value"));
    }
    for (const auto& s : res.substitutions) CHECK(s.ok);
  }
}

TEST_CASE("unknown ids are rejected") {
  CHECK_THROWS_AS(reproduce("9.9"), std::invalid_argument);
}

TEST_CASE("final states carry the expected counts") {
  PipelineResult five3 = reproduce("5.3");
  CHECK(five3.final_counts.s0 == 6);
  CHECK(five3.final_counts.s.at(1) == 2);
  CHECK(five3.final_report.e == 4);
  CHECK(five3.final_report.sigma == -4);
  CHECK(five3.final.size() == 8);

  PipelineResult warm = reproduce("5.5p");
  CHECK(warm.final_counts.s0 == 16);
  CHECK(warm.final_counts.s.at(1) == 2);
  CHECK(warm.final_report.e == 14);
  CHECK(warm.final_report.sigma == -10);

  PipelineResult blowup = reproduce("5.1");
  CHECK(blowup.blowdown);
  CHECK(blowup.final_report.blowdown_applied);
  CHECK(blowup.final_report.e == 12);
  CHECK(blowup.final_report.sigma == -8);
  CHECK(blowup.final_report.c1sq == 0);
}

TEST_CASE("two routes are logged for the genus-3 derivation") {
  PipelineResult res = reproduce("5.5");
  int headers = 0, footers = 0;
  for (const auto& line : res.log_lines) {
    json j = json::parse(line);
    std::string type = j.at("type").get<std::string>();
    headers += type == "header";
    footers += type == "footer";
  }
  CHECK(headers == 2);
  CHECK(footers == 2);
}

TEST_CASE("pipeline logs replay as scripts") {
  PipelineResult res = reproduce("5.4");
  REQUIRE(res.ok);
  std::string text;
  for (const auto& line : res.log_lines) text += line + "\n";
  std::vector<Step> steps = parse_script(text);
  CHECK(!steps.empty());
  Word start = family("D", 2, 1);
  LogDocument doc = make_log(start, steps, res.blowdown, "replay");
  CHECK(word_text(doc.final) == word_text(res.final));
  CHECK(doc.counts == res.final_counts);
}
