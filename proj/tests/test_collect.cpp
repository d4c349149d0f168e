#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "relator/collect.hpp"
#include "relator/homology.hpp"
#include "relator/relations.hpp"

using namespace relator;

namespace {
std::vector<std::string> times(std::vector<std::string> block, int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; i++) out.insert(out.end(), block.begin(), block.end());
  return out;
}
}  // namespace

TEST_CASE("already contiguous pattern needs no moves") {
  Word w = parse_word("c3 c1 c2 c4", standard_chain_config_ptr(2));
  CollectResult r = collect_subword(w, {"c1", "c2"});
  CHECK(r.found);
  CHECK(r.script.empty());
  CHECK(r.index == 1);
  CHECK(find_plain_block(w, {"c1", "c2"}) == 1);
  CHECK(find_plain_block(w, {"c2", "c1"}) == size_t(-1));
}

TEST_CASE("greedy eviction collects interleaved subsequences") {
  Word w = family("B", 2, 1);  // (c1 .. c5)^6
  IntMatrix before = word_matrix(w);
  CollectResult r = collect_subword(w, times({"c1", "c2"}, 6));
  REQUIRE(r.found);
  Word out = apply_script(w, r.script);
  CHECK(out.size() == w.size());
  CHECK(r.index == 0);
  for (size_t j = 0; j < 12; j++) {
    CHECK(out.letters[r.index + j].plain());
    CHECK(out.letters[r.index + j].base == (j % 2 == 0 ? "c1" : "c2"));
  }
  CHECK(word_matrix(out) == before);
}

TEST_CASE("collection preserves the matrix on the period-5 word") {
  Word w = family("C", 2, 1);
  CollectResult r = collect_subword(w, times({"c1", "c1", "c2", "c3"}, 3));
  REQUIRE(r.found);
  Word out = apply_script(w, r.script);
  CHECK(r.index == 0);
  CHECK(out.size() == w.size());
  CHECK(word_matrix(out) == word_matrix(w));
  for (size_t j = 0; j < 12; j++) CHECK(out.letters[r.index + j].plain());
}

TEST_CASE("search falls back to rotation when the order is wrong") {
  Word w = parse_word("c2 c1", standard_chain_config_ptr(2));
  CollectResult r = collect_subword(w, {"c1", "c2"});
  REQUIRE(r.found);
  Word out = apply_script(w, r.script);
  CHECK(word_text(out) == "c1 c2");
  CHECK(r.index == 0);
}

TEST_CASE("impossible patterns fail within budget") {
  Word w = parse_word("c1 c2", standard_chain_config_ptr(2));
  CollectResult r = collect_subword(w, {"c1", "c1"}, 300);
  CHECK_FALSE(r.found);
}

TEST_CASE("unknown curves are rejected") {
  Word w = parse_word("c1 c2", standard_chain_config_ptr(2));
  CHECK_THROWS_AS(collect_subword(w, {"c9"}), move_error);
  CHECK_THROWS_AS(collect_subword(w, {}), move_error);
}
