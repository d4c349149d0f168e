#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "relator/homology.hpp"
#include "relator/relations.hpp"

using namespace relator;

TEST_CASE("all stored relations hold on homology") {
  std::vector<Relation> rels;
  rels.push_back(builtin("star"));
  rels.push_back(builtin("star_torus"));
  rels.push_back(builtin("star_g2"));
  rels.push_back(builtin("lantern"));
  for (int g = 1; g <= 4; g++) rels.push_back(builtin("gsr", g));
  for (int g = 1; g <= 3; g++)
    for (int m = 1; m <= 2 * g + 1; m++)
      for (const char* placement : {"front", "back"})
        rels.push_back(builtin_chain(m, g, placement));
  for (const auto& rel : rels) {
    INFO(rel.name);
    CHECK(rel.cfg->violations().empty());
    CHECK(relation_homology_consistent(rel));
    CHECK(word_text(rel.lhs) != word_text(rel.rhs));
  }
}

TEST_CASE("star relation shape") {
  Relation r = builtin("star");
  CHECK(r.lhs.size() == 12);
  CHECK(r.rhs.size() == 3);
  CHECK(r.kind == RelationKind::star);
  REQUIRE(r.deltas.has_value());
  CHECK(r.deltas->first == -9);
  CHECK(r.deltas->second == 5);
}

TEST_CASE("degenerate star specializations") {
  Relation t = builtin("star_torus");
  CHECK(word_text(t.lhs) == "c1 c1 c2 c1 c1 c1 c2 c1 c1 c1 c2 c1");
  CHECK(t.rhs.size() == 3);
  for (const auto& l : t.rhs)
    CHECK(t.cfg->curve(l.base).sep == SepType::nullhomotopic);
  CHECK(t.kind == RelationKind::degenerate_specialization);

  Relation g2 = builtin("star_g2");
  CHECK(word_text(g2.lhs) == "c1 c1 c2 c3 c1 c1 c2 c3 c1 c1 c2 c3");
  REQUIRE(g2.rhs.size() == 3);
  CHECK(g2.rhs[0].base == "c5");
  CHECK(g2.cfg->curve(g2.rhs[1].base).sep == SepType::nullhomotopic);
  CHECK(g2.rhs[2].base == "c5");
}

TEST_CASE("chain relation exponents and boundary data") {
  // even: (c1 c2)^6 = s1_2
  Relation even = builtin_chain(2, 2, "front");
  CHECK(even.lhs.size() == 12);
  REQUIRE(even.rhs.size() == 1);
  CHECK(even.rhs[0].base == "s1_2");
  CHECK(even.cfg->curve("s1_2").sep == SepType::separating);
  CHECK(even.cfg->curve("s1_2").h == 1);

  // odd: (c1 c2 c3)^4 = d1 d2; the printed exponent m fails already at
  // m = 1, where it would claim t = t^2
  Relation odd = builtin_chain(3, 2, "front");
  CHECK(odd.lhs.size() == 12);
  REQUIRE(odd.rhs.size() == 2);
  CHECK(odd.cfg->curve(odd.rhs[0].base).sep == SepType::nonseparating);

  Relation annulus = builtin_chain(1, 1, "front");
  CHECK(annulus.lhs.size() == 2);  // (t)^2 = d1 d2 with d1, d2 parallel to c1
  CHECK(annulus.rhs.size() == 2);
  CHECK(relation_homology_consistent(annulus));

  // the even chain filling the whole surface bounds: rhs is nullhomotopic
  Relation full = builtin_chain(4, 2, "front");
  CHECK(full.cfg->curve(full.rhs[0].base).sep == SepType::nullhomotopic);

  // back placement shifts the window
  Relation back = builtin_chain(2, 2, "back");
  CHECK(back.rhs[0].base == "s4_5");
  CHECK(back.lhs[0].base == "c4");

  CHECK_THROWS_AS(builtin_chain(6, 2, "front"), relation_error);  // m > 2g+1
  CHECK_THROWS_AS(builtin_chain(2, 2, "middle"), relation_error);
  CHECK_THROWS_AS(builtin("chain_even", 3), relation_error);
  CHECK_THROWS_AS(builtin("chain_odd", 2), relation_error);
}

TEST_CASE("gsr relation shape") {
  Relation r = builtin("gsr", 2);
  CHECK(r.lhs.size() == 6 * 5);  // (a0 .. a5)^5
  CHECK(r.rhs.size() == 4);      // c1 c2^2 c3
  REQUIRE(r.deltas.has_value());
  CHECK(r.deltas->first == -(4 * 4 + 5 * 2));
  CHECK(r.deltas->second == 2 * 4 + 3 * 2);
}

TEST_CASE("family words") {
  CHECK(family("A", 2, 1).size() == 20);
  CHECK(family("B", 2, 1).size() == 30);
  CHECK(family("C", 2, 1).size() == 30);
  CHECK(family("D", 2, 1).size() == 40);
  CHECK(family("GSR_capped", 3, 1).size() == 56);
  CHECK(family("torus_elliptic", 1, 2).size() == 24);
  CHECK(family("A", 3, 2).size() == 2 * family("A", 3, 1).size());
  CHECK_THROWS_AS(family("E", 2, 1), relation_error);
  CHECK_THROWS_AS(family("A", 0, 1), relation_error);
  CHECK_THROWS_AS(family("A", 2, 0), relation_error);
  CHECK_THROWS_AS(family("torus_elliptic", 2, 1), relation_error);
}

TEST_CASE("match sites on a repeated pattern") {
  // (c1 c2)^10 against the 12-letter lhs of the 2-chain relation: matches
  // start at the five even offsets 0..8
  Word w = parse_word("(b1 b2)^10", standard_chain_config_ptr(2));
  Relation rel = builtin_chain(2, 2, "front");
  auto sites = match_sites(w, rel);
  REQUIRE(sites.size() == 5);
  for (size_t i = 0; i < sites.size(); i++) {
    CHECK(sites[i].index == 2 * i);
    CHECK(sites[i].lhs_side);
  }

  Word rhs_w = parse_word("c3 s1_2 c3", std::make_shared<const CurveConfig>(
                                            merge_config(*standard_chain_config_ptr(2), *rel.cfg)));
  auto rhs_sites = match_sites(rhs_w, rel);
  REQUIRE(rhs_sites.size() == 1);
  CHECK(rhs_sites[0].index == 1);
  CHECK_FALSE(rhs_sites[0].lhs_side);

  // incompatible configurations yield no sites
  Relation gsr = builtin("gsr", 2);
  CHECK(match_sites(family("B", 2, 1), gsr).empty());
}

TEST_CASE("substitution replaces a window and merges configurations") {
  Word w = parse_word("c5 (c1 c2)^6 c5", standard_chain_config_ptr(2));
  Relation rel = builtin_chain(2, 2, "front");
  Word out = substitute(w, rel, 1, true);
  CHECK(word_text(out) == "c5 s1_2 c5");
  CHECK(out.cfg->has("s1_2"));
  CHECK(out.cfg->surface.genus == 2);

  Word back = substitute(out, rel, 1, false);
  CHECK(word_text(back) == word_text(w));

  CHECK_THROWS_WITH_AS(substitute(w, rel, 2, true),
                       doctest::Contains("subword mismatch"), relation_error);
  CHECK_THROWS_AS(substitute(w, rel, 20, true), relation_error);
}

TEST_CASE("substitution rejects incompatible ambients") {
  Word w = family("B", 2, 1);
  Relation gsr = builtin("gsr", 2);
  CHECK_THROWS_WITH_AS(substitute(w, gsr, 0, true),
                       doctest::Contains("ambient incompatibility"), relation_error);
}

TEST_CASE("library document") {
  nlohmann::json j = nlohmann::json::parse(library_json());
  CHECK(j.at("schema").get<int>() == 1);
  CHECK(j.contains("relations"));
  CHECK(j.at("relations").contains("star"));
  CHECK(j.at("relations").contains("lantern"));
  CHECK(j.contains("families"));
  // the period-(2g+1) family is stored in its homologically trivial form,
  // with a note about the shorter variant
  std::string note = j.at("families").at("C").at("note").get<std::string>();
  CHECK(note.find("not homologically trivial") != std::string::npos);
  for (const auto& [name, rel] : j.at("relations").items()) {
    CHECK(rel.contains("lhs"));
    CHECK(rel.contains("rhs"));
    CHECK(rel.contains("ambient"));
    CHECK(rel.contains("kind"));
  }
}

TEST_CASE("relation references resolve") {
  RelationRef ref;
  ref.name = "chain_even";
  ref.m = 2;
  ref.g = 3;
  ref.placement = "back";
  Relation rel = resolve_relation(ref);
  CHECK(rel.rhs[0].base == "s6_7");
  RelationRef star;
  star.name = "star_g2";
  CHECK(resolve_relation(star).name == "star_g2");
}
