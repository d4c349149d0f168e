#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "relator/config.hpp"

using namespace relator;

TEST_CASE("standard chain classes follow the x/y convention") {
  CurveConfig cfg = standard_chain_config(2);
  CHECK(cfg.surface.genus == 2);
  // basis x1 x2 y1 y2
  CHECK(cfg.curve("c1").cls == std::vector<int64_t>{0, 0, 1, 0});
  CHECK(cfg.curve("c2").cls == std::vector<int64_t>{1, 0, 0, 0});
  CHECK(cfg.curve("c3").cls == std::vector<int64_t>{0, 0, -1, 1});
  CHECK(cfg.curve("c4").cls == std::vector<int64_t>{0, 1, 0, 0});
  CHECK(cfg.curve("c5").cls == std::vector<int64_t>{0, 0, 0, -1});
  for (int i = 1; i <= 5; i++)
    CHECK(cfg.curve("c" + std::to_string(i)).sep == SepType::nonseparating);
}

TEST_CASE("chain intersection pattern: adjacent once, otherwise disjoint") {
  CurveConfig cfg = standard_chain_config(3);
  for (int i = 1; i <= 7; i++)
    for (int j = 1; j <= 7; j++) {
      int expected = (i != j && (i - j == 1 || j - i == 1)) ? 1 : 0;
      CHECK(cfg.count("c" + std::to_string(i), "c" + std::to_string(j)) == expected);
    }
  // |algebraic| matches the geometric count on adjacent pairs
  for (int i = 1; i <= 6; i++) {
    int64_t a = cfg.algebraic("c" + std::to_string(i), "c" + std::to_string(i + 1));
    CHECK((a == 1 || a == -1));
  }
}

TEST_CASE("aliases resolve to chain ids") {
  CurveConfig cfg = standard_chain_config(2);
  CHECK(cfg.resolve("a") == "c1");
  CHECK(cfg.resolve("b") == "c2");
  CHECK(cfg.resolve("b4") == "c4");
  CHECK(cfg.resolve("nope").empty());
  CHECK(cfg.has("c5"));
  CHECK_FALSE(cfg.has("c6"));
}

TEST_CASE("violations flags inconsistent data") {
  CHECK(standard_chain_config(1).violations().empty());
  CHECK(standard_chain_config(4).violations().empty());
  CHECK(degenerate_star_config_genus2().violations().empty());

  CurveConfig bad = standard_chain_config(1);
  NamedCurve s;
  s.id = "sep_bad";
  s.sep = SepType::separating;
  s.h = 1;
  s.cls = {1, 0};  // separating curves must be nullhomologous
  bad.add_curve(s);
  CHECK_FALSE(bad.violations().empty());
}

TEST_CASE("duplicate ids are rejected") {
  CurveConfig cfg = standard_chain_config(1);
  NamedCurve c;
  c.id = "c1";
  c.cls = {0, 0};
  CHECK_THROWS_AS(cfg.add_curve(c), config_error);
}

TEST_CASE("separating chain boundary data") {
  NamedCurve front = separating_chain_boundary(2, 2, "front");
  CHECK(front.id == "s1_2");
  CHECK(front.sep == SepType::separating);
  CHECK(front.h == 1);
  CHECK(front.cls == std::vector<int64_t>(4, 0));

  NamedCurve back = separating_chain_boundary(2, 2, "back");
  CHECK(back.id == "s4_5");
  CHECK(back.h == 1);

  // the full-length even chain bounds: its neighborhood boundary is trivial
  NamedCurve full = separating_chain_boundary(2, 4, "front");
  CHECK(full.sep == SepType::nullhomotopic);

  NamedCurve deep = separating_chain_boundary(5, 4, "front");
  CHECK(deep.h == 2);  // min(2, 5 - 2)
  NamedCurve wide = separating_chain_boundary(3, 4, "front");
  CHECK(wide.h == 1);  // min(2, 3 - 2) normalizes the side
}

TEST_CASE("compatibility and merging") {
  CurveConfig a = standard_chain_config(2);
  CurveConfig b = standard_chain_config(2);
  std::string why;
  CHECK(a.compatible_with(b, &why));

  NamedCurve s = separating_chain_boundary(2, 2, "front");
  b.add_curve(s);
  b.set_count("s1_2", "c3", 2);
  CHECK(a.compatible_with(b, &why));
  CurveConfig merged = merge_config(a, b);
  CHECK(merged.has("s1_2"));
  CHECK(merged.count("s1_2", "c3") == 2);
  CHECK(merged.name == a.name);

  // conflicting class data blocks the merge
  CurveConfig c = standard_chain_config(2);
  CurveConfig d;
  d.surface.genus = 2;
  d.name = "clash";
  NamedCurve wrong;
  wrong.id = "c1";
  wrong.cls = {1, 0, 0, 0};
  d.add_curve(wrong);
  CHECK_FALSE(c.compatible_with(d, &why));
  CHECK_THROWS_AS(merge_config(c, d), config_error);
}

TEST_CASE("genus mismatch is incompatible") {
  CurveConfig a = standard_chain_config(1);
  CurveConfig b = standard_chain_config(2);
  std::string why;
  CHECK_FALSE(a.compatible_with(b, &why));
  CHECK_FALSE(why.empty());
}

TEST_CASE("symplectic pairing on the standard basis") {
  // g = 2, basis x1 x2 y1 y2
  std::vector<int64_t> x1{1, 0, 0, 0}, y1{0, 0, 1, 0}, x2{0, 1, 0, 0}, y2{0, 0, 0, 1};
  CHECK(symplectic_pairing(x1, y1) == 1);
  CHECK(symplectic_pairing(y1, x1) == -1);
  CHECK(symplectic_pairing(x1, y2) == 0);
  CHECK(symplectic_pairing(x2, y2) == 1);
  CHECK(symplectic_pairing(x1, x2) == 0);
}
