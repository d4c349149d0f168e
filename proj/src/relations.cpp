#include "relator/relations.hpp"

#include <json.hpp>

#include "relator/homology.hpp"

namespace relator {

std::string to_string(RelationKind k) {
  switch (k) {
    case RelationKind::braid: return "braid";
    case RelationKind::commutation: return "commutation";
    case RelationKind::lantern: return "lantern";
    case RelationKind::chain_odd: return "chain_odd";
    case RelationKind::chain_even: return "chain_even";
    case RelationKind::star: return "star";
    case RelationKind::gsr: return "gsr";
    case RelationKind::degenerate_specialization: return "degenerate_specialization";
  }
  return "unknown";
}

RelationKind relation_kind_from_string(const std::string& s) {
  if (s == "braid") return RelationKind::braid;
  if (s == "commutation") return RelationKind::commutation;
  if (s == "lantern") return RelationKind::lantern;
  if (s == "chain_odd") return RelationKind::chain_odd;
  if (s == "chain_even") return RelationKind::chain_even;
  if (s == "star") return RelationKind::star;
  if (s == "gsr") return RelationKind::gsr;
  if (s == "degenerate_specialization") return RelationKind::degenerate_specialization;
  throw relation_error("unknown relation kind: " + s);
}

static std::vector<Letter> repeat(const std::vector<Letter>& period, int k) {
  std::vector<Letter> out;
  out.reserve(period.size() * static_cast<size_t>(k));
  for (int i = 0; i < k; i++)
    out.insert(out.end(), period.begin(), period.end());
  return out;
}

static std::vector<Letter> plain_run(const std::vector<std::string>& ids) {
  std::vector<Letter> out;
  out.reserve(ids.size());
  for (const auto& id : ids) out.push_back(plain_letter(id));
  return out;
}

static std::vector<int64_t> zero_class(int g) {
  return std::vector<int64_t>(2 * static_cast<size_t>(g), 0);
}

static std::vector<int64_t> unit_class(int g, int index) {
  auto v = zero_class(g);
  v[static_cast<size_t>(index)] = 1;
  return v;
}

static Relation make_star() {
  Relation rel;
  rel.name = "star";
  rel.kind = RelationKind::star;
  CurveConfig cfg;
  cfg.surface = {1, 0};
  cfg.name = "star_capped";
  cfg.add_curve({"a0", SepType::nonseparating, 0, unit_class(1, 0)});
  for (int i = 1; i <= 3; i++)
    cfg.add_curve({"a" + std::to_string(i), SepType::nonseparating, 0, unit_class(1, 1)});
  for (int i = 1; i <= 3; i++) {
    cfg.add_curve({"c" + std::to_string(i), SepType::nullhomotopic, 0, zero_class(1)});
    cfg.set_count("a0", "a" + std::to_string(i), 1);
  }
  rel.cfg = std::make_shared<const CurveConfig>(std::move(cfg));
  rel.lhs = repeat(plain_run({"a0", "a1", "a2", "a3"}), 3);
  rel.rhs = plain_run({"c1", "c2", "c3"});
  rel.deltas = {{-9, +5}};
  rel.note = "capped one-holed-torus star: hub a0 meets each prong once; "
             "the three boundary twists bound disks after capping";
  return rel;
}

static Relation make_star_torus() {
  Relation rel;
  rel.name = "star_torus";
  rel.kind = RelationKind::degenerate_specialization;
  CurveConfig cfg = standard_chain_config(1);
  for (int i = 1; i <= 3; i++)
    cfg.add_curve({"u" + std::to_string(i), SepType::nullhomotopic, 0, zero_class(1)});
  rel.cfg = std::make_shared<const CurveConfig>(std::move(cfg));
  rel.lhs = repeat(plain_run({"c1", "c1", "c2", "c1"}), 3);
  rel.rhs = plain_run({"u1", "u2", "u3"});
  rel.deltas = {{-9, +5}};
  rel.note = "degenerate star on the torus: the three prongs coincide with the "
             "hub's dual curve, and all three boundary curves bound disks";
  return rel;
}

static Relation make_star_g2() {
  Relation rel;
  rel.name = "star_g2";
  rel.kind = RelationKind::degenerate_specialization;
  CurveConfig cfg = standard_chain_config(2);
  cfg.add_curve({"u1", SepType::nullhomotopic, 0, zero_class(2)});
  rel.cfg = std::make_shared<const CurveConfig>(std::move(cfg));
  rel.lhs = repeat(plain_run({"c1", "c1", "c2", "c3"}), 3);
  rel.rhs = plain_run({"c5", "u1", "c5"});
  rel.deltas = {{-9, +5}};
  rel.note = "degenerate star on the genus 2 chain: both outer boundary curves "
             "land on c5 and the middle boundary curve bounds a disk";
  return rel;
}

static Relation make_gsr(int g) {
  if (g < 1) throw relation_error("gsr needs genus at least 1");
  Relation rel;
  rel.name = "gsr(" + std::to_string(g) + ")";
  rel.kind = RelationKind::gsr;
  CurveConfig chain = standard_chain_config(g);
  CurveConfig cfg;
  cfg.surface = {g, 0};
  cfg.name = "gsr_g" + std::to_string(g);
  cfg.add_curve({"a0", SepType::nonseparating, 0, unit_class(g, g)});  // parallel to a1
  for (int i = 1; i <= 2 * g + 1; i++) {
    NamedCurve c = chain.curve("c" + std::to_string(i));
    c.id = "a" + std::to_string(i);
    cfg.add_curve(std::move(c));
  }
  for (int i = 1; i <= 2 * g; i++)
    cfg.set_count("a" + std::to_string(i), "a" + std::to_string(i + 1), 1);
  cfg.set_count("a0", "a2", 1);
  for (int i = 1; i <= 3; i++)
    cfg.add_curve({"c" + std::to_string(i), SepType::nullhomotopic, 0, zero_class(g)});
  rel.cfg = std::make_shared<const CurveConfig>(std::move(cfg));
  std::vector<Letter> period;
  for (int i = 0; i <= 2 * g + 1; i++)
    period.push_back(plain_letter("a" + std::to_string(i)));
  rel.lhs = repeat(period, 2 * g + 1);
  rel.rhs.push_back(plain_letter("c1"));
  for (int i = 0; i < g; i++) rel.rhs.push_back(plain_letter("c2"));
  rel.rhs.push_back(plain_letter("c3"));
  int64_t gg = g;
  rel.deltas = {{-(4 * gg * gg + 5 * gg), 2 * gg * gg + 3 * gg}};
  rel.note = "capped generalized star: a0 is parallel to a1 in homology and "
             "meets a2 once; the boundary twists bound disks after capping";
  return rel;
}

static Relation make_lantern() {
  Relation rel;
  rel.name = "lantern";
  rel.kind = RelationKind::lantern;
  CurveConfig cfg;
  cfg.surface = {2, 0};
  cfg.name = "lantern_capped_g2";
  cfg.add_curve({"l1", SepType::nonseparating, 0, {0, 0, 1, 0}});
  cfg.add_curve({"l2", SepType::nonseparating, 0, {0, 0, 0, 1}});
  cfg.add_curve({"l3", SepType::nonseparating, 0, {0, 0, -1, 0}});
  cfg.add_curve({"l4", SepType::nonseparating, 0, {0, 0, 0, -1}});
  cfg.add_curve({"x", SepType::nonseparating, 0, {0, 0, 1, 1}});
  cfg.add_curve({"y", SepType::nonseparating, 0, {0, 0, -1, 1}});
  cfg.add_curve({"z", SepType::separating, 1, {0, 0, 0, 0}});
  cfg.set_count("x", "y", 2);
  cfg.set_count("x", "z", 2);
  cfg.set_count("y", "z", 2);
  rel.cfg = std::make_shared<const CurveConfig>(std::move(cfg));
  rel.lhs = plain_run({"l1", "l2", "l3", "l4"});
  rel.rhs = plain_run({"x", "y", "z"});
  rel.deltas = {{-1, +1}};
  rel.note = "four-holed-sphere identity embedded in a capped genus 2 surface; "
             "the four boundary curves become the disjoint nonseparating l1..l4";
  return rel;
}

Relation builtin_chain(int m, int g, const std::string& placement) {
  if (m < 1) throw relation_error("chain length must be positive");
  if (g < 1) throw relation_error("genus must be at least 1");
  if (m > 2 * g + 1)
    throw relation_error("chain of length " + std::to_string(m) +
                         " does not fit on a genus " + std::to_string(g) + " surface");
  int lo, hi;
  if (placement == "front") {
    lo = 1;
    hi = m;
  } else if (placement == "back") {
    hi = 2 * g + 1;
    lo = hi - m + 1;
  } else {
    throw relation_error("unknown placement: " + placement);
  }
  Relation rel;
  rel.kind = m % 2 == 0 ? RelationKind::chain_even : RelationKind::chain_odd;
  rel.name = to_string(rel.kind) + "(" + std::to_string(m) + ",g" +
             std::to_string(g) + "," + placement + ")";
  CurveConfig cfg = standard_chain_config(g);
  auto flank = [&](const std::string& id, int crossings) {
    if (lo - 1 >= 1) cfg.set_count(id, "c" + std::to_string(lo - 1), crossings);
    if (hi + 1 <= 2 * g + 1) cfg.set_count(id, "c" + std::to_string(hi + 1), crossings);
  };
  if (m % 2 == 0) {
    NamedCurve s = separating_chain_boundary(g, m, placement);
    std::string sid = s.id;
    cfg.add_curve(std::move(s));
    flank(sid, 2);
    rel.rhs = plain_run({sid});
  } else {
    int h = (m - 1) / 2;
    auto cls = zero_class(g);
    int j = placement == "front" ? h + 1 : g - h;  // boundary class +-y_j, y_0 = y_{g+1} = 0
    if (j >= 1 && j <= g) cls[static_cast<size_t>(g + j - 1)] = 1;
    bool null = cls == zero_class(g);
    SepType t = null ? SepType::nullhomotopic : SepType::nonseparating;
    std::string d1 = "d" + std::to_string(lo) + "_" + std::to_string(hi) + "_1";
    std::string d2 = "d" + std::to_string(lo) + "_" + std::to_string(hi) + "_2";
    auto neg = cls;
    for (auto& v : neg) v = -v;
    cfg.add_curve({d1, t, 0, cls});
    cfg.add_curve({d2, t, 0, neg});
    flank(d1, 1);
    flank(d2, 1);
    rel.rhs = plain_run({d1, d2});
    rel.note = "the exponent m+1 on the chain word is forced by the annulus "
               "case m=1, where the two boundary curves are parallel copies "
               "of the chain curve and t^2 = t_d1 t_d2";
  }
  rel.cfg = std::make_shared<const CurveConfig>(std::move(cfg));
  std::vector<Letter> period;
  for (int i = lo; i <= hi; i++) period.push_back(plain_letter("c" + std::to_string(i)));
  rel.lhs = repeat(period, m % 2 == 0 ? 2 * m + 2 : m + 1);
  return rel;
}

Relation builtin(const std::string& name, int param) {
  if (name == "star") return make_star();
  if (name == "star_torus") return make_star_torus();
  if (name == "star_g2") return make_star_g2();
  if (name == "lantern") return make_lantern();
  if (name == "gsr") return make_gsr(param);
  if (name == "chain_even") {
    if (param < 2 || param % 2 != 0)
      throw relation_error("chain_even needs an even chain length");
    return builtin_chain(param, param / 2, "front");
  }
  if (name == "chain_odd") {
    if (param < 1 || param % 2 != 1)
      throw relation_error("chain_odd needs an odd chain length");
    return builtin_chain(param, std::max(1, (param - 1) / 2), "front");
  }
  throw relation_error("unknown relation name: " + name);
}

Relation resolve_relation(const RelationRef& ref) {
  if (ref.name == "chain_even" || ref.name == "chain_odd") {
    if (ref.g > 0)
      return builtin_chain(ref.m, ref.g, ref.placement.empty() ? "front" : ref.placement);
    return builtin(ref.name, ref.m);
  }
  if (ref.name == "gsr") return builtin("gsr", ref.g);
  return builtin(ref.name);
}

std::vector<std::string> family_names() {
  return {"A", "B", "C", "D", "GSR_capped", "torus_elliptic"};
}

Word family(const std::string& name, int g, int n) {
  if (n < 1) throw relation_error("n must be at least 1");
  if (g < 1) throw relation_error("genus must be at least 1");
  auto cid = [](int i) { return "c" + std::to_string(i); };
  if (name == "GSR_capped") {
    Relation gsr = make_gsr(g);
    std::vector<Letter> period;
    for (int i = 0; i <= 2 * g + 1; i++)
      period.push_back(plain_letter("a" + std::to_string(i)));
    return Word{gsr.cfg, repeat(period, (2 * g + 1) * n)};
  }
  if (name == "torus_elliptic") {
    if (g != 1) throw relation_error("torus_elliptic lives on genus 1");
    return Word{standard_chain_config_ptr(1),
                repeat(plain_run({"c1", "c2"}), 6 * n)};
  }
  ConfigPtr cfg = standard_chain_config_ptr(g);
  std::vector<Letter> period;
  if (name == "A") {
    for (int i = 1; i <= 2 * g; i++) period.push_back(plain_letter(cid(i)));
    period.push_back(plain_letter(cid(2 * g + 1)));
    period.push_back(plain_letter(cid(2 * g + 1)));
    for (int i = 2 * g; i >= 1; i--) period.push_back(plain_letter(cid(i)));
    return Word{cfg, repeat(period, 2 * n)};
  }
  if (name == "B") {
    for (int i = 1; i <= 2 * g + 1; i++) period.push_back(plain_letter(cid(i)));
    return Word{cfg, repeat(period, (2 * g + 2) * n)};
  }
  if (name == "C") {
    period.push_back(plain_letter(cid(1)));
    for (int i = 1; i <= 2 * g + 1; i++) period.push_back(plain_letter(cid(i)));
    return Word{cfg, repeat(period, (2 * g + 1) * n)};
  }
  if (name == "D") {
    for (int i = 1; i <= 2 * g; i++) period.push_back(plain_letter(cid(i)));
    return Word{cfg, repeat(period, 2 * (2 * g + 1) * n)};
  }
  throw relation_error("unknown family: " + name);
}

std::vector<MatchSite> match_sites(const Word& w, const Relation& rel) {
  std::vector<MatchSite> out;
  if (!w.cfg->compatible_with(*rel.cfg) || !rel.cfg->compatible_with(*w.cfg))
    return out;
  auto scan = [&](const std::vector<Letter>& side, bool lhs_side) {
    if (side.empty() || side.size() > w.letters.size()) return;
    for (size_t i = 0; i + side.size() <= w.letters.size(); i++) {
      bool ok = true;
      for (size_t j = 0; j < side.size() && ok; j++)
        ok = w.letters[i + j] == side[j];
      if (ok) out.push_back({i, lhs_side});
    }
  };
  scan(rel.lhs, true);
  scan(rel.rhs, false);
  return out;
}

Word substitute(const Word& w, const Relation& rel, size_t at, bool forward) {
  const auto& from = forward ? rel.lhs : rel.rhs;
  const auto& to = forward ? rel.rhs : rel.lhs;
  if (at + from.size() > w.letters.size())
    throw relation_error("substitution window out of range");
  CurveConfig merged;
  try {
    merged = merge_config(*w.cfg, *rel.cfg);
  } catch (const config_error& e) {
    throw relation_error(std::string("ambient incompatibility: ") + e.what());
  }
  for (size_t j = 0; j < from.size(); j++)
    if (w.letters[at + j] != from[j])
      throw relation_error("subword mismatch at " + std::to_string(at) +
                           ": the window does not equal the relation side");
  Word out;
  out.cfg = std::make_shared<const CurveConfig>(std::move(merged));
  out.letters.reserve(w.letters.size() - from.size() + to.size());
  out.letters.insert(out.letters.end(), w.letters.begin(),
                     w.letters.begin() + static_cast<long>(at));
  out.letters.insert(out.letters.end(), to.begin(), to.end());
  out.letters.insert(out.letters.end(),
                     w.letters.begin() + static_cast<long>(at + from.size()),
                     w.letters.end());
  return out;
}

bool relation_homology_consistent(const Relation& rel) {
  return word_matrix(rel.lhs, *rel.cfg) == word_matrix(rel.rhs, *rel.cfg);
}

static nlohmann::json config_json(const CurveConfig& cfg) {
  nlohmann::json j;
  j["name"] = cfg.name;
  j["genus"] = cfg.surface.genus;
  j["boundary"] = cfg.surface.boundary;
  auto curves = nlohmann::json::array();
  for (const auto& c : cfg.curves()) {
    nlohmann::json cj;
    cj["id"] = c.id;
    cj["type"] = to_string(c.sep);
    if (c.sep == SepType::separating) cj["h"] = c.h;
    cj["class"] = c.cls;
    curves.push_back(cj);
  }
  j["curves"] = curves;
  auto counts = nlohmann::json::array();
  for (const auto& [key, n] : cfg.counts())
    counts.push_back({key.first, key.second, n});
  j["counts"] = counts;
  if (!cfg.aliases().empty()) {
    nlohmann::json a;
    for (const auto& [alias, id] : cfg.aliases()) a[alias] = id;
    j["aliases"] = a;
  }
  return j;
}

static nlohmann::json relation_json(const Relation& rel) {
  nlohmann::json j;
  j["kind"] = to_string(rel.kind);
  j["ambient"] = config_json(*rel.cfg);
  j["lhs"] = word_text(rel.lhs);
  j["rhs"] = word_text(rel.rhs);
  if (rel.deltas) j["deltas"] = {rel.deltas->first, rel.deltas->second};
  if (!rel.note.empty()) j["note"] = rel.note;
  return j;
}

std::string library_json() {
  nlohmann::json j;
  j["schema"] = 1;
  nlohmann::json rels;
  for (const Relation& rel :
       {builtin("star"), builtin("star_torus"), builtin("star_g2"),
        builtin("gsr", 1), builtin("gsr", 2), builtin("gsr", 3), builtin("lantern"),
        builtin("chain_even", 2), builtin("chain_even", 4), builtin("chain_even", 6),
        builtin("chain_odd", 1), builtin("chain_odd", 3), builtin("chain_odd", 5),
        builtin("chain_odd", 7)})
    rels[rel.name] = relation_json(rel);
  j["relations"] = rels;
  nlohmann::json fams;
  fams["A"] = {{"word", "(c1 .. c_2g c_{2g+1}^2 c_2g .. c1)^2n"}};
  fams["B"] = {{"word", "(c1 .. c_{2g+1})^{(2g+2)n}"}};
  fams["C"] = {{"word", "(c1^2 c2 .. c_{2g+1})^{(2g+1)n}"},
               {"note", "the variant omitting c_{2g+1} is not homologically "
                        "trivial: at g=1 its image is minus the image of "
                        "c1^2 c2, an order-4 matrix"}};
  fams["D"] = {{"word", "(c1 .. c_2g)^{2(2g+1)n}"}};
  fams["GSR_capped"] = {{"word", "(a0 .. a_{2g+1})^{(2g+1)n}"}};
  fams["torus_elliptic"] = {{"word", "(c1 c2)^6n"}, {"note", "genus 1 only"}};
  j["families"] = fams;
  return j.dump(2) + "\n";
}

}  // namespace relator
