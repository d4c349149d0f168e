#include "relator/pipelines.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include "relator/collect.hpp"
#include "relator/relations.hpp"

namespace relator {
namespace {

const char* kPublished = "published value";
const char* kDerived = "derived value";

FiberCounts fc(std::int64_t s0, std::map<int, std::int64_t> s, std::int64_t trivial) {
  FiberCounts out;
  out.s0 = s0;
  out.s = std::move(s);
  out.n_trivial = trivial;
  return out;
}

std::vector<std::string> times(std::vector<std::string> block, int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.insert(out.end(), block.begin(), block.end());
  return out;
}

std::vector<std::string> chain_ids(int lo, int hi) {
  std::vector<std::string> out;
  for (int i = lo; i <= hi; ++i) out.push_back("c" + std::to_string(i));
  return out;
}

RelationRef chain_ref(int m, int g, const std::string& placement) {
  RelationRef ref;
  ref.name = m % 2 == 0 ? "chain_even" : "chain_odd";
  ref.m = m;
  ref.g = g;
  ref.placement = placement;
  return ref;
}

RelationRef named_ref(const std::string& name) {
  RelationRef ref;
  ref.name = name;
  return ref;
}

// Applies steps to a working word, records them for the log, and accumulates
// stage checks into the result.
struct Runner {
  PipelineResult& res;
  Word start;
  Word cur;
  std::vector<Step> steps;

  Runner(PipelineResult& r, Word w) : res(r), start(w), cur(std::move(w)) {}

  int genus() const { return cur.cfg->surface.genus; }

  void move(const Move& m, const std::string& note = "") {
    cur = apply_move(cur, m);
    steps.push_back(move_step(m, note));
  }

  std::size_t collect(const std::vector<std::string>& pattern, const std::string& what) {
    CollectResult c = collect_subword(cur, pattern);
    if (!c.found) throw std::runtime_error("failed to collect " + what);
    for (std::size_t i = 0; i < c.script.size(); ++i)
      move(c.script[i], i == 0 ? "begin collecting " + what : "");
    return c.index;
  }

  void subst(const RelationRef& ref, std::size_t at, const std::string& note = "") {
    Relation rel = resolve_relation(ref);
    InvariantReport before = make_report(genus(), count_fibers(cur), false);
    cur = substitute(cur, rel, at, true);
    steps.push_back(substitution_step(ref, at, true, note));
    InvariantReport after = make_report(genus(), count_fibers(cur), false);

    SubstitutionRecord rec;
    rec.relation = rel.name;
    rec.de = after.e - before.e;
    rec.dsigma = after.sigma - before.sigma;
    auto [de, ds] = substitution_delta(rel);
    rec.rel_de = de;
    rec.rel_dsigma = ds;
    rec.ok = rec.de == rec.rel_de && rec.dsigma == rec.rel_dsigma;
    res.substitutions.push_back(rec);
    if (!rec.ok)
      res.mismatches.push_back("substitution " + rel.name + ": word changed by (" +
                               std::to_string(rec.de) + ", " + std::to_string(rec.dsigma) +
                               ") but the relation's own terms give (" +
                               std::to_string(rec.rel_de) + ", " +
                               std::to_string(rec.rel_dsigma) + ")");
  }

  void check_counts(const std::string& label, const FiberCounts& expected,
                    const std::string& source) {
    FiberCounts got = count_fibers(cur);
    CheckRecord rec;
    rec.label = label + ": fiber counts";
    rec.expected = counts_text(expected);
    rec.computed = counts_text(got);
    rec.source = source;
    rec.ok = got == expected;
    res.checks.push_back(rec);
    if (!rec.ok)
      res.mismatches.push_back(rec.label + ": expected " + rec.expected + ", computed " +
                               rec.computed);
  }

  void check_invariants(const std::string& label, std::int64_t e, std::int64_t sigma,
                        bool blowdown, const std::string& source) {
    InvariantReport got = make_report(genus(), count_fibers(cur), blowdown);
    InvariantReport want = got;
    want.e = e;
    want.sigma = sigma;
    want.c1sq = 2 * e + 3 * sigma;
    want.chi = (e + sigma) / 4;
    CheckRecord rec;
    rec.label = label + (blowdown ? ": invariants after blowdown" : ": invariants");
    rec.expected = invariants_text(want);
    rec.computed = invariants_text(got);
    rec.source = source;
    rec.ok = got.e == e && got.sigma == sigma;
    res.checks.push_back(rec);
    if (!rec.ok)
      res.mismatches.push_back(rec.label + ": expected " + rec.expected + ", computed " +
                               rec.computed);
  }

  void finish(bool blowdown, const std::string& label) {
    LogDocument doc = make_log(start, steps, blowdown, label);
    res.log_lines.insert(res.log_lines.end(), doc.lines.begin(), doc.lines.end());
    res.final = doc.final;
    res.final_counts = doc.counts;
    res.final_report = doc.report;
    res.blowdown = blowdown;
  }
};

// Elliptic fibration on the torus: braid the doubled word into a star shape,
// trade it for three nullhomotopic twists, then blow the three spheres down.
void run_5_1(PipelineResult& res) {
  Runner r(res, family("torus_elliptic", 1, 2));
  r.check_counts("start", fc(24, {}, 0), kDerived);
  r.check_invariants("start", 24, -16, false, kPublished);
  for (std::size_t pos : {std::size_t{1}, std::size_t{5}, std::size_t{9}}) {
    Move m;
    m.kind = MoveKind::braid_forward;
    m.pos = pos;
    r.move(m, pos == 1 ? "braid the front into (c1 c1 c2 c1)^3" : "");
  }
  r.subst(named_ref("star_torus"), 0, "trade the cube for three trivial cycles");
  r.check_counts("after substitution", fc(12, {}, 3), kPublished);
  r.check_invariants("after substitution", 15, -11, false, kDerived);
  r.check_invariants("final", 12, -8, true, kPublished);
  r.finish(true, "elliptic fibration, genus 1");
}

// Genus 2: collect (c1 c1 c2 c3)^3 inside the period-5 relator and apply the
// degenerate star relation, then blow down the trivial cycle.
void run_5_2(PipelineResult& res) {
  Runner r(res, family("C", 2, 1));
  r.check_counts("start", fc(30, {}, 0), kDerived);
  r.check_invariants("start", 26, -18, false, kDerived);
  std::size_t at = r.collect(times({"c1", "c1", "c2", "c3"}, 3), "(c1 c1 c2 c3)^3");
  r.subst(named_ref("star_g2"), at);
  r.check_counts("after substitution", fc(20, {}, 1), kPublished);
  r.check_invariants("after substitution", 17, -13, false, kDerived);
  r.check_invariants("final", 16, -12, true, kPublished);
  r.finish(true, "genus 2, star substitution");
}

// Genus 2: two even-chain substitutions turn the period-6 relator into a
// 8-letter word with two separating cycles.
void run_5_3(PipelineResult& res) {
  Runner r(res, family("B", 2, 1));
  r.check_counts("start", fc(30, {}, 0), kDerived);
  r.check_invariants("start", 26, -18, false, kPublished);
  std::size_t at = r.collect(times({"c1", "c2"}, 6), "(c1 c2)^6");
  r.subst(chain_ref(2, 2, "front"), at);
  r.check_counts("after first substitution", fc(18, {{1, 1}}, 0), kPublished);
  r.check_invariants("after first substitution", 15, -11, false, kPublished);
  at = r.collect(times({"c4", "c5"}, 6), "(c4 c5)^6");
  r.subst(chain_ref(2, 2, "back"), at);
  r.check_counts("final", fc(6, {{1, 2}}, 0), kPublished);
  r.check_invariants("final", 4, -4, false, kPublished);
  r.finish(false, "genus 2, two even-chain substitutions");
}

// Genus 2: same star substitution as 5.2 but inside the period-4 relator.
void run_5_4(PipelineResult& res) {
  Runner r(res, family("D", 2, 1));
  r.check_counts("start", fc(40, {}, 0), kDerived);
  r.check_invariants("start", 36, -24, false, kDerived);
  std::size_t at = r.collect(times({"c1", "c1", "c2", "c3"}, 3), "(c1 c1 c2 c3)^3");
  r.subst(named_ref("star_g2"), at);
  r.check_counts("after substitution", fc(30, {}, 1), kPublished);
  r.check_invariants("after substitution", 27, -19, false, kDerived);
  r.check_invariants("final", 26, -18, true, kPublished);
  r.finish(true, "genus 2, star substitution in the period-4 relator");
}

// Genus 2 warm-up for 5.5: collect powers of the length-4 chain, regroup
// them, and apply the 2-chain relation twice.
void run_5_5p(PipelineResult& res) {
  Runner r(res, family("D", 2, 1));
  r.check_counts("start", fc(40, {}, 0), kDerived);
  r.check_invariants("start", 36, -24, false, kDerived);
  for (std::size_t pos : {std::size_t{0}, std::size_t{12}, std::size_t{24}}) {
    Move m;
    m.kind = MoveKind::power_collect;
    m.pos = pos;
    m.chain = chain_ids(1, 4);
    m.k = 2;
    r.move(m, pos == 0 ? "regroup each (c1 c2 c3 c4)^3 around (c1 c2)^3" : "");
  }
  std::size_t at = r.collect(times({"c1", "c2"}, 12), "(c1 c2)^12");
  r.subst(chain_ref(2, 2, "front"), at);
  r.check_counts("after first substitution", fc(28, {{1, 1}}, 0), kPublished);
  r.check_invariants("after first substitution", 25, -17, false, kDerived);
  r.subst(chain_ref(2, 2, "front"), at + 1);
  r.check_counts("final", fc(16, {{1, 2}}, 0), kPublished);
  r.check_invariants("final", 14, -10, false, kDerived);
  r.finish(false, "genus 2, doubled even-chain substitution");
}

// Genus 3, two derivations from the period-6 relator: (a) two 2-chain
// substitutions; (b)+(c) a 4-chain substitution followed by a 2-chain one.
void run_5_5(PipelineResult& res) {
  {
    Runner a(res, family("D", 3, 1));
    a.check_counts("route a start", fc(84, {}, 0), kDerived);
    a.check_invariants("route a start", 76, -48, false, kDerived);
    std::size_t at = a.collect(times({"c1", "c2"}, 12), "(c1 c2)^12");
    a.subst(chain_ref(2, 3, "front"), at);
    a.subst(chain_ref(2, 3, "front"), at + 1);
    a.check_counts("route a final", fc(60, {{1, 2}}, 0), kPublished);
    a.check_invariants("route a final", 54, -34, false, kDerived);
    a.finish(false, "genus 3, route a: two even-chain substitutions");
  }
  Runner b(res, family("D", 3, 1));
  for (std::size_t pos : {std::size_t{0}, std::size_t{30}}) {
    Move m;
    m.kind = MoveKind::power_collect;
    m.pos = pos;
    m.chain = chain_ids(1, 6);
    m.k = 4;
    b.move(m, pos == 0 ? "regroup each (c1 .. c6)^5 around (c1 c2 c3 c4)^5" : "");
  }
  std::size_t at = b.collect(times({"c1", "c2", "c3", "c4"}, 10), "(c1 c2 c3 c4)^10");
  b.subst(chain_ref(4, 3, "front"), at);
  b.check_counts("route b midpoint", fc(44, {{1, 1}}, 0), kPublished);
  b.check_invariants("route b midpoint", 37, -25, false, kDerived);
  {
    Move m;
    m.kind = MoveKind::power_collect;
    m.pos = 21;
    m.chain = chain_ids(1, 6);
    m.k = 2;
    b.move(m, "regroup the trailing (c1 .. c6)^3 around (c1 c2)^3");
  }
  at = b.collect(times({"c1", "c2"}, 6), "(c1 c2)^6");
  b.subst(chain_ref(2, 3, "front"), at);
  b.check_counts("route c final", fc(32, {{1, 2}}, 0), kPublished);
  b.check_invariants("route c final", 26, -18, false, kDerived);
  b.finish(false, "genus 3, routes b and c: 4-chain then 2-chain substitution");
}

// Genus 3: even-chain substitutions at both ends of the period-8 relator.
void run_5_6(PipelineResult& res) {
  Runner r(res, family("B", 3, 1));
  r.check_counts("start", fc(56, {}, 0), kDerived);
  r.check_invariants("start", 48, -32, false, kDerived);
  std::size_t at = r.collect(times({"c1", "c2"}, 6), "(c1 c2)^6");
  r.subst(chain_ref(2, 3, "front"), at);
  r.check_counts("after first substitution", fc(44, {{1, 1}}, 0), kPublished);
  r.check_invariants("after first substitution", 37, -25, false, kDerived);
  at = r.collect(times({"c6", "c7"}, 6), "(c6 c7)^6");
  r.subst(chain_ref(2, 3, "back"), at);
  r.check_counts("final", fc(32, {{1, 2}}, 0), kPublished);
  r.check_invariants("final", 26, -18, false, kDerived);
  r.finish(false, "genus 3, even-chain substitutions at both ends");
}

}  // namespace

std::string counts_text(const FiberCounts& fcs) {
  std::ostringstream os;
  os << "s0=" << fcs.s0;
  for (const auto& [h, n] : fcs.s) os << " s" << h << "=" << n;
  os << " trivial=" << fcs.n_trivial;
  return os.str();
}

std::string invariants_text(const InvariantReport& r) {
  std::ostringstream os;
  os << "e=" << r.e << " sigma=" << r.sigma << " c1sq=" << r.c1sq << " chi=" << r.chi;
  if (r.blowdown_applied) os << " (" << r.blowdowns << " blowdowns)";
  return os.str();
}

std::vector<std::string> pipeline_ids() {
  return {"5.1", "5.2", "5.3", "5.4", "5.5p", "5.5", "5.6"};
}

PipelineResult reproduce(const std::string& id) {
  PipelineResult res;
  res.id = id;
  try {
    if (id == "5.1")
      run_5_1(res);
    else if (id == "5.2")
      run_5_2(res);
    else if (id == "5.3")
      run_5_3(res);
    else if (id == "5.4")
      run_5_4(res);
    else if (id == "5.5p")
      run_5_5p(res);
    else if (id == "5.5")
      run_5_5(res);
    else if (id == "5.6")
      run_5_6(res);
    else
      throw std::invalid_argument("unknown pipeline id: " + id +
                                  " (known: 5.1 5.2 5.3 5.4 5.5p 5.5 5.6)");
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception& ex) {
    res.mismatches.push_back(std::string("pipeline error: ") + ex.what());
  }
  res.ok = res.mismatches.empty();
  return res;
}

}  // namespace relator
