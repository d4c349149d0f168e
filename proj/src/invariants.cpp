#include "relator/invariants.hpp"

namespace relator {

int64_t FiberCounts::total() const {
  int64_t t = s0 + n_trivial;
  for (const auto& [h, n] : s) t += n;
  return t;
}

FiberCounts count_fibers(const Word& w) {
  FiberCounts fc;
  for (const Letter& l : w.letters) {
    if (l.sign < 0)
      throw invariant_error("fiber counts need a positive relator");
    const NamedCurve& c = w.cfg->curve(l.base);
    switch (c.sep) {
      case SepType::nonseparating: fc.s0++; break;
      case SepType::separating: fc.s[c.h]++; break;
      case SepType::nullhomotopic: fc.n_trivial++; break;
      case SepType::boundary_parallel:
        throw invariant_error("boundary-parallel cycle in a closed-surface relator");
    }
  }
  return fc;
}

int64_t euler_characteristic(int g, const FiberCounts& fc) {
  return 2 * (2 - 2 * static_cast<int64_t>(g)) + fc.total();
}

// Per-count numerator of sigma over the common denominator 2g+1.
static int64_t signature_numerator(int g, const FiberCounts& fc) {
  int64_t gg = g;
  int64_t num = -(gg + 1) * fc.s0 - (2 * gg + 1) * fc.n_trivial;
  for (const auto& [h, n] : fc.s) {
    int64_t hh = h;
    num += (4 * hh * (gg - hh) - (2 * gg + 1)) * n;
  }
  return num;
}

int64_t signature_from_counts(int g, const FiberCounts& fc) {
  int64_t num = signature_numerator(g, fc);
  int64_t den = 2 * static_cast<int64_t>(g) + 1;
  if (num % den != 0)
    throw invariant_error("signature is not an integer: " + std::to_string(num) +
                          "/" + std::to_string(den) + " (mis-tagged fiber count?)");
  return num / den;
}

InvariantReport make_report(int g, const FiberCounts& fc, bool blowdown) {
  InvariantReport r;
  r.e = euler_characteristic(g, fc);
  r.sigma = signature_from_counts(g, fc);
  if (blowdown) {
    r.e -= fc.n_trivial;
    r.sigma += fc.n_trivial;
    r.blowdown_applied = true;
    r.blowdowns = fc.n_trivial;
  }
  r.c1sq = 2 * r.e + 3 * r.sigma;
  if ((r.e + r.sigma) % 4 != 0)
    throw invariant_error("e + sigma is not divisible by 4");
  r.chi = (r.e + r.sigma) / 4;
  return r;
}

static FiberCounts side_counts(const std::vector<Letter>& side, const CurveConfig& cfg) {
  Word w{std::make_shared<const CurveConfig>(cfg), side};
  return count_fibers(w);
}

std::pair<int64_t, int64_t> substitution_delta(const Relation& rel) {
  int g = rel.cfg->surface.genus;
  FiberCounts lhs = side_counts(rel.lhs, *rel.cfg);
  FiberCounts rhs = side_counts(rel.rhs, *rel.cfg);
  int64_t de = static_cast<int64_t>(rel.rhs.size()) - static_cast<int64_t>(rel.lhs.size());
  int64_t num = signature_numerator(g, rhs) - signature_numerator(g, lhs);
  int64_t den = 2 * static_cast<int64_t>(g) + 1;
  if (num % den != 0)
    throw invariant_error("substitution delta is not an integer for " + rel.name);
  int64_t ds = num / den;
  if (rel.deltas && (rel.deltas->first != de || rel.deltas->second != ds))
    throw invariant_error("computed deltas disagree with the stored pair for " + rel.name);
  return {de, ds};
}

InvariantReport surgery_invariants(const InvariantReport& before, int g) {
  int64_t gg = g;
  InvariantReport r = before;
  r.e -= 4 * gg * gg + 5 * gg;
  r.sigma += 2 * gg * gg + 3 * gg;
  r.c1sq -= gg * (2 * gg + 1);
  r.chi -= gg * (gg + 1) / 2;
  if (r.c1sq != 2 * r.e + 3 * r.sigma || 4 * r.chi != r.e + r.sigma)
    throw invariant_error("surgery deltas broke the linear relations");
  return r;
}

}  // namespace relator
