// Fiber counts and the topological invariants of the fibration a positive
// relator defines: e, the Endo signature, c1^2, and the holomorphic chi.
#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "relator/relations.hpp"
#include "relator/word.hpp"

namespace relator {

class invariant_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct FiberCounts {
  int64_t s0 = 0;                // nonseparating vanishing cycles
  std::map<int, int64_t> s;      // h -> separating cycles of type h
  int64_t n_trivial = 0;         // nullhomotopic cycles

  int64_t total() const;
  bool operator==(const FiberCounts& o) const {
    return s0 == o.s0 && s == o.s && n_trivial == o.n_trivial;
  }
};

// Tallies base-curve separation types; conjugated letters inherit the base's
// type. Requires a positive word.
FiberCounts count_fibers(const Word& w);

// e = 2(2 - 2g) + total fiber count.
int64_t euler_characteristic(int g, const FiberCounts& fc);

// sigma = -(g+1)/(2g+1) s0 + sum_h (4h(g-h)/(2g+1) - 1) s_h - n_trivial for
// hyperelliptic relators, computed exactly; throws when not an integer.
int64_t signature_from_counts(int g, const FiberCounts& fc);

struct InvariantReport {
  int64_t e = 0;
  int64_t sigma = 0;
  int64_t c1sq = 0;
  int64_t chi = 0;
  bool blowdown_applied = false;
  int64_t blowdowns = 0;
};

// Assembles e, sigma, c1^2 = 2e + 3 sigma, chi = (e + sigma)/4. blowdown
// removes each nullhomotopic cycle as a (-1)-sphere: e -= n, sigma += n.
InvariantReport make_report(int g, const FiberCounts& fc, bool blowdown);

// (de, dsigma) of applying the relation forward, from its per-letter fiber
// terms. Checked against the relation's stored deltas when present.
std::pair<int64_t, int64_t> substitution_delta(const Relation& rel);

// Rational blowdown along one of the configurations with three disjoint
// sections: e -= 4g^2+5g, sigma += 2g^2+3g, c1^2 -= g(2g+1),
// chi -= g(g+1)/2, re-verifying internal consistency.
InvariantReport surgery_invariants(const InvariantReport& before, int g);

}  // namespace relator
