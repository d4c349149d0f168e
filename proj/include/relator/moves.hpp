// Legal moves on factorizations: commutation, braid, elementary transport,
// simultaneous conjugation, and the chain power identity.
#pragma once

#include <string>
#include <vector>

#include "relator/word.hpp"

namespace relator {

class move_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class MoveKind {
  commute,
  braid_forward,
  braid_backward,
  hurwitz_left,
  hurwitz_right,
  global_conjugate,
  power_collect,
};

std::string to_string(MoveKind k);
MoveKind move_kind_from_string(const std::string& s);

struct Move {
  MoveKind kind = MoveKind::commute;
  size_t pos = 0;                  // positional moves and power_collect window start
  std::vector<Letter> by;          // global_conjugate: conjugating word
  int rotate = 0;                  // global_conjugate: cyclic rotation variant
  std::vector<std::string> chain;  // power_collect: chain curve ids, length m
  int k = 0;                       // power_collect: split parameter, 1 <= k <= m-1
  bool reverse = false;            // power_collect: apply right-to-left
  std::string note;
};

// Both sides of the power identity over a chain t1..tm:
// (t1...tm)^{k+1} = (t1...tk)^{k+1} (t_{k+1}...t1) (t_{k+2}...t2) ... (tm...t_{m-k}).
// Both sides have m(k+1) letters and equal homology image.
std::pair<std::vector<Letter>, std::vector<Letter>> power_collect_sides(
    const std::vector<std::string>& chain, int k);

// Validates the chain pattern in cfg: consecutive counts 1, others 0.
void check_chain(const std::vector<std::string>& chain, const CurveConfig& cfg);

Word apply_move(const Word& w, const Move& m);
Word apply_script(Word w, const std::vector<Move>& script);

Move inverse_move(const Move& m);
std::vector<Move> invert_script(const std::vector<Move>& script);

// Legal single moves at every position, in the fixed enumeration order
// commute, braid_forward, braid_backward, hurwitz_right, hurwitz_left,
// rotate(1). Hurwitz transport is always legal away from the last index.
std::vector<Move> enumerate_moves(const Word& w);

}  // namespace relator
