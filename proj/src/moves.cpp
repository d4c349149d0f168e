#include "relator/moves.hpp"

#include <algorithm>

namespace relator {

std::string to_string(MoveKind k) {
  switch (k) {
    case MoveKind::commute: return "commute";
    case MoveKind::braid_forward: return "braid_forward";
    case MoveKind::braid_backward: return "braid_backward";
    case MoveKind::hurwitz_left: return "hurwitz_left";
    case MoveKind::hurwitz_right: return "hurwitz_right";
    case MoveKind::global_conjugate: return "global_conjugate";
    case MoveKind::power_collect: return "power_collect";
  }
  return "unknown";
}

MoveKind move_kind_from_string(const std::string& s) {
  if (s == "commute") return MoveKind::commute;
  if (s == "braid_forward") return MoveKind::braid_forward;
  if (s == "braid_backward") return MoveKind::braid_backward;
  if (s == "hurwitz_left") return MoveKind::hurwitz_left;
  if (s == "hurwitz_right") return MoveKind::hurwitz_right;
  if (s == "global_conjugate") return MoveKind::global_conjugate;
  if (s == "power_collect") return MoveKind::power_collect;
  throw move_error("unknown move kind: " + s);
}

void check_chain(const std::vector<std::string>& chain, const CurveConfig& cfg) {
  if (chain.empty()) throw move_error("empty chain");
  for (const auto& id : chain)
    if (!cfg.has(id)) throw move_error("chain curve not in configuration: " + id);
  for (size_t i = 0; i < chain.size(); i++)
    for (size_t j = i + 1; j < chain.size(); j++) {
      int expect = (j == i + 1) ? 1 : 0;
      if (cfg.count(chain[i], chain[j]) != expect)
        throw move_error("ids do not form a chain: " + chain[i] + ", " + chain[j]);
    }
}

std::pair<std::vector<Letter>, std::vector<Letter>> power_collect_sides(
    const std::vector<std::string>& chain, int k) {
  int m = static_cast<int>(chain.size());
  if (k < 1 || k >= m) throw move_error("power parameter out of range");
  std::vector<Letter> lhs, rhs;
  for (int rep = 0; rep <= k; rep++)
    for (int i = 0; i < m; i++)
      lhs.push_back(plain_letter(chain[static_cast<size_t>(i)]));
  for (int rep = 0; rep <= k; rep++)
    for (int i = 0; i < k; i++)
      rhs.push_back(plain_letter(chain[static_cast<size_t>(i)]));
  for (int j = k; j < m; j++)
    for (int i = j; i >= j - k; i--)
      rhs.push_back(plain_letter(chain[static_cast<size_t>(i)]));
  return {std::move(lhs), std::move(rhs)};
}

static bool identical_conjugators(const Letter& a, const Letter& b) {
  return a.conj == b.conj;
}

static Word with_letters(const Word& w, std::vector<Letter> ls) {
  return Word{w.cfg, std::move(ls)};
}

static void check_pos(const Word& w, size_t pos, size_t span) {
  if (pos + span > w.letters.size())
    throw move_error("position out of bounds");
}

static Word apply_commute(const Word& w, size_t i) {
  check_pos(w, i, 2);
  const Letter& a = w.letters[i];
  const Letter& b = w.letters[i + 1];
  if (!identical_conjugators(a, b))
    throw move_error("commute needs identical conjugators");
  if (w.cfg->count(a.base, b.base) != 0)
    throw move_error("commute needs disjoint curves");
  auto ls = w.letters;
  std::swap(ls[i], ls[i + 1]);
  return with_letters(w, std::move(ls));
}

static Word apply_braid(const Word& w, size_t i) {
  check_pos(w, i, 3);
  const Letter& a = w.letters[i];
  const Letter& b = w.letters[i + 1];
  if (w.letters[i + 2] != a)
    throw move_error("braid needs the pattern x y x");
  if (a.sign != b.sign || !identical_conjugators(a, b))
    throw move_error("braid needs matching signs and conjugators");
  if (w.cfg->count(a.base, b.base) != 1)
    throw move_error("braid needs curves meeting once");
  auto ls = w.letters;
  ls[i] = b;
  ls[i + 1] = a;
  ls[i + 2] = b;
  return with_letters(w, std::move(ls));
}

static Word apply_hurwitz_right(const Word& w, size_t i) {
  check_pos(w, i, 2);
  auto ls = w.letters;
  Letter a = ls[i];
  Letter b = ls[i + 1];
  prepend_conjugator(b, a, *w.cfg);
  ls[i] = std::move(b);
  ls[i + 1] = std::move(a);
  return with_letters(w, std::move(ls));
}

static Word apply_hurwitz_left(const Word& w, size_t i) {
  check_pos(w, i, 2);
  auto ls = w.letters;
  Letter a = ls[i];
  Letter b = ls[i + 1];
  prepend_conjugator(a, b.inverse(), *w.cfg);
  ls[i] = std::move(b);
  ls[i + 1] = std::move(a);
  return with_letters(w, std::move(ls));
}

static Word apply_global_conjugate(const Word& w, const Move& m) {
  if (m.rotate != 0) {
    size_t n = w.letters.size();
    if (n == 0) return w;
    long r = m.rotate % static_cast<long>(n);
    if (r < 0) r += static_cast<long>(n);
    auto ls = w.letters;
    std::rotate(ls.begin(), ls.begin() + r, ls.end());
    return with_letters(w, std::move(ls));
  }
  return conjugate(w, Word{w.cfg, m.by});
}

static Word apply_power_collect(const Word& w, const Move& m) {
  check_chain(m.chain, *w.cfg);
  auto [lhs, rhs] = power_collect_sides(m.chain, m.k);
  const auto& from = m.reverse ? rhs : lhs;
  const auto& to = m.reverse ? lhs : rhs;
  check_pos(w, m.pos, from.size());
  for (size_t i = 0; i < from.size(); i++)
    if (w.letters[m.pos + i] != from[i])
      throw move_error("window does not match the power identity side");
  auto ls = w.letters;
  ls.erase(ls.begin() + static_cast<long>(m.pos),
           ls.begin() + static_cast<long>(m.pos + from.size()));
  ls.insert(ls.begin() + static_cast<long>(m.pos), to.begin(), to.end());
  return with_letters(w, std::move(ls));
}

Word apply_move(const Word& w, const Move& m) {
  switch (m.kind) {
    case MoveKind::commute: return apply_commute(w, m.pos);
    case MoveKind::braid_forward:
    case MoveKind::braid_backward: return apply_braid(w, m.pos);
    case MoveKind::hurwitz_left: return apply_hurwitz_left(w, m.pos);
    case MoveKind::hurwitz_right: return apply_hurwitz_right(w, m.pos);
    case MoveKind::global_conjugate: return apply_global_conjugate(w, m);
    case MoveKind::power_collect: return apply_power_collect(w, m);
  }
  throw move_error("unknown move kind");
}

Word apply_script(Word w, const std::vector<Move>& script) {
  for (const Move& m : script)
    w = apply_move(w, m);
  return w;
}

Move inverse_move(const Move& m) {
  Move inv = m;
  switch (m.kind) {
    case MoveKind::commute:
    case MoveKind::braid_forward:
    case MoveKind::braid_backward:
      if (m.kind == MoveKind::braid_forward) inv.kind = MoveKind::braid_backward;
      if (m.kind == MoveKind::braid_backward) inv.kind = MoveKind::braid_forward;
      break;
    case MoveKind::hurwitz_left:
      inv.kind = MoveKind::hurwitz_right;
      break;
    case MoveKind::hurwitz_right:
      inv.kind = MoveKind::hurwitz_left;
      break;
    case MoveKind::global_conjugate:
      if (m.rotate != 0) {
        inv.rotate = -m.rotate;
      } else {
        std::reverse(inv.by.begin(), inv.by.end());
        for (Letter& l : inv.by) l.sign = -l.sign;
      }
      break;
    case MoveKind::power_collect:
      inv.reverse = !m.reverse;
      break;
  }
  return inv;
}

std::vector<Move> invert_script(const std::vector<Move>& script) {
  std::vector<Move> out;
  out.reserve(script.size());
  for (auto it = script.rbegin(); it != script.rend(); ++it)
    out.push_back(inverse_move(*it));
  return out;
}

std::vector<Move> enumerate_moves(const Word& w) {
  std::vector<Move> out;
  size_t n = w.letters.size();
  auto try_push = [&](MoveKind kind, size_t pos) {
    Move m;
    m.kind = kind;
    m.pos = pos;
    try {
      apply_move(w, m);
    } catch (const move_error&) {
      return;
    }
    out.push_back(std::move(m));
  };
  for (size_t i = 0; i + 1 < n; i++) try_push(MoveKind::commute, i);
  for (size_t i = 0; i + 2 < n; i++) try_push(MoveKind::braid_forward, i);
  for (size_t i = 0; i + 2 < n; i++) try_push(MoveKind::braid_backward, i);
  for (size_t i = 0; i + 1 < n; i++) try_push(MoveKind::hurwitz_right, i);
  for (size_t i = 0; i + 1 < n; i++) try_push(MoveKind::hurwitz_left, i);
  if (n > 1) {
    Move m;
    m.kind = MoveKind::global_conjugate;
    m.rotate = 1;
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace relator
