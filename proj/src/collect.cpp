#include "relator/collect.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <unordered_set>

namespace relator {

static bool plain_positive(const Letter& l, const std::string& base) {
  return l.plain() && l.sign > 0 && l.base == base;
}

size_t find_plain_block(const Word& w, const std::vector<std::string>& pattern) {
  if (pattern.empty() || pattern.size() > w.letters.size())
    return std::string::npos;
  for (size_t i = 0; i + pattern.size() <= w.letters.size(); i++) {
    bool ok = true;
    for (size_t j = 0; j < pattern.size(); j++)
      if (!plain_positive(w.letters[i + j], pattern[j])) {
        ok = false;
        break;
      }
    if (ok) return i;
  }
  return std::string::npos;
}

// Greedy leftmost subsequence match; interleaved letters are moved right
// past the matched ones (rightmost first), each acquiring the inverse of
// the matched letters it crosses as a conjugator.
static CollectResult greedy_evict(const Word& w, const std::vector<std::string>& pattern) {
  CollectResult res;
  std::vector<size_t> match;
  match.reserve(pattern.size());
  for (size_t i = 0; i < w.letters.size() && match.size() < pattern.size(); i++)
    if (plain_positive(w.letters[i], pattern[match.size()]))
      match.push_back(i);
  if (match.size() < pattern.size()) return res;

  Word cur = w;
  std::vector<char> matched(cur.letters.size(), 0);
  for (size_t p : match) matched[p] = 1;
  size_t first = match.front();
  size_t last = match.back();
  for (size_t p = last; p-- > first;) {
    if (matched[p]) continue;
    size_t q = p;
    while (true) {
      size_t top = q;
      bool more = false;
      for (size_t t = q + 1; t < matched.size(); t++)
        if (matched[t]) {
          more = true;
          break;
        }
      if (!more) break;
      Move m;
      m.kind = MoveKind::hurwitz_left;
      m.pos = top;
      cur = apply_move(cur, m);
      res.script.push_back(std::move(m));
      std::swap(matched[q], matched[q + 1]);
      q++;
    }
  }
  size_t idx = find_plain_block(cur, pattern);
  if (idx == std::string::npos) return CollectResult{};
  res.found = true;
  res.index = idx;
  return res;
}

static CollectResult bounded_search(const Word& w, const std::vector<std::string>& pattern,
                                    size_t budget) {
  struct Node {
    Word word;
    size_t parent;
    Move move;
  };
  std::vector<Node> nodes;
  std::unordered_set<std::string> seen;
  std::deque<size_t> queue;
  nodes.push_back({w, std::numeric_limits<size_t>::max(), Move{}});
  seen.insert(word_text(w));
  queue.push_back(0);
  size_t explored = 0;
  while (!queue.empty() && explored < budget) {
    size_t id = queue.front();
    queue.pop_front();
    explored++;
    Word cur = nodes[id].word;
    size_t idx = find_plain_block(cur, pattern);
    if (idx != std::string::npos) {
      CollectResult res;
      res.found = true;
      res.index = idx;
      for (size_t n = id; n != 0; n = nodes[n].parent)
        res.script.push_back(nodes[n].move);
      std::reverse(res.script.begin(), res.script.end());
      return res;
    }
    for (const Move& m : enumerate_moves(cur)) {
      Word next = apply_move(cur, m);
      if (seen.insert(word_text(next)).second) {
        nodes.push_back({std::move(next), id, m});
        queue.push_back(nodes.size() - 1);
      }
    }
  }
  return CollectResult{};
}

CollectResult collect_subword(const Word& w, const std::vector<std::string>& pattern,
                              size_t budget) {
  if (pattern.empty()) throw move_error("empty pattern");
  for (const auto& id : pattern)
    if (!w.cfg->has(id))
      throw move_error("pattern curve not in configuration: " + id);
  size_t idx = find_plain_block(w, pattern);
  if (idx != std::string::npos) {
    CollectResult res;
    res.found = true;
    res.index = idx;
    return res;
  }
  CollectResult res = greedy_evict(w, pattern);
  if (res.found) return res;
  return bounded_search(w, pattern, budget);
}

}  // namespace relator
