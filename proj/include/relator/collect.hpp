// Searches for move scripts that bring a target subword together.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "relator/moves.hpp"
#include "relator/word.hpp"

namespace relator {

struct CollectResult {
  bool found = false;
  std::vector<Move> script;
  size_t index = 0;  // start of the collected block after applying script
};

// Finds a script of elementary moves after which `pattern` appears as a
// contiguous block of plain positive letters.  Tries, in order: the pattern
// is already contiguous; a greedy subsequence match whose interleaved
// letters are pushed right past the matched ones; a breadth-first search
// over elementary moves bounded by `budget` explored states.
CollectResult collect_subword(const Word& w, const std::vector<std::string>& pattern,
                              size_t budget = 1000000);

// Index of the leftmost contiguous plain positive occurrence, or npos.
size_t find_plain_block(const Word& w, const std::vector<std::string>& pattern);

}  // namespace relator
