// Signed, optionally conjugated twist generators and the word algebra on them.
#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "relator/config.hpp"

namespace relator {

class word_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// One generator t_{w(base)}^{sign}: the base curve pushed through the
// conjugator word w (outermost letter first).
struct Letter {
  std::string base;
  int sign = +1;
  std::vector<Letter> conj;

  bool operator==(const Letter& o) const {
    return base == o.base && sign == o.sign && conj == o.conj;
  }
  bool operator!=(const Letter& o) const { return !(*this == o); }
  bool plain() const { return conj.empty(); }
  Letter inverse() const { return Letter{base, -sign, conj}; }
};

struct Word {
  ConfigPtr cfg;
  std::vector<Letter> letters;

  size_t size() const { return letters.size(); }
  bool positive() const;
};

// A word asserted to equal the identity in the mapping class group.
struct Relator {
  Word word;
};

// All base ids reachable through a letter's conjugator tower.
std::set<std::string> support(const Letter& l);

// Prepend twist v to l's conjugator: free cancellation with the outermost
// letter, and a skip when v's support is pairwise disjoint from l's support
// in cfg (the twist then fixes the conjugated curve).
void prepend_conjugator(Letter& l, const Letter& v, const CurveConfig& cfg);

// Total order used by the normal form: base token, sign (+1 first),
// conjugator length, then conjugator letters recursively.
int compare_letters(const Letter& a, const Letter& b);

void free_reduce(std::vector<Letter>& ls);

Word compose(const Word& u, const Word& v);
Word invert(const Word& u);
Word conjugate(const Word& u, const Word& by);
Word power(const Word& u, int n);

// Lexicographically least cyclic rotation of the freely reduced word.
Word relator_normal_form(const Relator& r);

// Canonical flat text: id, id^-1, (w . id), (w . id)^-1.
std::string letter_text(const Letter& l);
std::string word_text(const Word& w);
std::string word_text(const std::vector<Letter>& ls);

// Parse the word syntax: ids, powers id^n, groups (w)^n, conjugated letters
// (w . id)^n. Ids are resolved through the config's aliases.
Word parse_word(const std::string& text, ConfigPtr cfg);

Word make_word(ConfigPtr cfg, std::vector<Letter> ls);
Letter plain_letter(const std::string& id, int sign = +1);

}  // namespace relator
