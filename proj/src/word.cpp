#include "relator/word.hpp"

#include <algorithm>
#include <cctype>

namespace relator {

bool Word::positive() const {
  return std::all_of(letters.begin(), letters.end(),
                     [](const Letter& l) { return l.sign == +1; });
}

std::set<std::string> support(const Letter& l) {
  std::set<std::string> s{l.base};
  for (const Letter& c : l.conj) {
    auto cs = support(c);
    s.insert(cs.begin(), cs.end());
  }
  return s;
}

static bool supports_disjoint(const std::set<std::string>& a,
                              const std::set<std::string>& b,
                              const CurveConfig& cfg) {
  for (const auto& u : a)
    for (const auto& v : b)
      if (cfg.count(u, v) != 0) return false;
  return true;
}

void prepend_conjugator(Letter& l, const Letter& v, const CurveConfig& cfg) {
  if (!l.conj.empty() && l.conj.front() == v.inverse()) {
    l.conj.erase(l.conj.begin());
    return;
  }
  if (supports_disjoint(support(v), support(l), cfg)) return;
  l.conj.insert(l.conj.begin(), v);
}

int compare_letters(const Letter& a, const Letter& b) {
  if (a.base != b.base) return a.base < b.base ? -1 : 1;
  if (a.sign != b.sign) return a.sign > b.sign ? -1 : 1;  // +1 sorts first
  if (a.conj.size() != b.conj.size())
    return a.conj.size() < b.conj.size() ? -1 : 1;
  for (size_t i = 0; i < a.conj.size(); i++)
    if (int c = compare_letters(a.conj[i], b.conj[i]); c != 0) return c;
  return 0;
}

void free_reduce(std::vector<Letter>& ls) {
  std::vector<Letter> out;
  for (auto& l : ls) {
    if (!out.empty() && out.back() == l.inverse())
      out.pop_back();
    else
      out.push_back(std::move(l));
  }
  ls = std::move(out);
}

static void check_same_config(const Word& u, const Word& v) {
  if (u.cfg && v.cfg && u.cfg != v.cfg && u.cfg->name != v.cfg->name)
    throw word_error("words live over different configurations");
}

Word compose(const Word& u, const Word& v) {
  check_same_config(u, v);
  Word w{u.cfg ? u.cfg : v.cfg, u.letters};
  w.letters.insert(w.letters.end(), v.letters.begin(), v.letters.end());
  free_reduce(w.letters);
  return w;
}

Word invert(const Word& u) {
  Word w{u.cfg, {}};
  w.letters.reserve(u.letters.size());
  for (auto it = u.letters.rbegin(); it != u.letters.rend(); ++it)
    w.letters.push_back(it->inverse());
  return w;
}

Word conjugate(const Word& u, const Word& by) {
  check_same_config(u, by);
  Word w = u;
  for (Letter& l : w.letters)
    for (auto it = by.letters.rbegin(); it != by.letters.rend(); ++it)
      prepend_conjugator(l, *it, *w.cfg);
  return w;
}

Word power(const Word& u, int n) {
  Word base = n < 0 ? invert(u) : u;
  int reps = n < 0 ? -n : n;
  Word w{u.cfg, {}};
  for (int i = 0; i < reps; i++)
    w = compose(w, base);
  return w;
}

Word relator_normal_form(const Relator& r) {
  Word w = r.word;
  free_reduce(w.letters);
  size_t n = w.letters.size();
  if (n == 0) return w;
  auto less_rotation = [&](size_t a, size_t b) {
    for (size_t i = 0; i < n; i++) {
      int c = compare_letters(w.letters[(a + i) % n], w.letters[(b + i) % n]);
      if (c != 0) return c < 0;
    }
    return false;
  };
  size_t best = 0;
  for (size_t i = 1; i < n; i++)
    if (less_rotation(i, best)) best = i;
  Word out{w.cfg, {}};
  out.letters.reserve(n);
  for (size_t i = 0; i < n; i++)
    out.letters.push_back(w.letters[(best + i) % n]);
  return out;
}

std::string letter_text(const Letter& l) {
  std::string s;
  if (l.conj.empty()) {
    s = l.base;
  } else {
    s = "(" + word_text(l.conj) + " . " + l.base + ")";
  }
  if (l.sign < 0) s += "^-1";
  return s;
}

std::string word_text(const std::vector<Letter>& ls) {
  std::string s;
  for (const Letter& l : ls) {
    if (!s.empty()) s += ' ';
    s += letter_text(l);
  }
  return s;
}

std::string word_text(const Word& w) { return word_text(w.letters); }

namespace {

struct Parser {
  const std::string& text;
  size_t pos = 0;
  const CurveConfig& cfg;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      pos++;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw word_error("parse error at offset " + std::to_string(pos) + ": " + msg);
  }
  std::string ident() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      pos++;
    if (pos == start) fail("expected a curve id");
    return text.substr(start, pos - start);
  }
  int integer() {
    skip_ws();
    size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) pos++;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      pos++;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
      fail("expected an integer exponent");
    return std::stoi(text.substr(start, pos - start));
  }
  int exponent() {
    if (peek() == '^') {
      pos++;
      return integer();
    }
    return 1;
  }

  std::vector<Letter> word(bool stop_at_dot) {
    std::vector<Letter> out;
    while (!eof()) {
      char c = peek();
      if (c == ')') break;
      if (c == '.' && stop_at_dot) break;
      std::vector<Letter> item = atom();
      int n = exponent();
      append_power(out, item, n);
    }
    free_reduce(out);
    return out;
  }

  std::vector<Letter> atom() {
    if (peek() == '(') {
      pos++;
      std::vector<Letter> inner = word(true);
      if (peek() == '.') {
        pos++;
        std::string id = ident();
        std::string r = cfg.resolve(id);
        if (r.empty()) fail("unknown curve id: " + id);
        if (peek() != ')') fail("expected ')'");
        pos++;
        if (inner.empty()) return {Letter{r, +1, {}}};
        return {Letter{r, +1, inner}};
      }
      if (peek() != ')') fail("expected ')'");
      pos++;
      return inner;
    }
    std::string id = ident();
    std::string r = cfg.resolve(id);
    if (r.empty()) fail("unknown curve id: " + id);
    return {Letter{r, +1, {}}};
  }

  static void append_power(std::vector<Letter>& out, const std::vector<Letter>& item,
                           int n) {
    if (n == 0) return;
    std::vector<Letter> unit = item;
    if (n < 0) {
      std::reverse(unit.begin(), unit.end());
      for (Letter& l : unit) l.sign = -l.sign;
      n = -n;
    }
    for (int i = 0; i < n; i++)
      out.insert(out.end(), unit.begin(), unit.end());
  }
};

}  // namespace

Word parse_word(const std::string& text, ConfigPtr cfg) {
  if (!cfg) throw word_error("parse_word needs a configuration");
  Parser p{text, 0, *cfg};
  std::vector<Letter> ls = p.word(false);
  if (!p.eof()) p.fail("trailing input");
  return Word{std::move(cfg), std::move(ls)};
}

Word make_word(ConfigPtr cfg, std::vector<Letter> ls) {
  return Word{std::move(cfg), std::move(ls)};
}

Letter plain_letter(const std::string& id, int sign) { return Letter{id, sign, {}}; }

}  // namespace relator
