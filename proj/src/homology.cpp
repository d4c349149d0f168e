#include "relator/homology.hpp"

namespace relator {

IntMatrix IntMatrix::identity(size_t n) {
  IntMatrix m(n);
  for (size_t i = 0; i < n; i++) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::symplectic_form(size_t g) {
  IntMatrix j(2 * g);
  for (size_t i = 0; i < g; i++) {
    j.at(i, g + i) = 1;
    j.at(g + i, i) = -1;
  }
  return j;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (n_ != o.n_) throw word_error("matrix dimension mismatch");
  IntMatrix r(n_);
  for (size_t i = 0; i < n_; i++)
    for (size_t k = 0; k < n_; k++) {
      const bigint& aik = at(i, k);
      if (aik == 0) continue;
      for (size_t j = 0; j < n_; j++)
        r.at(i, j) += aik * o.at(k, j);
    }
  return r;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix r(n_);
  for (size_t i = 0; i < n_; i++)
    for (size_t j = 0; j < n_; j++)
      r.at(j, i) = at(i, j);
  return r;
}

IntMatrix IntMatrix::negated() const {
  IntMatrix r = *this;
  for (size_t i = 0; i < n_; i++)
    for (size_t j = 0; j < n_; j++)
      r.at(i, j) = -r.at(i, j);
  return r;
}

bool IntMatrix::is_identity() const { return *this == identity(n_); }

std::string IntMatrix::text() const {
  std::string s;
  for (size_t i = 0; i < n_; i++) {
    for (size_t j = 0; j < n_; j++) {
      if (j) s += ' ';
      s += at(i, j).str();
    }
    if (i + 1 < n_) s += '\n';
  }
  return s;
}

IntMatrix transvection(const std::vector<int64_t>& cls) {
  size_t n = cls.size();
  if (n == 0 || n % 2 != 0) throw word_error("class vector must have even length");
  size_t g = n / 2;
  // T = I + v (J v)^T, since <x, v> = x^T J v with <x_i, y_i> = +1.
  std::vector<int64_t> jv(n);
  for (size_t i = 0; i < g; i++) {
    jv[i] = cls[g + i];
    jv[g + i] = -cls[i];
  }
  IntMatrix t = IntMatrix::identity(n);
  for (size_t i = 0; i < n; i++) {
    if (cls[i] == 0) continue;
    for (size_t j = 0; j < n; j++)
      t.at(i, j) += bigint(cls[i]) * jv[j];
  }
  return t;
}

static IntMatrix transvection_signed(const std::vector<int64_t>& cls, int sign) {
  if (sign >= 0) return transvection(cls);
  // T^{-1}: x -> x - <x, v> v.
  size_t g = cls.size() / 2;
  IntMatrix t = IntMatrix::identity(cls.size());
  std::vector<int64_t> jv(cls.size());
  for (size_t i = 0; i < g; i++) {
    jv[i] = cls[g + i];
    jv[g + i] = -cls[i];
  }
  for (size_t i = 0; i < cls.size(); i++) {
    if (cls[i] == 0) continue;
    for (size_t j = 0; j < cls.size(); j++)
      t.at(i, j) -= bigint(cls[i]) * jv[j];
  }
  return t;
}

IntMatrix letter_matrix(const Letter& l, const CurveConfig& cfg) {
  IntMatrix core = transvection_signed(cfg.curve(l.base).cls, l.sign);
  if (l.conj.empty()) return core;
  IntMatrix p = word_matrix(l.conj, cfg);
  IntMatrix pinv = IntMatrix::identity(p.dim());
  for (auto it = l.conj.rbegin(); it != l.conj.rend(); ++it)
    pinv = pinv * letter_matrix_inverse(*it, cfg);
  return p * core * pinv;
}

IntMatrix letter_matrix_inverse(const Letter& l, const CurveConfig& cfg) {
  Letter inv = l.inverse();
  return letter_matrix(inv, cfg);
}

IntMatrix word_matrix(const std::vector<Letter>& ls, const CurveConfig& cfg) {
  IntMatrix m = IntMatrix::identity(2 * static_cast<size_t>(cfg.surface.genus));
  for (const Letter& l : ls)
    m = m * letter_matrix(l, cfg);
  return m;
}

IntMatrix word_matrix(const Word& w) {
  if (!w.cfg) throw word_error("word has no configuration");
  return word_matrix(w.letters, *w.cfg);
}

bool symplectic_check(const IntMatrix& m) {
  if (m.dim() % 2 != 0) return false;
  IntMatrix j = IntMatrix::symplectic_form(m.dim() / 2);
  return m.transposed() * j * m == j;
}

TrivialityResult is_homologically_trivial(const Relator& r) {
  TrivialityResult res;
  res.witness = word_matrix(r.word);
  res.trivial = res.witness.is_identity();
  return res;
}

}  // namespace relator
