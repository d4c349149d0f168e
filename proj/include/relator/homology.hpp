// Exact integer symplectic representation of twist words.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "relator/word.hpp"

namespace relator {

using bigint = boost::multiprecision::cpp_int;

// Square matrix of arbitrary-precision integers, row major.
class IntMatrix {
public:
  IntMatrix() = default;
  explicit IntMatrix(size_t n) : n_(n), a_(n * n) {}

  static IntMatrix identity(size_t n);
  // Standard symplectic form on basis x1..xg y1..yg: <x_i, y_i> = 1.
  static IntMatrix symplectic_form(size_t g);

  size_t dim() const { return n_; }
  bigint& at(size_t i, size_t j) { return a_[i * n_ + j]; }
  const bigint& at(size_t i, size_t j) const { return a_[i * n_ + j]; }

  IntMatrix operator*(const IntMatrix& o) const;
  bool operator==(const IntMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }

  IntMatrix transposed() const;
  IntMatrix negated() const;
  bool is_identity() const;
  std::string text() const;  // row-major decimal, rows separated by newlines

private:
  size_t n_ = 0;
  std::vector<bigint> a_;
};

// Action of a right-handed twist on homology: x -> x + <x, cls> cls.
IntMatrix transvection(const std::vector<int64_t>& cls);

IntMatrix letter_matrix(const Letter& l, const CurveConfig& cfg);
// Inverse computed structurally (transvections invert by sign flip).
IntMatrix letter_matrix_inverse(const Letter& l, const CurveConfig& cfg);

// Product of per-letter matrices in word order.
IntMatrix word_matrix(const Word& w);
IntMatrix word_matrix(const std::vector<Letter>& ls, const CurveConfig& cfg);

bool symplectic_check(const IntMatrix& m);

struct TrivialityResult {
  bool trivial = false;
  IntMatrix witness;  // the word's matrix when not trivial
};

TrivialityResult is_homologically_trivial(const Relator& r);

}  // namespace relator
