#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "relator/homology.hpp"

using namespace relator;

namespace {
Word wd(const std::string& text, int g) {
  return parse_word(text, standard_chain_config_ptr(g));
}
}  // namespace

TEST_CASE("transvection fixes its own class and shears the pairing") {
  // g = 1, v = x1: y1 -> y1 - x1? No: w -> w + <w, v> v with <x,y> = 1.
  IntMatrix t = transvection({1, 0});
  CHECK(t.dim() == 2);
  // columns act on basis vectors: x1 -> x1
  CHECK(t.at(0, 0) == 1);
  CHECK(t.at(1, 0) == 0);
  // y1 -> y1 + <y1, x1> x1 = y1 - x1
  CHECK(t.at(0, 1) == -1);
  CHECK(t.at(1, 1) == 1);
  CHECK(symplectic_check(t));

  // twist sign flips invert the matrix
  auto cfg = standard_chain_config_ptr(1);
  Word w = parse_word("c2 c2^-1", cfg);
  CHECK(word_matrix(w).is_identity());
}

TEST_CASE("opposite twists about the same class agree") {
  // the transvection depends on the class only through +/-v symmetry
  CHECK(transvection({1, 0}) == transvection({-1, 0}));
}

TEST_CASE("braid relation holds on homology") {
  CHECK(word_matrix(wd("c1 c2 c1", 2)) == word_matrix(wd("c2 c1 c2", 2)));
  CHECK(word_matrix(wd("c1 c3", 2)) == word_matrix(wd("c3 c1", 2)));
}

TEST_CASE("torus relators") {
  CHECK(word_matrix(wd("(c1 c2)^6", 1)).is_identity());
  CHECK(word_matrix(wd("(c1 c2)^3", 1)) == IntMatrix::identity(2).negated());
  CHECK(word_matrix(wd("(c1 c1 c2 c1)^3", 1)).is_identity());
  // t_{c1}^2 t_{c2} has trace zero, so its square is minus the identity and
  // its cube is minus itself: the period-3 power is not a relator.
  CHECK(word_matrix(wd("(c1 c1 c2)^2", 1)) == IntMatrix::identity(2).negated());
  TrivialityResult t = is_homologically_trivial(Relator{wd("(c1 c1 c2)^3", 1)});
  CHECK_FALSE(t.trivial);
  CHECK(t.witness == word_matrix(wd("c1 c1 c2", 1)).negated());
}

TEST_CASE("conjugated letters act by conjugated transvections") {
  Word plain = wd("c2", 2);
  Word conj = wd("(c1 . c2)", 2);
  IntMatrix p = word_matrix(wd("c1", 2));
  IntMatrix lhs = word_matrix(conj);
  IntMatrix expect = p * word_matrix(plain) * word_matrix(wd("c1^-1", 2));
  CHECK(lhs == expect);
  CHECK(symplectic_check(lhs));
}

TEST_CASE("word order matches matrix order") {
  Word u = wd("c1 c2", 2);
  IntMatrix m = word_matrix(wd("c1", 2)) * word_matrix(wd("c2", 2));
  CHECK(word_matrix(u) == m);
}

TEST_CASE("images are symplectic") {
  for (const char* text : {"c1 c2 c3", "(c1 c2)^4 c5^-1", "(c3 . c4) c1"}) {
    IntMatrix m = word_matrix(wd(text, 2));
    CHECK(symplectic_check(m));
  }
  // -I preserves the form; a shear that breaks the pairing does not
  CHECK(symplectic_check(IntMatrix::identity(4).negated()));
  IntMatrix shear = IntMatrix::identity(4);
  shear.at(0, 1) = 1;  // x1 -> x1, x2 -> x2 + x1 is not symplectic
  CHECK_FALSE(symplectic_check(shear));
}

TEST_CASE("structural inverse matches the algebraic inverse") {
  auto cfg = standard_chain_config_ptr(2);
  Word w = parse_word("(c1 . c2)", cfg);
  IntMatrix m = letter_matrix(w.letters[0], *cfg);
  IntMatrix mi = letter_matrix_inverse(w.letters[0], *cfg);
  CHECK((m * mi).is_identity());
}

TEST_CASE("matrix text is row-major decimal") {
  IntMatrix i = IntMatrix::identity(2);
  CHECK(i.text() == "1 0\n0 1");
}
