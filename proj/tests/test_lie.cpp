#include <random>

#include "doctest.h"
#include "emkv/lie.hpp"
#include "emkv/suites.hpp"

using namespace emkv;

namespace {

// Independent Moebius-count oracle for the number of Lyndon words.
long necklace_count(int n, int d) {
  auto mu = [](int m) {
    int result = 1;
    for (int p = 2; p * p <= m; ++p) {
      if (m % p == 0) {
        m /= p;
        if (m % p == 0) return 0;
        result = -result;
      }
    }
    if (m > 1) result = -result;
    return result;
  };
  long total = 0;
  for (int e = 1; e <= d; ++e) {
    if (d % e) continue;
    long pw = 1;
    for (int i = 0; i < d / e; ++i) pw *= n;
    total += mu(e) * pw;
  }
  return total / d;
}

LiePoly lie(const std::string& s) { return LiePoly::monomial(2, parse_word(s, 2)); }

// Oracle route for the bracket: expand to ass_n, commutator, extract.
LiePoly bracket_via_expansion(const LiePoly& a, const LiePoly& b) {
  return lie_from_primitive(bracket(expand(a), expand(b)));
}

}  // namespace

TEST_CASE("lyndon word enumeration") {
  auto w21 = lyndon_words(2, 1);
  REQUIRE(w21.size() == 2);
  CHECK(render_word(w21[0], 2) == "x");
  CHECK(render_word(w21[1], 2) == "y");

  auto w23 = lyndon_words(2, 3);
  REQUIRE(w23.size() == 2);
  CHECK(render_word(w23[0], 2) == "xxy");
  CHECK(render_word(w23[1], 2) == "xyy");

  CHECK(lyndon_words(2, 5).size() == 6);  // (2^5 - 2)/5

  // dim lie_2 by degree: 2, 1, 2, 3, 6, 9, 18, 30
  const size_t expected[] = {2, 1, 2, 3, 6, 9, 18, 30};
  for (int d = 1; d <= 8; ++d) {
    auto words = lyndon_words(2, d);
    CHECK(words.size() == expected[d - 1]);
    CHECK(static_cast<long>(words.size()) == necklace_count(2, d));
    for (const Word& w : words) CHECK(is_lyndon(w));
    CHECK(std::is_sorted(words.begin(), words.end()));
  }
  for (int d = 1; d <= 6; ++d)
    CHECK(static_cast<long>(lyndon_words(3, d).size()) == necklace_count(3, d));
}

TEST_CASE("standard factorization") {
  auto [u, v] = std_factorization(parse_word("xxy", 2));
  CHECK(render_word(u, 2) == "x");
  CHECK(render_word(v, 2) == "xy");
  auto [u2, v2] = std_factorization(parse_word("xyy", 2));
  CHECK(render_word(u2, 2) == "xy");
  CHECK(render_word(v2, 2) == "y");
}

TEST_CASE("explicit bracketing rendering") {
  CHECK(render_bracketing(parse_word("x", 2), 2) == "x");
  CHECK(render_bracketing(parse_word("xxy", 2), 2) == "[x,[x,y]]");
  CHECK(render_bracketing(parse_word("xyy", 2), 2) == "[[x,y],y]");
  CHECK(render_bracketing(parse_word("xxyxy", 2), 2) == "[[x,[x,y]],[x,y]]");
  CHECK_THROWS(render_bracketing(parse_word("yx", 2), 2));
}

TEST_CASE("bracket basics") {
  LiePoly x = LiePoly::gen(2, 0), y = LiePoly::gen(2, 1);
  CHECK(bracket(x, x).is_zero());
  CHECK(bracket(x, y) == lie("xy"));
  CHECK(bracket(bracket(x, y), x) == Rational(-1) * lie("xxy"));
}

TEST_CASE("expansion") {
  CHECK(expand(lie("xy")) == NCPoly::monomial(2, parse_word("xy", 2)) -
                                 NCPoly::monomial(2, parse_word("yx", 2)));
  NCPoly e = expand(lie("xxy"));
  NCPoly expected = NCPoly::monomial(2, parse_word("xxy", 2)) -
                    Rational(2) * NCPoly::monomial(2, parse_word("xyx", 2)) +
                    NCPoly::monomial(2, parse_word("yxx", 2));
  CHECK(e == expected);
  CHECK(expand(Rational(3) * LiePoly::gen(2, 0)) ==
        Rational(3) * NCPoly::gen(2, 0));
}

TEST_CASE("lie_from_primitive") {
  NCPoly com = NCPoly::monomial(2, parse_word("xy", 2)) - NCPoly::monomial(2, parse_word("yx", 2));
  CHECK(lie_from_primitive(com) == lie("xy"));
  CHECK(lie_from_primitive(expand(lie("xxy"))) == lie("xxy"));
  CHECK_THROWS_AS(lie_from_primitive(NCPoly::monomial(2, parse_word("xy", 2))),
                  NotPrimitiveError);
}

TEST_CASE("round trips and primitivity of expansions") {
  Rng rng(11);
  for (int d = 1; d <= 7; ++d) {
    LiePoly u = random_lie(rng, 2, d);
    NCPoly e = expand(u);
    CHECK(is_primitive(e));
    CHECK(lie_from_primitive(e) == u);
  }
  for (int d = 1; d <= 5; ++d) {
    LiePoly u = random_lie(rng, 3, d);
    CHECK(lie_from_primitive(expand(u)) == u);
  }
}

TEST_CASE("bracket agrees with the expansion oracle") {
  Rng rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    int n = trial % 2 ? 3 : 2;
    int da = 1 + static_cast<int>(rng() % 4), db = 1 + static_cast<int>(rng() % 4);
    LiePoly a = random_lie(rng, n, da), b = random_lie(rng, n, db);
    CHECK(bracket(a, b) == bracket_via_expansion(a, b));
  }
}

TEST_CASE("jacobi identity on random triples") {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    int n = trial % 2 ? 3 : 2;
    LiePoly a = random_lie(rng, n, 1 + static_cast<int>(rng() % 5));
    LiePoly b = random_lie(rng, n, 1 + static_cast<int>(rng() % 5));
    LiePoly c = random_lie(rng, n, 1 + static_cast<int>(rng() % 5));
    LiePoly jac = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) +
                  bracket(c, bracket(a, b));
    CHECK(jac.is_zero());
  }
}

TEST_CASE("substitute is a Lie homomorphism") {
  LiePoly x = LiePoly::gen(2, 0), y = LiePoly::gen(2, 1);
  // [x,y] with images (y, x) gives [y,x] = -[x,y].
  std::vector<LiePoly> swap{y, x};
  CHECK(substitute(lie("xy"), swap) == Rational(-1) * lie("xy"));
  // x with images (-x-y, y) gives -x-y.
  std::vector<LiePoly> first{Rational(-1) * (x + y), y};
  CHECK(substitute(LiePoly::gen(2, 0), first) == Rational(-1) * (x + y));

  Rng rng(31);
  for (int trial = 0; trial < 15; ++trial) {
    LiePoly u = random_lie(rng, 2, 1 + static_cast<int>(rng() % 3));
    LiePoly v = random_lie(rng, 2, 1 + static_cast<int>(rng() % 3));
    std::vector<LiePoly> imgs{random_lie(rng, 2, 1 + static_cast<int>(rng() % 2)),
                              random_lie(rng, 2, 1 + static_cast<int>(rng() % 2))};
    CHECK(substitute(bracket(u, v), imgs) ==
          bracket(substitute(u, imgs), substitute(v, imgs)));
  }
  CHECK_THROWS(substitute(lie("xy"), std::vector<LiePoly>{x}));
}

TEST_CASE("fox derivatives of Lie elements") {
  CHECK(fox_left(lie("xy"), 0) == -NCPoly::gen(2, 1));
  CHECK(fox_left(lie("xy"), 1) == NCPoly::gen(2, 0));
  CHECK(fox_right(lie("xy"), 0) == NCPoly::gen(2, 1));

  Rng rng(13);
  for (int trial = 0; trial < 15; ++trial) {
    int n = trial % 2 ? 3 : 2;
    LiePoly u = random_lie(rng, n, 1 + static_cast<int>(rng() % 5));
    LiePoly v = random_lie(rng, n, 1 + static_cast<int>(rng() % 5));
    NCPoly eu = expand(u), ev = expand(v);
    for (int i = 0; i < n; ++i) {
      CHECK(fox_left(bracket(u, v), i) == eu * fox_left(ev, i) - ev * fox_left(eu, i));
    }
  }
}
