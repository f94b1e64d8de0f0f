#include <random>

#include "doctest.h"
#include "emkv/rational.hpp"

using namespace emkv;

namespace {

QMatrix make(int r, int c, std::initializer_list<long> vals) {
  QMatrix m(r, c);
  auto it = vals.begin();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = Rational(*it++);
  return m;
}

}  // namespace

TEST_CASE("rational canonical form") {
  CHECK(Rational(2, 6) == Rational(1, 3));
  CHECK(Rational(-2, -6) == Rational(1, 3));
  CHECK(Rational(2, -6) == Rational(-1, 3));
  CHECK(Rational(0, 5) == Rational(0));
  CHECK((Rational(1, 3) + Rational(2, 6)) == Rational(2, 3));
  CHECK(Rational("7/21") == Rational(1, 3));
  CHECK(Rational(3, 2).str() == "3/2");
  CHECK(Rational(-4).str() == "-4");
  CHECK_THROWS(Rational(1, 0));
  CHECK_THROWS(Rational(1) / Rational(0));
}

TEST_CASE("rref of a rank-one matrix") {
  QMatrix m = make(2, 2, {1, 2, 2, 4});
  RrefResult r = rref(m);
  CHECK(r.pivots == std::vector<int>{0});
  CHECK(r.matrix == make(2, 2, {1, 2, 0, 0}));
}

TEST_CASE("rref fixes the identity and zero matrices") {
  QMatrix id = make(3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1});
  RrefResult r = rref(id);
  CHECK(r.matrix == id);
  CHECK(r.pivots == std::vector<int>{0, 1, 2});

  QMatrix zero(2, 3);
  RrefResult z = rref(zero);
  CHECK(z.matrix == zero);
  CHECK(z.pivots.empty());
}

TEST_CASE("kernel of a single relation") {
  QMatrix m = make(1, 2, {1, 1});
  auto basis = kernel_basis(m);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0] == std::vector<Rational>{Rational(-1), Rational(1)});
}

TEST_CASE("kernel trivial and full cases") {
  CHECK(kernel_basis(make(2, 2, {1, 0, 0, 1})).empty());
  auto full = kernel_basis(make(1, 2, {0, 0}));
  CHECK(full.size() == 2);
}

TEST_CASE("kernel vectors annihilate the matrix, rank-nullity, rref idempotent") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> val(-4, 4);
  for (int trial = 0; trial < 30; ++trial) {
    int r = 1 + static_cast<int>(rng() % 5), c = 1 + static_cast<int>(rng() % 6);
    QMatrix m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m.at(i, j) = Rational(val(rng));

    auto basis = kernel_basis(m);
    CHECK(rank(m) + static_cast<int>(basis.size()) == c);
    for (const auto& v : basis) {
      for (int i = 0; i < r; ++i) {
        Rational dot(0);
        for (int j = 0; j < c; ++j) dot += m.at(i, j) * v[j];
        CHECK(dot.is_zero());
      }
    }
    RrefResult once = rref(m);
    RrefResult twice = rref(once.matrix);
    CHECK(once.matrix == twice.matrix);
    CHECK(once.pivots == twice.pivots);
  }
}
