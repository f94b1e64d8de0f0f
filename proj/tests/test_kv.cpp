#include "doctest.h"
#include "emkv/kv.hpp"
#include "emkv/suites.hpp"

using namespace emkv;

namespace {

LiePoly lie(const std::string& s) { return LiePoly::monomial(2, parse_word(s, 2)); }
NCPoly w2(const std::string& s) { return NCPoly::monomial(2, parse_word(s, 2)); }
LiePoly x() { return LiePoly::gen(2, 0); }
LiePoly y() { return LiePoly::gen(2, 1); }

TangentialDerivation td_yx() { return TangentialDerivation({y(), x()}); }

LiePoly psi3() { return lie("xxy") - lie("xyy"); }
LiePoly phi3() {
  return substitute(psi3(), std::vector<LiePoly>{Rational(-1) * (x() + y()), y()});
}

}  // namespace

TEST_CASE("tangential action") {
  CHECK(apply(td_yx(), NCPoly::gen(2, 0)) == w2("xy") - w2("yx"));
  CHECK(apply(td_yx(), w2("xy")) ==
        (w2("xy") - w2("yx")) * w2("y") + w2("x") * (w2("yx") - w2("xy")));
  CHECK(apply(td_yx(), NCPoly::unit(2)).is_zero());
  CHECK(apply(td_yx(), x()) == lie("xy"));

  // Lie and associative routes agree.
  Rng rng(211);
  for (int trial = 0; trial < 12; ++trial) {
    TangentialDerivation td = random_tder(rng, 2, 1 + static_cast<int>(rng() % 4));
    LiePoly a = random_lie(rng, 2, 1 + static_cast<int>(rng() % 4));
    CHECK(expand(apply(td, a)) == apply(td, expand(a)));
  }
}

TEST_CASE("divergence") {
  CHECK(div(td_yx()).is_zero());
  TangentialDerivation t2({LiePoly(2), lie("xy")});
  TracePoly expected(2);
  expected.add_word(parse_word("xy", 2), Rational(1));
  CHECK(div(t2) == expected);

  TangentialDerivation t3({x(), LiePoly(2)});
  TracePoly ex(2);
  ex.add_word(parse_word("x", 2), Rational(1));
  CHECK(div(t3) == ex);
}

TEST_CASE("special derivations, three characterizations") {
  CHECK(is_sder(td_yx()));
  CHECK(!is_sder(TangentialDerivation({lie("xy"), LiePoly(2)})));
  CHECK(is_sder(TangentialDerivation(2)));

  Rng rng(223);
  for (int trial = 0; trial < 60; ++trial) {
    int n = trial % 4 == 3 ? 3 : 2;
    TangentialDerivation td = random_tder(rng, n, 1 + static_cast<int>(rng() % 5));
    bool a = is_sder(td, SderMode::AnnihilatesX0);
    CHECK(a == is_sder(td, SderMode::FoxSymmetry));
    CHECK(a == is_sder(td, SderMode::EtaCommutation));
  }

  // nu_em of any phi satisfying the symmetry residue is special; nu always is.
  CHECK(is_sder(nu(psi3())));
  CHECK(is_sder(nu_em(phi3())));
}

TEST_CASE("nu and nu_em") {
  TangentialDerivation n1 = nu(lie("xy"));
  CHECK(n1.components[0] == lie("xy"));
  CHECK(n1.components[1] == Rational(-1) * lie("xy"));

  TangentialDerivation n2 = nu_em(lie("xy"));
  CHECK(n2.components[0] == Rational(-1) * lie("xy"));
  CHECK(n2.components[1] == lie("xy"));

  CHECK(nu_em(LiePoly(2)).is_zero());

  // nu = nu_em after the coordinate change psi -> psi(-x-y, y).
  CHECK(nu(psi3()) == nu_em(phi3()));
}

TEST_CASE("tder bracket") {
  TangentialDerivation a({y(), LiePoly(2)});
  TangentialDerivation b({LiePoly(2), x()});
  TangentialDerivation r = bracket(a, b);
  CHECK(r.components[0] == lie("xy"));
  CHECK(r.components[1] == lie("xy"));

  TangentialDerivation u = td_yx();
  CHECK(bracket(u, u).is_zero());

  // rho is a Lie homomorphism: [rho(u), rho(v)] = rho([u,v]) as operators.
  Rng rng(227);
  for (int trial = 0; trial < 10; ++trial) {
    TangentialDerivation s = random_tder(rng, 2, 1 + static_cast<int>(rng() % 3));
    TangentialDerivation t = random_tder(rng, 2, 1 + static_cast<int>(rng() % 3));
    NCPoly a2 = random_nc(rng, 2, 1 + static_cast<int>(rng() % 4));
    NCPoly lhs = apply(s, apply(t, a2)) - apply(t, apply(s, a2));
    CHECK(lhs == apply(bracket(s, t), a2));
  }
}

// All special derivations of rank 2 at one degree, by an exact kernel solve
// of the annihilation condition (independent of is_sder).
std::vector<TangentialDerivation> sder_basis(int degree) {
  std::vector<Word> lyndon = lyndon_words(2, degree);
  std::vector<Word> target = lyndon_words(2, degree + 1);
  size_t L = lyndon.size();
  QMatrix m(static_cast<int>(target.size()), static_cast<int>(2 * L));
  for (size_t s = 0; s < 2 * L; ++s) {
    LiePoly u(2), v(2);
    if (s < L) u.add_coord(lyndon[s], Rational(1));
    else v.add_coord(lyndon[s - L], Rational(1));
    LiePoly res = bracket(LiePoly::gen(2, 0), u) + bracket(LiePoly::gen(2, 1), v);
    for (size_t r = 0; r < target.size(); ++r) {
      auto it = res.coords.find(target[r]);
      if (it != res.coords.end()) m.at(static_cast<int>(r), static_cast<int>(s)) = it->second;
    }
  }
  std::vector<TangentialDerivation> out;
  for (const auto& vec : kernel_basis(m)) {
    TangentialDerivation td(2);
    for (size_t i = 0; i < L; ++i) {
      td.components[0].add_coord(lyndon[i], vec[i]);
      td.components[1].add_coord(lyndon[i], vec[L + i]);
    }
    out.push_back(std::move(td));
  }
  return out;
}

TEST_CASE("divergence cocycle on special pairs") {
  std::vector<TangentialDerivation> sders;
  const size_t sder_dims[] = {3, 0, 1, 0};  // rank-2 special derivations, degrees 1..4
  for (int d = 1; d <= 4; ++d) {
    std::vector<TangentialDerivation> basis = sder_basis(d);
    CHECK(basis.size() == sder_dims[d - 1]);
    for (auto& td : basis) sders.push_back(std::move(td));
  }
  REQUIRE(sders.size() == 4);
  for (const auto& u : sders) REQUIRE(is_sder(u));
  for (const auto& u : sders) {
    for (const auto& v : sders) {
      TracePoly lhs = div(bracket(u, v));
      TracePoly rhs = apply(u, div(v));
      rhs -= apply(v, div(u));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("krv classification") {
  // nu_em(phi3) lies in krv with a nonzero coefficient at degree 3.
  TangentialDerivation im = nu_em(phi3());
  KvWitness wit = krv_class(im);
  CHECK(wit.cls == KvClass::Krv);
  REQUIRE(wit.coefficient.has_value());
  CHECK(!wit.coefficient->is_zero());
  CHECK(div(im) == *wit.coefficient * krv_span_vector(3));

  // degree-1 elements are rejected
  CHECK_THROWS(krv_class(td_yx()));
  // non-special input is rejected with its own error
  CHECK_THROWS(krv_class(TangentialDerivation({lie("xxy"), LiePoly(2)})));
  // rank mismatches are rejected across the module
  CHECK_THROWS(apply(td_yx(), NCPoly::gen(3, 0)));
  CHECK_THROWS(bracket(td_yx(), TangentialDerivation(3)));

  // a generic degree-4 special derivation is not krv
  TangentialDerivation generic({lie("xxxy"), LiePoly(2)});
  // make it special: u = (ad_x^3 y, 0) is not special; build one that is:
  // (y,x) brackets are degree 1, so use [nu_em(phi3), nu_em(phi3)] = 0...
  // instead: u_1 = [x,[x,[x,y]]], u_2 chosen by the Fox symmetry solve is
  // overkill here; use the suite-produced spaces in the acceptance tests.
  (void)generic;
}

TEST_CASE("sym involution") {
  CHECK(sym_involution(td_yx()) == td_yx());
  Rng rng(233);
  for (int trial = 0; trial < 10; ++trial) {
    LiePoly phi = random_lie(rng, 2, 1 + static_cast<int>(rng() % 5));
    TangentialDerivation im = nu_em(phi);
    CHECK(sym_involution(im) == im);
    TangentialDerivation td = random_tder(rng, 2, 1 + static_cast<int>(rng() % 5));
    CHECK(sym_involution(sym_involution(td)) == td);
  }
  CHECK_THROWS(sym_involution(random_tder(rng, 3, 2)));
}

TEST_CASE("d_u is a derivation for special inputs") {
  TangentialDerivation u = td_yx();
  CHECK(d_u(u, NCPoly::gen(2, 0)).is_zero());
  CHECK(d_u(u, NCPoly::unit(2)).is_zero());
  CHECK(d_u(u, w2("xx")) ==
        mu_f_gr(apply(u, w2("xx"))) - apply(u, mu_f_gr(w2("xx"))));

  Rng rng(239);
  std::vector<TangentialDerivation> sders{td_yx(), nu_em(phi3())};
  for (const auto& s : sders) {
    for (int trial = 0; trial < 10; ++trial) {
      NCPoly a = random_nc(rng, 2, 1 + static_cast<int>(rng() % 4));
      NCPoly b = random_nc(rng, 2, 1 + static_cast<int>(rng() % 4));
      CHECK(d_u(s, a * b) == d_u(s, a) * b + a * d_u(s, b));
    }
  }
  CHECK_THROWS(d_u(TangentialDerivation({lie("xy"), LiePoly(2)}), w2("x")));
}

TEST_CASE("put-zero identities") {
  Rng rng(241);
  NCPoly nx = NCPoly::gen(2, 0), ny = NCPoly::gen(2, 1), zero(2);
  for (int d = 2; d <= 6; ++d) {
    LiePoly phi = random_lie(rng, 2, d);
    NCPoly r = r_map(phi);
    CHECK(nc_substitute(r, {zero, ny}).is_zero());
    CHECK(nc_substitute(r, {nx, zero}).is_zero());
    CHECK(nc_substitute(fox_left(phi, 1), {zero, ny}).is_zero());
  }
}

TEST_CASE("divergence of a symmetric image via the R substitute") {
  // div(nu_em(phi)) = |x (d_x phi(y,x)) + y (d_y phi)| by the definition of
  // div; when R(phi) = d_y phi (the krv0 membership hypothesis), the right
  // side becomes |x R(phi)(y,x) + y R(phi)|.
  Rng rng(251);
  LiePoly x_ = x(), y_ = y();
  std::vector<LiePoly> swap{y_, x_};
  for (int trial = 0; trial < 12; ++trial) {
    LiePoly phi = random_lie(rng, 2, 1 + static_cast<int>(rng() % 5));
    LiePoly phswap = substitute(phi, swap);
    NCPoly lhs_word = NCPoly::gen(2, 0) * fox_left(phswap, 0) +
                      NCPoly::gen(2, 1) * fox_left(phi, 1);
    CHECK(div(nu_em(phi)) == trace_project(lhs_word));
  }
}

TEST_CASE("krv witness bracket identities on the degree-3 image") {
  // f(s) = -(d_y phi)(s, 0); R(nu_em(phi)(x_i)) = [x_i, f(x+y)] for phi in
  // grt1em.
  LiePoly phi = phi3();
  NCPoly nx = NCPoly::gen(2, 0), ny = NCPoly::gen(2, 1), zero(2);
  NCPoly dyphi = fox_left(phi, 1);
  NCPoly f_of_sum = -nc_substitute(dyphi, {nx + ny, zero});
  TangentialDerivation im = nu_em(phi);
  CHECK(r_map(apply(im, y())) == bracket(ny, f_of_sum));
  CHECK(r_map(apply(im, x())) == bracket(nx, f_of_sum));
}
