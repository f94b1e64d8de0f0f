#include "emkv/suites.hpp"

#include <functional>
#include <map>

namespace emkv {

Rational random_coeff(Rng& rng) {
  std::uniform_int_distribution<int> dist(-3, 3);
  int v = dist(rng);
  return Rational(v == 0 ? 1 : v);
}

LiePoly random_lie(Rng& rng, int n, int degree) {
  std::vector<Word> basis = lyndon_words(n, degree);
  std::uniform_int_distribution<int> pick(0, 1);
  LiePoly p(n);
  for (const Word& w : basis) {
    if (pick(rng)) p.add_coord(w, random_coeff(rng));
  }
  if (p.is_zero() && !basis.empty()) p.add_coord(basis[0], random_coeff(rng));
  return p;
}

NCPoly random_nc(Rng& rng, int n, int degree) {
  std::uniform_int_distribution<int> letter(0, n - 1);
  NCPoly p(n);
  for (int t = 0; t < 4; ++t) {
    Word w;
    for (int i = 0; i < degree; ++i) w.push_back(static_cast<uint8_t>(letter(rng)));
    p.add_term(w, random_coeff(rng));
  }
  return p;
}

EdkElement random_edk(Rng& rng, int m, int n, int degree) {
  EdkElement e(m, n);
  std::uniform_int_distribution<int> pick(0, 1);
  if (m >= 1 && degree >= 1) {
    for (int i = 1; i <= n; ++i) {
      if (pick(rng)) e.add_lie(i, random_lie(rng, m, degree));
    }
  }
  for (int i = 1; i < n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (degree - 1 == 0) {
        e.add_ass(i, j, random_coeff(rng) * NCPoly::unit(m));
      } else if (m >= 1 && pick(rng)) {
        e.add_ass(i, j, random_nc(rng, m, degree - 1));
      }
    }
  }
  return e;
}

TangentialDerivation random_tder(Rng& rng, int n, int degree) {
  TangentialDerivation td(n);
  for (int i = 0; i < n; ++i) td.components[i] = random_lie(rng, n, degree);
  return td;
}

std::vector<std::string> suite_names() {
  return {"dd-zero", "cosimplicial", "jacobi-edk", "r-oracle",
          "sder-equiv", "kv-commute", "fox", "hopf"};
}

namespace {

SuiteResult pass(const std::string& name, const std::string& detail) {
  return {name, true, detail};
}

SuiteResult fail(const std::string& name, const std::string& detail) {
  return {name, false, detail};
}

std::vector<EdkElement> edk_generators(int m, int n) {
  std::vector<EdkElement> gens;
  for (int i = 1; i <= n; ++i) {
    for (int g = 0; g < m; ++g) gens.push_back(edk_lie(m, n, i, LiePoly::gen(m, g)));
  }
  for (int i = 1; i < n; ++i) {
    for (int j = i + 1; j <= n; ++j) gens.push_back(edk_ass(m, n, i, j, NCPoly::unit(m)));
  }
  return gens;
}

SuiteResult suite_dd_zero(uint64_t seed) {
  const char* name = "dd-zero";
  Rng rng(seed);
  int checked = 0;
  const int shapes[][2] = {{2, 1}, {2, 2}, {1, 2}};
  for (auto [m, n] : shapes) {
    std::vector<EdkElement> elems = edk_generators(m, n);
    for (int d = 1; d <= 5; ++d) {
      for (int t = 0; t < 7; ++t) elems.push_back(random_edk(rng, m, n, d));
    }
    for (const EdkElement& e : elems) {
      if (!differential(differential(e)).is_zero()) {
        return fail(name, "d(d(A)) != 0 for A = " + e.str() + " in edk_{" + std::to_string(m) +
                              "," + std::to_string(n) + "}");
      }
      ++checked;
    }
  }
  return pass(name, "d^{m,n+1} o d^{m,n} = 0 on " + std::to_string(checked) + " elements");
}

SuiteResult suite_cosimplicial(uint64_t seed) {
  const char* name = "cosimplicial";
  Rng rng(seed);
  int checked = 0;
  const int shapes[][2] = {{2, 1}, {2, 2}, {1, 2}};
  for (auto [m, n] : shapes) {
    std::vector<EdkElement> elems = edk_generators(m, n);
    for (int d = 1; d <= 4; ++d) {
      for (int t = 0; t < 3; ++t) elems.push_back(random_edk(rng, m, n, d));
    }
    for (const EdkElement& e : elems) {
      for (int j = 0; j <= m + n + 1; ++j) {
        EdkElement dj = coface(j, e);
        for (int i = 0; i <= j; ++i) {
          if (!(coface(i, dj) == coface(j + 1, coface(i, e)))) {
            return fail(name, "d_" + std::to_string(i) + " d_" + std::to_string(j) +
                                  " != d_" + std::to_string(j + 1) + " d_" + std::to_string(i) +
                                  " on " + e.str() + " in edk_{" + std::to_string(m) + "," +
                                  std::to_string(n) + "}");
          }
          ++checked;
        }
      }
    }
  }
  return pass(name, "d_i d_j = d_{j+1} d_i verified on " + std::to_string(checked) + " instances");
}

SuiteResult suite_jacobi_edk(uint64_t seed) {
  const char* name = "jacobi-edk";
  Rng rng(seed);
  std::uniform_int_distribution<int> deg(1, 6);
  int m = 2, n = 3;
  for (int t = 0; t < 100; ++t) {
    EdkElement a = random_edk(rng, m, n, deg(rng));
    EdkElement b = random_edk(rng, m, n, deg(rng));
    EdkElement c = random_edk(rng, m, n, deg(rng));
    if (!(bracket(a, b) + bracket(b, a)).is_zero())
      return fail(name, "antisymmetry fails on a = " + a.str() + ", b = " + b.str());
    EdkElement jac = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) +
                     bracket(c, bracket(a, b));
    if (!jac.is_zero())
      return fail(name, "Jacobi fails on a = " + a.str() + ", b = " + b.str() +
                            ", c = " + c.str());
  }

  // Operadic maps preserve brackets.
  std::uniform_int_distribution<int> deg5(1, 5);
  for (int t = 0; t < 100; ++t) {
    int mm = 2, nn = 2;
    EdkElement a = random_edk(rng, mm, nn, deg5(rng));
    EdkElement b = random_edk(rng, mm, nn, deg5(rng));
    EdkElement br = bracket(a, b);
    for (int k = 0; k <= mm; ++k) {
      if (!(delta_pole(k, br) == bracket(delta_pole(k, a), delta_pole(k, b))))
        return fail(name, "delta_pole " + std::to_string(k) + " not a homomorphism on a = " +
                              a.str() + ", b = " + b.str());
    }
    for (int k = 1; k <= nn; ++k) {
      if (!(delta_strand(k, br) == bracket(delta_strand(k, a), delta_strand(k, b))))
        return fail(name, "delta_strand " + std::to_string(k) + " not a homomorphism on a = " +
                              a.str() + ", b = " + b.str());
    }
    if (!(theta_last(br) == bracket(theta_last(a), theta_last(b))))
      return fail(name, "theta not a homomorphism on a = " + a.str() + ", b = " + b.str());
  }
  return pass(name, "antisymmetry, Jacobi and operadic homomorphism checks passed");
}

SuiteResult suite_r_oracle(uint64_t) {
  const char* name = "r-oracle";
  for (int d = 1; d <= 10; ++d) {
    for (const Word& w : lyndon_words(2, d)) {
      LiePoly u = LiePoly::monomial(2, w);
      if (!(r_map(u) == mu_f_gr(expand(u))))
        return fail(name, "R != mu on " + render_word(w, 2));
    }
  }
  for (int d = 1; d <= 6; ++d) {
    for (const Word& w : lyndon_words(3, d)) {
      LiePoly u = LiePoly::monomial(3, w);
      if (!(r_map(u) == mu_f_gr(expand(u))))
        return fail(name, "R != mu on " + render_word(w, 3));
    }
  }
  return pass(name, "R = mu_f_gr on the Lyndon bases of lie_2 (deg <= 10) and lie_3 (deg <= 6)");
}

SuiteResult suite_sder_equiv(uint64_t seed) {
  const char* name = "sder-equiv";
  Rng rng(seed);
  std::uniform_int_distribution<int> deg(1, 5);
  int agree = 0;
  for (int t = 0; t < 200; ++t) {
    int n = (t % 4 == 3) ? 3 : 2;
    TangentialDerivation td = random_tder(rng, n, deg(rng));
    bool a = is_sder(td, SderMode::AnnihilatesX0);
    bool b = is_sder(td, SderMode::FoxSymmetry);
    bool c = is_sder(td, SderMode::EtaCommutation);
    if (a != b || b != c) {
      return fail(name, "modes disagree (" + std::to_string(a) + std::to_string(b) +
                            std::to_string(c) + ") on " + td.str());
    }
    ++agree;
  }
  return pass(name, "three sder characterizations agree on " + std::to_string(agree) +
                        " random tangential derivations");
}

SuiteResult suite_kv_commute(Solver& solver) {
  const char* name = "kv-commute";
  // All cyclic words of degree <= 6 over two letters, plus the empty class.
  std::vector<TracePoly> traces;
  std::vector<NCPoly> lifts;
  for (int d = 0; d <= 6; ++d) {
    std::map<Word, bool> seen;
    Word w(d, 0);
    std::function<void(int)> gen = [&](int pos) {
      if (pos == d) {
        Word cw = canonical_rotation(w);
        if (!seen.emplace(cw, true).second) return;
        NCPoly lift = NCPoly::monomial(2, cw);
        traces.push_back(trace_project(lift));
        lifts.push_back(lift);
        return;
      }
      for (int l = 0; l < 2; ++l) {
        w[pos] = static_cast<uint8_t>(l);
        gen(pos + 1);
      }
    };
    gen(0);
  }

  int krv_count = 0, krv0_count = 0;
  for (int d = 2; d <= 6; ++d) {
    GradedSubspace krv2 = solver.solve(SpaceTag::Krv2, d);
    for (const TangentialDerivation& td : krv2.tder_basis()) {
      ++krv_count;
      for (size_t i = 0; i < traces.size(); ++i) {
        TraceTraceTensor lhs = delta_f_gr(apply(td, traces[i]), apply(td, lifts[i]));
        TraceTraceTensor rhs = apply(td, delta_f_gr(traces[i], lifts[i]));
        if (!(lhs == rhs))
          return fail(name, "krv2 element of degree " + std::to_string(d) +
                                " does not commute with delta_f_gr on |" +
                                render_word(traces[i].terms.empty()
                                                ? Word{}
                                                : traces[i].terms.begin()->first,
                                            2) +
                                "|");
      }
    }
    GradedSubspace krv2zero = solver.solve(SpaceTag::Krv2Zero, d);
    for (const TangentialDerivation& td : krv2zero.tder_basis()) {
      ++krv0_count;
      for (const NCPoly& lift : lifts) {
        if (!(mu_f_gr(apply(td, lift)) == apply(td, mu_f_gr(lift))))
          return fail(name, "krv2zero element of degree " + std::to_string(d) +
                                " does not commute with mu_f_gr");
      }
    }
  }
  return pass(name, "delta-commutation for " + std::to_string(krv_count) +
                        " krv2 basis elements, mu-commutation for " + std::to_string(krv0_count) +
                        " krv2zero basis elements (degrees 2..6)");
}

SuiteResult suite_fox(uint64_t seed) {
  const char* name = "fox";
  Rng rng(seed);
  std::uniform_int_distribution<int> deg(1, 6);
  for (int t = 0; t < 60; ++t) {
    int n = (t % 3 == 2) ? 3 : 2;
    LiePoly u = random_lie(rng, n, deg(rng));
    LiePoly v = random_lie(rng, n, deg(rng));
    NCPoly eu = expand(u);

    // Suffix decomposition a = sum_i (d_i a) x_i on Lie elements.
    NCPoly sum(n);
    for (int i = 0; i < n; ++i) sum += fox_left(eu, i) * NCPoly::gen(n, i);
    if (!(sum == eu)) return fail(name, "suffix decomposition fails on " + u.str());

    // Prefix decomposition through the antipode: a = sum_i x_i iota(d_i a).
    NCPoly psum(n);
    for (int i = 0; i < n; ++i) psum += NCPoly::gen(n, i) * fox_right(eu, i);
    if (!(psum == eu)) return fail(name, "prefix decomposition fails on " + u.str());

    // Derivation rule d_i([u,v]) = u (d_i v) - v (d_i u).
    LiePoly br = bracket(u, v);
    NCPoly ev = expand(v);
    for (int i = 0; i < n; ++i) {
      NCPoly lhs = fox_left(br, i);
      NCPoly rhs = eu * fox_left(ev, i) - ev * fox_left(eu, i);
      if (!(lhs == rhs)) return fail(name, "derivation rule fails on [" + u.str() + ", " + v.str() + "]");
    }

    // General decomposition a - counit(a) = sum_i (d_i a) x_i on ass_n.
    NCPoly a = random_nc(rng, n, deg(rng)) + random_coeff(rng) * NCPoly::unit(n);
    NCPoly gsum(n);
    for (int i = 0; i < n; ++i) gsum += fox_left(a, i) * NCPoly::gen(n, i);
    if (!(gsum == a - counit(a) * NCPoly::unit(n)))
      return fail(name, "associative suffix decomposition fails on " + a.str());
  }
  return pass(name, "Fox decomposition and derivation identities on 60 random samples");
}

SuiteResult suite_hopf(uint64_t seed) {
  const char* name = "hopf";
  Rng rng(seed);
  std::uniform_int_distribution<int> deg(1, 6);
  for (int t = 0; t < 40; ++t) {
    int n = (t % 3 == 2) ? 3 : 2;
    NCPoly a = random_nc(rng, n, deg(rng));
    NCPoly b = random_nc(rng, n, deg(rng));

    // iota is an involutive anti-automorphism.
    if (!(antipode(antipode(a)) == a)) return fail(name, "iota^2 != id on " + a.str());
    if (!(antipode(a * b) == antipode(b) * antipode(a)))
      return fail(name, "iota(ab) != iota(b)iota(a) on " + a.str() + ", " + b.str());

    // Coassociativity via triple splits.
    std::map<std::tuple<Word, Word, Word>, Rational> lhs3, rhs3;
    Tensor2 left = coproduct(a);
    for (const auto& [pq, c] : left.terms) {
      Tensor2 again = coproduct(NCPoly::monomial(n, pq.first));
      for (const auto& [rs, k] : again.terms) {
        auto key = std::make_tuple(rs.first, rs.second, pq.second);
        auto it = lhs3.find(key);
        if (it == lhs3.end()) lhs3.emplace(key, c * k);
        else { it->second += c * k; if (it->second.is_zero()) lhs3.erase(it); }
      }
    }
    Tensor2 right = coproduct(a);
    for (const auto& [pq, c] : right.terms) {
      Tensor2 again = coproduct(NCPoly::monomial(n, pq.second));
      for (const auto& [rs, k] : again.terms) {
        auto key = std::make_tuple(pq.first, rs.first, rs.second);
        auto it = rhs3.find(key);
        if (it == rhs3.end()) rhs3.emplace(key, c * k);
        else { it->second += c * k; if (it->second.is_zero()) rhs3.erase(it); }
      }
    }
    if (!(lhs3 == rhs3)) return fail(name, "coassociativity fails on " + a.str());

    // Counit compatibility and the antipode axiom mult (iota (x) id) Delta = eps 1.
    Tensor2 cop = coproduct(a);
    NCPoly counit_id(n);
    NCPoly antipode_axiom(n);
    for (const auto& [pq, c] : cop.terms) {
      if (pq.first.empty()) counit_id.add_term(pq.second, c);
      NCPoly prod = antipode(NCPoly::monomial(n, pq.first)) * NCPoly::monomial(n, pq.second);
      antipode_axiom += c * prod;
    }
    if (!(counit_id == a)) return fail(name, "(eps (x) id) Delta != id on " + a.str());
    if (!(antipode_axiom == counit(a) * NCPoly::unit(n)))
      return fail(name, "antipode axiom fails on " + a.str());

    // Trace symmetry |ab| = |ba|.
    if (!(trace_project(a * b) == trace_project(b * a)))
      return fail(name, "|ab| != |ba| on " + a.str() + ", " + b.str());
  }

  // iota(a) = -a for primitive a up to degree 8.
  Rng rng2(seed + 1);
  for (int d = 1; d <= 8; ++d) {
    LiePoly u = random_lie(rng2, 2, d);
    NCPoly eu = expand(u);
    if (!(antipode(eu) == -eu)) return fail(name, "iota != -id on primitive " + u.str());
    if (!is_primitive(eu)) return fail(name, "expansion not primitive: " + u.str());
  }
  return pass(name, "Hopf axioms, antipode identities and trace symmetry verified");
}

}  // namespace

SuiteResult run_suite(const std::string& name, uint64_t seed, Solver& solver) {
  if (name == "dd-zero") return suite_dd_zero(seed);
  if (name == "cosimplicial") return suite_cosimplicial(seed);
  if (name == "jacobi-edk") return suite_jacobi_edk(seed);
  if (name == "r-oracle") return suite_r_oracle(seed);
  if (name == "sder-equiv") return suite_sder_equiv(seed);
  if (name == "kv-commute") return suite_kv_commute(solver);
  if (name == "fox") return suite_fox(seed);
  if (name == "hopf") return suite_hopf(seed);
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace emkv
