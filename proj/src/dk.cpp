#include "emkv/dk.hpp"

#include <functional>
#include <stdexcept>

namespace emkv {

namespace {

void check_shape(const DkShape& a, const DkShape& b, const char* op) {
  if (!(a == b)) throw std::invalid_argument(std::string(op) + ": shape mismatch");
}

// Factor-k generator for 0-based letter g: a_{(g+1)k} if g < m, else
// c_{(g-m+1)k}.
DkGen factor_gen(const DkShape& s, int k, int g) {
  if (g < s.poles) return DkGen::a(g + 1, k);
  return DkGen::c(g - s.poles + 1, k);
}

}  // namespace

DkElement::DkElement(DkShape s) : shape(s) {
  factors.reserve(s.strands);
  for (int k = 1; k <= s.strands; ++k) factors.emplace_back(s.factor_alphabet(k));
}

bool DkElement::is_zero() const {
  for (const auto& f : factors)
    if (!f.is_zero()) return false;
  return true;
}

bool DkElement::is_homogeneous() const {
  int d = -1;
  for (const auto& f : factors) {
    if (f.is_zero()) continue;
    if (!f.is_homogeneous()) return false;
    int fd = f.homogeneous_degree();
    if (d >= 0 && fd != d) return false;
    d = fd;
  }
  return true;
}

int DkElement::homogeneous_degree() const {
  int d = -1;
  for (const auto& f : factors) {
    if (f.is_zero()) continue;
    int fd = f.homogeneous_degree();
    if (d >= 0 && fd != d) throw std::logic_error("DkElement: not homogeneous");
    d = fd;
  }
  return d;
}

DkElement& DkElement::operator+=(const DkElement& o) {
  check_shape(shape, o.shape, "DkElement+");
  for (size_t k = 0; k < factors.size(); ++k) factors[k] += o.factors[k];
  return *this;
}

DkElement& DkElement::operator-=(const DkElement& o) {
  check_shape(shape, o.shape, "DkElement-");
  for (size_t k = 0; k < factors.size(); ++k) factors[k] -= o.factors[k];
  return *this;
}

DkElement operator-(const DkElement& a) {
  DkElement r(a.shape);
  for (size_t k = 0; k < a.factors.size(); ++k) r.factors[k] = -a.factors[k];
  return r;
}

DkElement operator*(const Rational& c, const DkElement& a) {
  DkElement r(a.shape);
  for (size_t k = 0; k < a.factors.size(); ++k) r.factors[k] = c * a.factors[k];
  return r;
}

std::string DkElement::str() const {
  std::string s;
  for (size_t k = 0; k < factors.size(); ++k) {
    if (factors[k].is_zero()) continue;
    if (!s.empty()) s += "  ";
    s += "f" + std::to_string(k + 1) + ": " + factors[k].str();
  }
  return s.empty() ? "0" : s;
}

DkElement dk_generator(DkShape shape, DkGen gen) {
  DkElement e(shape);
  if (gen.kind == DkGen::PoleStrand) {
    if (gen.i < 1 || gen.i > shape.poles || gen.j < 1 || gen.j > shape.strands)
      throw std::invalid_argument("dk_generator: a(i,j) out of range");
    e.factors[gen.j - 1].add_coord(Word{static_cast<uint8_t>(gen.i - 1)}, Rational(1));
  } else {
    if (gen.i < 1 || gen.i >= gen.j || gen.j > shape.strands)
      throw std::invalid_argument("dk_generator: c(i,j) out of range");
    e.factors[gen.j - 1].add_coord(Word{static_cast<uint8_t>(shape.poles + gen.i - 1)},
                                   Rational(1));
  }
  return e;
}

namespace {

// Action of a factor-j generator (0-based letter g, j < k) on the factor-k
// free Lie algebra, as the list of generator images. The formulas come from
// the semidirect product structure; all images are 0 or a bracket of two
// factor-k generators.
std::vector<LiePoly> action_images(const DkShape& s, int j, int g, int k) {
  int m = s.poles;
  int target_n = s.factor_alphabet(k);
  std::vector<LiePoly> images(target_n, LiePoly(target_n));
  auto gen = [&](int idx0) { return LiePoly::gen(target_n, idx0); };

  if (g < m) {
    // a_{ij} with i = g+1: acts on a_{ik} by -[c_{jk}, a_{ik}] and on c_{jk}
    // by -[a_{ik}, c_{jk}].
    int i = g + 1;
    images[i - 1] = -bracket(gen(m + j - 1), gen(i - 1));
    images[m + j - 1] = -bracket(gen(i - 1), gen(m + j - 1));
  } else {
    // c_{lj} with l = g-m+1 (l < j): kills pole chords; acts on c_{l'k} for
    // l' in {l, j} by -[c_{other,k}, c_{l'k}] (c_{lj} = c_{jl}).
    int l = g - m + 1;
    images[m + l - 1] = -bracket(gen(m + j - 1), gen(m + l - 1));
    images[m + j - 1] = -bracket(gen(m + l - 1), gen(m + j - 1));
  }
  return images;
}

// rho of the standard bracketing of the factor-j Lyndon word w, applied to a
// factor-k polynomial.
LiePoly rho_word(const DkShape& s, int j, const Word& w, int k, const LiePoly& b) {
  if (b.is_zero()) return b;
  if (w.size() == 1) {
    return apply_derivation(action_images(s, j, w[0], k), b);
  }
  auto [u, v] = std_factorization(w);
  return rho_word(s, j, u, k, rho_word(s, j, v, k, b)) -
         rho_word(s, j, v, k, rho_word(s, j, u, k, b));
}

// Action of factors 1..k-1 of e on a factor-k polynomial.
LiePoly rho_apply(const DkShape& s, const DkElement& e, int k, const LiePoly& b) {
  LiePoly out(s.factor_alphabet(k));
  if (b.is_zero()) return out;
  for (int j = 1; j < k; ++j) {
    for (const auto& [w, c] : e.factors[j - 1].coords) {
      out += c * rho_word(s, j, w, k, b);
    }
  }
  return out;
}

}  // namespace

DkElement bracket(const DkElement& a, const DkElement& b) {
  check_shape(a.shape, b.shape, "dk bracket");
  DkElement r(a.shape);
  for (int k = a.shape.strands; k >= 1; --k) {
    r.factors[k - 1] = bracket(a.factors[k - 1], b.factors[k - 1]) +
                       rho_apply(a.shape, a, k, b.factors[k - 1]) -
                       rho_apply(a.shape, b, k, a.factors[k - 1]);
  }
  return r;
}

DkElement dk_hom_apply(const DkMorphism& hom, const DkElement& a) {
  check_shape(hom.from, a.shape, "dk_hom_apply");
  DkElement out(hom.to);
  for (int k = 1; k <= a.shape.strands; ++k) {
    if (a.factors[k - 1].is_zero()) continue;
    std::vector<DkElement> images;
    int alpha = a.shape.factor_alphabet(k);
    images.reserve(alpha);
    for (int g = 0; g < alpha; ++g) {
      auto it = hom.images.find(factor_gen(a.shape, k, g));
      if (it == hom.images.end()) throw std::invalid_argument("dk_hom_apply: missing image");
      images.push_back(it->second);
    }
    out += substitute(a.factors[k - 1], images);
  }
  return out;
}

namespace {

void for_each_gen(const DkShape& s, const std::function<void(DkGen)>& f) {
  for (int i = 1; i <= s.poles; ++i)
    for (int j = 1; j <= s.strands; ++j) f(DkGen::a(i, j));
  for (int i = 1; i < s.strands; ++i)
    for (int j = i + 1; j <= s.strands; ++j) f(DkGen::c(i, j));
}

}  // namespace

DkMorphism dk_extension_pole(DkShape s) {
  DkMorphism h{s, DkShape{s.poles + 1, s.strands}, {}};
  for_each_gen(s, [&](DkGen g) {
    if (g.kind == DkGen::PoleStrand)
      h.images[g] = dk_generator(h.to, DkGen::a(g.i + 1, g.j));
    else
      h.images[g] = dk_generator(h.to, g);
  });
  return h;
}

DkMorphism dk_extension_strand(DkShape s) {
  DkMorphism h{s, DkShape{s.poles, s.strands + 1}, {}};
  for_each_gen(s, [&](DkGen g) { h.images[g] = dk_generator(h.to, g); });
  return h;
}

DkMorphism dk_cabling(DkShape s, int k) {
  int m = s.poles, n = s.strands;
  if (k < 1 || k > m + n) throw std::invalid_argument("dk_cabling: k out of range");
  if (k <= m) {
    // Double pole k.
    DkMorphism h{s, DkShape{m + 1, n}, {}};
    for_each_gen(s, [&](DkGen g) {
      if (g.kind == DkGen::StrandStrand) {
        h.images[g] = dk_generator(h.to, g);
      } else if (g.i < k) {
        h.images[g] = dk_generator(h.to, g);
      } else if (g.i == k) {
        h.images[g] = dk_generator(h.to, DkGen::a(k, g.j)) +
                      dk_generator(h.to, DkGen::a(k + 1, g.j));
      } else {
        h.images[g] = dk_generator(h.to, DkGen::a(g.i + 1, g.j));
      }
    });
    return h;
  }
  // Double strand k - m.
  int kk = k - m;
  DkMorphism h{s, DkShape{m, n + 1}, {}};
  for_each_gen(s, [&](DkGen g) {
    if (g.kind == DkGen::PoleStrand) {
      if (g.j < kk) h.images[g] = dk_generator(h.to, g);
      else if (g.j == kk)
        h.images[g] = dk_generator(h.to, DkGen::a(g.i, kk)) +
                      dk_generator(h.to, DkGen::a(g.i, kk + 1));
      else h.images[g] = dk_generator(h.to, DkGen::a(g.i, g.j + 1));
    } else {
      if (g.j < kk) h.images[g] = dk_generator(h.to, g);
      else if (g.j == kk)
        h.images[g] = dk_generator(h.to, DkGen::c(g.i, kk)) +
                      dk_generator(h.to, DkGen::c(g.i, kk + 1));
      else if (g.i < kk)
        h.images[g] = dk_generator(h.to, DkGen::c(g.i, g.j + 1));
      else if (g.i == kk)
        h.images[g] = dk_generator(h.to, DkGen::c(kk, g.j + 1)) +
                      dk_generator(h.to, DkGen::c(kk + 1, g.j + 1));
      else
        h.images[g] = dk_generator(h.to, DkGen::c(g.i + 1, g.j + 1));
    }
  });
  return h;
}

DkMorphism dk_theta_last(DkShape s) {
  if (s.poles < 1) throw std::invalid_argument("dk_theta_last: no pole to convert");
  int m = s.poles;
  DkMorphism h{s, DkShape{m - 1, s.strands + 1}, {}};
  for_each_gen(s, [&](DkGen g) {
    if (g.kind == DkGen::PoleStrand) {
      if (g.i < m) h.images[g] = dk_generator(h.to, DkGen::a(g.i, g.j + 1));
      else h.images[g] = dk_generator(h.to, DkGen::c(1, g.j + 1));
    } else {
      h.images[g] = dk_generator(h.to, DkGen::c(g.i + 1, g.j + 1));
    }
  });
  return h;
}

DkElement pentagon_defect(const LiePoly& psi) {
  if (!psi.is_homogeneous() || (!psi.is_zero() && psi.homogeneous_degree() < 2))
    throw std::invalid_argument("pentagon_defect: need a homogeneous input of degree >= 2");
  return detail::pentagon_defect_unchecked(psi);
}

DkElement detail::pentagon_defect_unchecked(const LiePoly& psi) {
  if (psi.alphabet != 2) throw std::invalid_argument("pentagon_defect: need a two-letter input");
  DkShape dk4{0, 4};
  auto t = [&](int i, int j) { return dk_generator(dk4, DkGen::c(i, j)); };
  auto eval = [&](const DkElement& a, const DkElement& b) {
    return substitute(psi, std::vector<DkElement>{a, b});
  };
  DkElement lhs = eval(t(1, 2), t(2, 3) + t(2, 4)) + eval(t(1, 3) + t(2, 3), t(3, 4));
  DkElement rhs = eval(t(2, 3), t(3, 4)) + eval(t(1, 2) + t(1, 3), t(2, 4) + t(3, 4)) +
                  eval(t(1, 2), t(2, 3));
  return lhs - rhs;
}

std::pair<LiePoly, LiePoly> hexagon_defects(const LiePoly& psi) {
  if (psi.alphabet != 2) throw std::invalid_argument("hexagon_defects: need a two-letter input");
  LiePoly x = LiePoly::gen(2, 0), y = LiePoly::gen(2, 1);
  auto eval = [&](const LiePoly& a, const LiePoly& b) {
    return substitute(psi, std::vector<LiePoly>{a, b});
  };
  LiePoly first = psi + eval(y, x);
  LiePoly second = psi + eval(y, Rational(-1) * (x + y)) + eval(Rational(-1) * (x + y), x);
  return {first, second};
}

}  // namespace emkv
