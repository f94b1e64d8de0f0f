#ifndef EMKV_DK_HPP
#define EMKV_DK_HPP

#include <map>
#include <tuple>
#include <vector>

#include "emkv/lie.hpp"

namespace emkv {

/// Shape of dk_{m,n}: m poles, n strands. The algebra is stored in the
/// iterated semidirect normal form: factor k (1 <= k <= n) is the free Lie
/// algebra on m + (k-1) generators, ordered a_{1k}, ..., a_{mk},
/// c_{1k}, ..., c_{(k-1)k}. dk_{m,0} is the zero algebra.
struct DkShape {
  int poles = 0;
  int strands = 0;

  int factor_alphabet(int k) const { return poles + k - 1; }  // k is 1-based
  friend bool operator==(const DkShape& a, const DkShape& b) {
    return a.poles == b.poles && a.strands == b.strands;
  }
};

/// Generator of dk_{m,n}: a(i,j) = pole i to strand j, or c(i,j) = strand i
/// to strand j (unordered; normalized to i < j).
struct DkGen {
  enum Kind { PoleStrand, StrandStrand } kind;
  int i = 0;  // 1-based
  int j = 0;  // 1-based

  static DkGen a(int i, int j) { return {PoleStrand, i, j}; }
  static DkGen c(int i, int j) {
    if (i > j) std::swap(i, j);
    return {StrandStrand, i, j};
  }
  friend bool operator<(const DkGen& x, const DkGen& y) {
    return std::tie(x.kind, x.i, x.j) < std::tie(y.kind, y.i, y.j);
  }
  friend bool operator==(const DkGen& x, const DkGen& y) {
    return x.kind == y.kind && x.i == y.i && x.j == y.j;
  }
};

/// Element of dk_{m,n} in normal form. Equality of elements is equality of
/// all factor coordinates.
struct DkElement {
  DkShape shape;
  std::vector<LiePoly> factors;  // factors[k-1] over alphabet m + k - 1

  DkElement() = default;
  explicit DkElement(DkShape s);

  bool is_zero() const;
  bool is_homogeneous() const;
  int homogeneous_degree() const;  // -1 for zero

  DkElement& operator+=(const DkElement& o);
  DkElement& operator-=(const DkElement& o);
  friend DkElement operator+(DkElement a, const DkElement& b) { return a += b; }
  friend DkElement operator-(DkElement a, const DkElement& b) { return a -= b; }
  friend DkElement operator-(const DkElement& a);
  friend DkElement operator*(const Rational& c, const DkElement& a);
  friend bool operator==(const DkElement& a, const DkElement& b) {
    return a.shape == b.shape && a.factors == b.factors;
  }

  std::string str() const;
};

/// The basis element for a generator, placed in its normal-form factor.
DkElement dk_generator(DkShape shape, DkGen gen);

/// Lie bracket, computed recursively through the semidirect decomposition
/// dk_{m,n} = dk_{m,n-1} x| lie(a_{1n},..,a_{mn},c_{1n},..,c_{(n-1)n}).
DkElement bracket(const DkElement& a, const DkElement& b);

/// A Lie homomorphism specified on generators.
struct DkMorphism {
  DkShape from;
  DkShape to;
  std::map<DkGen, DkElement> images;
};

/// Unique Lie-homomorphism extension of the generator images.
DkElement dk_hom_apply(const DkMorphism& hom, const DkElement& a);

/// Presets for the operadic maps.
DkMorphism dk_extension_pole(DkShape s);               // delta_0 : (m,n) -> (m+1,n)
DkMorphism dk_extension_strand(DkShape s);             // delta_{m+n+1} : (m,n) -> (m,n+1)
DkMorphism dk_cabling(DkShape s, int k);               // delta_k, 1 <= k <= m+n
DkMorphism dk_theta_last(DkShape s);                   // theta_m : (m,n) -> (m-1,n+1)

/// Left minus right side of the pentagon equation in dk_4, evaluated by
/// substituting psi(t_12, t_23+t_24) etc. Requires a homogeneous psi of
/// degree >= 2.
DkElement pentagon_defect(const LiePoly& psi);

/// (psi(x,y)+psi(y,x), psi(x,y)+psi(y,-x-y)+psi(-x-y,x)).
std::pair<LiePoly, LiePoly> hexagon_defects(const LiePoly& psi);

namespace detail {
/// Pentagon evaluation without the degree precondition; direct substitution
/// in dk_4 is exact in every degree (the degree >= 2 restriction only
/// concerns the dk_3 reformulation). Used by the degree-1 graded solve.
DkElement pentagon_defect_unchecked(const LiePoly& psi);
}  // namespace detail

}  // namespace emkv

#endif
