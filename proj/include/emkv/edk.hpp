#ifndef EMKV_EDK_HPP
#define EMKV_EDK_HPP

#include <map>
#include <utility>

#include "emkv/gtops.hpp"
#include "emkv/lie.hpp"

namespace emkv {

/// Element of edk_{m,n} in the normal form
///   edk_{m,n} = (+)_i (lie_m)_i  (+)  (+)_{i<j} (ass_m[-1])_{ij}.
/// A word w stored in slot (i,j) stands for ad_{w(a_{1j},..,a_{mj})}(c_{ij});
/// its degree is wordlength(w) + 1 (the shift is tracked by the container,
/// never inside NCPoly). The constant word is legal and has degree 1: it is
/// the class of c_{ij}.
struct EdkElement {
  int poles = 0;    // m
  int strands = 0;  // n
  std::map<int, LiePoly> lie_parts;                   // slot 1..n, alphabet m; no zero parts
  std::map<std::pair<int, int>, NCPoly> ass_parts;    // (i,j), i < j, alphabet m

  EdkElement() = default;
  EdkElement(int m, int n) : poles(m), strands(n) {}

  bool is_zero() const { return lie_parts.empty() && ass_parts.empty(); }
  void add_lie(int slot, const LiePoly& u);
  void add_ass(int i, int j, const NCPoly& w);
  const LiePoly* lie_part(int slot) const;
  const NCPoly* ass_part(int i, int j) const;

  /// Homogeneous of degree d iff lie parts have degree d and ass parts have
  /// wordlength d - 1.
  bool is_homogeneous() const;
  int homogeneous_degree() const;  // -1 for zero

  EdkElement& operator+=(const EdkElement& o);
  EdkElement& operator-=(const EdkElement& o);
  friend EdkElement operator+(EdkElement a, const EdkElement& b) { return a += b; }
  friend EdkElement operator-(EdkElement a, const EdkElement& b) { return a -= b; }
  friend EdkElement operator-(const EdkElement& a);
  friend EdkElement operator*(const Rational& c, const EdkElement& a);
  friend bool operator==(const EdkElement& a, const EdkElement& b) {
    return a.poles == b.poles && a.strands == b.strands && a.lie_parts == b.lie_parts &&
           a.ass_parts == b.ass_parts;
  }

  std::string str() const;
  std::string to_json() const;
};

EdkElement edk_lie(int m, int n, int slot, const LiePoly& u);
EdkElement edk_ass(int m, int n, int i, int j, const NCPoly& w);

/// The bracket in normal form. Clause families:
///   [u_j, v_j] = [u,v]_j
///   [u_j, v_k] = ( sum_i (d_i v) x_i iota(d_i u) )_{jk}   for j < k
///   [u_k, w_{jk}] = (u w)_{jk},  [u_j, w_{jk}] = -(w u)_{jk},
///   [u_i, w_{jk}] = 0 for i not in {j,k},  [w, w'] = 0.
EdkElement bracket(const EdkElement& a, const EdkElement& b);

/// delta_0 (k = 0, new pole on the left) and pole cabling delta_k
/// (1 <= k <= m, substitute x_k -> x_k + x_{k+1}): edk_{m,n} -> edk_{m+1,n}.
EdkElement delta_pole(int k, const EdkElement& a);

/// Strand cabling delta_{m+k} (1 <= k <= n): edk_{m,n} -> edk_{m,n+1}, with
/// the R-correction on the duplicated Lie slot.
EdkElement delta_strand(int k, const EdkElement& a);

/// delta_{m+n+1}: new strand on the right, all parts unchanged.
EdkElement extend_strand(const EdkElement& a);

/// theta_m: edk_{m,n} -> edk_{m-1,n+1}; the last pole becomes the first
/// strand. Lie parts acquire a d_m-correction in slot (1, i+1).
EdkElement theta_last(const EdkElement& a);

/// Coface d_k = theta_{m+1} o delta_k for 0 <= k <= m, and d_k = delta_k for
/// m+1 <= k <= m+n+1.
EdkElement coface(int k, const EdkElement& a);

/// d^{m,n} = sum_k (-1)^k d_k : edk_{m,n} -> edk_{m,n+1}.
EdkElement differential(const EdkElement& a);

/// The three residues cutting out grt1em from lie_2:
///   pentagon_lie  = phi(y,0) - phi(x+y,0)
///   pentagon_word = (d_y phi)(x,y) + (d_y phi)(y,0) - (d_y phi)(x+y,0) - R(phi)
///   symmetry      = [x, phi(y,x)] + [y, phi(x,y)]
/// The first two jointly vanish iff d^{2,1}(phi_1) = 0.
struct GrtEmResidues {
  LiePoly pentagon_lie;
  NCPoly pentagon_word;
  LiePoly symmetry;
};

GrtEmResidues emergent_defects(const LiePoly& phi);

}  // namespace emkv

#endif
