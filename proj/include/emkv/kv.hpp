#ifndef EMKV_KV_HPP
#define EMKV_KV_HPP

#include <optional>
#include <vector>

#include "emkv/gtops.hpp"
#include "emkv/lie.hpp"

namespace emkv {

/// Tangential derivation: the n-tuple (u_1,..,u_n) acting by x_i -> [x_i, u_i].
struct TangentialDerivation {
  int rank = 0;
  std::vector<LiePoly> components;

  TangentialDerivation() = default;
  explicit TangentialDerivation(int n) : rank(n), components(n, LiePoly(n)) {}
  TangentialDerivation(std::vector<LiePoly> comps);

  bool is_zero() const;
  bool is_homogeneous() const;
  int homogeneous_degree() const;  // common component degree; -1 for zero

  TangentialDerivation& operator+=(const TangentialDerivation& o);
  TangentialDerivation& operator-=(const TangentialDerivation& o);
  friend TangentialDerivation operator+(TangentialDerivation a, const TangentialDerivation& b) {
    return a += b;
  }
  friend TangentialDerivation operator-(TangentialDerivation a, const TangentialDerivation& b) {
    return a -= b;
  }
  friend TangentialDerivation operator*(const Rational& c, const TangentialDerivation& a);
  friend bool operator==(const TangentialDerivation& a, const TangentialDerivation& b) {
    return a.rank == b.rank && a.components == b.components;
  }

  std::string str() const;
};

NCPoly apply(const TangentialDerivation& td, const NCPoly& a);
LiePoly apply(const TangentialDerivation& td, const LiePoly& a);
TracePoly apply(const TangentialDerivation& td, const TracePoly& t);
TraceAssTensor apply(const TangentialDerivation& td, const TraceAssTensor& t);
TraceTraceTensor apply(const TangentialDerivation& td, const TraceTraceTensor& t);

/// Divergence cocycle: div(u~) = sum_i | x_i (d_i u_i) |. Degree-preserving
/// on homogeneous input (component degree k gives a trace of degree k).
TracePoly div(const TangentialDerivation& td);

enum class SderMode { AnnihilatesX0, FoxSymmetry, EtaCommutation };

/// All three modes agree (Prop-level equivalence, exercised by the tests):
/// (i) sum_i [x_i, u_i] = 0; (ii) d_j u_i = d^i u_j for all i, j;
/// (iii) the tangential action commutes with eta_gr on generator pairs.
bool is_sder(const TangentialDerivation& td, SderMode mode = SderMode::AnnihilatesX0);

enum class KvClass { Sder, Krv, Krv0, NotKrv };

/// Result of the krv membership test; for class Krv, coefficient holds the
/// scalar c with div(u~) = c |x^k + y^k - (x+y)^k|.
struct KvWitness {
  KvClass cls = KvClass::NotKrv;
  std::optional<Rational> coefficient;
};

/// |x^k + y^k - (x+y)^k|, the divergence span vector at degree k (rank 2).
TracePoly krv_span_vector(int k);

/// Membership test for homogeneous special derivations of rank 2 and
/// component degree k >= 2: Krv0 iff div = 0, Krv iff div lies in the
/// one-dimensional span of krv_span_vector(k), NotKrv otherwise. Throws on
/// non-sder input or k < 2.
KvWitness krv_class(const TangentialDerivation& td);

/// nu(psi) = (psi(-x-y,x), psi(-x-y,y)).
TangentialDerivation nu(const LiePoly& psi);

/// nu_em(phi) = (phi(y,x), phi(x,y)).
TangentialDerivation nu_em(const LiePoly& phi);

/// [u~, v~]_i = [u_i, v_i] + rho(u~)(v_i) - rho(v~)(u_i).
TangentialDerivation bracket(const TangentialDerivation& a, const TangentialDerivation& b);

/// (u(x,y), v(x,y)) -> (v(y,x), u(y,x)); an involution on tder_2.
TangentialDerivation sym_involution(const TangentialDerivation& td);

/// d_u~ = mu_f_gr o u - u o mu_f_gr, a derivation on ass_n for special u~.
/// Throws on non-sder input.
NCPoly d_u(const TangentialDerivation& td, const NCPoly& a);

}  // namespace emkv

#endif
