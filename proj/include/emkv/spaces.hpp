#ifndef EMKV_SPACES_HPP
#define EMKV_SPACES_HPP

#include <optional>
#include <string>
#include <vector>

#include "emkv/kv.hpp"

namespace emkv {

/// The graded solution spaces handled by the solver.
///   grt1      : hexagons + pentagon (in dk_4)
///   grt1em    : emergent pentagon residues + the bracket-symmetry condition
///   ppss-only : the word-slot pentagon residue alone
///   krv2      : special + divergence in the one-dimensional span
///   krv2sym   : krv2 + fixed by the swap involution
///   krv2zero  : special + vanishing divergence
enum class SpaceTag { Grt1, Grt1Em, PpssOnly, Krv2, Krv2Sym, Krv2Zero };

std::string tag_name(SpaceTag tag);
std::optional<SpaceTag> tag_from_name(const std::string& name);
bool is_lie_tag(SpaceTag tag);  // ambient is lie_2(d); otherwise tder_2(d)

/// A solved homogeneous solution space with an exact basis in reduced echelon
/// form with respect to the Lyndon (or paired-Lyndon) coordinate order.
struct GradedSubspace {
  SpaceTag tag;
  int degree = 0;
  int ambient_dim = 0;
  std::vector<std::vector<Rational>> basis;  // coordinate vectors, canonical
  bool below_theorem_range = false;          // krv tags at degree 1

  int dim() const { return static_cast<int>(basis.size()); }
  std::vector<LiePoly> lie_basis() const;                  // lie tags
  std::vector<TangentialDerivation> tder_basis() const;    // krv tags
};

/// Degree-graded exact solver with an optional on-disk cache (one JSON file
/// per (tag, degree), invalidated through a residue self-test hash).
class Solver {
 public:
  explicit Solver(std::string cache_dir = "");

  GradedSubspace solve(SpaceTag tag, int degree);
  const std::string& residue_hash() const { return residue_hash_; }

 private:
  GradedSubspace compute(SpaceTag tag, int degree) const;
  std::string cache_path(SpaceTag tag, int degree) const;
  std::optional<GradedSubspace> load_cached(SpaceTag tag, int degree) const;
  void store_cached(const GradedSubspace& s) const;

  std::string cache_dir_;
  std::string residue_hash_;
  std::map<std::pair<int, int>, GradedSubspace> memo_;
};

/// [phi1, phi2]em = [phi1, phi2] + rho(nu_em(phi1))(phi2) - rho(nu_em(phi2))(phi1).
LiePoly emergent_bracket(const LiePoly& phi1, const LiePoly& phi2);

/// Is v in the row span of basis?
bool in_span(const std::vector<std::vector<Rational>>& basis, const std::vector<Rational>& v);

struct DegreeReport {
  int degree = 0;
  int dim_grt1em = 0;
  int dim_krv2sym = 0;
  bool dims_equal = false;
  bool images_sym_fixed = false;
  bool images_krv_member = false;
  bool images_form_basis = false;
  int dim_grt1 = 0;
  bool grt1_injects = false;  // psi -> psi(-x-y, y) lands in grt1em

  bool ok() const {
    return dims_equal && images_sym_fixed && images_krv_member && images_form_basis &&
           grt1_injects;
  }
};

struct TheoremReport {
  int max_degree = 0;
  std::vector<DegreeReport> degrees;
  bool all_ok() const {
    for (const auto& d : degrees)
      if (!d.ok()) return false;
    return true;
  }
};

/// Degree-by-degree verification of the graded isomorphism
/// grt1em(d) = krv2sym(d) through nu_em, for 2 <= d <= d_max.
TheoremReport verify_main_theorem(int d_max, Solver& solver);

uint64_t fnv1a64(const std::string& s);

}  // namespace emkv

#endif
