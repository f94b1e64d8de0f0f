#ifndef EMKV_GTOPS_HPP
#define EMKV_GTOPS_HPP

#include "emkv/lie.hpp"
#include "emkv/words.hpp"

namespace emkv {

/// Linearized homotopy intersection form, degree -1:
/// eta_gr(a_1..a_l, b_1..b_m) = -a_1..a_{l-1} z(a_l, b_1) b_2..b_m with
/// z(x_i, x_j) = delta_ij x_i, and eta_gr(1, .) = eta_gr(., 1) = 0.
NCPoly eta_gr(const NCPoly& a, const NCPoly& b);

/// Linearized self-intersection map, degree -1:
/// mu_f_gr(a_1..a_m) = -sum_j a_1..a_{j-1} z(a_j, a_{j+1}) a_{j+2}..a_m.
NCPoly mu_f_gr(const NCPoly& a);

/// The map R: lie_n -> ass_n, computed by the recursion
///   R(x_i) = 0,
///   R([a,b]) = [R(a),b] + [a,R(b)]
///              + sum_i ( (d_i b) x_i iota(d_i a) - (d_i a) x_i iota(d_i b) ),
/// memoized per Lyndon word. Coincides with mu_f_gr on Lie elements, which
/// serves as the independent oracle in the tests.
NCPoly r_map(const LiePoly& u);

/// The based-loop refinement: the composition
/// Delta, id (x) mu_f_gr, id (x) ((iota (x) id) Delta), (| | mult) (x) id,
/// landing in tr_n (x) ass_n.
TraceAssTensor mu_fr_gr(const NCPoly& a);

/// Linearized framed Turaev cobracket on a trace, computed through an
/// explicit lift: Alt ((id (x) | |) mu_fr_gr(lift)). Throws if the lift does
/// not project onto t. The result does not depend on the choice of lift.
TraceTraceTensor delta_f_gr(const TracePoly& t, const NCPoly& lift);

}  // namespace emkv

#endif
