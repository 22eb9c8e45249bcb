#pragma once

#include <vector>

#include "friezelab/frieze.hpp"
#include "friezelab/rep.hpp"

namespace friezelab {

struct CCValue {
    LaurentPoly laurent;  // in initial_variables(quiver)
    Integer at_ones;
};

/// X_M = prod_i x_i^{-m_i} sum_e chi(Gr_e(M)) prod_i x_i^{A_i(e)} with
/// A_i(e) = sum_{j -> i} e_j + sum_{i -> j} (m_j - e_j).
CCValue cc_map(const QuiverRep& m, const std::vector<std::uint32_t>& primes = default_primes());
CCValue cc_map(const QuiverRep& m, const GrassmannianTable& table);

/// All-ones values of the quasi-simples R_1..R_n of one tube.
Quiddity quiddity_from_tube(const std::vector<QuiverRep>& tube);
FriezePattern frieze_from_tube(const std::vector<QuiverRep>& tube, int depth);

/// u_0..u_kmax with u_{k+1} = x1 u_k - u_{k-1}, u_0 = 1, u_{-1} = 0; checked against S_k.
std::vector<Integer> homogeneous_powers(const Integer& x1, unsigned kmax);

/// u_k - u_{k-2} (with u_{-1} = 0, u_{-2} = -1), checked against T_k(x1).
Integer growth_via_homogeneous(const Integer& x1, unsigned k);

struct DegenerateIdentity {
    bool holds = false;
    CCValue homogeneous;  // X of the generic member
    CCValue degenerate;   // X of the degenerate member
};

/// Checks X_degenerate == X_homogeneous + 1 as Laurent polynomials.
DegenerateIdentity check_degenerate_identity(const QuiverRep& homogeneous, const QuiverRep& degenerate);

}  // namespace friezelab
