#pragma once

#include <cstddef>
#include <vector>

#include "friezelab/cluster.hpp"
#include "friezelab/laurent.hpp"

namespace friezelab {

struct ThetaValue {
    LaurentPoly laurent;  // in the initial cluster variables
    Integer integer;      // laurent at all-ones
};

/// Vertices w closing a directed triangle u => v -> w -> u.
std::vector<std::size_t> triangle_neighbors(const Quiver& q, std::size_t u, std::size_t v);

/// (x_u^2 + x_v^2 + prod_{w in N} x_w) / (x_u x_v) in the seed's variables.
/// Throws MissingDoubleArrow unless b(u, v) == 2.
ThetaValue theta(const Seed& s, std::size_t u, std::size_t v);
/// Uses the first double arrow of the seed's quiver.
ThetaValue theta(const Seed& s);

/// True iff theta agrees as a Laurent polynomial on s and on every apply_word(s, w).
bool theta_invariance(const Seed& s, const std::vector<MutationWord>& words);

struct AffineTheta {
    SearchResult search;  // word from the input quiver to a double-arrow quiver
    Seed seed;            // initial seed of the input quiver moved along that word
    ThetaValue value;
};

/// Searches the mutation class for a double arrow and evaluates theta there.
AffineTheta theta_from_affine_quiver(const Quiver& q, std::size_t max_nodes = 50000);
Integer growth_from_affine_quiver(const Quiver& q, std::size_t max_nodes = 50000);

/// T_k(theta), cross-checked against S_k - S_{k-2}; requires theta >= 2 and k >= 1.
Integer bracelet_value(const Integer& theta_int, unsigned k);

}  // namespace friezelab
