#include "friezelab/theta.hpp"

#include <string>

#include "friezelab/error.hpp"
#include "friezelab/frieze.hpp"

namespace friezelab {

std::vector<std::size_t> triangle_neighbors(const Quiver& q, std::size_t u, std::size_t v) {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < q.size(); ++w) {
        if (w != u && w != v && q(v, w) > 0 && q(w, u) > 0) out.push_back(w);
    }
    return out;
}

ThetaValue theta(const Seed& s, std::size_t u, std::size_t v) {
    const Quiver& q = s.quiver;
    if (u >= q.size() || v >= q.size() || q(u, v) != 2) {
        throw Error(ErrorKind::MissingDoubleArrow, "no double arrow between the requested vertices");
    }
    const VarList& vars = s.vars[u].vars();
    LaurentPoly prod = LaurentPoly::constant(vars, 1);
    for (std::size_t w : triangle_neighbors(q, u, v)) prod *= s.vars[w];
    const LaurentPoly num = s.vars[u] * s.vars[u] + s.vars[v] * s.vars[v] + prod;
    // two small divisors are much cheaper than their product
    LaurentPoly value = div_exact(div_exact(num, s.vars[u]), s.vars[v]);
    Integer ones = at_ones(value);
    return {std::move(value), std::move(ones)};
}

ThetaValue theta(const Seed& s) {
    const auto arrows = find_double_arrows(s.quiver);
    if (arrows.empty()) throw Error(ErrorKind::MissingDoubleArrow, "quiver has no double arrow");
    return theta(s, arrows.front().first, arrows.front().second);
}

bool theta_invariance(const Seed& s, const std::vector<MutationWord>& words) {
    if (words.empty()) return true;
    const ThetaValue base = theta(s);
    for (const auto& w : words) {
        if (!(theta(apply_word(s, w)).laurent == base.laurent)) return false;
    }
    return true;
}

AffineTheta theta_from_affine_quiver(const Quiver& q, std::size_t max_nodes) {
    SearchResult found = mutation_class_search(q, has_double_arrow, max_nodes);
    Seed seed = apply_word(initial_seed(q), found.word);
    ThetaValue value = theta(seed);
    return {std::move(found), std::move(seed), std::move(value)};
}

Integer growth_from_affine_quiver(const Quiver& q, std::size_t max_nodes) {
    return theta_from_affine_quiver(q, max_nodes).value.integer;
}

Integer bracelet_value(const Integer& theta_int, unsigned k) {
    if (theta_int < 2) throw Error(ErrorKind::InvalidArgument, "theta value must be at least 2");
    if (k == 0) throw Error(ErrorKind::InvalidArgument, "bracelet index must be positive");
    Integer t = chebyshev_T(k, theta_int);
    const int ki = static_cast<int>(k);
    if (t != chebyshev_S(ki, theta_int) - chebyshev_S(ki - 2, theta_int)) {
        throw Error(ErrorKind::InvalidArgument, "T_k and S_k - S_{k-2} disagree");
    }
    return t;
}

}  // namespace friezelab
