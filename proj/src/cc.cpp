#include "friezelab/cc.hpp"

#include <string>

#include "friezelab/error.hpp"

namespace friezelab {

CCValue cc_map(const QuiverRep& m, const GrassmannianTable& table) {
    const Quiver& q = m.quiver();
    const std::size_t n = q.size();
    const VarList vars = initial_variables(q);
    const DimVector& dims = m.dims();
    LaurentPoly x(vars);
    for (const auto& row : table) {
        Exponent a(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            int s = -dims[i];
            for (std::size_t j = 0; j < n; ++j) {
                if (q(j, i) > 0) s += q(j, i) * row.e[j];
                if (q(i, j) > 0) s += q(i, j) * (dims[j] - row.e[j]);
            }
            a[i] = s;
        }
        x.add_term(a, row.chi);
    }
    Integer ones = at_ones(x);
    return {std::move(x), std::move(ones)};
}

CCValue cc_map(const QuiverRep& m, const std::vector<std::uint32_t>& primes) {
    return cc_map(m, grassmannian_table(m, primes));
}

Quiddity quiddity_from_tube(const std::vector<QuiverRep>& tube) {
    if (tube.empty()) throw Error(ErrorKind::InvalidArgument, "tube has no quasi-simples");
    std::vector<Integer> a;
    for (const auto& r : tube) a.push_back(cc_map(r).at_ones);
    return Quiddity(std::move(a));
}

FriezePattern frieze_from_tube(const std::vector<QuiverRep>& tube, int depth) {
    return generate(quiddity_from_tube(tube), depth);
}

std::vector<Integer> homogeneous_powers(const Integer& x1, unsigned kmax) {
    std::vector<Integer> u;
    u.reserve(kmax + 1);
    Integer prev = 0;
    Integer cur = 1;
    for (unsigned k = 0; k <= kmax; ++k) {
        if (cur != chebyshev_S(static_cast<int>(k), x1)) {
            throw Error(ErrorKind::InvalidArgument, "recurrence disagrees with S_" + std::to_string(k));
        }
        u.push_back(cur);
        Integer next = x1 * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return u;
}

Integer growth_via_homogeneous(const Integer& x1, unsigned k) {
    if (k == 0) throw Error(ErrorKind::InvalidArgument, "growth index must be positive");
    const auto u = homogeneous_powers(x1, k);
    const Integer lower = k >= 2 ? u[k - 2] : Integer(k == 1 ? 0 : -1);
    Integer s = u[k] - lower;
    if (s != chebyshev_T(k, x1)) throw Error(ErrorKind::InvalidArgument, "u_k - u_{k-2} disagrees with T_k");
    return s;
}

DegenerateIdentity check_degenerate_identity(const QuiverRep& homogeneous, const QuiverRep& degenerate) {
    if (!(homogeneous.quiver() == degenerate.quiver())) {
        throw Error(ErrorKind::InvalidArgument, "representations live on different quivers");
    }
    DegenerateIdentity out;
    out.homogeneous = cc_map(homogeneous);
    out.degenerate = cc_map(degenerate);
    const LaurentPoly one = LaurentPoly::constant(out.homogeneous.laurent.vars(), 1);
    out.holds = out.degenerate.laurent == out.homogeneous.laurent + one;
    return out;
}

}  // namespace friezelab
