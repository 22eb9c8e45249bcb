#include <doctest.h>

#include "friezelab/cc.hpp"
#include "friezelab/theta.hpp"
#include "support.hpp"

using namespace friezelab;
using testing::fixture;
using testing::load_quiver;
using testing::load_rep;

namespace {

std::vector<QuiverRep> tube(const char* rel, const Quiver& q) { return io::tube_from_json(io::load_json(fixture(rel)), q); }

std::vector<Integer> ints(std::initializer_list<long> xs) {
    std::vector<Integer> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

bool positive_coefficients(const LaurentPoly& p) {
    for (const auto& [exp, c] : p.terms())
        if (c <= 0) return false;
    return true;
}

}  // namespace

TEST_CASE("cc_map of M_lambda matches the displayed Laurent polynomial") {
    const Quiver d4 = load_quiver("d4/quiver.json");
    const VarList v = initial_variables(d4);
    const LaurentPoly numerator = LaurentPoly::parse(
        "x1^2*x2^2*x3^2 + 2*x1^2*x2^2*x3 + x1^2*x2^2 + 4*x1*x2*x3*x4*x5 + 2*x1*x2*x4*x5"
        " + x3^2*x4^2*x5^2 + 2*x3*x4^2*x5^2 + x4^2*x5^2",
        v);
    const LaurentPoly expected = div_exact(numerator, LaurentPoly::parse("x1*x2*x3^2*x4*x5", v));
    const CCValue x = cc_map(load_rep("d4/m_lambda.json", d4));
    CHECK(x.laurent == expected);
    CHECK(x.at_ones == 14);
    CHECK(positive_coefficients(x.laurent));
}

TEST_CASE("cc_map basics: zero, direct sums, table sums") {
    const Quiver d4 = load_quiver("d4/quiver.json");
    const CCValue zero = cc_map(zero_rep(d4));
    CHECK(zero.laurent == LaurentPoly::constant(initial_variables(d4), 1));
    CHECK(zero.at_ones == 1);

    std::vector<QuiverRep> reps = {load_rep("d4/m_lambda.json", d4), load_rep("d4/m_lambda0.json", d4)};
    for (const char* t : {"d4/tube1.json", "d4/tube2.json", "d4/tube3.json"})
        for (auto& r : tube(t, d4)) reps.push_back(r);

    for (const auto& m : reps) {
        const auto table = grassmannian_table(m);
        const CCValue x = cc_map(m, table);
        Integer sum = 0;
        for (const auto& r : table) sum += r.chi;
        CHECK(x.at_ones == sum);
        CHECK(at_ones(x.laurent) == sum);
        CHECK(positive_coefficients(x.laurent));
        CHECK(x.laurent == cc_map(m).laurent);
    }

    const auto t1 = tube("d4/tube1.json", d4);
    const auto t2 = tube("d4/tube2.json", d4);
    const std::vector<std::pair<QuiverRep, QuiverRep>> pairs = {
        {t1[0], t1[1]}, {t1[1], t2[0]}, {t2[0], t2[1]}, {t1[1], t1[1]}, {reps[0], t1[1]}};
    for (const auto& [m, n] : pairs) CHECK(cc_map(direct_sum(m, n)).laurent == cc_map(m).laurent * cc_map(n).laurent);
}

TEST_CASE("tubes give quiddities and friezes") {
    const Quiver d4 = load_quiver("d4/quiver.json");
    CHECK(quiddity_from_tube(tube("d4/tube1.json", d4)).entries() == ints({8, 2}));
    CHECK(quiddity_from_tube(tube("d4/tube2.json", d4)).entries() == ints({4, 4}));
    CHECK(quiddity_from_tube(tube("d4/tube3.json", d4)).entries() == ints({4, 4}));

    const FriezePattern f1 = frieze_from_tube(tube("d4/tube1.json", d4), 6);
    CHECK(f1.row(2) == ints({15, 15}));
    CHECK(f1.row(3) == ints({28, 112}));
    CHECK(f1.row(4) == ints({209, 209}));
    const FriezePattern f2 = frieze_from_tube(tube("d4/tube2.json", d4), 4);
    CHECK(f2.row(2) == ints({15, 15}));
    CHECK(f2.row(3) == ints({56, 56}));
    CHECK(f2.row(4) == ints({209, 209}));

    for (const char* t : {"d4/tube1.json", "d4/tube2.json", "d4/tube3.json"}) {
        const FriezePattern f = frieze_from_tube(tube(t, d4), 7);
        for (unsigned k = 1; k <= 3; ++k) CHECK(growth(f, k) == growth_via_homogeneous(14, k));
    }

    const Quiver kron = load_quiver("kronecker/quiver.json");
    const auto kt = io::tube_from_json(io::load_json(fixture("kronecker/tube.json")));
    CHECK(quiddity_from_tube(kt).entries() == ints({3}));
    CHECK(growth(frieze_from_tube(kt, 3), 1) == growth_from_affine_quiver(kron));
}

TEST_CASE("homogeneous recurrence") {
    CHECK(homogeneous_powers(14, 3) == ints({1, 14, 195, 2716}));
    const auto two = homogeneous_powers(2, 30);
    for (std::size_t k = 0; k < two.size(); ++k) CHECK(two[k] == static_cast<long>(k + 1));
    CHECK(growth_via_homogeneous(14, 2) == 194);
    CHECK(growth_via_homogeneous(14, 3) == 2702);
    for (long x1 : {2L, 3L, 14L, 322L, 1000003L}) {
        CHECK(growth_via_homogeneous(x1, 1) == x1);
        for (unsigned k = 1; k <= 6; ++k) CHECK(growth_via_homogeneous(x1, k) == bracelet_value(x1, k));
    }
}

TEST_CASE("degenerate member adds one") {
    const Quiver d4 = load_quiver("d4/quiver.json");
    const auto r = check_degenerate_identity(load_rep("d4/m_lambda.json", d4), load_rep("d4/m_lambda0.json", d4));
    CHECK(r.holds);
    CHECK(r.homogeneous.at_ones == 14);
    CHECK(r.degenerate.at_ones == 15);
    CHECK(r.degenerate.at_ones == generate(Quiddity(ints({8, 2})), 2).row(2)[0]);
    CHECK(r.degenerate.at_ones - r.homogeneous.at_ones - 1 == 0);
    CHECK(cc_map(zero_rep(d4)).at_ones == 1);
    CHECK(!check_degenerate_identity(load_rep("d4/m_lambda.json", d4), load_rep("d4/m_lambda.json", d4)).holds);
}

TEST_CASE("theta agrees with the CC map of the generic member") {
    const Quiver d4 = load_quiver("d4/quiver.json");
    CHECK(theta_from_affine_quiver(d4).value.laurent == cc_map(load_rep("d4/m_lambda.json", d4)).laurent);
    const Quiver a21 = load_quiver("a21/quiver.json");
    CHECK(theta_from_affine_quiver(a21).value.laurent == cc_map(load_rep("a21/m_lambda.json", a21)).laurent);
}
