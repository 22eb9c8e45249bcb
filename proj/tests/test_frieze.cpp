#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "friezelab/error.hpp"
#include "friezelab/frieze.hpp"

using namespace friezelab;

namespace {

std::vector<Integer> ints(std::initializer_list<long> xs) {
    std::vector<Integer> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

// Independent construction: rows filled by the diamond quotient
// x_{i,j+1} = (x_{i,j} x_{i+1,j+1} - 1) / x_{i+1,j} over the rationals.
std::map<std::pair<long, long>, Rational> diamond_oracle(const std::vector<Integer>& a, int depth, long span) {
    const long n = static_cast<long>(a.size());
    std::map<std::pair<long, long>, Rational> x;
    for (long i = -span; i <= span + depth + 2; ++i) {
        x[{i, i}] = 0;
        x[{i, i + 1}] = 1;
        x[{i - 2, i}] = Rational(a[static_cast<std::size_t>(((i % n) + n) % n)]);
    }
    for (long d = 3; d <= depth + 1; ++d) {
        for (long i = -span; i + d <= span + depth + 2; ++i) {
            const long j = i + d - 1;
            x[{i, j + 1}] = (x.at({i, j}) * x.at({i + 1, j + 1}) - 1) / x.at({i + 1, j});
        }
    }
    return x;
}

}  // namespace

TEST_CASE("chebyshev values") {
    const VarList v({"x"});
    const LaurentPoly x = LaurentPoly::variable(v, 0);
    CHECK(chebyshev_T(0, x) == LaurentPoly::constant(v, 2));
    CHECK(chebyshev_T(2U, Integer(14)) == 194);
    CHECK(chebyshev_T(3U, Integer(14)) == Integer(14) * 194 - 14);
    CHECK(chebyshev_S(-2, x) == LaurentPoly::constant(v, -1));
    CHECK(chebyshev_S(-1, Integer(14)) == 0);
    CHECK(chebyshev_S(2, Integer(14)) == 195);
    CHECK(chebyshev_S(3, Integer(14)) == 2716);
}

TEST_CASE("T_k = S_k - S_{k-2} symbolically") {
    const VarList v({"x"});
    const LaurentPoly x = LaurentPoly::variable(v, 0);
    for (int k = 0; k <= 20; ++k) {
        CHECK(chebyshev_T(static_cast<unsigned>(k), x) == chebyshev_S(k, x) - chebyshev_S(k - 2, x));
    }
}

TEST_CASE("generate reproduces the (8,2), (4,4) and (9,36) friezes") {
    const auto f = generate(Quiddity(ints({8, 2})), 6);
    CHECK(f.row(1) == ints({8, 2}));
    CHECK(f.row(2) == ints({15, 15}));
    CHECK(f.row(3) == ints({28, 112}));
    CHECK(f.row(4) == ints({209, 209}));
    CHECK(f.row(5) == ints({1560, 390}));
    CHECK(f.row(6) == ints({2911, 2911}));

    const auto g = generate(Quiddity(ints({4, 4})), 5);
    CHECK(g.row(2) == ints({15, 15}));
    CHECK(g.row(3) == ints({56, 56}));
    CHECK(g.row(4) == ints({209, 209}));

    const auto h = generate(Quiddity(ints({9, 36})), 4);
    CHECK(h.row(2) == ints({323, 323}));
    // periodic, so the third displayed cell repeats the first
    CHECK(h.row(3, 4) == ints({11592, 2898, 11592, 2898}));
}

TEST_CASE("generate agrees with the diamond-quotient oracle") {
    std::mt19937_64 rng(3);
    int tested = 0;
    while (tested < 25) {
        std::vector<Integer> a;
        const int n = std::uniform_int_distribution<int>(1, 4)(rng);
        for (int i = 0; i < n; ++i) a.emplace_back(std::uniform_int_distribution<int>(2, 6)(rng));
        const int depth = 3 * n + 1;
        const auto f = generate(Quiddity(a), depth);
        const auto x = diamond_oracle(a, depth, 2 * n);
        for (long i = 0; i < n; ++i)
            for (long d = -1; d <= depth; ++d) CHECK(Rational(f.entry(i, i + d + 1)) == x.at({i, i + d + 1}));
        ++tested;
    }
}

TEST_CASE("stored invariants: diamond, periodicity, positivity") {
    std::mt19937_64 rng(5);
    int survivors = 0;
    for (int attempt = 0; attempt < 5000 && survivors < 100; ++attempt) {
        std::vector<Integer> a;
        const int n = std::uniform_int_distribution<int>(1, 6)(rng);
        for (int i = 0; i < n; ++i) a.emplace_back(std::uniform_int_distribution<int>(1, 6)(rng));
        try {
            const auto f = generate(Quiddity(a), 3 * n + 1);
            ++survivors;
            CHECK(diamond_holds(f));
            for (long i = 0; i < n; ++i)
                for (long d = 1; d <= f.depth(); ++d) {
                    CHECK(f.entry(i, i + d + 1) == f.entry(i + n, i + n + d + 1));
                    CHECK(f.entry(i, i + d + 1) > 0);
                }
            for (unsigned k = 1; k <= 3; ++k) CHECK(measured_growth(f, k) == chebyshev_T(k, growth(f, 1)));
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::NonPositiveEntry);
        }
    }
    CHECK(survivors == 100);
}

TEST_CASE("growth coefficients") {
    const auto f = generate(Quiddity(ints({8, 2})), 7);
    CHECK(growth(f, 1) == 14);
    CHECK(growth(f, 2) == 194);
    CHECK(growth(f, 3) == 2702);
    CHECK(growth(generate(Quiddity(ints({7, 7, 7})), 4), 1) == 322);
    CHECK(growth(generate(Quiddity(ints({9, 36})), 3), 1) == 322);
}

TEST_CASE("classify_growth") {
    CHECK(classify_growth(generate(Quiddity(ints({8, 2})), 5)) == GrowthClass::AffineFast);

    // search small quiddities for principal growth 2
    std::vector<std::vector<Integer>> found;
    for (long a = 1; a <= 4; ++a)
        for (long b = 0; b <= 4; ++b) {
            const auto q = b == 0 ? ints({a}) : ints({a, b});
            try {
                const auto f = generate(Quiddity(q), 3 * static_cast<int>(q.size()) + 1);
                if (growth(f, 1) == 2) {
                    found.push_back(q);
                    CHECK(classify_growth(f) == GrowthClass::ArithmeticLike);
                }
            } catch (const Error&) {
            }
        }
    REQUIRE(!found.empty());
    CHECK(std::find(found.begin(), found.end(), ints({2})) != found.end());

    // (1,3) has principal growth 1 and cannot extend far
    const auto small = generate(Quiddity(ints({1, 3})), 2);
    CHECK(growth(small, 1) == 1);
    try {
        classify_growth(small);
        FAIL("expected InvalidFrieze");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidFrieze);
    }
    CHECK_THROWS_AS(generate(Quiddity(ints({1, 3})), 6), Error);
}

TEST_CASE("quiddity validation and cyclic equality") {
    CHECK_THROWS_AS(Quiddity(ints({0, 5})), Error);
    CHECK_THROWS_AS(Quiddity(std::vector<Integer>{}), Error);
    CHECK(Quiddity(ints({8, 2})) == Quiddity(ints({2, 8})));
    CHECK(!(Quiddity(ints({1, 2, 3})) == Quiddity(ints({1, 3, 2}))));
}

TEST_CASE("growth needs enough rows") {
    const auto f = generate(Quiddity(ints({8, 2})), 3);
    CHECK_THROWS_AS(measured_growth(f, 2), Error);
    CHECK(growth(f, 2) == 194);
}
