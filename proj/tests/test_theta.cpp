#include <doctest.h>

#include <functional>
#include <random>

#include "friezelab/theta.hpp"
#include "support.hpp"

using namespace friezelab;
using testing::load_quiver;

namespace {

// 0 => 1 with triangles 1 -> w -> 0 for each extra label
Quiver double_arrow_with(const std::vector<std::string>& extra) {
    std::vector<std::string> labels = {"0", "1"};
    labels.insert(labels.end(), extra.begin(), extra.end());
    std::vector<std::pair<std::size_t, std::size_t>> arrows = {{0, 1}, {0, 1}};
    for (std::size_t w = 2; w < labels.size(); ++w) {
        arrows.emplace_back(1, w);
        arrows.emplace_back(w, 0);
    }
    return Quiver::from_arrows(labels.size(), arrows, labels);
}

}  // namespace

TEST_CASE("triangle neighbours") {
    const Quiver four = double_arrow_with({"a", "b", "c"});
    CHECK(triangle_neighbors(four, 0, 1) == std::vector<std::size_t>{2, 3, 4});
    const Quiver three = double_arrow_with({"a", "b"});
    CHECK(triangle_neighbors(three, 0, 1) == std::vector<std::size_t>{2, 3});
    CHECK(triangle_neighbors(Quiver({{0, 2}, {-2, 0}}), 0, 1).empty());
}

TEST_CASE("theta at the initial double-arrow seed") {
    const Seed s = initial_seed(double_arrow_with({"a", "b", "c"}));
    const VarList& v = s.vars[0].vars();
    const ThetaValue t = theta(s, 0, 1);
    CHECK(t.laurent == LaurentPoly::parse("x1*x0^-1 + x0*x1^-1 + x_a*x_b*x_c*x0^-1*x1^-1", v));
    CHECK(t.integer == 3);
    CHECK(theta(s).laurent == t.laurent);
    CHECK_ERROR_KIND(theta(s, 1, 0), ErrorKind::MissingDoubleArrow);
    CHECK_ERROR_KIND(theta(initial_seed(load_quiver("d4/quiver.json"))), ErrorKind::MissingDoubleArrow);

    const Seed k = initial_seed(Quiver({{0, 2}, {-2, 0}}));
    CHECK(theta(k).laurent == LaurentPoly::parse("x1*x0^-1 + x0*x1^-1 + x0^-1*x1^-1", k.vars[0].vars()));
}

TEST_CASE("theta is invariant under the E6 modular generators") {
    const Seed s = initial_seed(e_double_arrow_quiver(6));
    CHECK(theta_invariance(s, {}));
    for (auto g : {ModularGenerator::TauA, ModularGenerator::TauB, ModularGenerator::TauC, ModularGenerator::Gamma}) {
        const Seed t = modular_generator(s, g).seed;
        CHECK(theta(t).laurent == theta(s).laurent);
    }
}

TEST_CASE("theta is invariant along every short double-arrow-preserving word from D4") {
    const AffineTheta a = theta_from_affine_quiver(load_quiver("d4/quiver.json"));
    const Seed& s = a.seed;
    std::vector<MutationWord> words;
    std::function<void(MutationWord&)> extend = [&](MutationWord& w) {
        if (!w.vertices.empty() && has_double_arrow(apply_word(s.quiver, w))) words.push_back(w);
        if (w.vertices.size() == 4) return;
        for (std::size_t k = 0; k < s.quiver.size(); ++k) {
            if (!w.vertices.empty() && w.vertices.back() == k) continue;
            w.vertices.push_back(k);
            extend(w);
            w.vertices.pop_back();
        }
    };
    MutationWord root;
    extend(root);
    CHECK(words.size() > 5);
    CHECK(theta_invariance(s, words));

    // a word leaving the double arrow cannot be compared
    MutationWord bad;
    const auto da = find_double_arrows(s.quiver).front();
    bad.vertices = {triangle_neighbors(s.quiver, da.first, da.second).front()};
    REQUIRE(!has_double_arrow(apply_word(s.quiver, bad)));
    CHECK_THROWS_AS(theta_invariance(s, {bad}), Error);
}

TEST_CASE("growth from affine quivers") {
    CHECK(growth_from_affine_quiver(load_quiver("d4/quiver.json")) == 14);
    CHECK(growth_from_affine_quiver(load_quiver("e6/quiver.json")) == 322);
    CHECK(growth_from_affine_quiver(load_quiver("kronecker/quiver.json")) == 3);
    CHECK(growth_from_affine_quiver(load_quiver("a21/quiver.json")) >= 3);
    CHECK_ERROR_KIND(growth_from_affine_quiver(load_quiver("e6/quiver.json"), 5), ErrorKind::NotFound);
}

TEST_CASE("bracelet values") {
    CHECK(bracelet_value(14, 1) == 14);
    CHECK(bracelet_value(14, 2) == 194);
    const Integer t(322);
    CHECK(bracelet_value(t, 3) == t * t * t - 3 * t);
    CHECK(bracelet_value(t, 3) == Integer("33385282"));
    CHECK_ERROR_KIND(bracelet_value(1, 2), ErrorKind::InvalidArgument);
    CHECK_ERROR_KIND(bracelet_value(3, 0), ErrorKind::InvalidArgument);
}

TEST_CASE("every orientation of an affine diagram reaches a double arrow") {
    using Edges = std::vector<std::pair<std::size_t, std::size_t>>;
    // star with arms of the given lengths around vertex 0
    auto star = [](std::vector<int> arms) {
        Edges e;
        std::size_t next = 1;
        for (int len : arms) {
            std::size_t prev = 0;
            for (int i = 0; i < len; ++i, ++next) {
                e.emplace_back(prev, next);
                prev = next;
            }
        }
        return std::make_pair(next, e);
    };
    const std::vector<std::pair<std::size_t, Edges>> diagrams = {
        star({1, 1, 1, 1}),                                // D~4
        {6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}}},  // A~5
        star({2, 2, 2}),                                   // E~6
        star({1, 3, 3}),                                   // E~7
        star({1, 2, 5}),                                   // E~8
    };
    std::mt19937_64 rng(61);
    for (const auto& [m, edges] : diagrams) {
        for (int trial = 0; trial < 6; ++trial) {
            Edges arrows;
            for (const auto& [a, b] : edges) arrows.push_back(std::bernoulli_distribution(0.5)(rng) ? std::make_pair(a, b) : std::make_pair(b, a));
            const Quiver q = Quiver::from_arrows(m, arrows);
            if (!q.is_acyclic()) continue;  // the all-clockwise cycle is not affine
            const SearchResult found = mutation_class_search(q, has_double_arrow);
            CHECK(apply_word(q, found.word) == found.quiver);
            // the E~8 growth element has tens of thousands of terms; search only
            if (m == 9) continue;
            const AffineTheta t = theta_from_affine_quiver(q);
            CHECK(has_double_arrow(t.search.quiver));
            CHECK(t.value.integer >= 2);
            CHECK(at_ones(t.value.laurent) == t.value.integer);
        }
    }
}
