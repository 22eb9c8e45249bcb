#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "friezelab/cluster.hpp"
#include "support.hpp"

using namespace friezelab;
using testing::load_quiver;

namespace {

Quiver kronecker() { return Quiver({{0, 2}, {-2, 0}}); }

Permutation random_permutation(std::size_t m, std::mt19937_64& rng) {
    Permutation p(m);
    std::iota(p.begin(), p.end(), std::size_t{0});
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

bool skew_symmetric(const Quiver& q) {
    for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = 0; j < q.size(); ++j)
            if (q(i, j) != -q(j, i)) return false;
    return true;
}

Seed apply_generator(Seed s, ModularGenerator g, int times) {
    for (int i = 0; i < times; ++i) s = modular_generator(s, g).seed;
    return s;
}

}  // namespace

TEST_CASE("kronecker mutation flips the double arrow") {
    const Quiver m = mutate_quiver(kronecker(), 0);
    CHECK(m(1, 0) == 2);
    CHECK(m(0, 1) == -2);
    CHECK(find_double_arrows(kronecker()) == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}});
}

TEST_CASE("D4 star mutated at the centre") {
    const Quiver q = load_quiver("d4/quiver.json");
    CHECK(find_double_arrows(q).empty());
    // hand computed: arrows at 3 reverse, paths 4->3->1 etc. become 4->1, 4->2, 5->1, 5->2
    const ExchangeMatrix expected = {
        {0, 0, 1, -1, -1},
        {0, 0, 1, -1, -1},
        {-1, -1, 0, 1, 1},
        {1, 1, -1, 0, 0},
        {1, 1, -1, 0, 0},
    };
    CHECK(mutate_quiver(q, q.vertex("3")).matrix() == expected);
}

TEST_CASE("mutation is an involution and keeps skew-symmetry") {
    std::mt19937_64 rng(11);
    const Quiver start = load_quiver("e6/quiver.json");
    Quiver q = start;
    for (int step = 0; step < 500; ++step) {
        const std::size_t k = std::uniform_int_distribution<std::size_t>(0, q.size() - 1)(rng);
        const Quiver m = mutate_quiver(q, k);
        CHECK(skew_symmetric(m));
        CHECK(mutate_quiver(m, k) == q);
        q = m;
    }
}

TEST_CASE("seed mutation: exchange relation, involution, frozen vertices") {
    const Seed s = initial_seed(kronecker());
    const Seed t = mutate_seed(s, 1);
    const VarList& v = s.vars[0].vars();
    CHECK(t.vars[1] == LaurentPoly::parse("x0^2*x1^-1 + x1^-1", v));
    CHECK(t.vars[0] == s.vars[0]);
    CHECK(mutate_seed(t, 1) == s);

    const Seed f = initial_seed(kronecker(), {false, true});
    CHECK_ERROR_KIND(mutate_seed(f, 1), ErrorKind::FrozenVertex);
    CHECK(f.vars[1] == LaurentPoly::constant(f.vars[0].vars(), 1));
}

TEST_CASE("random words from affine seeds stay Laurent") {
    std::mt19937_64 rng(17);
    for (const char* rel : {"d4/quiver.json", "e6/quiver.json", "kronecker/quiver.json"}) {
        const Quiver q = load_quiver(rel);
        for (int trial = 0; trial < 40; ++trial) {
            Seed s = initial_seed(q);
            const int len = std::uniform_int_distribution<int>(0, 12)(rng);
            std::vector<std::size_t> word;
            for (int i = 0; i < len; ++i) {
                const std::size_t k = std::uniform_int_distribution<std::size_t>(0, q.size() - 1)(rng);
                word.push_back(k);
                CHECK_NOTHROW(s = mutate_seed(s, k));
            }
            std::reverse(word.begin(), word.end());
            for (std::size_t k : word) s = mutate_seed(s, k);
            CHECK(s == initial_seed(q));
        }
    }
}

TEST_CASE("isomorphisms") {
    const auto k = quiver_isomorphisms(kronecker(), kronecker());
    REQUIRE(k.size() == 1);
    CHECK(k.front() == Permutation{0, 1});

    const Quiver e6 = e_double_arrow_quiver(6);
    CHECK(quiver_isomorphisms(e6, e6).size() == 2);
    CHECK(quiver_isomorphisms(e_double_arrow_quiver(7), e_double_arrow_quiver(7)).size() == 1);

    const Quiver d4 = load_quiver("d4/quiver.json");
    const auto back = quiver_isomorphisms(d4, mutate_quiver(mutate_quiver(d4, 1), 1));
    CHECK(std::find(back.begin(), back.end(), Permutation{0, 1, 2, 3, 4}) != back.end());

    std::mt19937_64 rng(23);
    for (int i = 0; i < 20; ++i) {
        const Permutation sigma = random_permutation(e6.size(), rng);
        const Quiver r = permute_quiver(e6, sigma);
        for (const Permutation& iso : quiver_isomorphisms(e6, r))
            for (std::size_t a = 0; a < e6.size(); ++a)
                for (std::size_t b = 0; b < e6.size(); ++b) CHECK(r(iso[a], iso[b]) == e6(a, b));
        CHECK(quiver_isomorphisms(e6, r).size() == 2);
    }
}

TEST_CASE("canonical form ignores labels and separates shapes") {
    std::mt19937_64 rng(29);
    for (const char* rel : {"d4/quiver.json", "e6/quiver.json", "e8/double_arrow.json"}) {
        const Quiver q = load_quiver(rel);
        for (int i = 0; i < 30; ++i) {
            const Quiver r = permute_quiver(q, random_permutation(q.size(), rng));
            CHECK(canonical_form(r) == canonical_form(q));
        }
    }
    const Quiver linear = Quiver::from_arrows(3, {{0, 1}, {1, 2}});
    const Quiver cyclic = Quiver::from_arrows(3, {{0, 1}, {1, 2}, {2, 0}});
    const Quiver source = Quiver::from_arrows(3, {{0, 1}, {0, 2}});
    CHECK(canonical_form(linear) != canonical_form(cyclic));
    CHECK(canonical_form(linear) != canonical_form(source));
    CHECK(canonical_form(kronecker()) == canonical_form(mutate_quiver(kronecker(), 0)));
}

TEST_CASE("mutation class search") {
    const auto k = mutation_class_search(kronecker(), has_double_arrow);
    CHECK(k.word.vertices.empty());
    CHECK(k.quiver == kronecker());

    const Quiver d4 = load_quiver("d4/quiver.json");
    const auto d = mutation_class_search(d4, has_double_arrow);
    CHECK(apply_word(d4, d.word) == d.quiver);
    const auto arrows = find_double_arrows(d.quiver);
    REQUIRE(arrows.size() == 1);
    int triangles = 0;
    for (std::size_t w = 0; w < d.quiver.size(); ++w)
        if (d.quiver(arrows[0].second, w) > 0 && d.quiver(w, arrows[0].first) > 0) ++triangles;
    CHECK(triangles == 3);

    const Quiver e6 = load_quiver("e6/quiver.json");
    const Quiver fig = e_double_arrow_quiver(6);
    const auto e = mutation_class_search(e6, [&](const Quiver& q) { return !quiver_isomorphisms(fig, q).empty(); });
    CHECK(apply_word(e6, e.word) == e.quiver);

    // a finite mutation class without double arrows exhausts the search
    CHECK_ERROR_KIND(mutation_class_search(Quiver::from_arrows(3, {{0, 1}, {1, 2}}), has_double_arrow),
                     ErrorKind::NotFound);
}

TEST_CASE("words: parse, format, apply") {
    const Quiver q = e_double_arrow_quiver(6);
    const MutationWord w = parse_word("a,0,1", q);
    CHECK(w.vertices == std::vector<std::size_t>{q.vertex("a"), q.vertex("0"), q.vertex("1")});
    CHECK(format_word(w, q) == "a,0,1");
    CHECK(apply_word(q, w) == mutate_quiver(mutate_quiver(mutate_quiver(q, q.vertex("a")), q.vertex("0")), q.vertex("1")));
    CHECK_ERROR_KIND(parse_word("a,zz", q), ErrorKind::InvalidArgument);
}

TEST_CASE("modular generators satisfy the braid-type relations") {
    for (int n : {6, 7, 8}) {
        CAPTURE(n);
        const Quiver q = e_double_arrow_quiver(n);
        const Seed s = initial_seed(q);
        const int k = n - 5;
        const Seed a2 = apply_generator(s, ModularGenerator::TauA, 2);
        const Seed b3 = apply_generator(s, ModularGenerator::TauB, 3);
        const Seed ck = apply_generator(s, ModularGenerator::TauC, k + 2);
        CHECK(a2 == b3);
        CHECK(b3 == ck);
        CHECK(a2.quiver == q);
        CHECK(!(modular_generator(s, ModularGenerator::TauA).seed == s));
        CHECK(modular_generator(s, ModularGenerator::TauA).order == WordOrder::LeftmostFirst);
    }
}

TEST_CASE("gamma on E6") {
    const Seed s = initial_seed(e_double_arrow_quiver(6));
    const Seed g = modular_generator(s, ModularGenerator::Gamma).seed;
    CHECK(!(g == s));
    CHECK(modular_generator(g, ModularGenerator::Gamma).seed == s);

    const Seed ga = apply_generator(apply_generator(s, ModularGenerator::TauA, 1), ModularGenerator::Gamma, 1);
    const Seed ag = apply_generator(apply_generator(s, ModularGenerator::Gamma, 1), ModularGenerator::TauA, 1);
    CHECK(ga == ag);
    const Seed bg = apply_generator(apply_generator(s, ModularGenerator::TauB, 1), ModularGenerator::Gamma, 1);
    const Seed gc = apply_generator(apply_generator(s, ModularGenerator::Gamma, 1), ModularGenerator::TauC, 1);
    CHECK(bg == gc);

    CHECK_ERROR_KIND(modular_generator(initial_seed(load_quiver("d4/quiver.json")), ModularGenerator::TauA),
                     ErrorKind::NotFig5Shape);
}

TEST_CASE("generator names") {
    CHECK(parse_generator("ta") == ModularGenerator::TauA);
    CHECK(parse_generator("tau_c") == ModularGenerator::TauC);
    CHECK(parse_generator("gamma") == ModularGenerator::Gamma);
    CHECK(generator_labels(ModularGenerator::TauC, 7) == std::vector<std::string>{"c2", "c1", "c", "0", "1"});
    CHECK(generator_labels(ModularGenerator::TauB, 6) == std::vector<std::string>{"b1", "b", "0", "1"});
}
