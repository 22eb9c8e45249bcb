#include "friezelab/reproduce.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <cstdio>
#include <random>
#include <sstream>

#include "friezelab/cc.hpp"
#include "friezelab/error.hpp"
#include "friezelab/frieze.hpp"
#include "friezelab/io.hpp"
#include "friezelab/theta.hpp"

namespace friezelab {

namespace {

namespace fs = std::filesystem;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void expect(bool ok, const std::string& what) {
        if (ok) return;
        if (!pass) detail << "; ";
        if (pass) detail.str("");
        pass = false;
        detail << what;
    }
};

std::vector<Integer> ints(std::initializer_list<long> xs) {
    std::vector<Integer> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

std::string join(const std::vector<Integer>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + to_decimal(xs[i]);
    return s;
}

std::string join(const DimVector& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
    return s;
}

/// Row r of the staggered display must equal `printed` repeated cyclically.
void expect_row(Outcome& o, const FriezePattern& f, int r, const std::vector<Integer>& printed, const std::string& name) {
    const auto row = f.row(r);
    bool ok = true;
    for (std::size_t t = 0; t < row.size(); ++t) ok = ok && row[t] == printed[t % printed.size()];
    o.expect(ok, name + " row " + std::to_string(r) + " is " + join(row) + ", expected " + join(printed));
}

struct Fixtures {
    fs::path dir;
    Quiver quiver(const std::string& rel) const { return io::quiver_from_json(io::load_json(dir / rel)).quiver; }
    QuiverRep rep(const std::string& rel) const { return io::rep_from_json(io::load_json(dir / rel)); }
    std::vector<QuiverRep> tube(const std::string& rel, const Quiver& q) const {
        return io::tube_from_json(io::load_json(dir / rel), q);
    }
};

// The Laurent polynomial displayed for the homogeneous quasi-simple of the D~4 example.
LaurentPoly displayed_m_lambda(const VarList& vars) {
    const LaurentPoly num = LaurentPoly::parse(
        "x1^2*x2^2*x3^2 + 2*x1^2*x2^2*x3 + x1^2*x2^2 + 4*x1*x2*x3*x4*x5 + 2*x1*x2*x4*x5"
        " + x3^2*x4^2*x5^2 + 2*x3*x4^2*x5^2 + x4^2*x5^2",
        vars);
    return num * LaurentPoly::parse("x1^-1*x2^-1*x3^-2*x4^-1*x5^-1", vars);
}

// ---------------------------------------------------------------------------

void check_frieze_rows(Outcome& o, const Fixtures&) {
    const auto f1 = generate(Quiddity(ints({8, 2})), 6);
    expect_row(o, f1, 1, ints({8, 2}), "(8,2)");
    expect_row(o, f1, 2, ints({15}), "(8,2)");
    expect_row(o, f1, 3, ints({28, 112}), "(8,2)");
    expect_row(o, f1, 4, ints({209}), "(8,2)");
    expect_row(o, f1, 5, ints({1560, 390}), "(8,2)");
    expect_row(o, f1, 6, ints({2911}), "(8,2)");
    const auto f2 = generate(Quiddity(ints({4, 4})), 5);
    expect_row(o, f2, 2, ints({15}), "(4,4)");
    expect_row(o, f2, 3, ints({56}), "(4,4)");
    expect_row(o, f2, 4, ints({209}), "(4,4)");
    o.expect(diamond_holds(f1) && diamond_holds(f2), "diamond relation fails");
}

void check_growth(Outcome& o, const Fixtures&) {
    for (const auto& q : {ints({8, 2}), ints({4, 4}), ints({4, 4})}) {
        const auto f = generate(Quiddity(q), 3 * static_cast<int>(q.size()) + 1);
        const std::string name = "(" + join(q) + ")";
        o.expect(growth(f, 1) == 14, name + " s1 = " + to_decimal(growth(f, 1)));
        o.expect(growth(f, 2) == 194, name + " s2 = " + to_decimal(growth(f, 2)));
        o.expect(growth(f, 3) == 2702 && measured_growth(f, 3) == 2702, name + " s3 != 2702");
    }
    o.expect(chebyshev_T(3U, Integer(14)) == 2702, "T3(14) != 2702");
}

void check_table(Outcome& o, const Fixtures& fx) {
    const auto m = fx.rep("d4/m_lambda.json");
    const std::vector<std::pair<DimVector, int>> expected{
        {{0, 0, 0, 0, 0}, 1}, {{1, 0, 0, 0, 0}, 1}, {{0, 1, 0, 0, 0}, 1}, {{1, 1, 0, 0, 0}, 1},
        {{1, 0, 1, 0, 0}, 1}, {{0, 1, 1, 0, 0}, 1}, {{1, 1, 1, 0, 0}, 2}, {{1, 1, 2, 0, 0}, 1},
        {{1, 1, 1, 1, 0}, 1}, {{1, 1, 2, 1, 0}, 1}, {{1, 1, 1, 0, 1}, 1}, {{1, 1, 2, 0, 1}, 1},
        {{1, 1, 2, 1, 1}, 1},
    };
    const auto table = grassmannian_table(m, default_primes(), 1);
    o.expect(table.size() == expected.size(), std::to_string(table.size()) + " rows, expected 13");
    for (const auto& [e, chi] : expected) {
        const auto it = std::find_if(table.begin(), table.end(), [&](const GrassmannianRow& r) { return r.e == e; });
        if (it == table.end()) {
            o.expect(false, "missing row " + join(e));
            continue;
        }
        o.expect(it->chi == chi, "chi(" + join(e) + ") = " + to_decimal(it->chi));
        o.expect(it->held_out != 0, "no held-out prime for " + join(e));
    }
}

void check_cc_golden(Outcome& o, const Fixtures& fx) {
    const auto m = fx.rep("d4/m_lambda.json");
    const CCValue x = cc_map(m);
    const LaurentPoly expected = displayed_m_lambda(x.laurent.vars());
    o.expect(x.laurent == expected, "X_M = " + x.laurent.to_string());
    o.expect(x.at_ones == 14, "X_M at ones = " + to_decimal(x.at_ones));
}

void check_tubes(Outcome& o, const Fixtures& fx) {
    const Quiver d4 = fx.quiver("d4/quiver.json");
    const std::vector<std::pair<std::string, std::vector<Integer>>> tubes{
        {"d4/tube1.json", ints({8, 2})}, {"d4/tube2.json", ints({4, 4})}, {"d4/tube3.json", ints({4, 4})}};
    for (const auto& [file, q] : tubes) {
        const Quiddity got = quiddity_from_tube(fx.tube(file, d4));
        o.expect(got.entries() == q, file + " gives (" + join(got.entries()) + ")");
    }
}

void check_theta_d4(Outcome& o, const Fixtures& fx) {
    const Quiver d4 = fx.quiver("d4/quiver.json");
    const AffineTheta t = theta_from_affine_quiver(d4, 1000);
    o.expect(t.value.integer == 14, "theta at ones = " + to_decimal(t.value.integer));
    o.expect(t.search.nodes <= 1000, "search visited " + std::to_string(t.search.nodes) + " quivers");
    const CCValue x = cc_map(fx.rep("d4/m_lambda.json"));
    o.expect(t.value.laurent == x.laurent, "theta " + t.value.laurent.to_string() + " differs from X_M");
}

void check_e6(Outcome& o, const Fixtures& fx) {
    const Quiver e6 = fx.quiver("e6/quiver.json");
    const Integer g = growth_from_affine_quiver(e6);
    o.expect(g == 322, "theta at ones = " + to_decimal(g));

    const auto f1 = generate(Quiddity(ints({9, 36})), 7);
    expect_row(o, f1, 2, ints({323}), "(9,36)");
    // Periodicity forces 11592 in the third column; the printed value there has a dropped digit.
    expect_row(o, f1, 3, ints({11592, 2898}), "(9,36)");
    o.expect(f1.row(3, 4)[2] == 11592, "(9,36) row 3 column 3 is not 11592");
    o.expect(growth(f1, 1) == 322, "(9,36) s1 = " + to_decimal(growth(f1, 1)));

    const auto f2 = generate(Quiddity(ints({7, 7, 7})), 10);
    expect_row(o, f2, 2, ints({48}), "(7,7,7)");
    expect_row(o, f2, 3, ints({329}), "(7,7,7)");
    o.expect(growth(f2, 1) == 322, "(7,7,7) s1 = " + to_decimal(growth(f2, 1)));

    const auto tubes = io::load_json(fx.dir / "e6/quiddities.json").at("tubes");
    const DimVector d = delta(e6);
    for (const auto& tube : tubes) {
        std::vector<Integer> q;
        for (const auto& a : tube.at("quiddity")) q.push_back(io::integer_from_json(a));
        DimVector sum(d.size(), 0);
        for (const auto& v : tube.at("dimvectors"))
            for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += v.at(i).get<int>();
        o.expect(sum == d, "tube dimension vectors do not sum to delta");
        o.expect(growth(generate(Quiddity(q), 3 * static_cast<int>(q.size()) + 1), 1) == 322,
                 "tube quiddity (" + join(q) + ") does not grow by 322");
    }
}

Seed apply_generators(Seed s, std::initializer_list<ModularGenerator> gs) {
    for (auto g : gs) s = modular_generator(s, g).seed;
    return s;
}

Seed power(Seed s, ModularGenerator g, int k) {
    for (int i = 0; i < k; ++i) s = modular_generator(s, g).seed;
    return s;
}

void check_modular(Outcome& o, const Fixtures& fx) {
    using G = ModularGenerator;
    for (int n : {6, 7, 8}) {
        const std::string name = "e" + std::to_string(n);
        const Seed s = initial_seed(fx.quiver(name + "/double_arrow.json"));
        const Seed a2 = power(s, G::TauA, 2);
        const Seed b3 = power(s, G::TauB, 3);
        const Seed ck = power(s, G::TauC, n - 3);
        o.expect(a2 == b3, name + ": ta^2 != tb^3");
        o.expect(a2 == ck, name + ": ta^2 != tc^" + std::to_string(n - 3));
        o.expect(!(a2 == s), name + ": ta^2 is the identity");
        if (n == 6) {
            o.expect(power(s, G::Gamma, 2) == s, "gamma^2 != id");
            o.expect(apply_generators(s, {G::TauA, G::Gamma}) == apply_generators(s, {G::Gamma, G::TauA}),
                     "gamma ta != ta gamma");
            o.expect(apply_generators(s, {G::TauB, G::Gamma}) == apply_generators(s, {G::Gamma, G::TauC}),
                     "gamma tb != tc gamma");
        }
    }
}

void check_homogeneous(Outcome& o, const Fixtures&) {
    const Integer x1 = 14;
    const auto u = homogeneous_powers(x1, 6);
    o.expect(u[2] == 195 && u[3] == 2716, "u2, u3 = " + to_decimal(u[2]) + ", " + to_decimal(u[3]));
    const auto f = generate(Quiddity(ints({8, 2})), 6 * 2 + 1);
    for (unsigned k = 1; k <= 6; ++k) {
        const Integer s = growth_via_homogeneous(x1, k);
        o.expect(s == chebyshev_T(k, x1), "k=" + std::to_string(k) + ": differs from T_k");
        o.expect(s == measured_growth(f, k), "k=" + std::to_string(k) + ": differs from the frieze");
    }
}

void check_degenerate(Outcome& o, const Fixtures& fx) {
    const auto r = check_degenerate_identity(fx.rep("d4/m_lambda.json"), fx.rep("d4/m_lambda0.json"));
    o.expect(r.holds, "X(lambda=0) = " + r.degenerate.laurent.to_string());
    o.expect(r.degenerate.at_ones == 15, "X(lambda=0) at ones = " + to_decimal(r.degenerate.at_ones));
}

void check_properties(Outcome& o, const Fixtures& fx, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

    int survivors = 0;
    for (int attempt = 0; survivors < 100 && attempt < 100000; ++attempt) {
        std::vector<Integer> q;
        const int n = uniform(1, 6);
        for (int i = 0; i < n; ++i) q.emplace_back(uniform(1, 6));
        std::optional<FriezePattern> f;
        try {
            f = generate(Quiddity(q), 3 * n + 1);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::NonPositiveEntry) throw;
            continue;
        }
        ++survivors;
        o.expect(diamond_holds(*f), "diamond fails for (" + join(q) + ")");
    }
    o.expect(survivors == 100, "only " + std::to_string(survivors) + " random quiddities survived");

    std::vector<Quiver> affine{fx.quiver("d4/quiver.json"), fx.quiver("e6/quiver.json"),
                               fx.quiver("kronecker/quiver.json"), fx.quiver("a21/quiver.json"),
                               fx.quiver("e7/double_arrow.json"), fx.quiver("e8/double_arrow.json")};
    for (int trial = 0; trial < 500; ++trial) {
        const Quiver& q = affine[static_cast<std::size_t>(uniform(0, static_cast<int>(affine.size()) - 1))];
        const int m = static_cast<int>(q.size());
        Seed s = initial_seed(q);
        for (int step = uniform(0, 5); step > 0; --step) s = mutate_seed(s, static_cast<std::size_t>(uniform(0, m - 1)));
        const auto k = static_cast<std::size_t>(uniform(0, m - 1));
        const Seed back = mutate_seed(mutate_seed(s, k), k);
        o.expect(back == s, "mutation is not an involution at vertex " + std::to_string(k));
    }

    for (int trial = 0; trial < 200; ++trial) {
        const Quiver& q = affine[static_cast<std::size_t>(uniform(0, static_cast<int>(affine.size()) - 1))];
        const int m = static_cast<int>(q.size());
        Seed s = initial_seed(q);
        const int len = uniform(1, 10);
        std::size_t last = q.size();
        for (int step = 0; step < len; ++step) {
            std::size_t k;
            do {
                k = static_cast<std::size_t>(uniform(0, m - 1));
            } while (k == last && m > 1);
            s = mutate_seed(s, k);  // NotDivisible would abort the check
            last = k;
        }
    }

    const Quiver d4 = fx.quiver("d4/quiver.json");
    std::vector<QuiverRep> reps{fx.rep("d4/m_lambda.json"), fx.rep("d4/m_lambda0.json"), fx.rep("a21/m_lambda.json")};
    for (const char* t : {"d4/tube1.json", "d4/tube2.json", "d4/tube3.json"})
        for (auto& r : fx.tube(t, d4)) reps.push_back(std::move(r));
    for (auto& r : io::tube_from_json(io::load_json(fx.dir / "kronecker/tube.json"))) reps.push_back(std::move(r));
    std::size_t cells = 0;
    for (const auto& r : reps) {
        const auto table = grassmannian_table(r);  // throws NonPolynomialCount on a held-out mismatch
        cells += table.size();
    }
    o.detail << survivors << " friezes, 500 involutions, 200 words, " << cells << " Grassmannian cells";
}

struct Check {
    int id;
    const char* title;
    std::vector<std::string> tags;
    double limit;
    std::function<void(Outcome&, const Fixtures&, std::uint64_t)> run;
};

std::vector<Check> checks() {
    auto plain = [](void (*f)(Outcome&, const Fixtures&)) {
        return [f](Outcome& o, const Fixtures& fx, std::uint64_t) { f(o, fx); };
    };
    return {
        {1, "frieze rows from (8,2) and (4,4)", {"d4", "frieze"}, 1, plain(check_frieze_rows)},
        {2, "growth coefficients 14, 194, 2702", {"d4", "frieze"}, 1, plain(check_growth)},
        {3, "Grassmannian table of M_lambda", {"d4", "rep"}, 30, plain(check_table)},
        {4, "CC map of M_lambda matches the displayed polynomial", {"d4", "cc"}, 30, plain(check_cc_golden)},
        {5, "tube quiddities (8,2), (4,4), (4,4)", {"d4", "cc"}, 60, plain(check_tubes)},
        {6, "theta from the D~4 quiver equals X_M and 14", {"d4", "theta"}, 0, plain(check_theta_d4)},
        {7, "E~6 growth 322 and friezes (9,36), (7,7,7)", {"e6", "theta", "frieze"}, 300, plain(check_e6)},
        {8, "modular group relations on E~6, E~7, E~8", {"e6", "e7", "e8", "cluster"}, 120, plain(check_modular)},
        {9, "homogeneous tube growth identity for k = 1..6", {"d4", "cc"}, 0, plain(check_homogeneous)},
        {10, "degenerate member of the M_lambda family gives X_M + 1", {"d4", "cc"}, 0, plain(check_degenerate)},
        {11, "randomized property suites", {"properties"}, 0, check_properties},
    };
}

}  // namespace

std::vector<CheckResult> reproduce(const ReproduceOptions& options,
                                   const std::function<void(const CheckResult&)>& on_result) {
    const Fixtures fx{options.fixtures};
    std::vector<CheckResult> results;
    for (const auto& c : checks()) {
        if (options.only) {
            const auto& tag = *options.only;
            if (tag != std::to_string(c.id) && std::find(c.tags.begin(), c.tags.end(), tag) == c.tags.end()) continue;
        }
        CheckResult r{c.id, c.title, c.tags, false, "", 0, c.limit};
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.run(o, fx, options.seed);
        } catch (const Error& e) {
            o.expect(false, std::string(to_string(e.kind())) + ": " + e.what());
        } catch (const std::exception& e) {
            o.expect(false, e.what());
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (r.limit_seconds > 0 && r.seconds > r.limit_seconds) o.expect(false, "exceeded time limit");
        r.pass = o.pass;
        r.detail = o.detail.str();
        if (on_result) on_result(r);
        results.push_back(std::move(r));
    }
    return results;
}

std::string format_result(const CheckResult& r) {
    char timing[64];
    if (r.limit_seconds > 0) {
        std::snprintf(timing, sizeof timing, "%.3fs of %.0fs", r.seconds, r.limit_seconds);
    } else {
        std::snprintf(timing, sizeof timing, "%.3fs", r.seconds);
    }
    std::string line = std::string(r.pass ? "PASS" : "FAIL") + "  " + std::to_string(r.id) + ". " + r.title + " [" +
                       timing + "]";
    if (!r.detail.empty()) line += " " + r.detail;
    return line;
}

}  // namespace friezelab
