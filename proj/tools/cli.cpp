#include "cli.hpp"

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "friezelab/cc.hpp"
#include "friezelab/error.hpp"
#include "friezelab/frieze.hpp"
#include "friezelab/io.hpp"
#include "friezelab/kernels/dot_zero.hpp"
#include "friezelab/reproduce.hpp"
#include "friezelab/theta.hpp"

#ifndef FRIEZELAB_DEFAULT_FIXTURES
#define FRIEZELAB_DEFAULT_FIXTURES "fixtures"
#endif

namespace friezelab::cli {

namespace {

using io::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

Integer parse_integer(const std::string& s, const char* what) {
    try {
        return integer_from_decimal(s);
    } catch (const Error&) {
        throw UsageError(std::string(what) + ": '" + s + "' is not an integer");
    }
}

std::vector<int> parse_ints(const std::string& text, const char* what) {
    std::vector<int> out;
    for (const auto& s : split(text, ',')) {
        const Integer v = parse_integer(s, what);
        if (!v.fits_sint_p()) throw UsageError(std::string(what) + ": value out of range");
        out.push_back(static_cast<int>(v.get_si()));
    }
    return out;
}

Quiddity parse_quiddity(const std::string& text) {
    std::vector<Integer> a;
    for (const auto& s : split(text, ',')) {
        Integer v = parse_integer(s, "--quiddity");
        if (v < 1) throw UsageError("--quiddity: entries must be positive, got " + s);
        a.push_back(std::move(v));
    }
    if (a.empty()) throw UsageError("--quiddity: empty sequence");
    return Quiddity(std::move(a));
}

std::vector<std::uint32_t> parse_primes(const std::string& text) {
    std::vector<std::uint32_t> out;
    for (int p : parse_ints(text, "--primes")) {
        if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) throw UsageError("--primes: " + std::to_string(p) + " is not prime");
        out.push_back(static_cast<std::uint32_t>(p));
    }
    return out;
}

std::string join_ints(const std::vector<int>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
    return s;
}

// Staggered layout: even rows sit half a cell to the right of odd rows.
void render_frieze(std::ostream& out, const FriezePattern& f) {
    const std::size_t n = f.period();
    const std::size_t cols = n * std::max<std::size_t>(1, 6 / n);
    std::vector<std::vector<std::string>> rows;
    std::size_t width = 1;
    for (int r = -1; r <= f.depth(); ++r) {
        std::vector<std::string> cells;
        for (const auto& x : f.row(r, cols)) {
            cells.push_back(to_decimal(x));
            width = std::max(width, cells.back().size());
        }
        rows.push_back(std::move(cells));
    }
    width += 2;
    for (std::size_t k = 0; k < rows.size(); ++k) {
        const int r = static_cast<int>(k) - 1;
        std::string line(r % 2 == 0 ? width / 2 : 0, ' ');
        for (const auto& c : rows[k]) line += std::string(width - c.size(), ' ') + c;
        out << line << '\n';
    }
}

std::string format_seed(const Seed& s) {
    std::ostringstream os;
    for (std::size_t i = 0; i < s.vars.size(); ++i) {
        os << "  " << s.quiver.labels()[i] << ": " << s.vars[i].to_string() << (s.frozen[i] ? "  (frozen)" : "") << '\n';
    }
    return os.str();
}

std::string format_matrix(const Quiver& q) {
    std::ostringstream os;
    for (std::size_t i = 0; i < q.size(); ++i) {
        os << "  " << q.labels()[i] << ":";
        for (std::size_t j = 0; j < q.size(); ++j) os << ' ' << q(i, j);
        os << '\n';
    }
    return os.str();
}

io::QuiverFile load_quiver(const std::string& path) { return io::quiver_from_json(io::load_json(path)); }

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Infinite frieze patterns, cluster mutation and quiver Grassmannians with exact arithmetic", "friezelab"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "Emit a single JSON object");

    std::function<void()> action;

    // frieze
    auto* frieze = app.add_subcommand("frieze", "Generate a periodic frieze from a quiddity");
    std::string quiddity_text;
    std::optional<int> depth;
    unsigned growth_k = 0;
    frieze->add_option("--quiddity", quiddity_text, "Comma-separated positive integers")->required();
    frieze->add_option("--depth", depth, "Rows below the row of ones (default 3n+1)")->check(CLI::PositiveNumber);
    frieze->add_option("--growth", growth_k, "Report s_1..s_K");
    frieze->add_flag("--json", as_json);
    frieze->callback([&] {
        action = [&] {
            const Quiddity q = parse_quiddity(quiddity_text);
            const auto f = generate(q, depth.value_or(3 * static_cast<int>(q.size()) + 1));
            std::vector<unsigned> ks;
            for (unsigned k = 1; k <= growth_k; ++k) ks.push_back(k);
            if (as_json) {
                out << io::frieze_to_json(f, ks).dump() << '\n';
                return;
            }
            render_frieze(out, f);
            for (unsigned k : ks) out << "s_" << k << " = " << to_decimal(growth(f, k)) << '\n';
            if (!ks.empty()) out << "class: " << to_string(classify_growth(f)) << '\n';
        };
    });

    // mutate
    auto* mutate = app.add_subcommand("mutate", "Apply a mutation word to a quiver or seed");
    std::string quiver_path, word_text;
    bool with_seed = false;
    mutate->add_option("--quiver", quiver_path)->required();
    mutate->add_option("--word", word_text, "Comma-separated vertex labels, applied in order")->required();
    mutate->add_flag("--seed", with_seed, "Track cluster variables");
    mutate->add_flag("--json", as_json);
    mutate->callback([&] {
        action = [&] {
            const auto qf = load_quiver(quiver_path);
            const MutationWord w = parse_word(word_text, qf.quiver);
            if (with_seed) {
                const Seed s = apply_word(initial_seed(qf.quiver, qf.frozen), w);
                if (as_json) {
                    out << io::seed_to_json(s).dump() << '\n';
                } else {
                    out << "exchange matrix:\n" << format_matrix(s.quiver) << "cluster:\n" << format_seed(s);
                }
                return;
            }
            const Quiver r = apply_word(qf.quiver, w);
            if (as_json) {
                out << io::quiver_to_json(r, qf.frozen).dump() << '\n';
            } else {
                out << "exchange matrix:\n" << format_matrix(r);
            }
        };
    });

    // search
    auto* search = app.add_subcommand("search", "Breadth-first search of the mutation class");
    std::string find = "double-arrow";
    std::size_t max_nodes = 50000;
    search->add_option("--quiver", quiver_path)->required();
    search->add_option("--find", find, "Target shape")->check(CLI::IsMember({"double-arrow"}));
    search->add_option("--max-nodes", max_nodes)->check(CLI::PositiveNumber);
    search->add_flag("--json", as_json);
    search->callback([&] {
        action = [&] {
            const auto qf = load_quiver(quiver_path);
            const SearchResult r = mutation_class_search(qf.quiver, has_double_arrow, max_nodes);
            const std::string word = format_word(r.word, qf.quiver);
            if (as_json) {
                out << json{{"word", word}, {"nodes", r.nodes}, {"quiver", io::quiver_to_json(r.quiver)}}.dump() << '\n';
            } else {
                out << "word: " << (word.empty() ? "(empty)" : word) << "\nquivers visited: " << r.nodes
                    << "\nexchange matrix:\n"
                    << format_matrix(r.quiver);
            }
        };
    });

    // modular
    auto* modular = app.add_subcommand("modular", "Cluster modular group generators on an E~ double-arrow seed");
    bool check_relations = false;
    modular->add_option("--quiver", quiver_path)->required();
    modular->add_option("--word", word_text, "Generators ta, tb, tc, gamma, applied in order");
    modular->add_flag("--check-relations", check_relations);
    modular->add_flag("--json", as_json);
    modular->callback([&] {
        action = [&] {
            const auto qf = load_quiver(quiver_path);
            const Seed base = initial_seed(qf.quiver, qf.frozen);
            Seed s = base;
            json steps = json::array();
            for (const auto& name : split(word_text, ',')) {
                const ModularGenerator g = parse_generator(name);
                ModularStep step = modular_generator(s, g);
                steps.push_back({{"generator", to_string(g)}, {"order", to_string(step.order)}});
                s = std::move(step.seed);
            }
            json relations = json::object();
            bool all_hold = true;
            if (check_relations) {
                using G = ModularGenerator;
                auto power = [&](G g, int k) {
                    Seed t = base;
                    for (int i = 0; i < k; ++i) t = modular_generator(t, g).seed;
                    return t;
                };
                auto then = [&](G first, G second) {
                    return modular_generator(modular_generator(base, first).seed, second).seed;
                };
                const int n = static_cast<int>(base.quiver.size()) - 1;
                const Seed a2 = power(G::TauA, 2);
                relations["ta^2 = tb^3"] = a2 == power(G::TauB, 3);
                relations["ta^2 = tc^" + std::to_string(n - 3)] = a2 == power(G::TauC, n - 3);
                if (n == 6) {
                    relations["gamma^2 = id"] = power(G::Gamma, 2) == base;
                    relations["gamma ta = ta gamma"] = then(G::TauA, G::Gamma) == then(G::Gamma, G::TauA);
                    relations["gamma tb = tc gamma"] = then(G::TauB, G::Gamma) == then(G::Gamma, G::TauC);
                }
                for (const auto& [k, v] : relations.items()) all_hold = all_hold && v.get<bool>();
            }
            if (as_json) {
                json o{{"steps", steps}, {"seed", io::seed_to_json(s)}};
                if (check_relations) o["relations"] = relations;
                out << o.dump() << '\n';
            } else {
                for (const auto& st : steps) {
                    out << st["generator"].get<std::string>() << ": composed " << st["order"].get<std::string>() << '\n';
                }
                out << "cluster:\n" << format_seed(s);
                for (const auto& [k, v] : relations.items()) out << (v.get<bool>() ? "holds  " : "FAILS  ") << k << '\n';
            }
            if (!all_hold) throw Error(ErrorKind::InvalidArgument, "a modular group relation fails");
        };
    });

    // theta
    auto* theta_cmd = app.add_subcommand("theta", "Growth element at a double arrow reached by mutation");
    bool at_ones_only = false;
    std::string invariance_words;
    theta_cmd->add_option("--quiver", quiver_path)->required();
    theta_cmd->add_flag("--at-ones", at_ones_only, "Print only the value at x_i = 1");
    theta_cmd->add_option("--invariance-words", invariance_words,
                          "Semicolon-separated mutation words, applied at the double-arrow seed");
    theta_cmd->add_option("--max-nodes", max_nodes)->check(CLI::PositiveNumber);
    theta_cmd->add_flag("--json", as_json);
    theta_cmd->callback([&] {
        action = [&] {
            const auto qf = load_quiver(quiver_path);
            const AffineTheta t = theta_from_affine_quiver(qf.quiver, max_nodes);
            std::optional<bool> invariant;
            if (!invariance_words.empty()) {
                std::vector<MutationWord> words;
                for (const auto& w : split(invariance_words, ';')) words.push_back(parse_word(w, t.seed.quiver));
                invariant = theta_invariance(t.seed, words);
            }
            const std::string word = format_word(t.search.word, qf.quiver);
            if (as_json) {
                json o{{"word", word}, {"laurent", io::laurent_to_json(t.value.laurent)},
                       {"text", t.value.laurent.to_string()}, {"at_ones", to_decimal(t.value.integer)}};
                if (invariant) o["invariant"] = *invariant;
                out << o.dump() << '\n';
            } else if (at_ones_only) {
                out << to_decimal(t.value.integer) << '\n';
            } else {
                out << "word: " << (word.empty() ? "(empty)" : word) << "\ntheta = " << t.value.laurent.to_string()
                    << "\nat ones: " << to_decimal(t.value.integer) << '\n';
            }
            if (invariant && !as_json) out << "invariant: " << (*invariant ? "yes" : "no") << '\n';
        };
    });

    // grassmannian
    auto* grass = app.add_subcommand("grassmannian", "Quiver Grassmannian point counts and Euler characteristics");
    std::string rep_path, dimvec_text, primes_text;
    bool table_flag = false;
    grass->add_option("--rep", rep_path)->required();
    grass->add_option("--dimvec", dimvec_text, "Subdimension vector, comma-separated");
    grass->add_option("--primes", primes_text, "Prime pool, comma-separated");
    grass->add_flag("--table", table_flag);
    grass->add_flag("--json", as_json);
    grass->callback([&] {
        action = [&] {
            const QuiverRep m = io::rep_from_json(io::load_json(rep_path));
            const auto primes = primes_text.empty() ? default_primes() : parse_primes(primes_text);
            if (!dimvec_text.empty() && !table_flag) {
                const DimVector e = parse_ints(dimvec_text, "--dimvec");
                if (e.size() != m.dims().size()) throw UsageError("--dimvec: wrong length");
                const auto ec = euler_characteristic_detail(m, e, primes);
                json counts = json::object();
                for (auto p : ec.primes) counts[std::to_string(p)] = to_decimal(count_points(m, e, p));
                counts[std::to_string(ec.held_out)] = to_decimal(count_points(m, e, ec.held_out));
                json coef = json::array();
                for (const auto& c : ec.coefficients) coef.push_back(to_decimal(c));
                if (as_json) {
                    out << json{{"e", e}, {"counts", counts}, {"polynomial", coef}, {"held_out_prime", ec.held_out},
                                {"chi", to_decimal(ec.chi)}}
                               .dump()
                        << '\n';
                } else {
                    for (const auto& [p, c] : counts.items()) out << "p=" << p << ": " << c.get<std::string>() << '\n';
                    out << "chi(Gr_" << join_ints(e) << ") = " << to_decimal(ec.chi) << '\n';
                }
                return;
            }
            const auto table = grassmannian_table(m, primes);
            if (as_json) {
                out << json{{"table", io::table_to_json(table)}}.dump() << '\n';
                return;
            }
            Integer total = 0;
            for (const auto& r : table) {
                out << "(" << join_ints(r.e) << ")  " << to_decimal(r.chi) << '\n';
                total += r.chi;
            }
            out << "sum: " << to_decimal(total) << '\n';
        };
    });

    // cc
    auto* cc = app.add_subcommand("cc", "Caldero-Chapoton map of a representation");
    cc->add_option("--rep", rep_path)->required();
    cc->add_flag("--at-ones", at_ones_only);
    cc->add_flag("--json", as_json);
    cc->callback([&] {
        action = [&] {
            const CCValue x = cc_map(io::rep_from_json(io::load_json(rep_path)));
            if (as_json) {
                out << json{{"laurent", io::laurent_to_json(x.laurent)}, {"text", x.laurent.to_string()},
                            {"at_ones", to_decimal(x.at_ones)}}
                           .dump()
                    << '\n';
            } else if (at_ones_only) {
                out << to_decimal(x.at_ones) << '\n';
            } else {
                out << x.laurent.to_string() << "\nat ones: " << to_decimal(x.at_ones) << '\n';
            }
        };
    });

    // tube-frieze
    auto* tube = app.add_subcommand("tube-frieze", "Frieze whose quiddity comes from the quasi-simples of a tube");
    std::string tube_path;
    tube->add_option("--quiver", quiver_path);
    tube->add_option("--tube", tube_path)->required();
    tube->add_option("--depth", depth)->check(CLI::PositiveNumber);
    tube->add_option("--growth", growth_k);
    tube->add_flag("--json", as_json);
    tube->callback([&] {
        action = [&] {
            std::optional<Quiver> q;
            if (!quiver_path.empty()) q = load_quiver(quiver_path).quiver;
            const auto reps = io::tube_from_json(io::load_json(tube_path), q);
            const Quiddity qd = quiddity_from_tube(reps);
            const auto f = generate(qd, depth.value_or(3 * static_cast<int>(qd.size()) + 1));
            std::vector<unsigned> ks;
            for (unsigned k = 1; k <= growth_k; ++k) ks.push_back(k);
            if (as_json) {
                out << io::frieze_to_json(f, ks).dump() << '\n';
                return;
            }
            render_frieze(out, f);
            for (unsigned k : ks) out << "s_" << k << " = " << to_decimal(growth(f, k)) << '\n';
        };
    });

    // growth-identity
    auto* gi = app.add_subcommand("growth-identity", "Growth from the homogeneous tube recurrence");
    std::string x1_text;
    unsigned k_max = 1;
    gi->add_option("--x1", x1_text, "Value of the homogeneous quasi-simple at ones")->required();
    gi->add_option("--k", k_max)->check(CLI::PositiveNumber);
    gi->add_flag("--json", as_json);
    gi->callback([&] {
        action = [&] {
            const Integer x1 = parse_integer(x1_text, "--x1");
            const auto u = homogeneous_powers(x1, k_max);
            json uj = json::object(), sj = json::object();
            for (unsigned k = 0; k <= k_max; ++k) uj[std::to_string(k)] = to_decimal(u[k]);
            for (unsigned k = 1; k <= k_max; ++k) sj[std::to_string(k)] = to_decimal(growth_via_homogeneous(x1, k));
            if (as_json) {
                out << json{{"x1", to_decimal(x1)}, {"u", uj}, {"growth", sj}}.dump() << '\n';
                return;
            }
            for (unsigned k = 0; k <= k_max; ++k) out << "u_" << k << " = " << uj[std::to_string(k)].get<std::string>() << '\n';
            for (unsigned k = 1; k <= k_max; ++k) out << "s_" << k << " = " << sj[std::to_string(k)].get<std::string>() << '\n';
        };
    });

    // reproduce-paper
    auto* repro = app.add_subcommand("reproduce-paper", "Run the acceptance checks against the shipped fixtures");
    std::string only, fixtures = FRIEZELAB_DEFAULT_FIXTURES;
    std::uint64_t seed = ReproduceOptions{}.seed;
    repro->add_option("--only", only, "Tag (d4, e6, e7, e8, frieze, rep, cc, theta, cluster, properties) or check number");
    repro->add_option("--fixtures", fixtures);
    repro->add_option("--seed", seed, "Seed for the randomized suites");
    repro->add_flag("--json", as_json);
    int repro_status = 0;
    repro->callback([&] {
        action = [&] {
            ReproduceOptions opt{fixtures, only.empty() ? std::nullopt : std::optional<std::string>(only), seed};
            const auto results = reproduce(opt, [&](const CheckResult& r) {
                if (!as_json) out << format_result(r) << std::endl;
            });
            std::size_t failed = 0;
            json rows = json::array();
            for (const auto& r : results) {
                failed += r.pass ? 0 : 1;
                rows.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail},
                                {"tags", r.tags}});
            }
            if (results.empty()) throw UsageError("--only: no check matches '" + only + "'");
            if (as_json) {
                out << json{{"checks", rows}, {"failed", failed}}.dump() << '\n';
            } else {
                out << results.size() - failed << "/" << results.size() << " checks passed\n";
            }
            repro_status = failed ? 1 : 0;
        };
    });

    auto* info = app.add_subcommand("kernels", "Report the active batch kernel backend");
    info->callback([&] {
        action = [&] {
            out << "backend: " << kernels::to_string(kernels::active_backend())
                << (kernels::avx2_available() ? " (avx2 available)" : " (avx2 unavailable)") << '\n';
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        action();
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        const json obj{{"error", {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}}}};
        (as_json ? out : err) << obj.dump() << '\n';
        return 1;
    } catch (const json::exception& e) {
        const json obj{{"error", {{"kind", std::string(to_string(ErrorKind::ParseError))}, {"message", e.what()}}}};
        (as_json ? out : err) << obj.dump() << '\n';
        return 1;
    }
    return repro_status;
}

}  // namespace friezelab::cli
