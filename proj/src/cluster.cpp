#include "friezelab/cluster.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <string>
#include <unordered_set>

#include "friezelab/error.hpp"

namespace friezelab {

// ---------------------------------------------------------------------------
// Quiver

Quiver::Quiver(ExchangeMatrix b, std::vector<std::string> labels) : b_(std::move(b)), labels_(std::move(labels)) {
    const std::size_t m = b_.size();
    for (std::size_t i = 0; i < m; ++i) {
        if (b_[i].size() != m) throw Error(ErrorKind::InvalidArgument, "exchange matrix is not square");
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (b_[i][j] != -b_[j][i]) {
                throw Error(ErrorKind::InvalidArgument, "exchange matrix is not skew-symmetric");
            }
        }
    }
    if (labels_.empty()) {
        labels_.reserve(m);
        for (std::size_t i = 0; i < m; ++i) labels_.push_back(std::to_string(i));
    } else if (labels_.size() != m) {
        throw Error(ErrorKind::InvalidArgument, "label count does not match vertex count");
    }
}

Quiver Quiver::from_arrows(std::size_t m, const std::vector<std::pair<std::size_t, std::size_t>>& arrows,
                           std::vector<std::string> labels) {
    ExchangeMatrix b(m, std::vector<int>(m, 0));
    for (auto [t, h] : arrows) {
        if (t >= m || h >= m || t == h) throw Error(ErrorKind::InvalidArgument, "bad arrow");
        ++b[t][h];
        --b[h][t];
    }
    return Quiver(std::move(b), std::move(labels));
}

std::optional<std::size_t> Quiver::find_vertex(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i] == label) return i;
    }
    return std::nullopt;
}

std::size_t Quiver::vertex(std::string_view label) const {
    if (auto v = find_vertex(label)) return *v;
    throw Error(ErrorKind::InvalidArgument, "unknown vertex label '" + std::string(label) + "'");
}

bool Quiver::is_acyclic() const {
    const std::size_t m = size();
    std::vector<int> indeg(m, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (b_[i][j] > 0) ++indeg[j];
    std::vector<std::size_t> ready;
    for (std::size_t i = 0; i < m; ++i)
        if (indeg[i] == 0) ready.push_back(i);
    std::size_t seen = 0;
    while (!ready.empty()) {
        std::size_t v = ready.back();
        ready.pop_back();
        ++seen;
        for (std::size_t j = 0; j < m; ++j) {
            if (b_[v][j] > 0 && --indeg[j] == 0) ready.push_back(j);
        }
    }
    return seen == m;
}

bool Quiver::is_connected() const {
    const std::size_t m = size();
    if (m == 0) return true;
    std::vector<bool> seen(m, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t j = 0; j < m; ++j) {
            if (b_[v][j] != 0 && !seen[j]) {
                seen[j] = true;
                ++count;
                stack.push_back(j);
            }
        }
    }
    return count == m;
}

std::string variable_name(std::string_view label) {
    const bool numeric = !label.empty() && std::all_of(label.begin(), label.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c)) != 0;
    });
    return numeric ? "x" + std::string(label) : "x_" + std::string(label);
}

VarList initial_variables(const Quiver& q) {
    std::vector<std::string> names;
    names.reserve(q.size());
    for (const auto& l : q.labels()) names.push_back(variable_name(l));
    return VarList(std::move(names));
}

Quiver mutate_quiver(const Quiver& q, std::size_t k) {
    const std::size_t m = q.size();
    if (k >= m) throw Error(ErrorKind::InvalidArgument, "mutation vertex out of range");
    const auto& b = q.matrix();
    ExchangeMatrix c = b;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (i == k || j == k) {
                c[i][j] = -b[i][j];
            } else {
                c[i][j] = b[i][j] + std::max(0, b[i][k]) * std::max(0, b[k][j]) -
                          std::max(0, -b[i][k]) * std::max(0, -b[k][j]);
            }
        }
    }
    return Quiver(std::move(c), q.labels());
}

std::vector<std::pair<std::size_t, std::size_t>> find_double_arrows(const Quiver& q) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = 0; j < q.size(); ++j)
            if (q(i, j) == 2) out.emplace_back(i, j);
    return out;
}

bool has_double_arrow(const Quiver& q) { return !find_double_arrows(q).empty(); }

// ---------------------------------------------------------------------------
// Isomorphisms and canonical form

namespace {

std::vector<int> degree_profile(const Quiver& q, std::size_t i) {
    std::vector<int> p;
    for (std::size_t j = 0; j < q.size(); ++j)
        if (q(i, j) != 0) p.push_back(q(i, j));
    std::sort(p.begin(), p.end());
    return p;
}

// Equitable refinement: the new color of v is the rank of
// (old color, sorted multiset of (neighbor color, b(v, neighbor))).
std::vector<int> refine(const Quiver& q, std::vector<int> colors) {
    const std::size_t m = q.size();
    using Signature = std::pair<int, std::vector<std::pair<int, int>>>;
    for (;;) {
        std::vector<Signature> sig(m);
        for (std::size_t v = 0; v < m; ++v) {
            sig[v].first = colors[v];
            for (std::size_t j = 0; j < m; ++j)
                if (q(v, j) != 0) sig[v].second.emplace_back(colors[j], q(v, j));
            std::sort(sig[v].second.begin(), sig[v].second.end());
        }
        std::vector<Signature> sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<int> next(m);
        for (std::size_t v = 0; v < m; ++v) {
            next[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
        }
        const auto distinct = [](const std::vector<int>& c) {
            std::vector<int> s = c;
            std::sort(s.begin(), s.end());
            return std::unique(s.begin(), s.end()) - s.begin();
        };
        const bool stable = distinct(next) == distinct(colors);
        colors = std::move(next);
        if (stable) return colors;
    }
}

void canonical_search(const Quiver& q, std::vector<int> colors, std::vector<signed char>& best, bool& have_best) {
    colors = refine(q, std::move(colors));
    const std::size_t m = q.size();
    // smallest color class with more than one vertex
    std::vector<int> counts(m, 0);
    for (int c : colors) ++counts[static_cast<std::size_t>(c)];
    int target = -1;
    for (std::size_t c = 0; c < m; ++c) {
        if (counts[c] > 1) {
            target = static_cast<int>(c);
            break;
        }
    }
    if (target < 0) {
        std::vector<std::size_t> order(m);
        for (std::size_t v = 0; v < m; ++v) order[static_cast<std::size_t>(colors[v])] = v;
        std::vector<signed char> key(m * m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) key[i * m + j] = static_cast<signed char>(q(order[i], order[j]));
        if (!have_best || key < best) {
            best = std::move(key);
            have_best = true;
        }
        return;
    }
    for (std::size_t v = 0; v < m; ++v) {
        if (colors[v] != target) continue;
        std::vector<int> next(m);
        for (std::size_t u = 0; u < m; ++u) next[u] = 2 * colors[u] + 1;
        next[v] = 2 * colors[v];
        canonical_search(q, std::move(next), best, have_best);
    }
}

}  // namespace

std::vector<signed char> canonical_form(const Quiver& q) {
    std::vector<signed char> best;
    bool have_best = false;
    canonical_search(q, std::vector<int>(q.size(), 0), best, have_best);
    return best;
}

std::vector<Permutation> quiver_isomorphisms(const Quiver& q, const Quiver& r) {
    const std::size_t m = q.size();
    std::vector<Permutation> out;
    if (r.size() != m) return out;
    std::vector<std::vector<int>> pq(m), pr(m);
    for (std::size_t i = 0; i < m; ++i) {
        pq[i] = degree_profile(q, i);
        pr[i] = degree_profile(r, i);
    }
    Permutation sigma(m);
    std::vector<bool> used(m, false);
    std::function<void(std::size_t)> extend = [&](std::size_t i) {
        if (i == m) {
            out.push_back(sigma);
            return;
        }
        for (std::size_t t = 0; t < m; ++t) {
            if (used[t] || pq[i] != pr[t]) continue;
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j) ok = r(t, sigma[j]) == q(i, j);
            if (!ok) continue;
            sigma[i] = t;
            used[t] = true;
            extend(i + 1);
            used[t] = false;
        }
    };
    extend(0);
    return out;
}

// ---------------------------------------------------------------------------
// Seeds

Seed initial_seed(const Quiver& q, std::vector<bool> frozen, bool frozen_as_one) {
    const std::size_t m = q.size();
    if (frozen.empty()) frozen.assign(m, false);
    if (frozen.size() != m) throw Error(ErrorKind::InvalidArgument, "frozen mask size mismatch");
    const VarList vars = initial_variables(q);
    Seed s{q, {}, std::move(frozen)};
    s.vars.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        s.vars.push_back(s.frozen[i] && frozen_as_one ? LaurentPoly::constant(vars, 1)
                                                      : LaurentPoly::variable(vars, i));
    }
    return s;
}

Seed mutate_seed(const Seed& s, std::size_t k) {
    const std::size_t m = s.quiver.size();
    if (k >= m) throw Error(ErrorKind::InvalidArgument, "mutation vertex out of range");
    if (s.frozen[k]) {
        throw Error(ErrorKind::FrozenVertex, "vertex " + s.quiver.labels()[k] + " is frozen");
    }
    const VarList& vars = s.vars[k].vars();
    LaurentPoly in = LaurentPoly::constant(vars, 1);
    LaurentPoly out = LaurentPoly::constant(vars, 1);
    for (std::size_t j = 0; j < m; ++j) {
        const int bjk = s.quiver(j, k);
        if (bjk > 0) in *= s.vars[j].pow(static_cast<unsigned>(bjk));
        if (bjk < 0) out *= s.vars[j].pow(static_cast<unsigned>(-bjk));
    }
    Seed next{mutate_quiver(s.quiver, k), s.vars, s.frozen};
    next.vars[k] = div_exact(in + out, s.vars[k]);
    return next;
}

Quiver permute_quiver(const Quiver& q, const Permutation& sigma) {
    const std::size_t m = q.size();
    ExchangeMatrix b(m, std::vector<int>(m, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) b[sigma[i]][sigma[j]] = q(i, j);
    return Quiver(std::move(b), q.labels());
}

Seed permute_seed(const Seed& s, const Permutation& sigma) {
    const std::size_t m = s.quiver.size();
    Seed out{permute_quiver(s.quiver, sigma), s.vars, s.frozen};
    for (std::size_t i = 0; i < m; ++i) {
        out.vars[sigma[i]] = s.vars[i];
        out.frozen[sigma[i]] = s.frozen[i];
    }
    return out;
}

MutationWord parse_word(std::string_view text, const Quiver& q) {
    MutationWord w;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view token = text.substr(start, end - start);
        while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front()))) token.remove_prefix(1);
        while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back()))) token.remove_suffix(1);
        if (!token.empty()) w.vertices.push_back(q.vertex(token));
        start = end + 1;
    }
    return w;
}

std::string format_word(const MutationWord& w, const Quiver& q) {
    std::string out;
    for (std::size_t i = 0; i < w.vertices.size(); ++i) {
        if (i) out += ",";
        out += q.labels()[w.vertices[i]];
    }
    return out;
}

Quiver apply_word(const Quiver& q, const MutationWord& w) {
    Quiver r = q;
    for (std::size_t k : w.vertices) r = mutate_quiver(r, k);
    if (w.permutation) r = permute_quiver(r, *w.permutation);
    return r;
}

Seed apply_word(const Seed& s, const MutationWord& w) {
    Seed r = s;
    for (std::size_t k : w.vertices) r = mutate_seed(r, k);
    if (w.permutation) r = permute_seed(r, *w.permutation);
    return r;
}

namespace {
struct KeyHash {
    std::size_t operator()(const std::vector<signed char>& k) const noexcept {
        return std::hash<std::string_view>{}(std::string_view(reinterpret_cast<const char*>(k.data()), k.size()));
    }
};
}  // namespace

SearchResult mutation_class_search(const Quiver& q, const std::function<bool(const Quiver&)>& predicate,
                                   std::size_t max_nodes) {
    if (!q.is_connected()) throw Error(ErrorKind::InvalidArgument, "mutation class search needs a connected quiver");
    if (predicate(q)) return {q, {}, 1};
    std::unordered_set<std::vector<signed char>, KeyHash> seen;
    seen.insert(canonical_form(q));
    std::deque<std::pair<Quiver, std::vector<std::size_t>>> frontier;
    frontier.emplace_back(q, std::vector<std::size_t>{});
    while (!frontier.empty()) {
        auto [cur, word] = std::move(frontier.front());
        frontier.pop_front();
        for (std::size_t k = 0; k < cur.size(); ++k) {
            if (!word.empty() && word.back() == k) continue;  // involution
            Quiver next = mutate_quiver(cur, k);
            if (!seen.insert(canonical_form(next)).second) continue;
            std::vector<std::size_t> next_word = word;
            next_word.push_back(k);
            if (predicate(next)) return {std::move(next), {std::move(next_word), std::nullopt}, seen.size()};
            if (seen.size() >= max_nodes) {
                throw Error(ErrorKind::NotFound,
                            "mutation class search exceeded " + std::to_string(max_nodes) + " quivers");
            }
            frontier.emplace_back(std::move(next), std::move(next_word));
        }
    }
    throw Error(ErrorKind::NotFound, "mutation class exhausted after " + std::to_string(seen.size()) +
                                         " quivers without a match");
}

// ---------------------------------------------------------------------------
// Modular generators

Quiver e_double_arrow_quiver(int n) {
    if (n < 6 || n > 8) throw Error(ErrorKind::InvalidArgument, "E~_n double-arrow quiver needs n in {6,7,8}");
    const int k = n - 5;
    std::vector<std::string> labels{"0", "1", "a", "b", "b1", "c"};
    for (int i = 1; i <= k; ++i) labels.push_back("c" + std::to_string(i));
    const std::size_t m = labels.size();
    std::vector<std::pair<std::size_t, std::size_t>> arrows{{0, 1}, {0, 1}};
    for (std::size_t w : {2U, 3U, 5U}) {
        arrows.emplace_back(1, w);
        arrows.emplace_back(w, 0);
    }
    arrows.emplace_back(4, 3);  // b1 -> b
    arrows.emplace_back(6, 5);  // c1 -> c
    for (std::size_t i = 7; i < m; ++i) arrows.emplace_back(i, i - 1);
    return Quiver::from_arrows(m, arrows, std::move(labels));
}

ModularGenerator parse_generator(std::string_view name) {
    if (name == "ta" || name == "tau_a") return ModularGenerator::TauA;
    if (name == "tb" || name == "tau_b") return ModularGenerator::TauB;
    if (name == "tc" || name == "tau_c") return ModularGenerator::TauC;
    if (name == "g" || name == "gamma") return ModularGenerator::Gamma;
    throw Error(ErrorKind::InvalidArgument, "unknown modular generator '" + std::string(name) + "'");
}

const char* to_string(ModularGenerator g) noexcept {
    switch (g) {
        case ModularGenerator::TauA: return "ta";
        case ModularGenerator::TauB: return "tb";
        case ModularGenerator::TauC: return "tc";
        case ModularGenerator::Gamma: return "gamma";
    }
    return "?";
}

const char* to_string(WordOrder o) noexcept {
    return o == WordOrder::RightmostFirst ? "rightmost-first" : "leftmost-first";
}

std::vector<std::string> generator_labels(ModularGenerator g, int n) {
    switch (g) {
        case ModularGenerator::TauA: return {"a", "0", "1"};
        case ModularGenerator::TauB: return {"b1", "b", "0", "1"};
        case ModularGenerator::TauC: {
            std::vector<std::string> w;
            for (int i = n - 5; i >= 1; --i) w.push_back("c" + std::to_string(i));
            w.insert(w.end(), {"c", "0", "1"});
            return w;
        }
        case ModularGenerator::Gamma: return {};
    }
    return {};
}

namespace {

bool is_identity(const Permutation& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != i) return false;
    return true;
}

}  // namespace

ModularStep modular_generator(const Seed& s, ModularGenerator g) {
    const Quiver& base = s.quiver;
    const int n = static_cast<int>(base.size()) - 1;
    if (n < 6 || n > 8) throw Error(ErrorKind::NotFig5Shape, "quiver does not have E~_6, E~_7 or E~_8 size");
    const Quiver ref = e_double_arrow_quiver(n);
    const auto labelings = quiver_isomorphisms(ref, base);
    if (labelings.empty()) {
        throw Error(ErrorKind::NotFig5Shape, "quiver is not isomorphic to the E~ double-arrow quiver");
    }
    const Permutation& to_base = labelings.front();

    if (g == ModularGenerator::Gamma) {
        std::vector<Permutation> symmetries;
        for (auto& p : quiver_isomorphisms(base, base))
            if (!is_identity(p)) symmetries.push_back(std::move(p));
        if (symmetries.size() != 1) {
            throw Error(ErrorKind::NotFig5Shape,
                        "gamma needs exactly one non-trivial quiver symmetry, found " +
                            std::to_string(symmetries.size()));
        }
        return {permute_seed(s, symmetries.front()), WordOrder::RightmostFirst, symmetries.front()};
    }

    std::vector<std::size_t> written;
    for (const auto& l : generator_labels(g, n)) written.push_back(to_base[ref.vertex(l)]);
    std::vector<bool> support(base.size(), false);
    for (std::size_t v : written) support[v] = true;

    for (WordOrder order : {WordOrder::RightmostFirst, WordOrder::LeftmostFirst}) {
        MutationWord w{written, std::nullopt};
        if (order == WordOrder::RightmostFirst) std::reverse(w.vertices.begin(), w.vertices.end());
        auto candidates = quiver_isomorphisms(apply_word(base, w), base);
        if (candidates.empty()) continue;

        // Prefer restorations that fix every vertex the word does not touch.
        std::vector<Permutation> fixing;
        for (const auto& p : candidates) {
            bool ok = true;
            for (std::size_t v = 0; v < p.size() && ok; ++v) ok = support[v] || p[v] == v;
            if (ok) fixing.push_back(p);
        }
        const auto& pool = fixing.empty() ? candidates : fixing;

        const Seed mutated = apply_word(s, w);
        Seed result = permute_seed(mutated, pool.front());
        for (std::size_t i = 1; i < pool.size(); ++i) {
            if (!(permute_seed(mutated, pool[i]) == result)) {
                throw Error(ErrorKind::AmbiguousPermutation,
                            std::string("restoring permutations for ") + to_string(g) + " disagree on variables");
            }
        }
        return {std::move(result), order, pool.front()};
    }
    throw Error(ErrorKind::NoRestoringPermutation,
                std::string("no vertex permutation restores the quiver after ") + to_string(g));
}

}  // namespace friezelab
