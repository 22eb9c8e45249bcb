#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "friezelab/laurent.hpp"

namespace friezelab {

using ExchangeMatrix = std::vector<std::vector<int>>;
/// sigma[i] is the image of vertex i.
using Permutation = std::vector<std::size_t>;

/// Quiver stored as its skew-symmetric exchange matrix,
/// b(i, j) = #(arrows i -> j) - #(arrows j -> i).
class Quiver {
public:
    Quiver() = default;
    /// Labels default to "0", "1", ...; throws InvalidArgument unless b is skew-symmetric.
    explicit Quiver(ExchangeMatrix b, std::vector<std::string> labels = {});

    static Quiver from_arrows(std::size_t m, const std::vector<std::pair<std::size_t, std::size_t>>& arrows,
                              std::vector<std::string> labels = {});

    std::size_t size() const noexcept { return b_.size(); }
    int operator()(std::size_t i, std::size_t j) const { return b_[i][j]; }
    const ExchangeMatrix& matrix() const noexcept { return b_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    std::optional<std::size_t> find_vertex(std::string_view label) const;
    /// Throws InvalidArgument for an unknown label.
    std::size_t vertex(std::string_view label) const;

    bool is_acyclic() const;
    bool is_connected() const;

    friend bool operator==(const Quiver& a, const Quiver& b) { return a.b_ == b.b_; }

private:
    ExchangeMatrix b_;
    std::vector<std::string> labels_;
};

/// Variable name for a vertex label: "x3" for numeric labels, "x_a" otherwise.
std::string variable_name(std::string_view label);
VarList initial_variables(const Quiver& q);

Quiver mutate_quiver(const Quiver& q, std::size_t k);

/// All ordered pairs (u, v) with b(u, v) == 2.
std::vector<std::pair<std::size_t, std::size_t>> find_double_arrows(const Quiver& q);
bool has_double_arrow(const Quiver& q);

/// Every bijection sigma with r(sigma i, sigma j) == q(i, j).
std::vector<Permutation> quiver_isomorphisms(const Quiver& q, const Quiver& r);

/// Label-independent key: the lexicographically least row-major matrix over
/// all vertex orders compatible with iterated degree refinement.
std::vector<signed char> canonical_form(const Quiver& q);

// ---------------------------------------------------------------------------

struct Seed {
    Quiver quiver;
    std::vector<LaurentPoly> vars;
    std::vector<bool> frozen;

    friend bool operator==(const Seed& a, const Seed& b) {
        return a.quiver == b.quiver && a.vars == b.vars && a.frozen == b.frozen;
    }
};

/// Initial cluster x_v at every vertex; frozen vertices carry the constant 1
/// when `frozen_as_one` is set.
Seed initial_seed(const Quiver& q, std::vector<bool> frozen = {}, bool frozen_as_one = true);

/// Exchange relation at k; throws FrozenVertex, and NotDivisible on a Laurent violation.
Seed mutate_seed(const Seed& s, std::size_t k);

/// Relabels vertex i as sigma[i]; labels stay positional.
Quiver permute_quiver(const Quiver& q, const Permutation& sigma);
Seed permute_seed(const Seed& s, const Permutation& sigma);

/// Vertex sequence applied in the listed order, then an optional permutation.
struct MutationWord {
    std::vector<std::size_t> vertices;
    std::optional<Permutation> permutation;
};

MutationWord parse_word(std::string_view text, const Quiver& q);
std::string format_word(const MutationWord& w, const Quiver& q);

Quiver apply_word(const Quiver& q, const MutationWord& w);
Seed apply_word(const Seed& s, const MutationWord& w);

struct SearchResult {
    Quiver quiver;
    MutationWord word;
    std::size_t nodes = 0;  // canonical quivers visited
};

/// Breadth-first search over the mutation class up to isomorphism; throws NotFound.
SearchResult mutation_class_search(const Quiver& q, const std::function<bool(const Quiver&)>& predicate,
                                   std::size_t max_nodes = 50000);

// ---------------------------------------------------------------------------
// Cluster modular group generators on the double-arrow quiver of type E~_n.
//
// Base shape: 0 => 1 doubled, triangles 1 -> w -> 0 for w in {a, b, c}, a leg
// b1 -> b, and a leg c_k -> ... -> c1 -> c with k = n - 5.

Quiver e_double_arrow_quiver(int n);

enum class ModularGenerator { TauA, TauB, TauC, Gamma };

ModularGenerator parse_generator(std::string_view name);
const char* to_string(ModularGenerator g) noexcept;

/// Composition convention for product words such as mu_a mu_0 mu_1.
enum class WordOrder { RightmostFirst, LeftmostFirst };
const char* to_string(WordOrder o) noexcept;

/// Product word of a generator as written, e.g. {"a", "0", "1"} for tau_a.
std::vector<std::string> generator_labels(ModularGenerator g, int n);

struct ModularStep {
    Seed seed;
    WordOrder order = WordOrder::RightmostFirst;
    Permutation restoring;
};

/// Applies one generator and restores the base labeling. Rightmost-first
/// composition is tried before leftmost-first; the convention used is reported.
ModularStep modular_generator(const Seed& s, ModularGenerator g);

}  // namespace friezelab
