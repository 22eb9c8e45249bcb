#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "friezelab/cluster.hpp"
#include "friezelab/laurent.hpp"

namespace friezelab {

using DimVector = std::vector<int>;

/// Matrix entry: a literal integer or the name of a representation parameter.
using MatrixEntry = std::variant<Integer, std::string>;
using EntryMatrix = std::vector<std::vector<MatrixEntry>>;
using IntMatrix = std::vector<std::vector<Integer>>;

struct ArrowMap {
    std::size_t tail = 0;
    std::size_t head = 0;
    EntryMatrix matrix;  // dims[head] x dims[tail]
};

/// Representation of an acyclic quiver. Arrow i -> j appears b(i, j) times;
/// each copy carries one map, listed in `maps` in order. Arrows without a
/// listed map act by zero.
class QuiverRep {
public:
    QuiverRep() = default;
    /// Throws InvalidRepresentation on shape, arrow or parameter mismatches.
    QuiverRep(Quiver quiver, DimVector dims, std::vector<ArrowMap> maps,
              std::map<std::string, Integer> params = {});

    const Quiver& quiver() const noexcept { return quiver_; }
    const DimVector& dims() const noexcept { return dims_; }
    const std::vector<ArrowMap>& maps() const noexcept { return maps_; }
    const std::map<std::string, Integer>& params() const noexcept { return params_; }

    /// Maps with parameters substituted, one per arrow copy (zero maps filled in).
    std::vector<std::pair<ArrowMap, IntMatrix>> resolved() const;

    /// p is admissible when reduction mod p keeps every parameter's
    /// membership in {0, 1}; e.g. lambda = 2 rules out p = 2 only.
    bool admissible(std::uint32_t p) const;

private:
    Quiver quiver_;
    DimVector dims_;
    std::vector<ArrowMap> maps_;
    std::map<std::string, Integer> params_;
};

/// Block-diagonal sum over the same quiver.
QuiverRep direct_sum(const QuiverRep& m, const QuiverRep& n);

/// Zero representation of q.
QuiverRep zero_rep(const Quiver& q);

// ---------------------------------------------------------------------------
// Forms on dimension vectors

/// <a, b> = sum_i a_i b_i - sum_{arrows s -> t} a_s b_t.
Integer euler_form(const Quiver& q, const DimVector& a, const DimVector& b);

/// Primitive positive generator of the radical of the symmetrized form; throws NotAffine.
DimVector delta(const Quiver& q);
Integer defect(const Quiver& q, const DimVector& a);
std::vector<std::size_t> extending_vertices(const Quiver& q);
/// Dimension vector of the indecomposable projective at i: paths out of i.
DimVector projective_dimvector(const Quiver& q, std::size_t i);

// ---------------------------------------------------------------------------
// Quiver Grassmannians over F_p

bool is_prime(std::uint64_t n);

/// Number of subrepresentations with dimension vector e over F_p; throws InadmissiblePrime.
Integer count_points(const QuiverRep& m, const DimVector& e, std::uint32_t p);

/// sum_i e_i (m_i - e_i): bound on the degree of the counting polynomial.
int grassmannian_dimension_bound(const DimVector& dims, const DimVector& e);

struct EulerCharacteristic {
    Integer chi;
    std::vector<Integer> coefficients;  // counting polynomial, constant term first
    std::vector<std::uint32_t> primes;  // interpolation nodes
    std::uint32_t held_out = 0;
};

/// Interpolates the counting function through bound + 1 admissible primes, checks
/// integrality and a held-out prime, and evaluates at q = 1. Throws
/// InsufficientPrimes or NonPolynomialCount.
EulerCharacteristic euler_characteristic_detail(const QuiverRep& m, const DimVector& e,
                                                const std::vector<std::uint32_t>& primes);
Integer euler_characteristic(const QuiverRep& m, const DimVector& e, const std::vector<std::uint32_t>& primes);

const std::vector<std::uint32_t>& default_primes();

/// Extends `primes` with further primes until it holds `needed` admissible ones.
std::vector<std::uint32_t> admissible_primes(const QuiverRep& m, std::vector<std::uint32_t> primes,
                                             std::size_t needed);

/// All e <= dims with a subrepresentation over one of the first two admissible primes.
std::vector<DimVector> subrep_dimvectors(const QuiverRep& m, unsigned threads = 0);

struct GrassmannianRow {
    DimVector e;
    Integer chi;
    std::uint32_t held_out = 0;
};
using GrassmannianTable = std::vector<GrassmannianRow>;

/// Rows ordered by total dimension, then lexicographically. Cells are spread
/// over `threads` workers (0: worker_threads()). If `primes` is too short for
/// some cell, it is extended with the next admissible primes.
GrassmannianTable grassmannian_table(const QuiverRep& m, const std::vector<std::uint32_t>& primes = default_primes(),
                                     unsigned threads = 0);

/// Worker cap from FRIEZELAB_THREADS, else the hardware concurrency.
unsigned worker_threads();

}  // namespace friezelab
