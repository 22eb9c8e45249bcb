#pragma once

#include <cstddef>
#include <vector>

#include "friezelab/error.hpp"
#include "friezelab/laurent.hpp"

namespace friezelab {

// ---------------------------------------------------------------------------
// Normalized Chebyshev polynomials, T_0 = 2 and S_0 = 1, both with
// P_{k+1}(x) = x P_k(x) - P_{k-1}(x). Works for Integer and LaurentPoly.

namespace detail {
inline Integer constant_like(const Integer&, long c) { return Integer(c); }
inline LaurentPoly constant_like(const LaurentPoly& x, long c) {
    return LaurentPoly::constant(x.vars(), c);
}
}  // namespace detail

template <class T>
T chebyshev_T(unsigned k, const T& x) {
    T prev = detail::constant_like(x, 2);
    if (k == 0) return prev;
    T cur = x;
    for (unsigned i = 1; i < k; ++i) {
        T next = x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// Defined for k >= -2 with S_{-2} = -1 and S_{-1} = 0.
template <class T>
T chebyshev_S(int k, const T& x) {
    if (k < -2) throw Error(ErrorKind::InvalidArgument, "chebyshev_S requires k >= -2");
    T prev = detail::constant_like(x, -1);
    if (k == -2) return prev;
    T cur = detail::constant_like(x, 0);
    for (int i = -1; i < k; ++i) {
        T next = x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

// ---------------------------------------------------------------------------

/// Cyclic sequence of positive integers (a_0, ..., a_{n-1}).
class Quiddity {
public:
    explicit Quiddity(std::vector<Integer> entries);

    std::size_t size() const noexcept { return entries_.size(); }
    /// Cyclic access, any integer index.
    const Integer& at(long i) const;
    const std::vector<Integer>& entries() const noexcept { return entries_; }

    /// Equality up to rotation.
    friend bool operator==(const Quiddity& a, const Quiddity& b);

private:
    std::vector<Integer> entries_;
};

/// An n-periodic infinite frieze truncated at `depth` rows below the row of 1's.
///
/// Entries are indexed x_{i,j} with row j - i - 1: x_{i,i} = 0 is row -1,
/// x_{i,i+1} = 1 is row 0 and a_j = x_{j-2,j} is the quiddity row.
class FriezePattern {
public:
    FriezePattern(Quiddity quiddity, int depth, std::vector<std::vector<Integer>> diagonals);

    const Quiddity& quiddity() const noexcept { return quiddity_; }
    std::size_t period() const noexcept { return quiddity_.size(); }
    int depth() const noexcept { return depth_; }

    /// x_{i,j}; requires -1 <= j - i - 1 <= depth.
    const Integer& entry(long i, long j) const;

    /// The `count` entries of row r in staggered display order, aligned so that
    /// column t of row 1 is a_t and odd rows share columns.
    std::vector<Integer> row(int r, std::size_t count) const;
    std::vector<Integer> row(int r) const { return row(r, period()); }

private:
    Quiddity quiddity_;
    int depth_;
    std::vector<std::vector<Integer>> diagonals_;  // diagonals_[i][d] = x_{i,i+d}
};

/// Generates entries with x_{i,j+1} = a_{j+1} x_{i,j} - x_{i,j-1}.
/// Throws NonPositiveEntry if a row >= 1 entry is not positive.
FriezePattern generate(const Quiddity& q, int depth);

/// True iff every stored adjacent diamond satisfies bc - ad = 1.
bool diamond_holds(const FriezePattern& f);

/// s_1 read from entries (row n minus row n-2, checked for every i), higher k
/// from s_{k+1} = s_1 s_k - s_{k-1}; the result is cross-checked against T_k(s_1).
Integer growth(const FriezePattern& f, unsigned k);

/// x_{i,i+kn+1} - x_{i+1,i+kn} read directly from entries; requires depth >= kn.
Integer measured_growth(const FriezePattern& f, unsigned k);

enum class GrowthClass { AffineFast, ArithmeticLike };

GrowthClass classify_growth(const FriezePattern& f);
const char* to_string(GrowthClass c) noexcept;

}  // namespace friezelab
