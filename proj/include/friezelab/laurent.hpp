#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace friezelab {

using Integer = mpz_class;
using Rational = mpq_class;

std::string to_decimal(const Integer& value);
Integer integer_from_decimal(std::string_view text);

/// Immutable, cheaply copyable list of variable names.
class VarList {
public:
    VarList();
    explicit VarList(std::vector<std::string> names);

    std::size_t size() const noexcept { return names_->size(); }
    const std::string& operator[](std::size_t i) const { return (*names_)[i]; }
    const std::vector<std::string>& names() const noexcept { return *names_; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    friend bool operator==(const VarList& a, const VarList& b) {
        return a.names_ == b.names_ || *a.names_ == *b.names_;
    }

private:
    std::shared_ptr<const std::vector<std::string>> names_;
};

using Exponent = std::vector<int>;

/// Graded-lexicographic order: total degree first, then lexicographic.
struct GrlexLess {
    bool operator()(const Exponent& a, const Exponent& b) const noexcept;
};

/// Multivariate Laurent polynomial with arbitrary-precision integer coefficients.
///
/// Terms are kept in a map ordered by GrlexLess with no zero coefficients, so two
/// values are equal exactly when their term maps are.
class LaurentPoly {
public:
    using TermMap = std::map<Exponent, Integer, GrlexLess>;

    LaurentPoly() = default;
    explicit LaurentPoly(VarList vars) : vars_(std::move(vars)) {}

    static LaurentPoly constant(const VarList& vars, const Integer& c);
    static LaurentPoly variable(const VarList& vars, std::size_t index);
    static LaurentPoly monomial(const VarList& vars, Exponent exp, const Integer& c = 1);

    const VarList& vars() const noexcept { return vars_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_monomial() const noexcept { return terms_.size() == 1; }

    Integer coefficient(const Exponent& exp) const;
    /// Adds c to the coefficient of x^exp, dropping the term if it cancels.
    void add_term(const Exponent& exp, const Integer& c);

    /// Per-variable minimum exponent over all terms (zeros for the zero polynomial).
    Exponent min_exponents() const;
    /// Multiplies every exponent vector by x^shift.
    LaurentPoly shifted(const Exponent& shift) const;
    LaurentPoly pow(unsigned n) const;

    /// Canonical text form, terms in ascending graded-lex order.
    std::string to_string() const;
    static LaurentPoly parse(std::string_view text, const VarList& vars);

    LaurentPoly& operator+=(const LaurentPoly& other);
    LaurentPoly& operator-=(const LaurentPoly& other);
    LaurentPoly& operator*=(const LaurentPoly& other);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a);

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

private:
    void check_same_vars(const LaurentPoly& other) const;

    VarList vars_;
    TermMap terms_;
};

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q);

/// Returns r with r * q == p; throws NotDivisible if no Laurent quotient exists.
LaurentPoly div_exact(const LaurentPoly& p, const LaurentPoly& q);

/// Exact evaluation; values are indexed like p.vars().
Rational specialize(const LaurentPoly& p, std::span<const Integer> values);
Rational specialize(const LaurentPoly& p, const std::map<std::string, Integer>& values);

/// Evaluation at x_i = 1, i.e. the coefficient sum.
Integer at_ones(const LaurentPoly& p);

}  // namespace friezelab
