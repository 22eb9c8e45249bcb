#include "friezelab/laurent.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <queue>
#include <unordered_map>
#include <cctype>
#include <numeric>
#include <sstream>

#include "friezelab/error.hpp"

namespace friezelab {

std::string to_decimal(const Integer& value) { return value.get_str(10); }

Integer integer_from_decimal(std::string_view text) {
    std::string s(text);
    Integer out;
    if (s.empty() || out.set_str(s, 10) != 0) {
        throw Error(ErrorKind::ParseError, "not a decimal integer: '" + s + "'");
    }
    return out;
}

namespace {
const std::shared_ptr<const std::vector<std::string>>& empty_names() {
    static const auto names = std::make_shared<const std::vector<std::string>>();
    return names;
}
}  // namespace

VarList::VarList() : names_(empty_names()) {}

VarList::VarList(std::vector<std::string> names)
    : names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {}

std::optional<std::size_t> VarList::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_->size(); ++i) {
        if ((*names_)[i] == name) return i;
    }
    return std::nullopt;
}

bool GrlexLess::operator()(const Exponent& a, const Exponent& b) const noexcept {
    const long da = std::accumulate(a.begin(), a.end(), 0L);
    const long db = std::accumulate(b.begin(), b.end(), 0L);
    if (da != db) return da < db;
    return a < b;
}

LaurentPoly LaurentPoly::constant(const VarList& vars, const Integer& c) {
    return monomial(vars, Exponent(vars.size(), 0), c);
}

LaurentPoly LaurentPoly::variable(const VarList& vars, std::size_t index) {
    Exponent e(vars.size(), 0);
    e.at(index) = 1;
    return monomial(vars, std::move(e), 1);
}

LaurentPoly LaurentPoly::monomial(const VarList& vars, Exponent exp, const Integer& c) {
    if (exp.size() != vars.size()) {
        throw Error(ErrorKind::VariableMismatch, "exponent length does not match variable count");
    }
    LaurentPoly p(vars);
    if (c != 0) p.terms_.emplace(std::move(exp), c);
    return p;
}

Integer LaurentPoly::coefficient(const Exponent& exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Integer(0) : it->second;
}

void LaurentPoly::add_term(const Exponent& exp, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Exponent LaurentPoly::min_exponents() const {
    Exponent out(vars_.size(), 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            out[i] = first ? e[i] : std::min(out[i], e[i]);
        }
        first = false;
    }
    return out;
}

LaurentPoly LaurentPoly::shifted(const Exponent& shift) const {
    if (shift.size() != vars_.size()) {
        throw Error(ErrorKind::VariableMismatch, "shift length does not match variable count");
    }
    LaurentPoly out(vars_);
    for (const auto& [e, c] : terms_) {
        Exponent f = e;
        for (std::size_t i = 0; i < f.size(); ++i) f[i] += shift[i];
        out.terms_.emplace_hint(out.terms_.end(), std::move(f), c);
    }
    return out;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
    LaurentPoly result = constant(vars_, 1);
    LaurentPoly base = *this;
    while (n > 0) {
        if (n & 1U) result *= base;
        n >>= 1U;
        if (n > 0) base *= base;
    }
    return result;
}

void LaurentPoly::check_same_vars(const LaurentPoly& other) const {
    if (!(vars_ == other.vars_)) {
        throw Error(ErrorKind::VariableMismatch, "operands have different variable lists");
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
    check_same_vars(other);
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
    check_same_vars(other);
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
    *this = *this * other;
    return *this;
}

namespace {

// Exponents packed into one word, variable 0 in the high bits, so integer
// order is lex order and exponent addition is word addition.
struct Packing {
    std::vector<unsigned> shift;
    std::vector<std::uint64_t> mask;

    std::uint64_t pack(const Exponent& e) const {
        std::uint64_t w = 0;
        for (std::size_t i = 0; i < e.size(); ++i) w |= static_cast<std::uint64_t>(e[i]) << shift[i];
        return w;
    }
    int field(std::uint64_t w, std::size_t i) const { return static_cast<int>((w >> shift[i]) & mask[i]); }
};

std::optional<Packing> make_packing(const Exponent& limit) {
    Packing pk{std::vector<unsigned>(limit.size()), std::vector<std::uint64_t>(limit.size())};
    unsigned used = 0;
    for (std::size_t i = limit.size(); i-- > 0;) {
        const unsigned w = static_cast<unsigned>(std::bit_width(static_cast<unsigned>(limit[i])));
        pk.shift[i] = used;
        pk.mask[i] = (std::uint64_t{1} << w) - 1;
        used += w;
        if (used > 63) return std::nullopt;
    }
    return pk;
}

// Products accumulated in a hash on packed exponents; nullopt when they do not fit.
std::optional<std::vector<std::pair<Exponent, Integer>>> packed_multiply(const LaurentPoly::TermMap& a,
                                                                         const LaurentPoly::TermMap& b,
                                                                         std::size_t n) {
    Exponent amin(n), bmin(n), limit(n, 0);
    auto bounds = [n](const LaurentPoly::TermMap& t, Exponent& lo) {
        Exponent hi(n);
        bool first = true;
        for (const auto& [e, c] : t) {
            for (std::size_t i = 0; i < n; ++i) {
                lo[i] = first ? e[i] : std::min(lo[i], e[i]);
                hi[i] = first ? e[i] : std::max(hi[i], e[i]);
            }
            first = false;
        }
        return hi;
    };
    const Exponent amax = bounds(a, amin);
    const Exponent bmax = bounds(b, bmin);
    for (std::size_t i = 0; i < n; ++i) limit[i] = (amax[i] - amin[i]) + (bmax[i] - bmin[i]);
    const auto pk = make_packing(limit);
    if (!pk) return std::nullopt;

    auto packed = [&](const LaurentPoly::TermMap& t, const Exponent& lo) {
        std::vector<std::pair<std::uint64_t, const Integer*>> out;
        out.reserve(t.size());
        Exponent f(n);
        for (const auto& [e, c] : t) {
            for (std::size_t i = 0; i < n; ++i) f[i] = e[i] - lo[i];
            out.emplace_back(pk->pack(f), &c);
        }
        return out;
    };
    const auto pa = packed(a, amin);
    const auto pb = packed(b, bmin);
    std::unordered_map<std::uint64_t, Integer> acc;
    acc.reserve(std::min<std::size_t>(pa.size() * pb.size(), std::size_t{1} << 22));
    for (const auto& [ka, ca] : pa)
        for (const auto& [kb, cb] : pb) mpz_addmul(acc[ka + kb].get_mpz_t(), ca->get_mpz_t(), cb->get_mpz_t());

    std::vector<std::pair<Exponent, Integer>> out;
    out.reserve(acc.size());
    for (auto& [k, c] : acc) {
        if (c == 0) continue;
        Exponent e(n);
        for (std::size_t i = 0; i < n; ++i) e[i] = pk->field(k, i) + amin[i] + bmin[i];
        out.emplace_back(std::move(e), std::move(c));
    }
    const GrlexLess less;
    std::sort(out.begin(), out.end(), [&](const auto& x, const auto& y) { return less(x.first, y.first); });
    return out;
}

}  // namespace

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_same_vars(b);
    LaurentPoly out(a.vars_);
    const std::size_t n = a.vars_.size();
    if (a.terms_.size() * b.terms_.size() >= 256) {
        if (auto fast = packed_multiply(a.terms_, b.terms_, n)) {
            for (auto& [e, c] : *fast) out.terms_.emplace_hint(out.terms_.end(), std::move(e), std::move(c));
            return out;
        }
    }
    Exponent e(n);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly out(a.vars_);
    for (const auto& [e, c] : a.terms_) out.terms_.emplace_hint(out.terms_.end(), e, -c);
    return out;
}

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }

namespace {

struct HeapEntry {
    std::uint64_t exp;
    std::uint32_t i, j;  // product of divisor term i and quotient term j
    bool operator<(const HeapEntry& o) const noexcept { return exp < o.exp; }
};

// Heap division of polynomials (all exponents >= 0): products d_i q_j are
// merged in decreasing order, one chain per divisor term. Returns nullopt
// when the exponents do not fit in a word.
// Componentwise bound on exact quotient exponents: the Newton polytope of p
// is the Minkowski sum of those of the quotient and d.
Exponent quotient_bound(const LaurentPoly& p, const LaurentPoly& d, Exponent& pmax) {
    const std::size_t n = p.vars().size();
    Exponent dmax(n, 0), qmax(n, 0);
    pmax.assign(n, 0);
    for (const auto& [e, c] : p.terms())
        for (std::size_t i = 0; i < n; ++i) pmax[i] = std::max(pmax[i], e[i]);
    for (const auto& [e, c] : d.terms())
        for (std::size_t i = 0; i < n; ++i) dmax[i] = std::max(dmax[i], e[i]);
    for (std::size_t i = 0; i < n; ++i) {
        qmax[i] = pmax[i] - dmax[i];
        if (qmax[i] < 0) throw Error(ErrorKind::NotDivisible, "no exact Laurent quotient");
    }
    return qmax;
}

std::optional<LaurentPoly> packed_divide(const LaurentPoly& p, const LaurentPoly& d, const Exponent& pmax,
                                         const Exponent& qmax) {
    const std::size_t n = p.vars().size();
    const auto pk = make_packing(pmax);
    if (!pk) return std::nullopt;

    using Term = std::pair<std::uint64_t, const Integer*>;
    auto packed_terms = [&](const LaurentPoly& f) {
        std::vector<Term> out;
        out.reserve(f.terms().size());
        for (const auto& [e, c] : f.terms()) out.emplace_back(pk->pack(e), &c);
        std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return a.first > b.first; });
        return out;
    };
    const std::vector<Term> pt = packed_terms(p);
    const std::vector<Term> dt = packed_terms(d);
    const std::uint64_t d0 = dt[0].first;
    const Integer& c0 = *dt[0].second;

    std::vector<std::uint64_t> qexp;
    std::vector<Integer> qcoef;
    std::priority_queue<HeapEntry> heap;
    // chain i runs over d_i q_0, d_i q_1, ...; it waits when it has caught up with the quotient
    std::vector<std::uint32_t> waiting;
    for (std::size_t i = dt.size(); i-- > 1;) waiting.push_back(static_cast<std::uint32_t>(i));
    std::vector<std::uint32_t> next_j(dt.size(), 0);
    std::size_t k = 0;
    Integer acc;
    while (k < pt.size() || !heap.empty()) {
        std::uint64_t m = k < pt.size() ? pt[k].first : 0;
        if (!heap.empty() && (k >= pt.size() || heap.top().exp > m)) m = heap.top().exp;
        acc = 0;
        if (k < pt.size() && pt[k].first == m) acc = *pt[k++].second;
        while (!heap.empty() && heap.top().exp == m) {
            const HeapEntry top = heap.top();
            heap.pop();
            mpz_submul(acc.get_mpz_t(), dt[top.i].second->get_mpz_t(), qcoef[top.j].get_mpz_t());
            const std::uint32_t j = top.j + 1;
            if (j < qexp.size()) {
                heap.push({qexp[j] + dt[top.i].first, top.i, j});
            } else {
                next_j[top.i] = j;
                waiting.push_back(top.i);
            }
        }
        if (acc == 0) continue;
        for (std::size_t i = 0; i < n; ++i) {
            const int diff = pk->field(m, i) - pk->field(d0, i);
            if (diff < 0 || diff > qmax[i]) throw Error(ErrorKind::NotDivisible, "no exact Laurent quotient");
        }
        if (!mpz_divisible_p(acc.get_mpz_t(), c0.get_mpz_t())) {
            throw Error(ErrorKind::NotDivisible, "no exact Laurent quotient (coefficient)");
        }
        qexp.push_back(m - d0);
        qcoef.push_back(acc / c0);
        const auto j = static_cast<std::uint32_t>(qexp.size() - 1);
        for (std::uint32_t i : waiting) {
            if (next_j[i] != j) continue;
            heap.push({qexp[j] + dt[i].first, i, j});
        }
        waiting.erase(std::remove_if(waiting.begin(), waiting.end(), [&](std::uint32_t i) { return next_j[i] == j; }),
                      waiting.end());
    }

    LaurentPoly q(p.vars());
    Exponent e(n);
    for (std::size_t t = 0; t < qexp.size(); ++t) {
        for (std::size_t i = 0; i < n; ++i) e[i] = pk->field(qexp[t], i);
        q.add_term(e, qcoef[t]);
    }
    return q;
}

}  // namespace

LaurentPoly div_exact(const LaurentPoly& p, const LaurentPoly& q) {
    if (!(p.vars() == q.vars())) {
        throw Error(ErrorKind::VariableMismatch, "operands have different variable lists");
    }
    if (q.is_zero()) throw Error(ErrorKind::NotDivisible, "division by zero polynomial");
    if (p.is_zero()) return LaurentPoly(p.vars());

    // Clear denominators so that both operands are polynomials and q has no
    // monomial factor; an exact Laurent quotient is then a polynomial quotient.
    const std::size_t n = p.vars().size();
    Exponent p_min = p.min_exponents();
    Exponent q_min = q.min_exponents();
    Exponent neg_p(n), neg_q(n);
    for (std::size_t i = 0; i < n; ++i) {
        neg_p[i] = -p_min[i];
        neg_q[i] = -q_min[i];
    }
    LaurentPoly rem = p.shifted(neg_p);
    const LaurentPoly divisor = q.shifted(neg_q);
    // p = quotient * divisor * x^{p_min - q_min}
    Exponent back(n);
    for (std::size_t i = 0; i < n; ++i) back[i] = p_min[i] - q_min[i];
    Exponent pmax;
    const Exponent qmax = quotient_bound(rem, divisor, pmax);
    if (auto fast = packed_divide(rem, divisor, pmax, qmax)) return fast->shifted(back);

    const auto& [lead_exp, lead_coef] = *divisor.terms().rbegin();
    LaurentPoly quotient(p.vars());
    Exponent qe(n);
    while (!rem.is_zero()) {
        const auto& [re, rc] = *rem.terms().rbegin();
        for (std::size_t i = 0; i < n; ++i) {
            qe[i] = re[i] - lead_exp[i];
            if (qe[i] < 0 || qe[i] > qmax[i]) throw Error(ErrorKind::NotDivisible, "no exact Laurent quotient");
        }
        if (!mpz_divisible_p(rc.get_mpz_t(), lead_coef.get_mpz_t())) {
            throw Error(ErrorKind::NotDivisible, "no exact Laurent quotient (coefficient)");
        }
        Integer c = rc / lead_coef;
        quotient.add_term(qe, c);
        Exponent te(n);
        for (const auto& [de, dc] : divisor.terms()) {
            for (std::size_t i = 0; i < n; ++i) te[i] = qe[i] + de[i];
            rem.add_term(te, -c * dc);
        }
    }
    return quotient.shifted(back);
}

namespace {
Rational power(const Rational& base, int e) {
    Rational r = 1;
    Rational b = base;
    if (e < 0) {
        b = 1 / b;
        e = -e;
    }
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}
}  // namespace

Rational specialize(const LaurentPoly& p, std::span<const Integer> values) {
    if (values.size() != p.vars().size()) {
        throw Error(ErrorKind::VariableMismatch, "value count does not match variable count");
    }
    Rational sum = 0;
    for (const auto& [e, c] : p.terms()) {
        Rational term(c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (values[i] == 0) {
                if (e[i] < 0) {
                    throw Error(ErrorKind::ZeroToNegativePower,
                                "variable " + p.vars()[i] + " is zero but has a negative exponent");
                }
                term = 0;
                continue;
            }
            term *= power(Rational(values[i]), e[i]);
        }
        sum += term;
    }
    sum.canonicalize();
    return sum;
}

Rational specialize(const LaurentPoly& p, const std::map<std::string, Integer>& values) {
    std::vector<Integer> v;
    v.reserve(p.vars().size());
    for (const auto& name : p.vars().names()) {
        auto it = values.find(name);
        if (it == values.end()) {
            throw Error(ErrorKind::VariableMismatch, "no value assigned to variable " + name);
        }
        v.push_back(it->second);
    }
    return specialize(p, v);
}

Integer at_ones(const LaurentPoly& p) {
    Integer s = 0;
    for (const auto& [e, c] : p.terms()) s += c;
    return s;
}

// ---------------------------------------------------------------------------
// Text form

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool negative = c < 0;
        Integer mag = abs(c);
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;

        std::string factors;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!factors.empty()) factors += "*";
            factors += vars_[i];
            if (e[i] != 1) factors += "^" + std::to_string(e[i]);
        }
        if (factors.empty()) {
            os << mag.get_str();
        } else if (mag == 1) {
            os << factors;
        } else {
            os << mag.get_str() << "*" << factors;
        }
    }
    return os.str();
}

namespace {

class Parser {
public:
    Parser(std::string_view text, const VarList& vars) : s_(text), vars_(vars) {}

    LaurentPoly parse() {
        LaurentPoly out(vars_);
        skip_ws();
        bool negative = false;
        if (peek() == '-') {
            negative = true;
            ++pos_;
        } else if (peek() == '+') {
            ++pos_;
        }
        for (;;) {
            auto [e, c] = term();
            out.add_term(e, negative ? Integer(-c) : c);
            skip_ws();
            if (pos_ >= s_.size()) break;
            char op = s_[pos_++];
            if (op == '+') {
                negative = false;
            } else if (op == '-') {
                negative = true;
            } else {
                fail("expected '+' or '-'");
            }
        }
        return out;
    }

private:
    std::pair<Exponent, Integer> term() {
        Exponent e(vars_.size(), 0);
        Integer c = 1;
        for (;;) {
            skip_ws();
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                c *= number();
            } else if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') {
                std::size_t start = pos_;
                while (pos_ < s_.size() &&
                       (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
                    ++pos_;
                }
                std::string_view name = s_.substr(start, pos_ - start);
                auto idx = vars_.index_of(name);
                if (!idx) fail("unknown variable '" + std::string(name) + "'");
                int power = 1;
                skip_ws();
                if (peek() == '^') {
                    ++pos_;
                    skip_ws();
                    bool neg = false;
                    if (peek() == '-') {
                        neg = true;
                        ++pos_;
                    }
                    power = static_cast<int>(number().get_si());
                    if (neg) power = -power;
                }
                e[*idx] += power;
            } else {
                fail("expected a factor");
            }
            skip_ws();
            if (peek() != '*') break;
            ++pos_;
        }
        return {e, c};
    }

    Integer number() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a number");
        return integer_from_decimal(s_.substr(start, pos_ - start));
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw Error(ErrorKind::ParseError,
                    what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
    }

    std::string_view s_;
    const VarList& vars_;
    std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text, const VarList& vars) {
    return Parser(text, vars).parse();
}

}  // namespace friezelab
