#include "friezelab/rep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <string>
#include <thread>

#include "friezelab/error.hpp"
#include "friezelab/kernels/dot_zero.hpp"

namespace friezelab {

namespace {

std::uint32_t reduce(const Integer& v, std::uint32_t p) {
    return static_cast<std::uint32_t>(mpz_fdiv_ui(v.get_mpz_t(), p));
}

[[noreturn]] void bad_rep(const std::string& msg) { throw Error(ErrorKind::InvalidRepresentation, msg); }

std::string arrow_name(const Quiver& q, std::size_t t, std::size_t h) {
    return q.labels()[t] + "->" + q.labels()[h];
}

}  // namespace

// ---------------------------------------------------------------------------
// QuiverRep

QuiverRep::QuiverRep(Quiver quiver, DimVector dims, std::vector<ArrowMap> maps,
                     std::map<std::string, Integer> params)
    : quiver_(std::move(quiver)), dims_(std::move(dims)), maps_(std::move(maps)), params_(std::move(params)) {
    const std::size_t m = quiver_.size();
    if (!quiver_.is_acyclic()) bad_rep("representations need an acyclic quiver");
    if (dims_.size() != m) bad_rep("dimension vector length does not match the quiver");
    for (int d : dims_)
        if (d < 0) bad_rep("negative dimension");

    std::map<std::pair<std::size_t, std::size_t>, int> used;
    for (auto& a : maps_) {
        if (a.tail >= m || a.head >= m) bad_rep("arrow endpoint out of range");
        const int avail = quiver_(a.tail, a.head);
        if (++used[{a.tail, a.head}] > avail) {
            bad_rep("map given for a missing arrow " + arrow_name(quiver_, a.tail, a.head));
        }
        const auto rows = static_cast<std::size_t>(dims_[a.head]);
        const auto cols = static_cast<std::size_t>(dims_[a.tail]);
        if (a.matrix.empty() && (rows == 0 || cols == 0)) {
            a.matrix.assign(rows, std::vector<MatrixEntry>(cols, Integer(0)));
        }
        if (a.matrix.size() != rows) bad_rep("wrong row count on arrow " + arrow_name(quiver_, a.tail, a.head));
        for (const auto& row : a.matrix) {
            if (row.size() != cols) bad_rep("wrong column count on arrow " + arrow_name(quiver_, a.tail, a.head));
            for (const auto& x : row) {
                if (const auto* name = std::get_if<std::string>(&x); name && !params_.count(*name)) {
                    bad_rep("unknown parameter '" + *name + "'");
                }
            }
        }
    }
}

std::vector<std::pair<ArrowMap, IntMatrix>> QuiverRep::resolved() const {
    std::vector<std::pair<ArrowMap, IntMatrix>> out;
    const std::size_t m = quiver_.size();
    for (std::size_t t = 0; t < m; ++t) {
        for (std::size_t h = 0; h < m; ++h) {
            const int mult = quiver_(t, h);
            if (mult <= 0) continue;
            std::vector<const ArrowMap*> given;
            for (const auto& a : maps_)
                if (a.tail == t && a.head == h) given.push_back(&a);
            for (int c = 0; c < mult; ++c) {
                const auto rows = static_cast<std::size_t>(dims_[h]);
                const auto cols = static_cast<std::size_t>(dims_[t]);
                ArrowMap am{t, h, {}};
                IntMatrix mat(rows, std::vector<Integer>(cols, 0));
                if (static_cast<std::size_t>(c) < given.size()) {
                    am = *given[static_cast<std::size_t>(c)];
                    for (std::size_t r = 0; r < rows; ++r) {
                        for (std::size_t s = 0; s < cols; ++s) {
                            const auto& x = am.matrix[r][s];
                            mat[r][s] = std::holds_alternative<Integer>(x) ? std::get<Integer>(x)
                                                                           : params_.at(std::get<std::string>(x));
                        }
                    }
                } else {
                    am.matrix.assign(rows, std::vector<MatrixEntry>(cols, Integer(0)));
                }
                out.emplace_back(std::move(am), std::move(mat));
            }
        }
    }
    return out;
}

bool QuiverRep::admissible(std::uint32_t p) const {
    if (!is_prime(p)) return false;
    for (const auto& [name, v] : params_) {
        const std::uint32_t r = reduce(v, p);
        if ((r == 0) != (v == 0) || (r == 1) != (v == 1)) return false;
    }
    return true;
}

QuiverRep direct_sum(const QuiverRep& m, const QuiverRep& n) {
    if (!(m.quiver() == n.quiver())) bad_rep("direct sum needs the same quiver");
    std::map<std::string, Integer> params = m.params();
    for (const auto& [name, v] : n.params()) {
        auto [it, inserted] = params.emplace(name, v);
        if (!inserted && it->second != v) bad_rep("parameter '" + name + "' differs between summands");
    }
    DimVector dims(m.dims().size());
    for (std::size_t i = 0; i < dims.size(); ++i) dims[i] = m.dims()[i] + n.dims()[i];

    const auto rm = m.resolved();
    const auto rn = n.resolved();
    std::vector<ArrowMap> maps;
    for (std::size_t a = 0; a < rm.size(); ++a) {
        const ArrowMap& x = rm[a].first;
        const ArrowMap& y = rn[a].first;
        const std::size_t rows = static_cast<std::size_t>(dims[x.head]);
        const std::size_t cols = static_cast<std::size_t>(dims[x.tail]);
        const std::size_t xr = x.matrix.size();
        const std::size_t xc = static_cast<std::size_t>(m.dims()[x.tail]);
        EntryMatrix mat(rows, std::vector<MatrixEntry>(cols, Integer(0)));
        for (std::size_t r = 0; r < xr; ++r)
            for (std::size_t c = 0; c < xc; ++c) mat[r][c] = x.matrix[r][c];
        for (std::size_t r = 0; r < y.matrix.size(); ++r)
            for (std::size_t c = 0; c < y.matrix[r].size(); ++c) mat[xr + r][xc + c] = y.matrix[r][c];
        maps.push_back({x.tail, x.head, std::move(mat)});
    }
    return QuiverRep(m.quiver(), std::move(dims), std::move(maps), std::move(params));
}

QuiverRep zero_rep(const Quiver& q) { return QuiverRep(q, DimVector(q.size(), 0), {}); }

// ---------------------------------------------------------------------------
// Forms

Integer euler_form(const Quiver& q, const DimVector& a, const DimVector& b) {
    const std::size_t m = q.size();
    if (a.size() != m || b.size() != m) throw Error(ErrorKind::InvalidArgument, "dimension vector length mismatch");
    Integer s = 0;
    for (std::size_t i = 0; i < m; ++i) s += Integer(a[i]) * b[i];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (q(i, j) > 0) s -= Integer(q(i, j)) * a[i] * b[j];
    return s;
}

DimVector delta(const Quiver& q) {
    const std::size_t m = q.size();
    std::vector<std::vector<Rational>> c(m, std::vector<Rational>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) c[i][j] = i == j ? 2 : -std::abs(q(i, j));

    // reduced row echelon form over Q
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m && row < m; ++col) {
        std::size_t sel = row;
        while (sel < m && c[sel][col] == 0) ++sel;
        if (sel == m) continue;
        std::swap(c[sel], c[row]);
        const Rational inv = 1 / c[row][col];
        for (auto& x : c[row]) x *= inv;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == row || c[r][col] == 0) continue;
            const Rational f = c[r][col];
            for (std::size_t k = 0; k < m; ++k) c[r][k] -= f * c[row][k];
        }
        pivots.push_back(col);
        ++row;
    }
    if (m - pivots.size() != 1) {
        throw Error(ErrorKind::NotAffine, "radical of the symmetrized form has dimension " +
                                              std::to_string(m - pivots.size()) + ", expected 1");
    }
    std::size_t free_col = 0;
    while (std::find(pivots.begin(), pivots.end(), free_col) != pivots.end()) ++free_col;
    std::vector<Rational> v(m, 0);
    v[free_col] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -c[r][free_col];

    Integer lcm = 1;
    for (const auto& x : v) lcm = ::lcm(lcm, Integer(x.get_den()));
    std::vector<Integer> iv(m);
    Integer g = 0;
    for (std::size_t i = 0; i < m; ++i) {
        iv[i] = Integer(v[i] * lcm);
        g = gcd(g, iv[i]);
    }
    if (iv[free_col] < 0) g = -g;
    DimVector out(m);
    for (std::size_t i = 0; i < m; ++i) {
        iv[i] /= g;
        if (iv[i] <= 0) throw Error(ErrorKind::NotAffine, "radical generator is not positive");
        out[i] = static_cast<int>(iv[i].get_si());
    }
    return out;
}

Integer defect(const Quiver& q, const DimVector& a) { return euler_form(q, delta(q), a); }

std::vector<std::size_t> extending_vertices(const Quiver& q) {
    const DimVector d = delta(q);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] == 1) out.push_back(i);
    return out;
}

DimVector projective_dimvector(const Quiver& q, std::size_t i) {
    if (!q.is_acyclic()) throw Error(ErrorKind::InvalidArgument, "path counts need an acyclic quiver");
    const std::size_t m = q.size();
    if (i >= m) throw Error(ErrorKind::InvalidArgument, "vertex out of range");
    DimVector paths(m, 0);
    paths[i] = 1;
    // relax m times; acyclic so paths have at most m - 1 arrows
    for (std::size_t round = 0; round < m; ++round) {
        DimVector next(m, 0);
        next[i] = 1;
        for (std::size_t s = 0; s < m; ++s)
            for (std::size_t t = 0; t < m; ++t)
                if (q(s, t) > 0) next[t] += q(s, t) * paths[s];
        paths = std::move(next);
    }
    return paths;
}

// ---------------------------------------------------------------------------
// Subspace families

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

// All e-dimensional subspaces of F_p^n as RREF bases plus annihilator bases,
// stored slot-major then coordinate-major so one slot is a kernel operand.
struct SubspaceFamily {
    std::size_t n = 0;
    std::size_t e = 0;
    std::size_t count = 0;
    std::vector<std::uint32_t> basis;  // [(b * n + c) * count + k]
    std::vector<std::uint32_t> annih;  // [(a * n + c) * count + k]

    const std::uint32_t* basis_slot(std::size_t b) const { return basis.data() + b * n * count; }
    const std::uint32_t* annih_slot(std::size_t a) const { return annih.data() + a * n * count; }
    std::uint32_t basis_at(std::size_t b, std::size_t c, std::size_t k) const { return basis[(b * n + c) * count + k]; }
    std::uint32_t annih_at(std::size_t a, std::size_t c, std::size_t k) const { return annih[(a * n + c) * count + k]; }
};

SubspaceFamily enumerate_subspaces(std::size_t n, std::size_t e, std::uint32_t p) {
    SubspaceFamily fam;
    fam.n = n;
    fam.e = e;
    std::vector<std::vector<std::uint32_t>> bases;  // flattened e x n
    std::vector<std::vector<std::uint32_t>> annihs;  // flattened (n-e) x n

    std::vector<bool> choose(n, false);
    std::fill(choose.begin(), choose.begin() + static_cast<long>(e), true);
    do {
        std::vector<std::size_t> piv, nonpiv;
        for (std::size_t c = 0; c < n; ++c) (choose[c] ? piv : nonpiv).push_back(c);
        std::vector<std::pair<std::size_t, std::size_t>> free_pos;
        for (std::size_t r = 0; r < e; ++r)
            for (std::size_t c : nonpiv)
                if (c > piv[r]) free_pos.emplace_back(r, c);

        std::vector<std::uint32_t> digits(free_pos.size(), 0);
        for (;;) {
            std::vector<std::uint32_t> u(e * n, 0);
            for (std::size_t r = 0; r < e; ++r) u[r * n + piv[r]] = 1;
            for (std::size_t f = 0; f < free_pos.size(); ++f) u[free_pos[f].first * n + free_pos[f].second] = digits[f];

            std::vector<std::uint32_t> w((n - e) * n, 0);
            for (std::size_t a = 0; a < nonpiv.size(); ++a) {
                const std::size_t f = nonpiv[a];
                w[a * n + f] = 1;
                for (std::size_t r = 0; r < e; ++r) w[a * n + piv[r]] = (p - u[r * n + f]) % p;
            }
            bases.push_back(std::move(u));
            annihs.push_back(std::move(w));

            std::size_t pos = 0;
            while (pos < digits.size() && ++digits[pos] == p) digits[pos++] = 0;
            if (pos == digits.size()) break;
        }
    } while (std::prev_permutation(choose.begin(), choose.end()));

    const std::size_t count = bases.size();
    fam.count = count;
    fam.basis.assign(e * n * count, 0);
    fam.annih.assign((n - e) * n * count, 0);
    for (std::size_t k = 0; k < count; ++k) {
        for (std::size_t b = 0; b < e; ++b)
            for (std::size_t c = 0; c < n; ++c) fam.basis[(b * n + c) * count + k] = bases[k][b * n + c];
        for (std::size_t a = 0; a < n - e; ++a)
            for (std::size_t c = 0; c < n; ++c) fam.annih[(a * n + c) * count + k] = annihs[k][a * n + c];
    }
    return fam;
}

struct ModArrow {
    std::size_t tail, head;
    std::vector<std::uint32_t> a;  // dims[head] x dims[tail], row-major, reduced mod p
};

class PointCounter {
public:
    PointCounter(const QuiverRep& m, const DimVector& e, std::uint32_t p) : p_(p) {
        const std::size_t nv = m.dims().size();
        for (std::size_t v = 0; v < nv; ++v) {
            families_.push_back(enumerate_subspaces(static_cast<std::size_t>(m.dims()[v]),
                                                    static_cast<std::size_t>(e[v]), p));
        }
        for (const auto& [am, mat] : m.resolved()) {
            ModArrow a{am.tail, am.head, {}};
            for (const auto& row : mat)
                for (const auto& x : row) a.a.push_back(reduce(x, p));
            if (std::any_of(a.a.begin(), a.a.end(), [](std::uint32_t x) { return x != 0; })) {
                arrows_.push_back(std::move(a));
            }
        }
        // greedy order: start anywhere, prefer vertices tied to already placed ones
        std::vector<bool> placed(nv, false);
        for (std::size_t step = 0; step < nv; ++step) {
            std::size_t best = nv;
            int best_links = -1;
            for (std::size_t v = 0; v < nv; ++v) {
                if (placed[v]) continue;
                int links = 0;
                for (const auto& a : arrows_)
                    if ((a.tail == v && placed[a.head]) || (a.head == v && placed[a.tail])) ++links;
                if (links > best_links) {
                    best = v;
                    best_links = links;
                }
            }
            placed[best] = true;
            order_.push_back(best);
        }
        chosen_.assign(nv, 0);
        assigned_.assign(nv, false);
    }

    std::uint64_t run() { return visit(0); }

private:
    std::uint64_t visit(std::size_t depth) {
        const std::size_t v = order_[depth];
        const SubspaceFamily& fv = families_[v];
        std::vector<std::uint8_t> keep(fv.count, 1);
        std::vector<std::uint32_t> g(fv.n);

        for (const auto& a : arrows_) {
            if (a.tail == v && assigned_[a.head]) {
                // A U_v inside U_h: every annihilator row w of U_h kills A u
                const SubspaceFamily& fh = families_[a.head];
                const std::size_t kh = chosen_[a.head];
                for (std::size_t s = 0; s < fh.n - fh.e; ++s) {
                    bool nonzero = false;
                    for (std::size_t c = 0; c < fv.n; ++c) {
                        std::uint64_t acc = 0;
                        for (std::size_t r = 0; r < fh.n; ++r) acc += std::uint64_t{fh.annih_at(s, r, kh)} * a.a[r * fv.n + c];
                        g[c] = static_cast<std::uint32_t>(acc % p_);
                        nonzero |= g[c] != 0;
                    }
                    if (!nonzero) continue;
                    for (std::size_t b = 0; b < fv.e; ++b) {
                        kernels::dot_zero_mask(fv.basis_slot(b), fv.n, fv.count, g.data(), p_, fv.count, keep.data());
                    }
                }
            } else if (a.head == v && assigned_[a.tail]) {
                // image of each basis vector of U_t must be killed by U_v's annihilator
                const SubspaceFamily& ft = families_[a.tail];
                const std::size_t kt = chosen_[a.tail];
                for (std::size_t b = 0; b < ft.e; ++b) {
                    bool nonzero = false;
                    for (std::size_t r = 0; r < fv.n; ++r) {
                        std::uint64_t acc = 0;
                        for (std::size_t c = 0; c < ft.n; ++c) acc += std::uint64_t{a.a[r * ft.n + c]} * ft.basis_at(b, c, kt);
                        g[r] = static_cast<std::uint32_t>(acc % p_);
                        nonzero |= g[r] != 0;
                    }
                    if (!nonzero) continue;
                    for (std::size_t s = 0; s < fv.n - fv.e; ++s) {
                        kernels::dot_zero_mask(fv.annih_slot(s), fv.n, fv.count, g.data(), p_, fv.count, keep.data());
                    }
                }
            }
        }

        std::uint64_t total = 0;
        if (depth + 1 == order_.size()) {
            for (auto k : keep) total += k;
            return total;
        }
        assigned_[v] = true;
        for (std::size_t k = 0; k < fv.count; ++k) {
            if (!keep[k]) continue;
            chosen_[v] = k;
            total += visit(depth + 1);
        }
        assigned_[v] = false;
        return total;
    }

    std::uint32_t p_;
    std::vector<SubspaceFamily> families_;
    std::vector<ModArrow> arrows_;
    std::vector<std::size_t> order_;
    std::vector<std::size_t> chosen_;
    std::vector<bool> assigned_;
};

void check_dimvector(const QuiverRep& m, const DimVector& e) {
    if (e.size() != m.dims().size()) throw Error(ErrorKind::InvalidArgument, "dimension vector length mismatch");
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] < 0 || e[i] > m.dims()[i]) {
            throw Error(ErrorKind::InvalidArgument, "subdimension vector exceeds the representation");
        }
    }
}

}  // namespace

Integer count_points(const QuiverRep& m, const DimVector& e, std::uint32_t p) {
    check_dimvector(m, e);
    if (!m.admissible(p)) {
        throw Error(ErrorKind::InadmissiblePrime, std::to_string(p) + " is not an admissible prime for this representation");
    }
    if (e.empty()) return 1;
    PointCounter counter(m, e, p);
    return Integer(std::to_string(counter.run()));
}

int grassmannian_dimension_bound(const DimVector& dims, const DimVector& e) {
    int d = 0;
    for (std::size_t i = 0; i < dims.size(); ++i) d += e[i] * (dims[i] - e[i]);
    return d;
}

const std::vector<std::uint32_t>& default_primes() {
    static const std::vector<std::uint32_t> pool{3, 5, 7, 11, 13, 17, 19};
    return pool;
}

std::vector<std::uint32_t> admissible_primes(const QuiverRep& m, std::vector<std::uint32_t> primes, std::size_t needed) {
    std::vector<std::uint32_t> out;
    for (auto p : primes)
        if (m.admissible(p)) out.push_back(p);
    std::uint32_t next = primes.empty() ? 2 : *std::max_element(primes.begin(), primes.end()) + 1;
    while (out.size() < needed) {
        if (m.admissible(next)) out.push_back(next);
        ++next;
    }
    return out;
}

EulerCharacteristic euler_characteristic_detail(const QuiverRep& m, const DimVector& e,
                                                const std::vector<std::uint32_t>& primes) {
    check_dimvector(m, e);
    const std::size_t nodes = static_cast<std::size_t>(grassmannian_dimension_bound(m.dims(), e)) + 1;
    std::vector<std::uint32_t> usable;
    for (auto p : primes)
        if (m.admissible(p)) usable.push_back(p);
    if (usable.size() < nodes + 1) {
        throw Error(ErrorKind::InsufficientPrimes, "need " + std::to_string(nodes + 1) +
                                                       " admissible primes (one held out), have " +
                                                       std::to_string(usable.size()));
    }
    EulerCharacteristic out;
    out.primes.assign(usable.begin(), usable.begin() + static_cast<long>(nodes));
    out.held_out = usable[nodes];

    // Newton divided differences
    std::vector<Rational> xs, dd;
    for (auto p : out.primes) {
        xs.emplace_back(p);
        dd.emplace_back(count_points(m, e, p));
    }
    for (std::size_t j = 1; j < nodes; ++j)
        for (std::size_t i = nodes - 1; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);

    // expand to the monomial basis, highest Newton term first
    std::vector<Rational> coef(nodes, 0);
    for (std::size_t i = nodes; i-- > 0;) {
        // coef <- coef * (q - xs[i]) + dd[i]
        std::vector<Rational> next(nodes, 0);
        for (std::size_t d = 0; d + 1 < nodes; ++d) {
            next[d + 1] += coef[d];
            next[d] -= coef[d] * xs[i];
        }
        next[0] += dd[i];
        coef = std::move(next);
    }
    for (const auto& c : coef) {
        if (c.get_den() != 1) {
            throw Error(ErrorKind::NonPolynomialCount, "interpolated counting polynomial has a non-integer coefficient");
        }
        out.coefficients.emplace_back(c.get_num());
    }
    Integer at_held = 0;
    Integer pw = 1;
    for (const auto& c : out.coefficients) {
        at_held += c * pw;
        pw *= out.held_out;
    }
    if (at_held != count_points(m, e, out.held_out)) {
        throw Error(ErrorKind::NonPolynomialCount,
                    "held-out prime " + std::to_string(out.held_out) + " disagrees with the interpolated count");
    }
    out.chi = std::accumulate(out.coefficients.begin(), out.coefficients.end(), Integer(0));
    return out;
}

Integer euler_characteristic(const QuiverRep& m, const DimVector& e, const std::vector<std::uint32_t>& primes) {
    return euler_characteristic_detail(m, e, primes).chi;
}

unsigned worker_threads() {
    if (const char* env = std::getenv("FRIEZELAB_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

namespace {

template <class F>
void parallel_for(std::size_t n, unsigned threads, F&& body) {
    if (threads == 0) threads = worker_threads();
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(threads, n));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < n;) {
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

std::vector<DimVector> all_subvectors(const DimVector& dims) {
    std::vector<DimVector> out;
    DimVector e(dims.size(), 0);
    for (;;) {
        out.push_back(e);
        std::size_t i = 0;
        while (i < e.size() && ++e[i] > dims[i]) e[i++] = 0;
        if (i == e.size()) break;
    }
    std::sort(out.begin(), out.end(), [](const DimVector& a, const DimVector& b) {
        const int sa = std::accumulate(a.begin(), a.end(), 0);
        const int sb = std::accumulate(b.begin(), b.end(), 0);
        return sa != sb ? sa < sb : a < b;
    });
    return out;
}

}  // namespace

std::vector<DimVector> subrep_dimvectors(const QuiverRep& m, unsigned threads) {
    const auto probe = admissible_primes(m, default_primes(), 2);
    const auto candidates = all_subvectors(m.dims());
    std::vector<char> nonempty(candidates.size(), 0);
    parallel_for(candidates.size(), threads, [&](std::size_t i) {
        for (std::size_t j = 0; j < 2 && !nonempty[i]; ++j) nonempty[i] = count_points(m, candidates[i], probe[j]) > 0;
    });
    std::vector<DimVector> out;
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (nonempty[i]) out.push_back(candidates[i]);
    return out;
}

GrassmannianTable grassmannian_table(const QuiverRep& m, const std::vector<std::uint32_t>& primes, unsigned threads) {
    const auto es = subrep_dimvectors(m, threads);
    GrassmannianTable table(es.size());
    parallel_for(es.size(), threads, [&](std::size_t i) {
        const std::size_t needed = static_cast<std::size_t>(grassmannian_dimension_bound(m.dims(), es[i])) + 2;
        const auto pool = admissible_primes(m, primes, needed);
        auto ec = euler_characteristic_detail(m, es[i], pool);
        table[i] = {es[i], std::move(ec.chi), ec.held_out};
    });
    return table;
}

}  // namespace friezelab
