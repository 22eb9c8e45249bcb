#include "friezelab/frieze.hpp"

#include <string>

namespace friezelab {

namespace {
long floor_mod(long a, long n) {
    long r = a % n;
    return r < 0 ? r + n : r;
}
}  // namespace

Quiddity::Quiddity(std::vector<Integer> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw Error(ErrorKind::InvalidQuiddity, "quiddity must be non-empty");
    for (const auto& a : entries_) {
        if (a < 1) {
            throw Error(ErrorKind::InvalidQuiddity,
                        "quiddity entries must be positive, got " + to_decimal(a));
        }
    }
}

const Integer& Quiddity::at(long i) const {
    return entries_[static_cast<std::size_t>(floor_mod(i, static_cast<long>(entries_.size())))];
}

bool operator==(const Quiddity& a, const Quiddity& b) {
    const std::size_t n = a.size();
    if (n != b.size()) return false;
    for (std::size_t shift = 0; shift < n; ++shift) {
        bool same = true;
        for (std::size_t i = 0; i < n && same; ++i) {
            same = a.entries_[i] == b.entries_[(i + shift) % n];
        }
        if (same) return true;
    }
    return false;
}

FriezePattern::FriezePattern(Quiddity quiddity, int depth,
                             std::vector<std::vector<Integer>> diagonals)
    : quiddity_(std::move(quiddity)), depth_(depth), diagonals_(std::move(diagonals)) {}

const Integer& FriezePattern::entry(long i, long j) const {
    const long d = j - i;
    if (d < 0 || d > depth_ + 1) {
        throw Error(ErrorKind::InvalidArgument,
                    "entry (" + std::to_string(i) + "," + std::to_string(j) + ") outside computed rows");
    }
    const long n = static_cast<long>(period());
    return diagonals_[static_cast<std::size_t>(floor_mod(i, n))][static_cast<std::size_t>(d)];
}

std::vector<Integer> FriezePattern::row(int r, std::size_t count) const {
    std::vector<Integer> out;
    out.reserve(count);
    const long half = r >= 0 ? (r + 1) / 2 : 0;  // ceil(r/2), with row -1 treated like odd rows
    for (std::size_t t = 0; t < count; ++t) {
        const long i = static_cast<long>(t) - 1 - half;
        out.push_back(entry(i, i + r + 1));
    }
    return out;
}

FriezePattern generate(const Quiddity& q, int depth) {
    if (depth < 1) throw Error(ErrorKind::InvalidArgument, "depth must be at least 1");
    const std::size_t n = q.size();
    std::vector<std::vector<Integer>> diagonals(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto& diag = diagonals[i];
        diag.reserve(static_cast<std::size_t>(depth) + 2);
        diag.emplace_back(0);
        diag.emplace_back(1);
        for (int d = 1; d <= depth; ++d) {
            // j = i + d, computing x_{i,j+1}
            const long j = static_cast<long>(i) + d;
            Integer next = q.at(j + 1) * diag[static_cast<std::size_t>(d)] -
                           diag[static_cast<std::size_t>(d) - 1];
            if (next <= 0) {
                throw Error(ErrorKind::NonPositiveEntry,
                            "entry x_{" + std::to_string(i) + "," + std::to_string(j + 1) + "} in row " +
                                std::to_string(d) + " is " + to_decimal(next) +
                                "; quiddity does not bound an infinite frieze");
            }
            diag.push_back(std::move(next));
        }
    }
    return FriezePattern(q, depth, std::move(diagonals));
}

bool diamond_holds(const FriezePattern& f) {
    const long n = static_cast<long>(f.period());
    for (long i = 0; i < n; ++i) {
        // diamond with top x_{i,j+1}, sides x_{i,j}, x_{i+1,j+1}, bottom x_{i+1,j}
        for (long j = i + 1; j <= i + f.depth(); ++j) {
            const Integer lhs = f.entry(i, j) * f.entry(i + 1, j + 1) - f.entry(i, j + 1) * f.entry(i + 1, j);
            if (lhs != 1) return false;
        }
    }
    return true;
}

Integer measured_growth(const FriezePattern& f, unsigned k) {
    if (k == 0) throw Error(ErrorKind::InvalidArgument, "growth index must be positive");
    const long n = static_cast<long>(f.period());
    const long kn = static_cast<long>(k) * n;
    if (kn > f.depth()) {
        throw Error(ErrorKind::InvalidArgument,
                    "depth " + std::to_string(f.depth()) + " is too small to read s_" + std::to_string(k));
    }
    Integer s;
    for (long i = 0; i < n; ++i) {
        Integer d = f.entry(i, i + kn + 1) - f.entry(i + 1, i + kn);
        if (i == 0) {
            s = d;
        } else if (d != s) {
            throw Error(ErrorKind::InvalidFrieze, "growth coefficient s_" + std::to_string(k) +
                                                      " depends on the column index");
        }
    }
    return s;
}

Integer growth(const FriezePattern& f, unsigned k) {
    if (k == 0) return 2;
    const Integer s1 = measured_growth(f, 1);
    Integer prev = 2;
    Integer cur = s1;
    for (unsigned i = 1; i < k; ++i) {
        Integer next = s1 * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    if (cur != chebyshev_T(k, s1)) {
        throw Error(ErrorKind::InvalidFrieze, "growth recurrence disagrees with T_k(s_1)");
    }
    return cur;
}

GrowthClass classify_growth(const FriezePattern& f) {
    const Integer s1 = growth(f, 1);
    if (s1 < 2) {
        throw Error(ErrorKind::InvalidFrieze,
                    "principal growth " + to_decimal(s1) + " < 2: not an infinite frieze");
    }
    return s1 == 2 ? GrowthClass::ArithmeticLike : GrowthClass::AffineFast;
}

const char* to_string(GrowthClass c) noexcept {
    return c == GrowthClass::ArithmeticLike ? "ArithmeticLike" : "AffineFast";
}

}  // namespace friezelab
