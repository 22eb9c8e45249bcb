#include <doctest.h>

#include <random>
#include <vector>

#include "friezelab/kernels/dot_zero.hpp"
#include "friezelab/rep.hpp"
#include "support.hpp"

using namespace friezelab;
using namespace friezelab::kernels;

namespace {

struct Batch {
    std::size_t ncoord, stride, count;
    std::uint32_t p;
    std::vector<std::uint32_t> data, g;
    std::vector<std::uint8_t> keep;
};

Batch random_batch(std::mt19937_64& rng, std::uint32_t p, std::size_t ncoord, std::size_t count) {
    Batch b{ncoord, count + (count % 3), count, p, {}, {}, {}};
    std::uniform_int_distribution<std::uint32_t> val(0, p - 1);
    // bias towards zero so orthogonal vectors actually show up
    std::bernoulli_distribution zero(0.4), cleared(0.1);
    b.data.resize(ncoord * b.stride);
    for (auto& x : b.data) x = zero(rng) ? 0 : val(rng);
    b.g.resize(ncoord);
    for (auto& x : b.g) x = val(rng);
    b.keep.resize(count);
    for (auto& k : b.keep) k = cleared(rng) ? 0 : 1;
    return b;
}

std::vector<std::uint8_t> reference(const Batch& b) {
    std::vector<std::uint8_t> out = b.keep;
    for (std::size_t k = 0; k < b.count; ++k) {
        std::uint64_t acc = 0;
        for (std::size_t c = 0; c < b.ncoord; ++c) acc = (acc + std::uint64_t{b.g[c]} * b.data[c * b.stride + k]) % b.p;
        if (acc != 0) out[k] = 0;
    }
    return out;
}

struct BackendGuard {
    Backend saved = active_backend();
    ~BackendGuard() { set_backend(saved); }
};

}  // namespace

TEST_CASE("scalar kernel matches the modular reference") {
    std::mt19937_64 rng(51);
    for (std::uint32_t p : {3u, 5u, 19u, 251u, 65521u, 4294967291u})
        for (std::size_t count : {0u, 1u, 7u, 8u, 9u, 33u, 100u}) {
            Batch b = random_batch(rng, p, 1 + count % 5, count);
            const auto want = reference(b);
            dot_zero_mask_scalar(b.data.data(), b.ncoord, b.stride, b.g.data(), p, count, b.keep.data());
            CHECK(b.keep == want);
        }
}

TEST_CASE("avx2 kernel matches scalar including tails") {
    if (!avx2_available()) {
        MESSAGE("avx2 not available; equivalence test skipped");
        return;
    }
#if defined(FRIEZELAB_HAVE_AVX2)
    std::mt19937_64 rng(53);
    for (std::uint32_t p : {3u, 5u, 7u, 19u, 23u, 101u, 1021u})
        for (std::size_t ncoord : {1u, 2u, 3u, 6u, 9u})
            for (std::size_t count = 0; count <= 41; ++count) {
                if (std::uint64_t{ncoord} * (p - 1) * (p - 1) >= (1ULL << 24)) continue;
                Batch a = random_batch(rng, p, ncoord, count);
                Batch b = a;
                dot_zero_mask_scalar(a.data.data(), ncoord, a.stride, a.g.data(), p, count, a.keep.data());
                dot_zero_mask_avx2(b.data.data(), ncoord, b.stride, b.g.data(), p, count, b.keep.data());
                CHECK(a.keep == b.keep);
            }
    // exactly at the edge of the float range
    Batch edge = random_batch(rng, 4093, 1, 64);
    for (auto& x : edge.data) x = 4092;
    for (auto& x : edge.g) x = 4092;
    Batch copy = edge;
    dot_zero_mask_scalar(edge.data.data(), 1, edge.stride, edge.g.data(), 4093, 64, edge.keep.data());
    dot_zero_mask_avx2(copy.data.data(), 1, copy.stride, copy.g.data(), 4093, 64, copy.keep.data());
    CHECK(edge.keep == copy.keep);
#endif
}

TEST_CASE("dispatcher falls back to scalar outside the exact range") {
    BackendGuard guard;
    std::mt19937_64 rng(59);
    for (Backend be : {Backend::Scalar, Backend::Avx2}) {
        set_backend(be);
        for (std::uint32_t p : {5u, 8191u, 65521u, 2147483647u}) {
            Batch b = random_batch(rng, p, 8, 50);
            const auto want = reference(b);
            dot_zero_mask(b.data.data(), b.ncoord, b.stride, b.g.data(), p, b.count, b.keep.data());
            CHECK(b.keep == want);
        }
    }
    set_backend(Backend::Scalar);
    CHECK(active_backend() == Backend::Scalar);
    set_backend(Backend::Avx2);
    CHECK(active_backend() == (avx2_available() ? Backend::Avx2 : Backend::Scalar));
    CHECK(std::string(to_string(Backend::Avx2)) == "avx2");
}

TEST_CASE("point counts do not depend on the backend") {
    BackendGuard guard;
    const Quiver d4 = testing::load_quiver("d4/quiver.json");
    const QuiverRep m = testing::load_rep("d4/m_lambda.json", d4);
    const QuiverRep s = direct_sum(m, m);
    for (const DimVector& e : {DimVector{1, 1, 1, 0, 0}, DimVector{1, 1, 2, 1, 0}, DimVector{1, 1, 2, 1, 1}}) {
        DimVector e2 = e;
        for (auto& x : e2) x = x + (x > 0 ? 1 : 0);
        for (std::uint32_t p : {3u, 7u, 13u}) {
            set_backend(Backend::Scalar);
            const Integer a = count_points(s, e2, p);
            set_backend(Backend::Avx2);
            const Integer b = count_points(s, e2, p);
            CHECK(a == b);
        }
    }
}
