#include <atomic>

#include "friezelab/kernels/dot_zero.hpp"

namespace friezelab::kernels {

namespace {

Backend detect() noexcept { return avx2_available() ? Backend::Avx2 : Backend::Scalar; }

std::atomic<Backend>& slot() noexcept {
    static std::atomic<Backend> backend{detect()};
    return backend;
}

}  // namespace

const char* to_string(Backend b) noexcept { return b == Backend::Avx2 ? "avx2" : "scalar"; }

bool avx2_available() noexcept {
#if defined(FRIEZELAB_HAVE_AVX2)
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

Backend active_backend() noexcept { return slot().load(std::memory_order_relaxed); }

void set_backend(Backend b) noexcept {
    if (b == Backend::Avx2 && !avx2_available()) b = Backend::Scalar;
    slot().store(b, std::memory_order_relaxed);
}

void dot_zero_mask(const std::uint32_t* data, std::size_t ncoord, std::size_t stride, const std::uint32_t* g,
                   std::uint32_t p, std::size_t count, std::uint8_t* keep) {
#if defined(FRIEZELAB_HAVE_AVX2)
    if (active_backend() == Backend::Avx2) {
        const std::uint64_t pm = p - 1;
        if (p >= 2 && static_cast<std::uint64_t>(ncoord) * pm * pm < (1ULL << 24)) {
            dot_zero_mask_avx2(data, ncoord, stride, g, p, count, keep);
            return;
        }
    }
#endif
    dot_zero_mask_scalar(data, ncoord, stride, g, p, count, keep);
}

}  // namespace friezelab::kernels
