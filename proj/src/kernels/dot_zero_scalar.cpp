#include "friezelab/kernels/dot_zero.hpp"

namespace friezelab::kernels {

void dot_zero_mask_scalar(const std::uint32_t* data, std::size_t ncoord, std::size_t stride,
                          const std::uint32_t* g, std::uint32_t p, std::size_t count, std::uint8_t* keep) {
    // products stay below 2^62 when p <= 2^31, so reducing at 2^62 cannot overflow
    const bool wide = p > (1U << 31);
    for (std::size_t k = 0; k < count; ++k) {
        if (!keep[k]) continue;
        std::uint64_t acc = 0;
        for (std::size_t c = 0; c < ncoord; ++c) {
            const std::uint64_t prod = static_cast<std::uint64_t>(g[c]) * data[c * stride + k];
            if (wide) {
                acc = (acc + prod % p) % p;
            } else {
                acc += prod;
                if (acc >= (1ULL << 62)) acc %= p;
            }
        }
        if (acc % p != 0) keep[k] = 0;
    }
}

}  // namespace friezelab::kernels
