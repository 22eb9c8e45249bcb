#include <immintrin.h>

#include "friezelab/kernels/dot_zero.hpp"

namespace friezelab::kernels {

void dot_zero_mask_avx2(const std::uint32_t* data, std::size_t ncoord, std::size_t stride,
                        const std::uint32_t* g, std::uint32_t p, std::size_t count, std::uint8_t* keep) {
    const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
    const __m256 inv_p = _mm256_set1_ps(1.0f / static_cast<float>(p));
    const __m256i zero = _mm256_setzero_si256();
    std::size_t k = 0;
    for (; k + 8 <= count; k += 8) {
        // skip blocks that are already fully rejected
        std::uint64_t live;
        __builtin_memcpy(&live, keep + k, sizeof live);
        if (live == 0) continue;

        __m256i acc = zero;
        for (std::size_t c = 0; c < ncoord; ++c) {
            const __m256i col = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(data + c * stride + k));
            acc = _mm256_add_epi32(acc, _mm256_mullo_epi32(col, _mm256_set1_epi32(static_cast<int>(g[c]))));
        }
        // acc < 2^24 is exact in float; the quotient estimate is off by at most one
        const __m256i q = _mm256_cvttps_epi32(_mm256_mul_ps(_mm256_cvtepi32_ps(acc), inv_p));
        __m256i r = _mm256_sub_epi32(acc, _mm256_mullo_epi32(q, vp));
        r = _mm256_add_epi32(r, _mm256_and_si256(_mm256_cmpgt_epi32(zero, r), vp));
        r = _mm256_sub_epi32(r, _mm256_andnot_si256(_mm256_cmpgt_epi32(vp, r), vp));

        const unsigned zmask = static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(r, zero))));
        for (int lane = 0; lane < 8; ++lane) {
            if (!((zmask >> lane) & 1U)) keep[k + static_cast<std::size_t>(lane)] = 0;
        }
    }
    if (k < count) {
        dot_zero_mask_scalar(data + k, ncoord, stride, g, p, count - k, keep + k);
    }
}

}  // namespace friezelab::kernels
