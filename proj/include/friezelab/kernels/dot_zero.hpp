#pragma once

#include <cstddef>
#include <cstdint>

namespace friezelab::kernels {

// Batch orthogonality test over F_p.
//
// `data` is coordinate-major: data[c * stride + k] is coordinate c of candidate
// vector k, with every value and every g[c] already reduced into [0, p).
// keep[k] is cleared when sum_c g[c] * data[c * stride + k] is nonzero mod p;
// entries already cleared stay cleared.

void dot_zero_mask_scalar(const std::uint32_t* data, std::size_t ncoord, std::size_t stride,
                          const std::uint32_t* g, std::uint32_t p, std::size_t count, std::uint8_t* keep);

#if defined(FRIEZELAB_HAVE_AVX2)
/// Requires ncoord * (p - 1)^2 < 2^24 so lane sums stay exact in float.
void dot_zero_mask_avx2(const std::uint32_t* data, std::size_t ncoord, std::size_t stride,
                        const std::uint32_t* g, std::uint32_t p, std::size_t count, std::uint8_t* keep);
#endif

enum class Backend { Scalar, Avx2 };

const char* to_string(Backend b) noexcept;

/// True when the AVX2 variant was compiled in and the CPU supports it.
bool avx2_available() noexcept;

/// Backend chosen at first use: AVX2 when available, scalar otherwise.
Backend active_backend() noexcept;
/// Overrides the runtime choice; requesting Avx2 without support keeps Scalar.
void set_backend(Backend b) noexcept;

/// Dispatches to the active backend, falling back to scalar for inputs
/// outside the AVX2 variant's exactness range.
void dot_zero_mask(const std::uint32_t* data, std::size_t ncoord, std::size_t stride, const std::uint32_t* g,
                   std::uint32_t p, std::size_t count, std::uint8_t* keep);

}  // namespace friezelab::kernels
