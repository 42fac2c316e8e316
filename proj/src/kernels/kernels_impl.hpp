#pragma once

#include <cstddef>
#include <span>

namespace msdc::kernels {

// Registers of per-lane state are sized for this many components.
inline constexpr std::size_t kMaxKernelOrder = 16;

namespace scalar {
void shifted_quad_forms(std::span<const double> op, std::size_t n, std::span<const double> shift,
                        std::span<const double> points, std::size_t count, std::span<double> out);
void polyval(std::span<const double> coeffs, std::span<const double> times, std::span<double> out);
}  // namespace scalar

#if defined(MSDC_HAVE_AVX2_KERNELS)
namespace avx2 {
void shifted_quad_forms(std::span<const double> op, std::size_t n, std::span<const double> shift,
                        std::span<const double> points, std::size_t count, std::span<double> out);
void polyval(std::span<const double> coeffs, std::span<const double> times, std::span<double> out);
}  // namespace avx2
#endif

}  // namespace msdc::kernels
