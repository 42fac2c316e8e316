#include <array>
#include <stdexcept>

#include "kernels_impl.hpp"

namespace msdc::kernels::scalar {

void shifted_quad_forms(std::span<const double> op, std::size_t n, std::span<const double> shift,
                        std::span<const double> points, std::size_t count, std::span<double> out) {
  if (n > kMaxKernelOrder) throw std::invalid_argument("shifted_quad_forms: order too large");
  std::array<double, kMaxKernelOrder> diff{};
  for (std::size_t j = 0; j < count; ++j) {
    for (std::size_t k = 0; k < n; ++k) diff[k] = points[k * count + j] - shift[k];
    double q = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      double row = 0.0;
      for (std::size_t l = 0; l < n; ++l) row += op[k * n + l] * diff[l];
      q += diff[k] * row;
    }
    out[j] += q;
  }
}

void polyval(std::span<const double> coeffs, std::span<const double> times, std::span<double> out) {
  for (std::size_t j = 0; j < times.size(); ++j) {
    double acc = 0.0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * times[j] + coeffs[i];
    out[j] = acc;
  }
}

}  // namespace msdc::kernels::scalar
