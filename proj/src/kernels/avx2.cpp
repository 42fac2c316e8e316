#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <array>
#include <stdexcept>

#include "kernels_impl.hpp"

// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.
namespace msdc::kernels::avx2 {

void shifted_quad_forms(std::span<const double> op, std::size_t n, std::span<const double> shift,
                        std::span<const double> points, std::size_t count, std::span<double> out) {
  if (n > kMaxKernelOrder) throw std::invalid_argument("shifted_quad_forms: order too large");
  __m256d diff[kMaxKernelOrder];
  const std::size_t vec_end = count / 4 * 4;
  std::size_t j = 0;
  for (; j < vec_end; j += 4) {
    for (std::size_t k = 0; k < n; ++k) {
      diff[k] = _mm256_sub_pd(_mm256_loadu_pd(&points[k * count + j]), _mm256_set1_pd(shift[k]));
    }
    __m256d q = _mm256_setzero_pd();
    for (std::size_t k = 0; k < n; ++k) {
      __m256d row = _mm256_setzero_pd();
      for (std::size_t l = 0; l < n; ++l) row = _mm256_fmadd_pd(_mm256_set1_pd(op[k * n + l]), diff[l], row);
      q = _mm256_fmadd_pd(diff[k], row, q);
    }
    _mm256_storeu_pd(&out[j], _mm256_add_pd(_mm256_loadu_pd(&out[j]), q));
  }
  if (j < count) {
    // Tail lanes go through the reference loop on a shifted view.
    std::array<double, kMaxKernelOrder * 4> tail{};
    const std::size_t rest = count - j;
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t r = 0; r < rest; ++r) tail[k * rest + r] = points[k * count + j + r];
    scalar::shifted_quad_forms(op, n, shift, std::span<const double>(tail.data(), n * rest), rest,
                               out.subspan(j, rest));
  }
}

void polyval(std::span<const double> coeffs, std::span<const double> times, std::span<double> out) {
  const std::size_t vec_end = times.size() / 4 * 4;
  std::size_t j = 0;
  for (; j < vec_end; j += 4) {
    const __m256d t = _mm256_loadu_pd(&times[j]);
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = _mm256_fmadd_pd(acc, t, _mm256_set1_pd(coeffs[i]));
    _mm256_storeu_pd(&out[j], acc);
  }
  if (j < times.size()) scalar::polyval(coeffs, times.subspan(j), out.subspan(j));
}

}  // namespace msdc::kernels::avx2

#endif  // x86-64
