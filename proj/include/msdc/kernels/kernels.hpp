#pragma once

#include <cstddef>
#include <span>
#include <string_view>

// Data-parallel inner loops. Every kernel has a scalar reference variant and,
// where the CPU supports it, an AVX2+FMA variant. The variant is picked once
// at first use; MSDC_KERNEL=scalar|avx2 in the environment overrides it.
namespace msdc::kernels {

enum class Backend { kScalar, kAvx2 };

std::string_view to_string(Backend backend) noexcept;

/// out[j] += (p_j - shift)^T op (p_j - shift) for j < count.
/// op is n x n row-major; points are component-major, p_j[k] = points[k * count + j].
using ShiftedQuadFormsFn = void (*)(std::span<const double> op, std::size_t n,
                                    std::span<const double> shift,
                                    std::span<const double> points, std::size_t count,
                                    std::span<double> out);

/// out[j] = sum_i coeffs[i] * times[j]^i (Horner).
using PolyvalFn = void (*)(std::span<const double> coeffs, std::span<const double> times,
                           std::span<double> out);

struct KernelTable {
  Backend backend;
  ShiftedQuadFormsFn shifted_quad_forms;
  PolyvalFn polyval;
};

bool backend_available(Backend backend) noexcept;

/// Table for a specific backend; throws std::invalid_argument if the CPU
/// (or the build) lacks it.
const KernelTable& table(Backend backend);

/// The dispatched table.
const KernelTable& active();

}  // namespace msdc::kernels
