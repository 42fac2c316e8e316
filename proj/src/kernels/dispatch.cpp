#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

#include "kernels_impl.hpp"
#include "msdc/kernels/kernels.hpp"

namespace msdc::kernels {

namespace {

constexpr KernelTable kScalarTable{Backend::kScalar, &scalar::shifted_quad_forms, &scalar::polyval};
#if defined(MSDC_HAVE_AVX2_KERNELS)
constexpr KernelTable kAvx2Table{Backend::kAvx2, &avx2::shifted_quad_forms, &avx2::polyval};
#endif

bool cpu_has_avx2() noexcept {
#if defined(MSDC_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable& select() {
  if (const char* forced = std::getenv("MSDC_KERNEL")) {
    const std::string_view name(forced);
    if (name == "scalar") return kScalarTable;
    if (name == "avx2" && backend_available(Backend::kAvx2)) return table(Backend::kAvx2);
  }
  if (backend_available(Backend::kAvx2)) return table(Backend::kAvx2);
  return kScalarTable;
}

}  // namespace

std::string_view to_string(Backend backend) noexcept {
  switch (backend) {
    case Backend::kScalar: return "scalar";
    case Backend::kAvx2: return "avx2";
  }
  return "unknown";
}

bool backend_available(Backend backend) noexcept {
  switch (backend) {
    case Backend::kScalar: return true;
    case Backend::kAvx2: {
      static const bool has = cpu_has_avx2();
      return has;
    }
  }
  return false;
}

const KernelTable& table(Backend backend) {
  if (!backend_available(backend)) {
    throw std::invalid_argument("kernel backend '" + std::string(to_string(backend)) + "' is not available");
  }
#if defined(MSDC_HAVE_AVX2_KERNELS)
  if (backend == Backend::kAvx2) return kAvx2Table;
#endif
  return kScalarTable;
}

const KernelTable& active() {
  static const KernelTable& chosen = select();
  return chosen;
}

}  // namespace msdc::kernels
