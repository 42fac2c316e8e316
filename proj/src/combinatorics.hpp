#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

// Exact integer combinatorics for the closed-form builders. 128-bit
// unsigned integers hold (2n-1)! exactly for every supported order.
namespace msdc::detail {

using Wide = unsigned __int128;

/// a (a-1) ... (a-k+1); 1 when k = 0.
inline Wide falling(int a, int k) {
  Wide r = 1;
  for (int i = 0; i < k; ++i) r *= static_cast<Wide>(a - i);
  return r;
}

inline Wide factorial(int k) { return falling(k, k); }

inline Wide binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Wide r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<Wide>(n - k + i) / static_cast<Wide>(i);
  return r;
}

template <typename Real = double>
Real to_real(Wide v) {
  return static_cast<Real>(v);
}

inline double to_double(Wide v) { return to_real<double>(v); }

/// Cached powers h^lo..h^hi. Nonnegative powers come from repeated
/// multiplication; negative powers are reciprocals of those, so each entry
/// is rounded at most once beyond the positive power it derives from.
template <typename Real>
class BasicPowerTable {
 public:
  BasicPowerTable(Real h, int lo, int hi) : lo_(lo), values_(static_cast<std::size_t>(hi - lo + 1)) {
    std::vector<Real> positive(static_cast<std::size_t>(std::max(hi, -lo) + 1));
    positive[0] = 1;
    for (std::size_t k = 1; k < positive.size(); ++k) positive[k] = positive[k - 1] * h;
    for (int e = lo; e <= hi; ++e) {
      values_[static_cast<std::size_t>(e - lo)] =
          e >= 0 ? positive[static_cast<std::size_t>(e)] : Real(1) / positive[static_cast<std::size_t>(-e)];
    }
  }

  Real operator()(int e) const { return values_[static_cast<std::size_t>(e - lo_)]; }

 private:
  int lo_;
  std::vector<Real> values_;
};

using PowerTable = BasicPowerTable<double>;

}  // namespace msdc::detail
