#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "csense/dct.hpp"
#include "csense/errors.hpp"

namespace csense {

struct SparsifyResult {
  int kept = 0;
  std::vector<double> reconstruction;
  double psnr_db = 0;   // +inf when the reconstruction is exact (or x = 0)
};

/// PSNR in dB with peak = max|x| of the original signal.
inline double psnr(const std::vector<double>& x, const std::vector<double>& rec) {
  double peak = 0;
  double mse = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    peak = std::max(peak, std::abs(x[i]));
    const double d = x[i] - rec[i];
    mse += d * d;
  }
  mse /= static_cast<double>(x.size());
  if (peak == 0 || mse == 0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(peak * peak / mse);
}

/// Keep the ceil(keep_fraction * length) largest-magnitude DCT
/// coefficients (ties broken by lower index), zero the rest, invert.
inline SparsifyResult sparsify(const std::vector<double>& x, double keep_fraction) {
  if (keep_fraction < 0 || keep_fraction > 1) {
    throw usage_error("sparsify: keep_fraction must lie in [0, 1]");
  }
  if (x.empty()) throw usage_error("sparsify: empty signal");

  std::vector<double> coeffs = dct_forward(x);
  const int n = static_cast<int>(x.size());
  const int kept = static_cast<int>(std::ceil(keep_fraction * n));

  std::vector<int> order(x.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return std::abs(coeffs[static_cast<std::size_t>(a)]) >
           std::abs(coeffs[static_cast<std::size_t>(b)]);
  });
  std::vector<double> thresholded(x.size(), 0.0);
  for (int i = 0; i < kept; ++i) {
    const auto idx = static_cast<std::size_t>(order[static_cast<std::size_t>(i)]);
    thresholded[idx] = coeffs[idx];
  }

  SparsifyResult r;
  r.kept = kept;
  r.reconstruction = kept == n ? x : dct_inverse(thresholded);
  r.psnr_db = psnr(x, r.reconstruction);
  return r;
}

/// Fixed piecewise-smooth synthetic signal used by the demo scenario:
/// sinusoid segments with step discontinuities, no randomness.
inline std::vector<double> synthetic_signal(int length) {
  std::vector<double> x(static_cast<std::size_t>(length));
  for (int i = 0; i < length; ++i) {
    const double t = static_cast<double>(i) / length;
    double v;
    if (t < 0.25) {
      v = std::sin(2.0 * M_PI * 3.0 * t);
    } else if (t < 0.5) {
      v = 0.8 + 0.3 * std::sin(2.0 * M_PI * 7.0 * t);
    } else if (t < 0.75) {
      v = -0.5 + 1.5 * (t - 0.5);
    } else {
      v = 0.6 * std::cos(2.0 * M_PI * 5.0 * t) - 0.2;
    }
    x[static_cast<std::size_t>(i)] = v;
  }
  return x;
}

}  // namespace csense
