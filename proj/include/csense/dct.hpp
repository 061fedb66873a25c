#pragma once

#include <cmath>
#include <vector>

#include <fftw3.h>

#include "csense/errors.hpp"

namespace csense {

/// Orthonormal type-II DCT. FFTW's REDFT10 computes
/// X_k = 2 sum_n x_n cos(pi (n + 1/2) k / N); rescaling by
/// sqrt(1/(4N)) (k = 0) and sqrt(1/(2N)) (k > 0) makes the transform
/// orthonormal.
inline std::vector<double> dct_forward(const std::vector<double>& x) {
  if (x.empty()) throw usage_error("dct_forward: empty input");
  const std::size_t n = x.size();
  std::vector<double> in(x);
  std::vector<double> out(n);
  fftw_plan plan = fftw_plan_r2r_1d(static_cast<int>(n), in.data(), out.data(),
                                    FFTW_REDFT10, FFTW_ESTIMATE);
  fftw_execute(plan);
  fftw_destroy_plan(plan);
  const double s0 = std::sqrt(1.0 / (4.0 * static_cast<double>(n)));
  const double s = std::sqrt(1.0 / (2.0 * static_cast<double>(n)));
  out[0] *= s0;
  for (std::size_t k = 1; k < n; ++k) out[k] *= s;
  return out;
}

/// Inverse of dct_forward (orthonormal type-III DCT via REDFT01).
inline std::vector<double> dct_inverse(const std::vector<double>& c) {
  if (c.empty()) throw usage_error("dct_inverse: empty input");
  const std::size_t n = c.size();
  // REDFT01 computes Y_n = X_0 + 2 sum_{k>=1} X_k cos(pi (n + 1/2) k / N)
  const double s0 = std::sqrt(1.0 / static_cast<double>(n));
  const double s = std::sqrt(1.0 / (2.0 * static_cast<double>(n)));
  std::vector<double> in(n);
  in[0] = c[0] * s0;
  for (std::size_t k = 1; k < n; ++k) in[k] = c[k] * s;
  std::vector<double> out(n);
  fftw_plan plan = fftw_plan_r2r_1d(static_cast<int>(n), in.data(), out.data(),
                                    FFTW_REDFT01, FFTW_ESTIMATE);
  fftw_execute(plan);
  fftw_destroy_plan(plan);
  return out;
}

}  // namespace csense
