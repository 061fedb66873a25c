#pragma once

#include <complex>
#include <string_view>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

namespace csense {

namespace mp = boost::multiprecision;

/// Extended-precision real with a 257-bit significand (77 decimal digits).
using extended_real = mp::cpp_complex<77>::value_type;
using extended_complex = mp::cpp_complex<77>;

/// Per-precision constants: realness tolerance tau_im and relative rank
/// tolerance tau_rank. The extended values were calibrated so floating
/// robustness verdicts match the exact oracle on every N <= 13 case.
template <class Real>
struct scalar_traits;

template <>
struct scalar_traits<double> {
  using real = double;
  using complex = std::complex<double>;
  static double tau_im() { return 1e-12; }
  static double tau_rank() { return 1e-10; }
  static constexpr std::string_view tag() { return "double"; }
};

template <>
struct scalar_traits<extended_real> {
  using real = extended_real;
  using complex = extended_complex;
  static extended_real tau_im() { return extended_real("1e-60"); }
  static extended_real tau_rank() { return extended_real("1e-40"); }
  static constexpr std::string_view tag() { return "extended"; }
};

template <class Real>
using complex_t = typename scalar_traits<Real>::complex;

template <class Real>
using ComplexMatrix = Eigen::Matrix<complex_t<Real>, Eigen::Dynamic, Eigen::Dynamic>;
template <class Real>
using ComplexVector = Eigen::Matrix<complex_t<Real>, Eigen::Dynamic, 1>;
template <class Real>
using RealMatrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
template <class Real>
using RealVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

template <class Real>
Real pi_const() {
  using std::acos;
  return acos(Real(-1));
}

/// e^{2*pi*j*e/N}, the N-th root of unity raised to e.
template <class Real>
complex_t<Real> unit_root(long e, long n) {
  using std::cos;
  using std::sin;
  const Real theta = Real(2) * pi_const<Real>() * Real(e % n) / Real(n);
  return complex_t<Real>(cos(theta), sin(theta));
}

}  // namespace csense
