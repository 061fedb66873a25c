#pragma once

#include <string>

#include "csense/errors.hpp"
#include "csense/omega.hpp"
#include "csense/scalar.hpp"

namespace csense {

/// Rows of the unitary N x N DFT indexed by omega, ascending frequency.
/// Entry (row for frequency t, column x) = w_N^{t x} / sqrt(N).
template <class Real>
ComplexMatrix<Real> partial_fourier(int n_modulus, const FrequencySet& omega) {
  if (omega.modulus != n_modulus) {
    throw usage_error("partial_fourier: omega modulus mismatch");
  }
  using std::sqrt;
  const Real scale = Real(1) / sqrt(Real(n_modulus));
  ComplexMatrix<Real> psi(omega.size(), n_modulus);
  for (int r = 0; r < omega.size(); ++r) {
    const long t = omega.indices[r];
    for (int x = 0; x < n_modulus; ++x) {
      psi(r, x) = unit_root<Real>(t * x, n_modulus) * scale;
    }
  }
  return psi;
}

/// The unitary change of basis Q mapping conjugate-symmetric frequency
/// pairs to cosine/sine columns:
///   row 0        = e_0
///   row i        = (e_i + e_{N-i}) / sqrt(2)      for i = 1..k
///   row k+i      = (j e_i - j e_{N-i}) / sqrt(2)  for i = 1..k
template <class Real>
ComplexMatrix<Real> realifier_q(int n_modulus) {
  if (n_modulus < 3 || n_modulus % 2 == 0) {
    throw usage_error("realifier_q: N must be odd and >= 3");
  }
  using std::sqrt;
  const int k = (n_modulus - 1) / 2;
  const Real inv_sqrt2 = Real(1) / sqrt(Real(2));
  ComplexMatrix<Real> q = ComplexMatrix<Real>::Zero(n_modulus, n_modulus);
  q(0, 0) = complex_t<Real>(Real(1), Real(0));
  for (int i = 1; i <= k; ++i) {
    q(i, i) = complex_t<Real>(inv_sqrt2, Real(0));
    q(i, n_modulus - i) = complex_t<Real>(inv_sqrt2, Real(0));
    q(k + i, i) = complex_t<Real>(Real(0), inv_sqrt2);
    q(k + i, n_modulus - i) = complex_t<Real>(Real(0), -inv_sqrt2);
  }
  return q;
}

/// Phi = Psi Q*, which must come out real: columns are
/// [constant | cos(2 pi i t / N), i=1..k | sin(2 pi i t / N), i=1..k]
/// up to the sqrt(2/N) normalization. An imaginary residue above tau_im
/// signals a construction bug and raises numerical_error.
template <class Matrix>
auto realify(const Matrix& psi, const Matrix& q)
    -> RealMatrix<typename Eigen::NumTraits<typename Matrix::Scalar>::Real> {
  using Real = typename Eigen::NumTraits<typename Matrix::Scalar>::Real;
  if (psi.cols() != q.rows() || q.rows() != q.cols()) {
    throw usage_error("realify: dimension mismatch");
  }
  using std::abs;
  const Matrix phi_c = psi * q.adjoint();
  Real max_im(0);
  for (Eigen::Index r = 0; r < phi_c.rows(); ++r) {
    for (Eigen::Index c = 0; c < phi_c.cols(); ++c) {
      const Real im = abs(imag(phi_c(r, c)));
      if (im > max_im) max_im = im;
    }
  }
  if (max_im > scalar_traits<Real>::tau_im()) {
    throw numerical_error("realify: imaginary residue above tolerance");
  }
  RealMatrix<Real> phi(phi_c.rows(), phi_c.cols());
  for (Eigen::Index r = 0; r < phi.rows(); ++r) {
    for (Eigen::Index c = 0; c < phi.cols(); ++c) {
      phi(r, c) = real(phi_c(r, c));
    }
  }
  return phi;
}

/// Largest |Im| entry of Psi Q* without the realness gate, for sweeps.
template <class Matrix>
auto imaginary_residue(const Matrix& psi, const Matrix& q) {
  using Real = typename Eigen::NumTraits<typename Matrix::Scalar>::Real;
  using std::abs;
  const Matrix phi_c = psi * q.adjoint();
  Real max_im(0);
  for (Eigen::Index r = 0; r < phi_c.rows(); ++r) {
    for (Eigen::Index c = 0; c < phi_c.cols(); ++c) {
      const Real im = abs(imag(phi_c(r, c)));
      if (im > max_im) max_im = im;
    }
  }
  return max_im;
}

/// Closed-form entry of Phi for frequency t and column c (c in [0, N-1],
/// layout constant/cosines/sines), used to cross-check realify output.
template <class Real>
Real phi_closed_form(int n_modulus, int t, int c) {
  using std::cos;
  using std::sin;
  using std::sqrt;
  const int k = (n_modulus - 1) / 2;
  const Real two_pi_over_n = Real(2) * pi_const<Real>() / Real(n_modulus);
  const Real amp = sqrt(Real(2) / Real(n_modulus));
  if (c == 0) return sqrt(Real(1) / Real(n_modulus));
  if (c <= k) return amp * cos(two_pi_over_n * Real(long(c) * t % n_modulus));
  const int i = c - k;
  return amp * sin(two_pi_over_n * Real(long(i) * t % n_modulus));
}

template <class Real>
struct GramBlocks {
  RealMatrix<Real> m;    // Phi^T Phi, N x N
  RealMatrix<Real> m1;   // C2^T C2, (k+1) x (k+1)
  RealMatrix<Real> m2;   // S2^T S2, k x k
  Real offdiag_max{};    // max |entry| of C2^T S2
};

/// Column partition: C2 = columns 0..k (constant + cosines),
/// S2 = columns k+1..N-1 (sines).
template <class Real>
GramBlocks<Real> gram_blocks(const RealMatrix<Real>& phi, int k) {
  if (phi.cols() != 2 * k + 1) {
    throw usage_error("gram_blocks: column count must equal 2k+1");
  }
  GramBlocks<Real> g;
  g.m = phi.transpose() * phi;
  g.m1 = g.m.topLeftCorner(k + 1, k + 1);
  g.m2 = g.m.bottomRightCorner(k, k);
  g.offdiag_max = g.m.topRightCorner(k + 1, k).cwiseAbs().maxCoeff();
  return g;
}

}  // namespace csense
