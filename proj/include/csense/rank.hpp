#pragma once

#include <Eigen/SVD>

#include "csense/errors.hpp"
#include "csense/scalar.hpp"

namespace csense {

/// Number of singular values exceeding tau_rank * sigma_max.
template <class Matrix>
int numeric_rank(const Matrix& a,
                 typename Eigen::NumTraits<typename Matrix::Scalar>::Real tau_rank) {
  if (a.rows() == 0 || a.cols() == 0) {
    throw usage_error("numeric_rank: empty matrix");
  }
  Eigen::JacobiSVD<Matrix> svd(a);
  const auto& sv = svd.singularValues();
  const auto sigma_max = sv(0);
  if (sigma_max == decltype(sigma_max)(0)) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > tau_rank * sigma_max) ++rank;
  }
  return rank;
}

template <class Matrix>
int numeric_rank(const Matrix& a) {
  using Real = typename Eigen::NumTraits<typename Matrix::Scalar>::Real;
  return numeric_rank(a, scalar_traits<Real>::tau_rank());
}

/// Smallest singular value, for witness re-verification.
template <class Matrix>
typename Eigen::NumTraits<typename Matrix::Scalar>::Real min_singular_value(const Matrix& a) {
  Eigen::JacobiSVD<Matrix> svd(a);
  const auto& sv = svd.singularValues();
  return sv(sv.size() - 1);
}

}  // namespace csense
