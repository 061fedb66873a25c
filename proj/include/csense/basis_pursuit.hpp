#pragma once

#include <complex>

#include <Eigen/Cholesky>

#include "csense/errors.hpp"
#include "csense/rank.hpp"
#include "csense/scalar.hpp"

namespace csense {

struct BasisPursuitParams {
  double rho = 1.0;
  int max_iter = 50'000;
  double tol_primal = 1e-9;
  double tol_dual = 1e-9;
};

struct BasisPursuitResult {
  ComplexVector<double> solution;
  double residual_l2 = 0;      // ||a g - y||_2 of the returned iterate
  int iterations = 0;
  bool converged = false;
};

/// Complex magnitude shrinkage; on real inputs this is exactly
/// soft-thresholding.
inline ComplexVector<double> complex_shrink(const ComplexVector<double>& v, double kappa) {
  ComplexVector<double> out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double mag = std::abs(v(i));
    out(i) = mag > kappa ? v(i) * ((mag - kappa) / mag) : std::complex<double>(0, 0);
  }
  return out;
}

/// min ||g||_1 s.t. a g = y, by ADMM: alternate projection onto the
/// affine feasible set with complex magnitude shrinkage. The projection
/// reuses a Cholesky factorization of a a*.
inline BasisPursuitResult basis_pursuit(const ComplexMatrix<double>& a,
                                        const ComplexVector<double>& y,
                                        const BasisPursuitParams& params = {}) {
  if (a.rows() != y.size()) throw usage_error("basis_pursuit: dimension mismatch");
  if (numeric_rank(a) < a.rows()) {
    throw usage_error("basis_pursuit: matrix must have full row rank");
  }
  const Eigen::Index n = a.cols();
  const ComplexMatrix<double> gram = a * a.adjoint();
  const Eigen::LLT<ComplexMatrix<double>> llt(gram);
  const auto project = [&](const ComplexVector<double>& v) -> ComplexVector<double> {
    return v - a.adjoint() * llt.solve(a * v - y);
  };
  ComplexVector<double> x = project(ComplexVector<double>::Zero(n));
  ComplexVector<double> z = ComplexVector<double>::Zero(n);
  ComplexVector<double> u = ComplexVector<double>::Zero(n);

  BasisPursuitResult result;
  for (int iter = 1; iter <= params.max_iter; ++iter) {
    x = project(z - u);
    const ComplexVector<double> z_prev = z;
    z = complex_shrink(x + u, 1.0 / params.rho);
    u += x - z;
    result.iterations = iter;
    const double primal = (x - z).norm();
    const double dual = params.rho * (z - z_prev).norm();
    if (primal <= params.tol_primal && dual <= params.tol_dual) {
      result.converged = true;
      break;
    }
  }
  result.solution = x;   // x is feasible by projection
  result.residual_l2 = (a * x - y).norm();
  return result;
}

}  // namespace csense
