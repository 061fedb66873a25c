#pragma once

#include <cmath>
#include <string>

#include "csense/errors.hpp"
#include "csense/scalar.hpp"

namespace csense {

/// mu(U, V) = sqrt(n) * max |<row of U, row of V>| for two orthonormal
/// n x n bases. Rejects non-orthonormal inputs, naming the offending row.
inline double coherence(const ComplexMatrix<double>& u, const ComplexMatrix<double>& v,
                        double ortho_tol = 1e-10) {
  if (u.rows() != u.cols() || v.rows() != v.cols() || u.rows() != v.rows()) {
    throw usage_error("coherence: inputs must be square with equal size");
  }
  const auto check_orthonormal = [&](const ComplexMatrix<double>& m, const char* name) {
    const ComplexMatrix<double> g = m * m.adjoint();
    for (Eigen::Index i = 0; i < g.rows(); ++i) {
      for (Eigen::Index j = 0; j < g.cols(); ++j) {
        const double target = i == j ? 1.0 : 0.0;
        if (std::abs(g(i, j) - std::complex<double>(target, 0)) > ortho_tol) {
          throw usage_error(std::string("coherence: ") + name + " row " +
                            std::to_string(i) + " is not orthonormal");
        }
      }
    }
  };
  check_orthonormal(u, "first basis");
  check_orthonormal(v, "second basis");
  const double max_inner = (u * v.adjoint()).cwiseAbs().maxCoeff();
  return std::sqrt(static_cast<double>(u.rows())) * max_inner;
}

/// Sparsity budget query for m >= C mu^2 S log n (natural log).
struct BoundQuery {
  int n = 0;          // signal length
  int m = 0;          // measurement count
  double mu = 1.0;    // coherence in [1, sqrt(n)]
  double c_const = 46.0;

  void validate() const {
    if (n < 2) throw usage_error("bound query: need n >= 2");
    if (m < 1 || m > n) throw usage_error("bound query: need 1 <= m <= n");
    if (mu < 1.0 - 1e-12 || mu > std::sqrt(static_cast<double>(n)) + 1e-12) {
      throw usage_error("bound query: mu must lie in [1, sqrt(n)]");
    }
    if (c_const <= 0) throw usage_error("bound query: C must be positive");
  }
};

struct SparsityBudget {
  double s_real = 0;
  long s_floor = 0;
};

/// S = m / (C mu^2 ln n): how sparse a signal must be for the bound to
/// promise recovery from m measurements.
inline SparsityBudget max_sparsity(const BoundQuery& q) {
  q.validate();
  SparsityBudget b;
  b.s_real = q.m / (q.c_const * q.mu * q.mu * std::log(static_cast<double>(q.n)));
  b.s_floor = static_cast<long>(std::floor(b.s_real));
  return b;
}

struct MeasurementRequirement {
  long m = 0;               // ceil(C mu^2 s ln n)
  bool infeasible = false;  // bound demands more measurements than exist
};

inline MeasurementRequirement required_measurements(int s, int n, double mu,
                                                    double c_const = 46.0) {
  if (s < 1 || n < 2) throw usage_error("required_measurements: need s >= 1, n >= 2");
  if (mu < 1.0 - 1e-12 || mu > std::sqrt(static_cast<double>(n)) + 1e-12) {
    throw usage_error("required_measurements: mu must lie in [1, sqrt(n)]");
  }
  MeasurementRequirement r;
  r.m = static_cast<long>(std::ceil(c_const * mu * mu * s * std::log(static_cast<double>(n))));
  r.infeasible = r.m > n;
  return r;
}

}  // namespace csense
