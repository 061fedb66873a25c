#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/QR>

#include "csense/errors.hpp"
#include "csense/robustness.hpp"
#include "csense/signal.hpp"
#include "csense/subsets.hpp"

namespace csense {

constexpr double kDefaultTauFeas = 1e-8;
constexpr int kMaxP0Solutions = 64;

struct P0Result {
  std::vector<SparseSignal> solutions;   // all minimizers at sparsity_found
  bool feasible = false;                 // some support up to s_max fit y
  int sparsity_found = -1;               // s*, valid when feasible
  double residual_l2 = 0;                // best residual among solutions
  std::uint64_t supports_enumerated = 0;
  bool solution_overflow = false;        // more than kMaxP0Solutions minimizers
};

/// Brute-force (P0): scan supports by increasing size; on each support
/// solve the restricted least-squares system (minimum-norm when rank
/// deficient) and keep every support at the first size whose residual
/// falls below tau_feas.
inline P0Result p0_solve(const ComplexMatrix<double>& a, const ComplexVector<double>& y,
                         int s_max, double tau_feas = kDefaultTauFeas) {
  if (a.rows() != y.size()) throw usage_error("p0_solve: dimension mismatch");
  if (s_max < 0 || s_max > a.rows()) {
    throw usage_error("p0_solve: need 0 <= s_max <= n_rows");
  }
  const int ncols = static_cast<int>(a.cols());
  P0Result result;
  for (int s = 0; s <= s_max; ++s) {
    for (ColexSubsets it(ncols, s); !it.done(); it.advance()) {
      ++result.supports_enumerated;
      ComplexVector<double> coeffs;
      double residual;
      if (s == 0) {
        coeffs.resize(0);
        residual = y.norm();
      } else {
        const ComplexMatrix<double> sub = select_columns(a, it.current());
        Eigen::CompleteOrthogonalDecomposition<ComplexMatrix<double>> cod(sub);
        coeffs = cod.solve(y);
        residual = (sub * coeffs - y).norm();
      }
      if (residual <= tau_feas) {
        if (!result.feasible) {
          result.feasible = true;
          result.sparsity_found = s;
          result.residual_l2 = residual;
        }
        result.residual_l2 = std::min(result.residual_l2, residual);
        if (static_cast<int>(result.solutions.size()) < kMaxP0Solutions) {
          SparseSignal g;
          g.length = ncols;
          for (int i = 0; i < s; ++i) {
            if (std::abs(coeffs(i)) > 0) {
              g.support.push_back(it.current()[static_cast<std::size_t>(i)]);
              g.values.push_back(coeffs(i));
            }
          }
          result.solutions.push_back(std::move(g));
        } else {
          result.solution_overflow = true;
        }
      }
    }
    if (result.feasible) break;   // s* found; larger supports are not minimal
  }
  return result;
}

enum class UniquenessVerdict { unique, not_unique, undecided };

inline std::string to_string(UniquenessVerdict v) {
  switch (v) {
    case UniquenessVerdict::unique: return "unique";
    case UniquenessVerdict::not_unique: return "not_unique";
    default: return "undecided";
  }
}

struct UniquenessReport {
  UniquenessVerdict verdict = UniquenessVerdict::undecided;
  std::optional<SparseSignal> certificate;   // a competing minimizer
  P0Result enumeration;
};

/// Is f the unique (P0) minimizer of its own measurements through a?
inline UniquenessReport uniqueness_check(const ComplexMatrix<double>& a,
                                         const SparseSignal& f,
                                         double tau_feas = kDefaultTauFeas) {
  f.validate();
  if (f.length != a.cols()) throw usage_error("uniqueness_check: length mismatch");
  const ComplexVector<double> y = a * f.to_dense();

  UniquenessReport report;
  report.enumeration = p0_solve(a, y, f.l0_norm(), tau_feas);
  const P0Result& p0 = report.enumeration;
  if (!p0.feasible) {
    throw numerical_error("uniqueness_check: f infeasible against its own measurements");
  }
  if (p0.solution_overflow) {
    report.verdict = UniquenessVerdict::undecided;
    return report;
  }
  if (p0.sparsity_found < f.l0_norm()) {
    report.verdict = UniquenessVerdict::not_unique;   // a sparser representation exists
    report.certificate = p0.solutions.front();
    return report;
  }
  // s* == ||f||_0: unique iff the only minimizer is f itself
  for (const SparseSignal& g : p0.solutions) {
    const double dist = (g.to_dense() - f.to_dense()).norm();
    if (dist > tau_feas) {
      report.verdict = UniquenessVerdict::not_unique;
      report.certificate = g;
      return report;
    }
  }
  report.verdict = UniquenessVerdict::unique;
  return report;
}

}  // namespace csense
