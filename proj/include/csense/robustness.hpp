#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "csense/cyclotomic.hpp"
#include "csense/errors.hpp"
#include "csense/rank.hpp"
#include "csense/scalar.hpp"
#include "csense/subsets.hpp"

namespace csense {

enum class ArithMode { floating, exact, both };

inline std::string to_string(ArithMode m) {
  switch (m) {
    case ArithMode::floating: return "floating";
    case ArithMode::exact: return "exact";
    default: return "both";
  }
}

constexpr std::uint64_t kSubsetBudget = 10'000'000;

struct RobustnessReport {
  std::string matrix_id;
  int n_rows = 0;
  int n_cols = 0;
  bool robust = false;
  std::optional<std::vector<int>> witness;   // colex-first dependent n-subset
  std::uint64_t subsets_checked = 0;
  double min_singular_value_seen = 0;        // floating path only
  ArithMode arithmetic = ArithMode::floating;
};

struct SparkResult {
  int spark = 0;                             // n_rows + 1 when full
  bool full = false;                         // no dependent subset up to n_rows
  std::optional<std::vector<int>> witness;   // colex-first, size == spark
  std::uint64_t subsets_checked = 0;
  ArithMode arithmetic = ArithMode::floating;
};

template <class Matrix>
Matrix select_columns(const Matrix& a, const std::vector<int>& cols) {
  Matrix s(a.rows(), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t i = 0; i < cols.size(); ++i) {
    s.col(static_cast<Eigen::Index>(i)) = a.col(cols[i]);
  }
  return s;
}

namespace detail {

inline void check_budget(std::optional<std::uint64_t> count, bool force) {
  if (!force && (!count || *count > kSubsetBudget)) {
    throw budget_error("subset enumeration exceeds budget of " +
                       std::to_string(kSubsetBudget) + " (use the force flag)");
  }
}

/// Decides dependence of one column subset on the requested path(s);
/// both-mode disagreement is a hard error (tolerance miscalibration).
template <class Matrix>
bool subset_dependent(const Matrix& a, const CycloMatrix* exact,
                      const std::vector<int>& cols, ArithMode mode,
                      const std::string& label, double* min_sv_seen) {
  const int full_rank = static_cast<int>(std::min<Eigen::Index>(
      a.rows(), static_cast<Eigen::Index>(cols.size())));
  bool dep_float = false;
  if (mode != ArithMode::exact) {
    const Matrix sub = select_columns(a, cols);
    dep_float = numeric_rank(sub) < full_rank;
    if (min_sv_seen) {
      const double sv = static_cast<double>(min_singular_value(sub));
      if (sv < *min_sv_seen) *min_sv_seen = sv;
    }
  }
  bool dep_exact = false;
  if (mode != ArithMode::floating) {
    dep_exact = exact_rank(csense::select_columns(*exact, cols)) < full_rank;
  }
  switch (mode) {
    case ArithMode::floating: return dep_float;
    case ArithMode::exact: return dep_exact;
    default:
      if (dep_float != dep_exact) {
        throw numerical_error("floating/exact disagreement on matrix '" + label +
                              "': tolerance miscalibration");
      }
      return dep_exact;
  }
}

template <class Matrix>
void check_exact_companion(const Matrix& a, const CycloMatrix* exact, ArithMode mode) {
  if (mode == ArithMode::floating) return;
  if (!exact || exact->empty() ||
      static_cast<Eigen::Index>(exact->size()) != a.rows() ||
      static_cast<Eigen::Index>((*exact)[0].size()) != a.cols()) {
    throw usage_error("exact mode requires a matching oracle representation");
  }
}

}  // namespace detail

/// Verdict robust iff every n-row-sized column subset has full rank;
/// subsets are scanned in colexicographic order and the first dependent
/// one (if any) becomes the witness.
template <class Matrix>
RobustnessReport maximal_robustness(const Matrix& a, ArithMode mode,
                                    const CycloMatrix* exact = nullptr,
                                    bool force_budget = false,
                                    const std::string& label = "") {
  if (a.rows() > a.cols()) {
    throw usage_error("maximal_robustness: need n_rows <= n_cols");
  }
  detail::check_exact_companion(a, exact, mode);
  const int n = static_cast<int>(a.rows());
  const int ncols = static_cast<int>(a.cols());
  detail::check_budget(binomial(ncols, n), force_budget);

  RobustnessReport report;
  report.matrix_id = label;
  report.n_rows = n;
  report.n_cols = ncols;
  report.arithmetic = mode;
  report.min_singular_value_seen =
      mode == ArithMode::exact ? 0 : std::numeric_limits<double>::infinity();

  for (ColexSubsets it(ncols, n); !it.done(); it.advance()) {
    ++report.subsets_checked;
    if (detail::subset_dependent(a, exact, it.current(), mode, label,
                                 mode == ArithMode::exact
                                     ? nullptr
                                     : &report.min_singular_value_seen)) {
      report.robust = false;
      report.witness = it.current();
      return report;
    }
  }
  report.robust = true;
  return report;
}

/// Smallest s such that some s columns are dependent; "full" (n_rows + 1)
/// when no dependent subset of size <= n_rows exists.
template <class Matrix>
SparkResult spark(const Matrix& a, ArithMode mode,
                  const CycloMatrix* exact = nullptr, bool force_budget = false,
                  const std::string& label = "") {
  if (a.rows() > a.cols()) {
    throw usage_error("spark: need n_rows <= n_cols");
  }
  detail::check_exact_companion(a, exact, mode);
  const int n = static_cast<int>(a.rows());
  const int ncols = static_cast<int>(a.cols());
  std::uint64_t total = 0;
  for (int s = 2; s <= n; ++s) {
    const auto c = binomial(ncols, s);
    detail::check_budget(c, force_budget);
    if (c) total += *c;
  }
  detail::check_budget(total, force_budget);

  SparkResult result;
  result.arithmetic = mode;
  for (int s = 2; s <= n; ++s) {
    for (ColexSubsets it(ncols, s); !it.done(); it.advance()) {
      ++result.subsets_checked;
      if (detail::subset_dependent(a, exact, it.current(), mode, label, nullptr)) {
        result.spark = s;
        result.witness = it.current();
        return result;
      }
    }
  }
  result.spark = n + 1;
  result.full = true;
  return result;
}

}  // namespace csense
