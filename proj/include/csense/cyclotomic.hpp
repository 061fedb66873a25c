#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "csense/errors.hpp"
#include "csense/omega.hpp"

namespace csense {

using rational = boost::multiprecision::cpp_rational;

/// Element of Q(w_N), N prime, stored as a rational coefficient vector of
/// length N modulo x^N - 1. Because the minimal polynomial of w_N is
/// 1 + x + ... + x^{N-1}, a representative maps to zero in Q(w_N) exactly
/// when all N coefficients are equal.
class CycloElem {
 public:
  CycloElem() = default;
  explicit CycloElem(int modulus) : coeffs_(modulus) {}

  static CycloElem root_power(int modulus, long e) {
    CycloElem z(modulus);
    long r = e % modulus;
    if (r < 0) r += modulus;
    z.coeffs_[static_cast<std::size_t>(r)] = 1;
    return z;
  }

  int modulus() const { return static_cast<int>(coeffs_.size()); }

  bool is_zero() const {
    for (const auto& c : coeffs_) {
      if (c != coeffs_[0]) return false;
    }
    return true;
  }

  friend CycloElem operator+(const CycloElem& a, const CycloElem& b) {
    CycloElem r(a.modulus());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    }
    return r;
  }

  friend CycloElem operator-(const CycloElem& a, const CycloElem& b) {
    CycloElem r(a.modulus());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      r.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
    }
    return r;
  }

  // cyclic convolution mod x^N - 1
  friend CycloElem operator*(const CycloElem& a, const CycloElem& b) {
    const int n = a.modulus();
    CycloElem r(n);
    for (int i = 0; i < n; ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (int j = 0; j < n; ++j) {
        if (b.coeffs_[j] == 0) continue;
        r.coeffs_[static_cast<std::size_t>((i + j) % n)] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return r;
  }

 private:
  std::vector<rational> coeffs_;
};

using CycloMatrix = std::vector<std::vector<CycloElem>>;

constexpr int kMaxExactModulus = 13;

inline void check_exact_modulus(int n_modulus) {
  if (n_modulus < 3 || n_modulus > kMaxExactModulus || !is_prime(n_modulus)) {
    throw usage_error("exact oracle: N must be a prime in [3, 13]");
  }
}

/// Psi up to the 1/sqrt(N) scale: entry (t, x) = w^{t x}.
inline CycloMatrix exact_partial_fourier(int n_modulus, const FrequencySet& omega) {
  check_exact_modulus(n_modulus);
  if (omega.modulus != n_modulus) {
    throw usage_error("exact_partial_fourier: omega modulus mismatch");
  }
  CycloMatrix m(omega.indices.size());
  for (std::size_t r = 0; r < omega.indices.size(); ++r) {
    const long t = omega.indices[r];
    m[r].reserve(n_modulus);
    for (int x = 0; x < n_modulus; ++x) {
      m[r].push_back(CycloElem::root_power(n_modulus, t * x));
    }
  }
  return m;
}

/// Phi with each column rescaled into Q(w_N); rescaling by a nonzero
/// scalar never changes rank. Constant column -> 1, cosine column i
/// (times 2) -> w^{it} + w^{-it}, sine column i (times 2j) ->
/// w^{it} - w^{-it}.
inline CycloMatrix exact_realified(int n_modulus, const FrequencySet& omega) {
  check_exact_modulus(n_modulus);
  if (omega.modulus != n_modulus) {
    throw usage_error("exact_realified: omega modulus mismatch");
  }
  const int k = (n_modulus - 1) / 2;
  CycloMatrix m(omega.indices.size());
  for (std::size_t r = 0; r < omega.indices.size(); ++r) {
    const long t = omega.indices[r];
    auto& row = m[r];
    row.reserve(n_modulus);
    row.push_back(CycloElem::root_power(n_modulus, 0));
    for (int i = 1; i <= k; ++i) {
      row.push_back(CycloElem::root_power(n_modulus, i * t) +
                    CycloElem::root_power(n_modulus, -i * t));
    }
    for (int i = 1; i <= k; ++i) {
      row.push_back(CycloElem::root_power(n_modulus, i * t) -
                    CycloElem::root_power(n_modulus, -i * t));
    }
  }
  return m;
}

inline CycloMatrix select_columns(const CycloMatrix& m, const std::vector<int>& cols) {
  CycloMatrix s(m.size());
  for (std::size_t r = 0; r < m.size(); ++r) {
    s[r].reserve(cols.size());
    for (int c : cols) s[r].push_back(m[r][static_cast<std::size_t>(c)]);
  }
  return s;
}

/// Exact rank over Q(w_N) by division-free row elimination: the update
/// row_i <- pivot * row_i - factor * row_r scales row_i by a nonzero
/// field element, which preserves rank.
inline int exact_rank(CycloMatrix m) {
  const int nr = static_cast<int>(m.size());
  if (nr == 0) return 0;
  const int nc = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < nc && r < nr; ++c) {
    int piv = -1;
    for (int i = r; i < nr; ++i) {
      if (!m[i][c].is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    for (int i = r + 1; i < nr; ++i) {
      if (m[i][c].is_zero()) continue;
      const CycloElem factor = m[i][c];
      for (int j = c; j < nc; ++j) {
        m[i][j] = m[r][c] * m[i][j] - factor * m[r][j];
      }
    }
    ++r;
  }
  return r;
}

}  // namespace csense
