#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "csense/errors.hpp"

namespace csense {

/// A sampled frequency index set Omega, a subset of {0,...,N-1}.
struct FrequencySet {
  int modulus = 0;               // N
  std::vector<int> indices;      // sorted, distinct, in [0, N-1]

  int size() const { return static_cast<int>(indices.size()); }

  bool contains(int i) const {
    return std::binary_search(indices.begin(), indices.end(), i);
  }

  /// i in Omega  <=>  (N - i) mod N in Omega, and 0 in Omega.
  bool is_symmetric() const {
    if (!contains(0)) return false;
    for (int i : indices) {
      if (!contains((modulus - i) % modulus)) return false;
    }
    return true;
  }
};

inline bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Omega = {0} u {i odd : 1 <= i <= k} u {N-i : i odd, 1 <= i <= k},
/// k = (N-1)/2. Size is k+1 when k is even, k+2 when k is odd.
inline FrequencySet make_symmetric_omega(int n_modulus) {
  if (n_modulus < 3 || !is_prime(n_modulus)) {
    throw usage_error("make_symmetric_omega: N must be an odd prime >= 3, got " +
                      std::to_string(n_modulus));
  }
  const int k = (n_modulus - 1) / 2;
  std::set<int> idx{0};
  for (int i = 1; i <= k; i += 2) {
    idx.insert(i);
    idx.insert(n_modulus - i);
  }
  FrequencySet omega;
  omega.modulus = n_modulus;
  omega.indices.assign(idx.begin(), idx.end());
  return omega;
}

/// m distinct indices drawn uniformly without replacement; deterministic
/// for a fixed seed (partial Fisher-Yates over 0..N-1).
inline FrequencySet make_random_omega(int n_modulus, int m, std::uint64_t seed) {
  if (n_modulus < 1 || m < 1 || m > n_modulus) {
    throw usage_error("make_random_omega: need 1 <= m <= N");
  }
  std::vector<int> pool(n_modulus);
  std::iota(pool.begin(), pool.end(), 0);
  std::mt19937_64 rng(seed);
  for (int i = 0; i < m; ++i) {
    // draw directly from the raw stream so the result is identical across
    // standard library implementations (distribution objects are not)
    const int j = i + static_cast<int>(rng() % static_cast<std::uint64_t>(n_modulus - i));
    std::swap(pool[i], pool[j]);
  }
  FrequencySet omega;
  omega.modulus = n_modulus;
  omega.indices.assign(pool.begin(), pool.begin() + m);
  std::sort(omega.indices.begin(), omega.indices.end());
  return omega;
}

}  // namespace csense
