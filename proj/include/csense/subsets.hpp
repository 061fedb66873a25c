#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace csense {

/// C(n, r) with overflow detection.
inline std::optional<std::uint64_t> binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  if (r > n - r) r = n - r;
  unsigned __int128 acc = 1;
  for (int i = 1; i <= r; ++i) {
    acc = acc * static_cast<unsigned>(n - r + i) / static_cast<unsigned>(i);
    if (acc > UINT64_MAX) return std::nullopt;
  }
  return static_cast<std::uint64_t>(acc);
}

/// Iterates r-subsets of {0,...,n-1} in colexicographic order.
class ColexSubsets {
 public:
  ColexSubsets(int n, int r) : n_(n), r_(r), current_(r), done_(r > n) {
    for (int i = 0; i < r; ++i) current_[static_cast<std::size_t>(i)] = i;
  }

  bool done() const { return done_; }
  const std::vector<int>& current() const { return current_; }

  void advance() {
    for (int i = 0; i < r_; ++i) {
      const int limit = (i + 1 < r_) ? current_[static_cast<std::size_t>(i + 1)] : n_;
      if (current_[static_cast<std::size_t>(i)] + 1 < limit) {
        ++current_[static_cast<std::size_t>(i)];
        for (int j = 0; j < i; ++j) current_[static_cast<std::size_t>(j)] = j;
        return;
      }
    }
    done_ = true;
  }

 private:
  int n_;
  int r_;
  std::vector<int> current_;
  bool done_;
};

}  // namespace csense
