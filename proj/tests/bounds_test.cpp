#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "csense/bounds.hpp"
#include "csense/constructions.hpp"
#include "csense/dct.hpp"
#include "csense/omega.hpp"
#include "csense/sparsify.hpp"

using namespace csense;
using Catch::Matchers::WithinAbs;

namespace {

ComplexMatrix<double> identity_basis(int n) {
  return ComplexMatrix<double>::Identity(n, n);
}

ComplexMatrix<double> full_dft(int n) {
  FrequencySet full;
  full.modulus = n;
  for (int i = 0; i < n; ++i) full.indices.push_back(i);
  return partial_fourier<double>(n, full);
}

}  // namespace

TEST_CASE("coherence: identity with itself is maximal, with DFT minimal") {
  CHECK_THAT(coherence(identity_basis(16), identity_basis(16)),
             WithinAbs(4.0, 1e-12));
  CHECK_THAT(coherence(identity_basis(16), full_dft(16)), WithinAbs(1.0, 1e-12));
}

TEST_CASE("coherence range property on random orthonormal pairs") {
  std::mt19937 rng(2024);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const int n = 12;
  for (int trial = 0; trial < 5; ++trial) {
    ComplexMatrix<double> a(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) a(i, j) = {gauss(rng), gauss(rng)};
    }
    Eigen::HouseholderQR<ComplexMatrix<double>> qr(a);
    const ComplexMatrix<double> u = qr.householderQ();
    for (const auto& v : {identity_basis(n), full_dft(n)}) {
      const double mu = coherence(u, v);
      CHECK(mu >= 1.0 - 1e-9);
      CHECK(mu <= std::sqrt(static_cast<double>(n)) + 1e-9);
    }
  }
}

TEST_CASE("coherence rejects non-orthonormal input") {
  ComplexMatrix<double> bad = identity_basis(4);
  bad(2, 2) = {2.0, 0.0};
  CHECK_THROWS_AS(coherence(bad, identity_basis(4)), usage_error);
}

TEST_CASE("sparsity budget reproduces the 1024/512 example") {
  const auto b = max_sparsity({1024, 512, 1.0, 46.0});
  CHECK_THAT(b.s_real, WithinAbs(1.6, 0.05));
  CHECK(b.s_floor == 1);

  // dividing by mu^2 = 1024 pushes the budget to ~0.00157
  const auto worst = max_sparsity({1024, 512, 32.0, 46.0});
  CHECK_THAT(worst.s_real, WithinAbs(1.6 / 1024.0, 1e-4));
  CHECK(worst.s_floor == 0);

  // m = C ln n with mu = 1 gives S = 1 exactly
  const double c = 512.0 / std::log(1024.0);
  const auto unit = max_sparsity({1024, 512, 1.0, c});
  CHECK_THAT(unit.s_real, WithinAbs(1.0, 1e-12));
}

TEST_CASE("required measurements: paper case and infeasibility flag") {
  const auto r = required_measurements(2, 1024, 1.0, 46.0);
  CHECK(r.m == 638);   // ceil(46 * 2 * ln 1024) = ceil(637.68...)
  CHECK_FALSE(r.infeasible);

  const auto inf = required_measurements(200, 1024, 1.0, 46.0);
  CHECK(inf.infeasible);
  CHECK(inf.m > 63000);
}

TEST_CASE("budget monotonicity in m, mu, n, C") {
  const auto base = max_sparsity({1024, 512, 2.0, 46.0}).s_real;
  CHECK(max_sparsity({1024, 600, 2.0, 46.0}).s_real > base);
  CHECK(max_sparsity({1024, 512, 3.0, 46.0}).s_real < base);
  CHECK(max_sparsity({2048, 512, 2.0, 46.0}).s_real < base);
  CHECK(max_sparsity({1024, 512, 2.0, 60.0}).s_real < base);
}

TEST_CASE("budget and requirement are mutually inverse up to ceiling") {
  for (int m : {100, 317, 512, 901}) {
    const auto s = max_sparsity({1024, m, 1.0, 46.0});
    const long s_ceil = static_cast<long>(std::ceil(s.s_real));
    if (s_ceil > s.s_real && s_ceil >= 1) {
      const auto req = required_measurements(static_cast<int>(s_ceil), 1024, 1.0, 46.0);
      CHECK(req.m >= m);
    }
  }
}

TEST_CASE("bound query validation") {
  CHECK_THROWS_AS(max_sparsity({1, 1, 1.0, 46.0}), usage_error);
  CHECK_THROWS_AS(max_sparsity({1024, 2000, 1.0, 46.0}), usage_error);
  CHECK_THROWS_AS(max_sparsity({1024, 512, 40.0, 46.0}), usage_error);
  CHECK_THROWS_AS(max_sparsity({1024, 512, 1.0, -1.0}), usage_error);
}

TEST_CASE("DCT: constant signal concentrates in the DC coefficient") {
  const std::vector<double> x(64, 3.25);
  const auto c = dct_forward(x);
  CHECK_THAT(c[0], WithinAbs(3.25 * 8.0, 1e-12));   // sqrt(64) * mean
  for (std::size_t k = 1; k < c.size(); ++k) CHECK_THAT(c[k], WithinAbs(0.0, 1e-12));
}

TEST_CASE("DCT round-trip and Parseval at length 1024") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> x(1024);
  for (auto& v : x) v = dist(rng);
  const auto c = dct_forward(x);
  const auto back = dct_inverse(c);
  double err = 0, nx = 0, nc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    err = std::max(err, std::abs(back[i] - x[i]));
    nx += x[i] * x[i];
    nc += c[i] * c[i];
  }
  CHECK(err < 1e-10);
  CHECK_THAT(std::sqrt(nx), WithinAbs(std::sqrt(nc), 1e-10));
}

TEST_CASE("sparsify: endpoints and monotone PSNR") {
  const auto x = synthetic_signal(4096);

  const auto all = sparsify(x, 1.0);
  CHECK(all.kept == 4096);
  CHECK(std::isinf(all.psnr_db));
  CHECK(all.reconstruction == x);

  const auto none = sparsify(x, 0.0);
  CHECK(none.kept == 0);
  double mse = 0, mean_sq = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mse += (x[i] - none.reconstruction[i]) * (x[i] - none.reconstruction[i]);
    mean_sq += x[i] * x[i];
  }
  CHECK_THAT(mse, WithinAbs(mean_sq, 1e-9));

  double prev = none.psnr_db;
  for (double f : {0.002, 0.02, 0.2, 1.0}) {
    const double cur = sparsify(x, f).psnr_db;
    CHECK(cur >= prev);
    prev = cur;
  }
}

TEST_CASE("sparsify golden PSNR at the 0.2% operating point") {
  const auto r = sparsify(synthetic_signal(4096), 0.002);
  CHECK(r.kept == 9);
  CHECK_THAT(r.psnr_db, WithinAbs(13.590362075617, 1e-9));
}

TEST_CASE("zero signal PSNR is the +inf sentinel") {
  const std::vector<double> zero(32, 0.0);
  CHECK(std::isinf(sparsify(zero, 0.5).psnr_db));
}
