#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <sstream>

#include "csense/basis_pursuit.hpp"
#include "csense/constructions.hpp"
#include "csense/p0.hpp"
#include "csense/signal.hpp"

using namespace csense;
using Catch::Matchers::WithinAbs;

TEST_CASE("sparse signal validation and CSV round-trip") {
  SparseSignal f;
  f.length = 8;
  f.support = {1, 5};
  f.values = {{2.0, 0.5}, {-1.0, 0.0}};
  f.validate();
  CHECK(f.l0_norm() == 2);

  std::stringstream ss;
  write_signal_csv(ss, f);
  const SparseSignal g = read_signal_csv(ss);
  CHECK(g.length == f.length);
  CHECK(g.support == f.support);
  CHECK((g.to_dense() - f.to_dense()).norm() < 1e-15);

  SparseSignal bad = f;
  bad.values[0] = {0, 0};
  CHECK_THROWS_AS(bad.validate(), usage_error);
}

TEST_CASE("dft_measure basics") {
  const auto omega = make_symmetric_omega(5);

  SparseSignal zero;
  zero.length = 5;
  CHECK(dft_measure(zero, omega).norm() == 0.0);

  SparseSignal spike;   // f = e_0: flat spectrum 1/sqrt(N)
  spike.length = 5;
  spike.support = {0};
  spike.values = {{1.0, 0.0}};
  const auto y = dft_measure(spike, omega);
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    CHECK_THAT(std::abs(y(i) - std::complex<double>(1.0 / std::sqrt(5.0), 0)),
               WithinAbs(0.0, 1e-14));
  }

  SparseSignal f3;   // 3 e_2 -> (3/sqrt(5)) (1, w^2, w^-2)
  f3.length = 5;
  f3.support = {2};
  f3.values = {{3.0, 0.0}};
  const auto y3 = dft_measure(f3, omega);
  const double s = 3.0 / std::sqrt(5.0);
  CHECK_THAT(std::abs(y3(0) - s * unit_root<double>(0, 5)), WithinAbs(0.0, 1e-14));
  CHECK_THAT(std::abs(y3(1) - s * unit_root<double>(2, 5)), WithinAbs(0.0, 1e-14));
  CHECK_THAT(std::abs(y3(2) - s * unit_root<double>(-2, 5)), WithinAbs(0.0, 1e-14));

  SparseSignal wrong;
  wrong.length = 7;
  CHECK_THROWS_AS(dft_measure(wrong, omega), usage_error);
}

TEST_CASE("p0_solve: zero measurements give the zero solution") {
  const auto omega = make_symmetric_omega(5);
  const auto psi = partial_fourier<double>(5, omega);
  const auto r = p0_solve(psi, ComplexVector<double>::Zero(3), 1);
  REQUIRE(r.feasible);
  CHECK(r.sparsity_found == 0);
  REQUIRE(r.solutions.size() == 1);
  CHECK(r.solutions[0].l0_norm() == 0);
}

TEST_CASE("p0_solve recovers 3 e_2 from Psi(5) measurements uniquely") {
  const auto omega = make_symmetric_omega(5);
  const auto psi = partial_fourier<double>(5, omega);
  SparseSignal f;
  f.length = 5;
  f.support = {2};
  f.values = {{3.0, 0.0}};
  const auto r = p0_solve(psi, dft_measure(f, omega), 2);
  REQUIRE(r.feasible);
  CHECK(r.sparsity_found == 1);
  REQUIRE(r.solutions.size() == 1);
  CHECK(r.solutions[0].support == std::vector<int>{2});
  CHECK(std::abs(r.solutions[0].values[0] - std::complex<double>(3, 0)) < 1e-10);
  CHECK(r.residual_l2 <= kDefaultTauFeas);

  const auto verdict = uniqueness_check(psi, f);
  CHECK(verdict.verdict == UniquenessVerdict::unique);
}

TEST_CASE("p0_solve reports no feasible support when s_max is too small") {
  const auto omega = make_symmetric_omega(7);
  const auto psi = partial_fourier<double>(7, omega);
  SparseSignal f;
  f.length = 7;
  f.support = {1, 2, 3};
  f.values = {{1, 0}, {1, 0}, {1, 0}};
  const auto r = p0_solve(psi, dft_measure(f, omega), 2);
  CHECK_FALSE(r.feasible);
  CHECK(r.solutions.empty());
}

TEST_CASE("dependent Phi columns produce a sparser alternative") {
  // spark(Phi(7)) = 3 with witness {4,5,6}: a combination of columns 4
  // and 5 built from the null relation equals a multiple of column 6
  const auto omega = make_symmetric_omega(7);
  const auto phi_r = realify(partial_fourier<double>(7, omega), realifier_q<double>(7));
  ComplexMatrix<double> phi = phi_r.cast<std::complex<double>>();

  RealMatrix<double> wit(phi_r.rows(), 3);
  wit.col(0) = phi_r.col(4);
  wit.col(1) = phi_r.col(5);
  wit.col(2) = phi_r.col(6);
  Eigen::JacobiSVD<RealMatrix<double>> svd(wit, Eigen::ComputeFullV);
  const RealVector<double> null_dir = svd.matrixV().col(2);
  REQUIRE(std::abs(null_dir(2)) > 1e-8);

  SparseSignal f;   // two-sparse on {4,5}, measured image matches -c6/c_null * e_6
  f.length = 7;
  f.support = {4, 5};
  f.values = {{null_dir(0), 0}, {null_dir(1), 0}};
  f.validate();

  const auto report = uniqueness_check(phi, f);
  CHECK(report.verdict == UniquenessVerdict::not_unique);
  REQUIRE(report.certificate.has_value());
  CHECK(report.certificate->l0_norm() == 1);
  CHECK(report.certificate->support == std::vector<int>{6});
}

TEST_CASE("basis pursuit: zero right-hand side converges immediately") {
  const auto omega = make_symmetric_omega(5);
  const auto psi = partial_fourier<double>(5, omega);
  const auto r = basis_pursuit(psi, ComplexVector<double>::Zero(3));
  CHECK(r.converged);
  CHECK(r.iterations <= 1);
  CHECK(r.solution.norm() < 1e-12);
}

TEST_CASE("basis pursuit matches the P0 oracle on a unique 1-sparse instance") {
  const auto omega = make_symmetric_omega(11);
  const auto psi = partial_fourier<double>(11, omega);
  SparseSignal f;
  f.length = 11;
  f.support = {4};
  f.values = {{2.5, -1.0}};
  const auto y = dft_measure(f, omega);

  const auto p0 = p0_solve(psi, y, 1);
  REQUIRE(p0.feasible);
  REQUIRE(p0.solutions.size() == 1);

  const auto bp = basis_pursuit(psi, y);
  REQUIRE(bp.converged);
  CHECK((bp.solution - f.to_dense()).norm() < 1e-6);
  CHECK(bp.residual_l2 < 1e-9);
  CHECK(bp.solution.template lpNorm<1>() <= f.l1_norm() + 1e-6);
}

TEST_CASE("basis pursuit rejects rank-deficient rows") {
  ComplexMatrix<double> a(2, 3);
  a.setZero();
  a(0, 0) = {1, 0};
  a(1, 0) = {2, 0};   // second row dependent
  CHECK_THROWS_AS(basis_pursuit(a, ComplexVector<double>::Zero(2)), usage_error);
}

TEST_CASE("complex shrinkage reduces to soft-thresholding on real inputs") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> dist(-3.0, 3.0);
  ComplexVector<double> v(50);
  for (int i = 0; i < 50; ++i) v(i) = {dist(rng), 0.0};
  const double kappa = 0.7;
  const auto out = complex_shrink(v, kappa);
  for (int i = 0; i < 50; ++i) {
    const double x = v(i).real();
    const double expected = x > kappa ? x - kappa : (x < -kappa ? x + kappa : 0.0);
    CHECK_THAT(out(i).real(), WithinAbs(expected, 1e-14));
    CHECK(out(i).imag() == 0.0);
  }
}
