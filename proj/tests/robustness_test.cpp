#include <catch2/catch_amalgamated.hpp>

#include "csense/constructions.hpp"
#include "csense/cyclotomic.hpp"
#include "csense/omega.hpp"
#include "csense/robustness.hpp"

using namespace csense;

namespace {

RealMatrix<double> phi_of(int n) {
  const auto omega = make_symmetric_omega(n);
  return realify(partial_fourier<double>(n, omega), realifier_q<double>(n));
}

}  // namespace

TEST_CASE("colex subset enumeration order and count") {
  ColexSubsets it(4, 2);
  std::vector<std::vector<int>> seen;
  for (; !it.done(); it.advance()) seen.push_back(it.current());
  const std::vector<std::vector<int>> expected = {
      {0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}};
  CHECK(seen == expected);
  CHECK(binomial(4, 2) == std::uint64_t{6});
  CHECK(binomial(70, 35).has_value() == false);   // overflows 64 bits
}

TEST_CASE("full DFT is maximally robust with a single subset") {
  FrequencySet full{5, {0, 1, 2, 3, 4}};
  const auto psi = partial_fourier<double>(5, full);
  const auto exact = exact_partial_fourier(5, full);
  const auto report = maximal_robustness(psi, ArithMode::both, &exact);
  CHECK(report.robust);
  CHECK(report.subsets_checked == 1);
  CHECK_FALSE(report.witness.has_value());
}

TEST_CASE("Psi(5): exhaustive verdict per exact oracle") {
  const auto omega = make_symmetric_omega(5);
  const auto psi = partial_fourier<double>(5, omega);
  const auto exact = exact_partial_fourier(5, omega);
  const auto report = maximal_robustness(psi, ArithMode::both, &exact, false, "psi5");
  // empirical result: every 3-subset independent, so Psi IS maximally robust
  CHECK(report.robust);
  CHECK(report.subsets_checked == 10);
}

TEST_CASE("Phi(5): not robust, colex-first witness {0,1,2} with rank 2") {
  const auto omega = make_symmetric_omega(5);
  const auto phi = phi_of(5);
  const auto exact = exact_realified(5, omega);
  const auto report = maximal_robustness(phi, ArithMode::both, &exact, false, "phi5");
  REQUIRE_FALSE(report.robust);
  REQUIRE(report.witness.has_value());
  CHECK(*report.witness == std::vector<int>{0, 1, 2});
  CHECK(exact_rank(select_columns(exact, *report.witness)) == 2);
  CHECK(numeric_rank(RealMatrix<double>(select_columns(phi, *report.witness))) == 2);
}

TEST_CASE("Phi(7): witness is the C2 block {0,...,4} with rank 4") {
  const auto omega = make_symmetric_omega(7);
  const auto exact = exact_realified(7, omega);
  const auto report = maximal_robustness(phi_of(7), ArithMode::both, &exact, false, "phi7");
  REQUIRE_FALSE(report.robust);
  CHECK(*report.witness == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(exact_rank(select_columns(exact, *report.witness)) == 4);
}

TEST_CASE("spark: duplicated column gives spark 2") {
  RealMatrix<double> a(3, 4);
  a << 1, 0, 0, 1,
       0, 1, 0, 0,
       0, 0, 1, 0;
  const auto s = spark(a, ArithMode::floating);
  CHECK(s.spark == 2);
  REQUIRE(s.witness.has_value());
  CHECK(*s.witness == std::vector<int>{0, 3});
}

TEST_CASE("spark golden values for N=5 and N=7") {
  {
    const auto omega = make_symmetric_omega(5);
    const auto psi = partial_fourier<double>(5, omega);
    const auto psi_exact = exact_partial_fourier(5, omega);
    const auto s = spark(psi, ArithMode::both, &psi_exact);
    CHECK(s.full);
    CHECK(s.spark == 4);

    const auto phi_exact = exact_realified(5, omega);
    const auto sp = spark(phi_of(5), ArithMode::both, &phi_exact);
    CHECK(sp.spark == 2);
    CHECK(*sp.witness == std::vector<int>{3, 4});
  }
  {
    const auto omega = make_symmetric_omega(7);
    const auto phi_exact = exact_realified(7, omega);
    const auto sp = spark(phi_of(7), ArithMode::both, &phi_exact);
    CHECK(sp.spark == 3);
    CHECK(*sp.witness == std::vector<int>{4, 5, 6});
  }
}

TEST_CASE("spark / robustness consistency") {
  for (int n : {5, 7, 11}) {
    const auto omega = make_symmetric_omega(n);
    const auto psi = partial_fourier<double>(n, omega);
    const auto phi = phi_of(n);
    for (int which = 0; which < 2; ++which) {
      INFO("N=" << n << " frame=" << (which == 0 ? "psi" : "phi"));
      const auto robust = which == 0
                              ? maximal_robustness(psi, ArithMode::floating).robust
                              : maximal_robustness(phi, ArithMode::floating).robust;
      const auto s = which == 0 ? spark(psi, ArithMode::floating)
                                : spark(phi, ArithMode::floating);
      CHECK(robust == s.full);
      CHECK((s.spark == omega.size() + 1) == robust);
    }
  }
}

TEST_CASE("floating and exact paths agree subset-for-subset, N <= 13") {
  for (int n : {5, 7, 11, 13}) {
    const auto omega = make_symmetric_omega(n);
    const auto psi = partial_fourier<double>(n, omega);
    const auto psi_exact = exact_partial_fourier(n, omega);
    INFO("N=" << n);
    // both-mode throws on any per-subset disagreement
    CHECK_NOTHROW(maximal_robustness(psi, ArithMode::both, &psi_exact));
    const auto phi = phi_of(n);
    const auto phi_exact = exact_realified(n, omega);
    CHECK_NOTHROW(maximal_robustness(phi, ArithMode::both, &phi_exact));
  }
}

TEST_CASE("determinism: identical inputs give identical reports") {
  const auto phi = phi_of(7);
  const auto a = maximal_robustness(phi, ArithMode::floating);
  const auto b = maximal_robustness(phi, ArithMode::floating);
  CHECK(a.robust == b.robust);
  CHECK(a.witness == b.witness);
  CHECK(a.subsets_checked == b.subsets_checked);
  CHECK(a.min_singular_value_seen == b.min_singular_value_seen);
}

TEST_CASE("budget guard refuses oversized enumerations") {
  // C(64, 16) is far beyond the budget; matrix content is irrelevant
  RealMatrix<double> wide = RealMatrix<double>::Random(16, 64);
  CHECK_THROWS_AS(maximal_robustness(wide, ArithMode::floating), budget_error);
}

TEST_CASE("exact mode requires a matching oracle") {
  const auto phi = phi_of(5);
  CHECK_THROWS_AS(maximal_robustness(phi, ArithMode::exact), usage_error);
}
