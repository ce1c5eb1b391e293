#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "swapnet/closed_form.hpp"
#include "swapnet/distribution.hpp"
#include "swapnet/swap.hpp"

using namespace swapnet;

namespace {

const double kGrid[] = {0.5, 0.65, 0.8, 0.95};

void check_close(const OutcomeDistribution& got, const OutcomeDistribution& want, double tol) {
  CHECK(max_abs_discrepancy(got, want) <= tol);
}

}  // namespace

TEST_CASE("distribution bookkeeping") {
  OutcomeDistribution d(2);
  d.add(3, 0.25);
  d.add(1, 0.5);
  d.add(3, 0.25);
  CHECK(d.weight(3) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(d.weight(1) == 0.5);
  CHECK(d.weight(7) == 0.0);
  CHECK(d.total_weight() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(d.min_index() == 1);
  CHECK(d.max_index() == 3);
  CHECK(d.uniform_parity());
  d.add(2, 0.0);  // dropped
  CHECK(d.entries().size() == 2);
  d.add(2, 0.1);
  CHECK_FALSE(d.uniform_parity());
  CHECK_THROWS_AS(d.add(-1, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(d.add(1, -0.5), std::invalid_argument);
  CHECK_THROWS_AS(OutcomeDistribution(1), std::invalid_argument);
  CHECK_THROWS_AS(OutcomeDistribution(3).min_index(), std::logic_error);
}

TEST_CASE("swap of two unit-index pairs") {
  const SchmidtParameter sp = SchmidtParameter::from_a_squared(0.8);
  const OutcomeDistribution d = swap_pair(EtaIndex(1), EtaIndex(1), sp);
  CHECK(d.entries().size() == 2);
  CHECK(d.weight(2) == doctest::Approx(0.68).epsilon(1e-14));
  CHECK(d.weight(0) == doctest::Approx(0.32).epsilon(1e-14));
}

TEST_CASE("zero-index swap relays the other state deterministically") {
  for (double a2 : kGrid) {
    const SchmidtParameter sp = SchmidtParameter::from_a_squared(a2);
    CHECK(swap_pair(EtaIndex(5), EtaIndex(0), sp) == OutcomeDistribution::delta(5));
    CHECK(swap_pair(EtaIndex(0), EtaIndex(5), sp) == OutcomeDistribution::delta(5));
    CHECK(swap_pair(EtaIndex(0), EtaIndex(0), sp) == OutcomeDistribution::delta(0));
  }
}

TEST_CASE("swap is symmetric in its arguments") {
  for (double a2 : kGrid) {
    const SchmidtParameter sp = SchmidtParameter::from_a_squared(a2);
    for (int m = 0; m <= 8; ++m)
      for (int p = 0; p < m; ++p)
        CHECK(swap_pair(EtaIndex(m), EtaIndex(p), sp) == swap_pair(EtaIndex(p), EtaIndex(m), sp));
  }
}

TEST_CASE("swap branch weights sum to one") {
  for (double a2 : {0.5, 0.6, 0.7, 0.8, 0.9, 0.99}) {
    const SchmidtParameter sp = SchmidtParameter::from_a_squared(a2);
    for (int m = 0; m <= 50; ++m) {
      for (int p = 0; p <= 50; ++p) {
        const OutcomeDistribution d = swap_pair(EtaIndex(m), EtaIndex(p), sp);
        REQUIRE(std::fabs(d.total_weight() - 1.0) <= 1e-12);
      }
    }
  }
}

TEST_CASE("separable resource swaps deterministically upward") {
  const SchmidtParameter separable(1.0);
  CHECK(swap_pair(EtaIndex(3), EtaIndex(2), separable) == OutcomeDistribution::delta(5));
}

TEST_CASE("extending a distribution by one pair") {
  const SchmidtParameter sp = SchmidtParameter::from_a_squared(0.8);
  OutcomeDistribution d(2);
  d.add(2, 0.68);
  d.add(0, 0.32);
  const OutcomeDistribution extended = extend_distribution(d, EtaIndex(1), sp);
  CHECK(extended.weight(3) == doctest::Approx(0.52).epsilon(1e-14));
  CHECK(extended.weight(1) == doctest::Approx(0.48).epsilon(1e-14));
  CHECK(extended.total_weight() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("extension by a zero-index pair is the identity, bit for bit") {
  const SchmidtParameter sp = SchmidtParameter::from_a_squared(0.8);
  const OutcomeDistribution chains[] = {chain_sequential(1, sp), chain_sequential(4, sp),
                                        chain_sequential(7, sp)};
  for (const OutcomeDistribution& d : chains)
    CHECK(extend_distribution(d, EtaIndex(0), sp) == d);
}

TEST_CASE("symmetric-point extension splits evenly") {
  const SchmidtParameter sp = SchmidtParameter::from_a_squared(0.5);
  const OutcomeDistribution d = extend_distribution(OutcomeDistribution::delta(1), EtaIndex(1), sp);
  CHECK(d.weight(2) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(d.weight(0) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("sequential chain base cases") {
  const SchmidtParameter sp = SchmidtParameter::from_a_squared(0.8);
  CHECK(chain_sequential(1, sp) == OutcomeDistribution::delta(1));
  const OutcomeDistribution two = chain_sequential(2, sp);
  CHECK(two.weight(2) == doctest::Approx(0.68).epsilon(1e-14));
  CHECK(two.weight(0) == doctest::Approx(0.32).epsilon(1e-14));
  CHECK_THROWS_AS(chain_sequential(0, sp), std::invalid_argument);
}

TEST_CASE("four-link chain at the symmetric point") {
  const OutcomeDistribution d = chain_sequential(4, SchmidtParameter::from_a_squared(0.5));
  CHECK(d.weight(4) == doctest::Approx(1.0 / 8.0).epsilon(1e-14));
  CHECK(d.weight(2) == doctest::Approx(1.0 / 2.0).epsilon(1e-14));
  CHECK(d.weight(0) == doctest::Approx(3.0 / 8.0).epsilon(1e-14));
}

TEST_CASE("chain parity and support bounds") {
  for (double a2 : kGrid) {
    const SchmidtParameter sp = SchmidtParameter::from_a_squared(a2);
    for (int links = 1; links <= 20; ++links) {
      const OutcomeDistribution d = chain_sequential(links, sp);
      CHECK(d.uniform_parity());
      for (const auto& [index, weight] : d.entries()) CHECK(index % 2 == links % 2);
      CHECK(d.max_index() == links);
      if (a2 < 1.0) CHECK(d.min_index() == links % 2);
      CHECK(std::fabs(d.total_weight() - 1.0) <= 1e-12);
    }
  }
}

TEST_CASE("chain recurrence agrees with the closed form") {
  for (double a2 : kGrid) {
    const SchmidtParameter sp = SchmidtParameter::from_a_squared(a2);
    for (int links = 1; links <= 12; ++links)
      check_close(chain_sequential(links, sp), linear_chain(links, sp), 1e-12);
  }
}
