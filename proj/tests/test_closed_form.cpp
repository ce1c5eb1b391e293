#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "swapnet/closed_form.hpp"
#include "swapnet/numeric.hpp"
#include "swapnet/swap.hpp"

using namespace swapnet;

namespace {

const double kGrid[] = {0.5, 0.65, 0.8, 0.95};

}  // namespace

TEST_CASE("binomial helpers") {
  CHECK(binomial_exact(0, 0) == 1);
  CHECK(binomial_exact(4, 2) == 6);
  CHECK(binomial_exact(60, 30) == 118264581564861424ULL);
  CHECK(binomial_exact(5, 7) == 0);
  CHECK(log_binomial(4, 2) == doctest::Approx(std::log(6.0)).epsilon(1e-15));
  // Continuity across the exact/log-gamma switch at n = 60.
  CHECK(log_binomial(61, 30) == doctest::Approx(39.988587385699425).epsilon(1e-13));
  CHECK(log_binomial(300, 150) == doctest::Approx(204.8656382462206).epsilon(1e-13));
  CHECK(log_binomial(10, -1) == kNegInf);
  CHECK_THROWS_AS(binomial_exact(70, 3), std::invalid_argument);
}

TEST_CASE("linear chain worked examples") {
  const SchmidtParameter sp = SchmidtParameter::from_a_squared(0.8);
  const OutcomeDistribution two = linear_chain(2, sp);
  CHECK(two.weight(2) == doctest::Approx(0.68).epsilon(1e-14));
  CHECK(two.weight(0) == doctest::Approx(0.32).epsilon(1e-14));

  const OutcomeDistribution three = linear_chain(3, sp);
  CHECK(three.weight(3) == doctest::Approx(0.52).epsilon(1e-14));
  CHECK(three.weight(1) == doctest::Approx(0.48).epsilon(1e-14));

  CHECK(linear_chain(1, sp) == OutcomeDistribution::delta(1));
  CHECK_THROWS_AS(linear_chain(0, sp), std::invalid_argument);
}

TEST_CASE("two- and three-link weights match their explicit polynomials") {
  for (double a2 : {0.5, 0.65, 0.8, 0.9, 0.95}) {
    const SchmidtParameter sp = SchmidtParameter::from_a_squared(a2);
    const double b2 = 1.0 - a2;
    const OutcomeDistribution two = linear_chain(2, sp);
    CHECK(std::fabs(two.weight(2) - (a2 * a2 + b2 * b2)) <= 1e-14);
    CHECK(std::fabs(two.weight(0) - 2.0 * a2 * b2) <= 1e-14);
    const OutcomeDistribution three = linear_chain(3, sp);
    CHECK(std::fabs(three.weight(3) - (a2 * a2 * a2 + b2 * b2 * b2)) <= 1e-14);
    CHECK(std::fabs(three.weight(1) - 3.0 * a2 * b2 * (a2 + b2)) <= 1e-14);
  }
}

TEST_CASE("star worked examples") {
  CHECK(star(2, SchmidtParameter::from_a_squared(0.8)) ==
        linear_chain(2, SchmidtParameter::from_a_squared(0.8)));

  const OutcomeDistribution three = star(3, SchmidtParameter::from_a_squared(0.5));
  CHECK(three.parties() == 3);
  CHECK(three.weight(3) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(three.weight(1) == doctest::Approx(0.75).epsilon(1e-14));

  CHECK(star(4, SchmidtParameter(1.0)) == OutcomeDistribution::delta(4, 4));
  CHECK_THROWS_AS(star(1, SchmidtParameter::from_a_squared(0.5)), std::invalid_argument);
}

TEST_CASE("star with two arms equals the two-link chain exactly") {
  for (double a2 : kGrid)
    CHECK(star(2, SchmidtParameter::from_a_squared(a2)) ==
          linear_chain(2, SchmidtParameter::from_a_squared(a2)));
}

TEST_CASE("star-linear double sum worked examples") {
  const SchmidtParameter sp8 = SchmidtParameter::from_a_squared(0.8);
  const OutcomeDistribution no_extension = star_linear_double_sum(2, 0, sp8);
  CHECK(no_extension.weight(2) == doctest::Approx(0.68).epsilon(1e-14));
  CHECK(no_extension.weight(0) == doctest::Approx(0.32).epsilon(1e-14));

  const OutcomeDistribution symmetric =
      star_linear_double_sum(3, 1, SchmidtParameter::from_a_squared(0.5));
  CHECK(symmetric.weight(4) == doctest::Approx(1.0 / 8.0).epsilon(1e-13));
  CHECK(symmetric.weight(2) == doctest::Approx(1.0 / 2.0).epsilon(1e-13));
  CHECK(symmetric.weight(0) == doctest::Approx(3.0 / 8.0).epsilon(1e-13));

  CHECK(max_abs_discrepancy(star_linear_double_sum(2, 2, sp8), linear_chain(4, sp8)) <= 1e-14);
  CHECK_THROWS_AS(star_linear_double_sum(1, 2, sp8), std::invalid_argument);
  CHECK_THROWS_AS(star_linear_double_sum(2, -1, sp8), std::invalid_argument);
}

TEST_CASE("star-linear collapsed worked examples") {
  const SchmidtParameter sp = SchmidtParameter::from_a_squared(0.8);
  const OutcomeDistribution d = star_linear_collapsed(2, 2, sp);
  CHECK(d.weight(4) == doctest::Approx(0.4112).epsilon(1e-14));
  CHECK(d.weight(2) == doctest::Approx(0.4352).epsilon(1e-14));
  CHECK(d.weight(0) == doctest::Approx(0.1536).epsilon(1e-14));

  for (double a2 : kGrid) {
    const SchmidtParameter g = SchmidtParameter::from_a_squared(a2);
    CHECK(star_linear_collapsed(3, 0, g) == star(3, g));
  }

  const OutcomeDistribution sym = star_linear_collapsed(2, 1, SchmidtParameter::from_a_squared(0.5));
  CHECK(sym.weight(3) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(sym.weight(1) == doctest::Approx(0.75).epsilon(1e-14));
}

TEST_CASE("double sum collapses to the single binomial") {
  for (double a2 : kGrid) {
    const SchmidtParameter sp = SchmidtParameter::from_a_squared(a2);
    for (int arms = 2; arms <= 14; ++arms) {
      for (int chain = 0; arms + chain <= 14; ++chain) {
        const double gap = max_abs_discrepancy(star_linear_double_sum(arms, chain, sp),
                                               star_linear_collapsed(arms, chain, sp));
        REQUIRE(gap <= 1e-12);
      }
    }
  }
}

TEST_CASE("collapsed form equals repeated extension of the star") {
  for (double a2 : kGrid) {
    const SchmidtParameter sp = SchmidtParameter::from_a_squared(a2);
    for (int arms = 2; arms <= 6; ++arms) {
      OutcomeDistribution folded = star(arms, sp);
      for (int chain = 0; arms + chain <= 14; ++chain) {
        REQUIRE(max_abs_discrepancy(folded, star_linear_collapsed(arms, chain, sp)) <= 1e-12);
        folded = extend_distribution(folded, EtaIndex(1), sp);
      }
    }
  }
}

TEST_CASE("multi-arm star-linear reduces to total step count") {
  const SchmidtParameter sp = SchmidtParameter::from_a_squared(0.8);
  CHECK(star_linear_network(3, {0, 0, 0}, sp) == star(3, sp));
  CHECK(star_linear_network(3, {1, 0, 2}, sp) == star_linear_collapsed(3, 3, sp));
  CHECK(star_linear_network(2, {4, 1}, sp) == star_linear_collapsed(2, 5, sp));
  CHECK_THROWS_AS(star_linear_network(3, {1, 2}, sp), std::invalid_argument);
  CHECK_THROWS_AS(star_linear_network(3, {1, -2, 0}, sp), std::invalid_argument);
}

TEST_CASE("success probability of the maximally entangled outcome") {
  const SchmidtParameter sp = SchmidtParameter::from_a_squared(0.8);
  CHECK(success_probability_maximal(linear_chain(2, sp)) == doctest::Approx(0.32).epsilon(1e-14));
  CHECK(success_probability_maximal(linear_chain(3, sp)) == 0.0);
  CHECK(success_probability_maximal(linear_chain(2, SchmidtParameter::from_a_squared(0.5))) ==
        doctest::Approx(0.5).epsilon(1e-14));

  // Positive exactly for even chains with a strictly partial resource.
  for (double a2 : {0.5, 0.8, 1.0}) {
    const SchmidtParameter g = SchmidtParameter::from_a_squared(a2);
    for (int links = 1; links <= 8; ++links) {
      const bool expected = links % 2 == 0 && a2 < 1.0;
      CHECK((success_probability_maximal(linear_chain(links, g)) > 0.0) == expected);
    }
  }
}

TEST_CASE("expected concurrence") {
  const SchmidtParameter sp = SchmidtParameter::from_a_squared(0.8);
  CHECK(expected_concurrence(OutcomeDistribution::delta(1), sp) ==
        doctest::Approx(0.8).epsilon(1e-14));
  CHECK(expected_concurrence(linear_chain(2, sp), sp) == doctest::Approx(0.64).epsilon(1e-14));

  const SchmidtParameter symmetric = SchmidtParameter::from_a_squared(0.5);
  for (int links = 1; links <= 10; ++links)
    CHECK(expected_concurrence(linear_chain(links, symmetric), symmetric) ==
          doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("separable resource stays separable in every topology") {
  const SchmidtParameter separable(1.0);
  for (int links = 1; links <= 6; ++links) {
    const OutcomeDistribution d = linear_chain(links, separable);
    CHECK(d == OutcomeDistribution::delta(links));
    CHECK(expected_concurrence(d, separable) == 0.0);
  }
  for (int arms = 2; arms <= 6; ++arms) {
    CHECK(star(arms, separable) == OutcomeDistribution::delta(arms, arms));
    CHECK(star_linear_collapsed(arms, 3, separable) ==
          OutcomeDistribution::delta(arms + 3, arms));
  }
}

TEST_CASE("distributions normalize and stay in range") {
  for (double a2 : kGrid) {
    const SchmidtParameter sp = SchmidtParameter::from_a_squared(a2);
    for (int steps = 1; steps <= 40; ++steps) {
      const OutcomeDistribution d = merged_binomial(steps, 2, sp);
      CHECK(std::fabs(d.total_weight() - 1.0) <= 1e-12);
      for (const auto& [index, weight] : d.entries()) {
        CHECK(weight >= 0.0);
        CHECK(weight <= 1.0);
      }
    }
  }
  // Long chains keep normalizing through the log-gamma branch.
  const OutcomeDistribution long_chain =
      merged_binomial(400, 2, SchmidtParameter::from_a_squared(0.8));
  CHECK(std::fabs(long_chain.total_weight() - 1.0) <= 1e-11);
}
