#include "swapnet/closed_form.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "swapnet/numeric.hpp"

namespace swapnet {

namespace {

// C(n, k) a^{2(n-k)} b^{2k}
double binomial_term(int n, int k, const SchmidtParameter& sp) {
  return std::exp(log_binomial(n, k) + scaled_log(n - k, 2.0 * sp.log_a()) +
                  scaled_log(k, 2.0 * sp.log_b()));
}

}  // namespace

OutcomeDistribution merged_binomial(int steps, int parties, const SchmidtParameter& sp) {
  if (steps < 1) throw std::invalid_argument("binomial mixture needs at least 1 step");
  // One step is the bare resource: both terms merge at index 1 with total
  // weight a^2 + b^2, which is 1 by definition rather than by rounding.
  if (steps == 1) return OutcomeDistribution::delta(1, parties);
  OutcomeDistribution d(parties);
  for (int k = 0; k <= steps; ++k) d.add(std::abs(steps - 2 * k), binomial_term(steps, k, sp));
  return d;
}

OutcomeDistribution linear_chain(int links, const SchmidtParameter& sp) {
  if (links < 1) throw std::invalid_argument("chain needs at least 1 link");
  return merged_binomial(links, 2, sp);
}

OutcomeDistribution star(int arms, const SchmidtParameter& sp) {
  if (arms < 2) throw std::invalid_argument("star needs at least 2 arms");
  return merged_binomial(arms, arms, sp);
}

OutcomeDistribution star_linear_double_sum(int arms, int chain_links,
                                           const SchmidtParameter& sp) {
  if (arms < 2) throw std::invalid_argument("star needs at least 2 arms");
  if (chain_links < 0) throw std::invalid_argument("chain extension must be nonnegative");
  OutcomeDistribution d(arms);
  for (int i = 0; i <= arms; ++i) {
    for (int j = 0; j <= chain_links; ++j) {
      const double weight = std::exp(log_binomial(arms, i) + log_binomial(chain_links, j) +
                                     scaled_log((arms - i) + (chain_links - j), 2.0 * sp.log_a()) +
                                     scaled_log(i + j, 2.0 * sp.log_b()));
      d.add(std::abs((arms - 2 * i) + (chain_links - 2 * j)), weight);
    }
  }
  return d;
}

OutcomeDistribution star_linear_collapsed(int arms, int chain_links,
                                          const SchmidtParameter& sp) {
  if (arms < 2) throw std::invalid_argument("star needs at least 2 arms");
  if (chain_links < 0) throw std::invalid_argument("chain extension must be nonnegative");
  return merged_binomial(arms + chain_links, arms, sp);
}

OutcomeDistribution star_linear_network(int arms, const std::vector<int>& arm_chains,
                                        const SchmidtParameter& sp) {
  if (arms < 2) throw std::invalid_argument("star needs at least 2 arms");
  if (static_cast<int>(arm_chains.size()) != arms)
    throw std::invalid_argument("arm_chains must list one chain length per arm");
  for (int links : arm_chains)
    if (links < 0) throw std::invalid_argument("arm chain length must be nonnegative");
  const int extension = std::accumulate(arm_chains.begin(), arm_chains.end(), 0);
  return merged_binomial(arms + extension, arms, sp);
}

double success_probability_maximal(const OutcomeDistribution& d) { return d.weight(0); }

double expected_concurrence(const OutcomeDistribution& d, const SchmidtParameter& sp) {
  double sum = 0.0;
  for (const auto& [index, weight] : d.entries())
    sum += weight * concurrence(EtaIndex(index), sp);
  return sum;
}

}  // namespace swapnet
