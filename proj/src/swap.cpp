#include "swapnet/swap.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "swapnet/numeric.hpp"

namespace swapnet {

OutcomeDistribution swap_pair(EtaIndex m, EtaIndex p, const SchmidtParameter& sp) {
  OutcomeDistribution out(2);
  if (m.m == 0 || p.m == 0) {
    // Both branch indices coincide at m + p and their weights sum to 1.
    out.add(m.m + p.m, 1.0);
    return out;
  }
  const double log_a2 = 2.0 * sp.log_a();
  const double log_b2 = 2.0 * sp.log_b();
  const double log_denom = log_norm_squared(m.m, sp) + log_norm_squared(p.m, sp);
  const double high = std::exp(log_norm_squared(m.m + p.m, sp) - log_denom);
  const double low =
      std::exp(log_sum_exp(scaled_log(m.m, log_a2) + scaled_log(p.m, log_b2),
                           scaled_log(p.m, log_a2) + scaled_log(m.m, log_b2)) -
               log_denom);
  out.add(m.m + p.m, high);
  out.add(std::abs(m.m - p.m), low);
  return out;
}

OutcomeDistribution extend_distribution(const OutcomeDistribution& d, EtaIndex p,
                                        const SchmidtParameter& sp) {
  OutcomeDistribution out(d.parties());
  for (const auto& [index, weight] : d.entries()) {
    const OutcomeDistribution branches = swap_pair(EtaIndex(index), p, sp);
    for (const auto& [branch_index, branch_weight] : branches.entries())
      out.add(branch_index, weight * branch_weight);
  }
  return out;
}

OutcomeDistribution chain_sequential(int links, const SchmidtParameter& sp) {
  if (links < 1) throw std::invalid_argument("chain needs at least 1 link");
  OutcomeDistribution d = OutcomeDistribution::delta(1, 2);
  for (int swap = 1; swap < links; ++swap) d = extend_distribution(d, EtaIndex(1), sp);
  return d;
}

}  // namespace swapnet
