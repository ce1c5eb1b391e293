#include "swapnet/distribution.hpp"

#include <cmath>
#include <stdexcept>

namespace swapnet {

OutcomeDistribution::OutcomeDistribution(int parties) : parties_(parties) {
  if (parties < 2) throw std::invalid_argument("distribution needs at least 2 parties");
}

OutcomeDistribution OutcomeDistribution::delta(int index, int parties) {
  OutcomeDistribution d(parties);
  d.add(index, 1.0);
  return d;
}

void OutcomeDistribution::add(int index, double weight) {
  if (index < 0) throw std::invalid_argument("Schmidt index must be nonnegative");
  if (!(weight >= 0.0)) throw std::invalid_argument("outcome weight must be nonnegative");
  if (weight == 0.0) return;
  entries_[index] += weight;
}

double OutcomeDistribution::weight(int index) const {
  const auto it = entries_.find(index);
  return it == entries_.end() ? 0.0 : it->second;
}

double OutcomeDistribution::total_weight() const {
  double total = 0.0;
  for (const auto& [index, w] : entries_) total += w;
  return total;
}

int OutcomeDistribution::min_index() const {
  if (entries_.empty()) throw std::logic_error("empty distribution has no min index");
  return entries_.begin()->first;
}

int OutcomeDistribution::max_index() const {
  if (entries_.empty()) throw std::logic_error("empty distribution has no max index");
  return entries_.rbegin()->first;
}

bool OutcomeDistribution::uniform_parity() const {
  if (entries_.empty()) return true;
  const int parity = entries_.begin()->first % 2;
  for (const auto& [index, w] : entries_)
    if (index % 2 != parity) return false;
  return true;
}

double max_abs_discrepancy(const OutcomeDistribution& lhs, const OutcomeDistribution& rhs) {
  double worst = 0.0;
  for (const auto& [index, w] : lhs.entries())
    worst = std::fmax(worst, std::fabs(w - rhs.weight(index)));
  for (const auto& [index, w] : rhs.entries())
    worst = std::fmax(worst, std::fabs(w - lhs.weight(index)));
  return worst;
}

}  // namespace swapnet
