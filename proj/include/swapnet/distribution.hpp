// distribution.hpp
// Probability mass over Schmidt indices: the unconditional mixture a protocol
// leaves behind once measurement outcomes are discarded. Every engine in the
// project, analytic or circuit-level, reports one of these.

#pragma once

#include <map>

namespace swapnet {

class OutcomeDistribution {
 public:
  explicit OutcomeDistribution(int parties = 2);
  static OutcomeDistribution delta(int index, int parties = 2);

  // Accumulates weight onto an index; equal indices merge by summation.
  // Zero weights are dropped so the support stays tight.
  void add(int index, double weight);

  // Weight at an index, 0 when absent.
  double weight(int index) const;

  const std::map<int, double>& entries() const { return entries_; }
  int parties() const { return parties_; }
  bool empty() const { return entries_.empty(); }
  double total_weight() const;
  int min_index() const;
  int max_index() const;

  // True when all indices are congruent mod 2 (every k-step protocol
  // preserves index parity, so mixed parity signals a bug upstream).
  bool uniform_parity() const;

  bool operator==(const OutcomeDistribution&) const = default;

 private:
  int parties_;
  std::map<int, double> entries_;
};

// Largest |w1(m) - w2(m)| over the union of both supports.
double max_abs_discrepancy(const OutcomeDistribution& lhs, const OutcomeDistribution& rhs);

}  // namespace swapnet
