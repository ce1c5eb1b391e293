// schmidt.hpp
// The partially entangled state families the whole calculator is built on.
//
// Every link of a network carries the same two-qubit resource
// a|00> + b|11>. Repeated swaps walk the state through the family
//   |eta_m> = (a^m|00> + b^m|11>) / n_m,      n_m = sqrt(a^{2m} + b^{2m}),
// and star hubs produce the multiparty analogue
//   |xi_m>  = (a^m|0...0> + b^m|1...1>) / n_m  on `parties` qubits.
// The index m is the only thing protocols need to track; all entanglement
// measures are functions of (m, a).

#pragma once

namespace swapnet {

// Schmidt coefficient pair of the network resource. b is derived from a, so
// a^2 + b^2 = 1 holds by construction; a = 1 is the separable limit and
// a = 1/sqrt(2) the maximally entangled one.
class SchmidtParameter {
 public:
  explicit SchmidtParameter(double a);
  static SchmidtParameter from_a_squared(double a_squared);

  double a() const { return a_; }
  double b() const { return b_; }
  double a_squared() const { return a_ * a_; }
  double b_squared() const { return b_ * b_; }
  double log_a() const { return log_a_; }
  double log_b() const { return log_b_; }  // -inf when a == 1
  bool separable() const { return b_ == 0.0; }

 private:
  SchmidtParameter(double a, double b);
  double a_;
  double b_;
  double log_a_;
  double log_b_;
};

// Nonnegative Schmidt exponent of a bipartite |eta_m>.
struct EtaIndex {
  int m = 0;
  explicit EtaIndex(int m_in);
};

// Schmidt exponent of a GHZ-like |xi_m> on `parties` qubits. Across the
// one-vs-rest cut it carries the same Schmidt data as |eta_m>, so
// parties == 2 is interchangeable with EtaIndex.
struct XiIndex {
  int m = 0;
  int parties = 2;
  XiIndex(int m_in, int parties_in);
};

// log(a^{2m} + b^{2m}), evaluated as a log-sum-exp so that indices in the
// hundreds never underflow.
double log_norm_squared(int m, const SchmidtParameter& sp);

double normalization(EtaIndex idx, const SchmidtParameter& sp);
double normalization(XiIndex idx, const SchmidtParameter& sp);

// Normalized amplitudes (a^m/n_m, b^m/n_m) on |0...0> and |1...1>.
struct StateAmplitudes {
  double on_zeros = 0.0;
  double on_ones = 0.0;
};
StateAmplitudes amplitudes(EtaIndex idx, const SchmidtParameter& sp);
StateAmplitudes amplitudes(XiIndex idx, const SchmidtParameter& sp);

// Pure-state concurrence 2|alpha * beta|; 1 for the m = 0 Bell/GHZ member,
// strictly decreasing in m whenever a != b.
double concurrence(EtaIndex idx, const SchmidtParameter& sp);
double concurrence(XiIndex idx, const SchmidtParameter& sp);

// Binary entropy of the reduced state, in bits.
double entanglement_entropy(EtaIndex idx, const SchmidtParameter& sp);
double entanglement_entropy(XiIndex idx, const SchmidtParameter& sp);

}  // namespace swapnet
