// statevector.hpp
// Dense amplitude vector and the four gates the swap circuits need.
//
// Convention: qubit 0 is the leftmost ket label and the most significant bit
// of the amplitude index, so |q0 q1 ... q_{n-1}> reads off the binary index
// left to right.

#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "swapnet/schmidt.hpp"

namespace swapnet {

using Amplitude = std::complex<double>;

class StateVector {
 public:
  explicit StateVector(int qubit_count);  // |0...0>
  StateVector(int qubit_count, std::vector<Amplitude> amplitudes);

  int qubit_count() const { return qubit_count_; }
  std::size_t dim() const { return amps_.size(); }
  Amplitude amplitude(std::size_t basis) const { return amps_[basis]; }
  void set_amplitude(std::size_t basis, Amplitude value) { amps_[basis] = value; }
  const std::vector<Amplitude>& amplitudes() const { return amps_; }
  double norm_squared() const;

  void apply_h(int qubit);
  void apply_x(int qubit);
  void apply_z(int qubit);
  void apply_cnot(int control, int target);

  std::complex<double> inner_product(const StateVector& other) const;
  // |<this|other>|^2, assuming both are normalized.
  double fidelity(const StateVector& other) const;

  // Relabels qubits: the qubit currently at position i moves to
  // new_position[i]. new_position must be a permutation of 0..n-1.
  void reorder_qubits(std::span<const int> new_position);

  // left occupies qubits 0..left.n-1 of the product, right the rest.
  static StateVector tensor(const StateVector& left, const StateVector& right);

 private:
  void check_qubit(int qubit) const;
  std::size_t bit_mask(int qubit) const {
    return std::size_t{1} << (qubit_count_ - 1 - qubit);
  }

  int qubit_count_;
  std::vector<Amplitude> amps_;
};

enum class Gate { H, X, Z, CNOT };

// Value-semantics gate application; CNOT takes targets = {control, target}.
StateVector apply_gate(StateVector state, Gate gate, std::span<const int> targets);

// One measurement outcome: bits aligned with the measured-qubit list, the
// outcome probability, and the renormalized state of the surviving qubits
// (original relative order).
struct MeasurementBranch {
  std::vector<std::uint8_t> outcome_bits;
  double probability = 0.0;
  StateVector residual;
};

// Exhaustively expands a computational-basis measurement of `qubits` into
// branches. Branches below probability 1e-14 are dropped so residuals never
// renormalize through 0/0; the returned probabilities sum to 1.
std::vector<MeasurementBranch> enumerate_measurement(const StateVector& state,
                                                     std::span<const int> qubits);

// Family members as explicit two- and n-qubit states. The mirrored variant
// has the roles of a and b exchanged; swap chains produce it whenever the
// index walk reflects off zero, and it carries the same index m.
StateVector make_eta_state(EtaIndex idx, const SchmidtParameter& sp);
StateVector make_xi_state(XiIndex idx, const SchmidtParameter& sp, bool mirrored = false);

// k resource pairs a|00> + b|11> on qubit pairs (0,1), (2,3), ...
StateVector prepare_eta_pairs(int pair_count, const SchmidtParameter& sp);

}  // namespace swapnet
