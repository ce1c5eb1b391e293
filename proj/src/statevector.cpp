#include "swapnet/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "swapnet/errors.hpp"

namespace swapnet {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kBranchProbabilityFloor = 1e-14;
// Dense registers top out here; the oracle cap in protocols.cpp defaults to
// the same ceiling.
constexpr int kMaxRegisterQubits = 16;

}  // namespace

StateVector::StateVector(int qubit_count) : qubit_count_(qubit_count) {
  if (qubit_count < 1 || qubit_count > kMaxRegisterQubits)
    throw std::invalid_argument("register size must be between 1 and 16 qubits");
  amps_.assign(std::size_t{1} << qubit_count, Amplitude{0.0, 0.0});
  amps_[0] = Amplitude{1.0, 0.0};
}

StateVector::StateVector(int qubit_count, std::vector<Amplitude> amplitudes)
    : qubit_count_(qubit_count), amps_(std::move(amplitudes)) {
  if (qubit_count < 1 || qubit_count > kMaxRegisterQubits)
    throw std::invalid_argument("register size must be between 1 and 16 qubits");
  if (amps_.size() != std::size_t{1} << qubit_count)
    throw std::invalid_argument("amplitude vector size must be 2^qubit_count");
}

void StateVector::check_qubit(int qubit) const {
  if (qubit < 0 || qubit >= qubit_count_) throw std::out_of_range("qubit index out of range");
}

double StateVector::norm_squared() const {
  double total = 0.0;
  for (const Amplitude& a : amps_) total += std::norm(a);
  return total;
}

void StateVector::apply_h(int qubit) {
  check_qubit(qubit);
  const std::size_t mask = bit_mask(qubit);
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (i & mask) continue;
    const Amplitude a0 = amps_[i];
    const Amplitude a1 = amps_[i | mask];
    amps_[i] = (a0 + a1) * kInvSqrt2;
    amps_[i | mask] = (a0 - a1) * kInvSqrt2;
  }
}

void StateVector::apply_x(int qubit) {
  check_qubit(qubit);
  const std::size_t mask = bit_mask(qubit);
  for (std::size_t i = 0; i < amps_.size(); ++i)
    if (!(i & mask)) std::swap(amps_[i], amps_[i | mask]);
}

void StateVector::apply_z(int qubit) {
  check_qubit(qubit);
  const std::size_t mask = bit_mask(qubit);
  for (std::size_t i = 0; i < amps_.size(); ++i)
    if (i & mask) amps_[i] = -amps_[i];
}

void StateVector::apply_cnot(int control, int target) {
  check_qubit(control);
  check_qubit(target);
  if (control == target) throw std::invalid_argument("CNOT control and target must differ");
  const std::size_t control_mask = bit_mask(control);
  const std::size_t target_mask = bit_mask(target);
  for (std::size_t i = 0; i < amps_.size(); ++i)
    if ((i & control_mask) && !(i & target_mask)) std::swap(amps_[i], amps_[i | target_mask]);
}

std::complex<double> StateVector::inner_product(const StateVector& other) const {
  if (qubit_count_ != other.qubit_count_)
    throw std::invalid_argument("inner product needs equal register sizes");
  std::complex<double> result{0.0, 0.0};
  for (std::size_t i = 0; i < amps_.size(); ++i) result += std::conj(amps_[i]) * other.amps_[i];
  return result;
}

double StateVector::fidelity(const StateVector& other) const {
  return std::norm(inner_product(other));
}

void StateVector::reorder_qubits(std::span<const int> new_position) {
  if (static_cast<int>(new_position.size()) != qubit_count_)
    throw std::invalid_argument("permutation size must match register size");
  std::vector<bool> seen(qubit_count_, false);
  for (int p : new_position) {
    if (p < 0 || p >= qubit_count_ || seen[p])
      throw std::invalid_argument("qubit relabeling must be a permutation");
    seen[p] = true;
  }
  std::vector<Amplitude> out(amps_.size(), Amplitude{0.0, 0.0});
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    std::size_t j = 0;
    for (int q = 0; q < qubit_count_; ++q)
      if (i & bit_mask(q)) j |= bit_mask(new_position[q]);
    out[j] = amps_[i];
  }
  amps_ = std::move(out);
}

StateVector StateVector::tensor(const StateVector& left, const StateVector& right) {
  StateVector out(left.qubit_count_ + right.qubit_count_);
  const std::size_t right_dim = right.dim();
  for (std::size_t i = 0; i < left.dim(); ++i)
    for (std::size_t j = 0; j < right_dim; ++j)
      out.amps_[i * right_dim + j] = left.amps_[i] * right.amps_[j];
  return out;
}

StateVector apply_gate(StateVector state, Gate gate, std::span<const int> targets) {
  switch (gate) {
    case Gate::H:
    case Gate::X:
    case Gate::Z:
      if (targets.size() != 1) throw std::invalid_argument("single-qubit gate needs one target");
      if (gate == Gate::H) state.apply_h(targets[0]);
      if (gate == Gate::X) state.apply_x(targets[0]);
      if (gate == Gate::Z) state.apply_z(targets[0]);
      return state;
    case Gate::CNOT:
      if (targets.size() != 2) throw std::invalid_argument("CNOT needs (control, target)");
      state.apply_cnot(targets[0], targets[1]);
      return state;
  }
  throw std::invalid_argument("unknown gate");
}

std::vector<MeasurementBranch> enumerate_measurement(const StateVector& state,
                                                     std::span<const int> qubits) {
  const int n = state.qubit_count();
  const int k = static_cast<int>(qubits.size());
  if (k < 1 || k >= n) throw std::invalid_argument("must measure between 1 and n-1 qubits");
  std::vector<bool> measured(n, false);
  for (int q : qubits) {
    if (q < 0 || q >= n) throw std::out_of_range("measured qubit out of range");
    if (measured[q]) throw std::invalid_argument("measured qubits must be distinct");
    measured[q] = true;
  }

  const int residual_qubits = n - k;
  const std::size_t branch_count = std::size_t{1} << k;
  const std::size_t residual_dim = std::size_t{1} << residual_qubits;
  std::vector<double> probabilities(branch_count, 0.0);
  std::vector<std::vector<Amplitude>> residual_amps(
      branch_count, std::vector<Amplitude>(residual_dim, Amplitude{0.0, 0.0}));

  for (std::size_t i = 0; i < state.dim(); ++i) {
    const Amplitude amp = state.amplitude(i);
    if (amp == Amplitude{0.0, 0.0}) continue;
    std::size_t outcome_key = 0;
    for (int j = 0; j < k; ++j) {
      const int bit = static_cast<int>((i >> (n - 1 - qubits[j])) & 1u);
      outcome_key |= static_cast<std::size_t>(bit) << (k - 1 - j);
    }
    std::size_t residual_key = 0;
    int out_pos = 0;  // residual slot of the next surviving qubit
    for (int q = 0; q < n; ++q) {
      if (measured[q]) continue;
      const std::size_t bit = (i >> (n - 1 - q)) & 1u;
      residual_key |= bit << (residual_qubits - 1 - out_pos);
      ++out_pos;
    }
    residual_amps[outcome_key][residual_key] = amp;
    probabilities[outcome_key] += std::norm(amp);
  }

  std::vector<MeasurementBranch> branches;
  for (std::size_t key = 0; key < branch_count; ++key) {
    if (probabilities[key] < kBranchProbabilityFloor) continue;
    const double scale = 1.0 / std::sqrt(probabilities[key]);
    for (Amplitude& a : residual_amps[key]) a *= scale;
    MeasurementBranch branch{
        {}, probabilities[key], StateVector(residual_qubits, std::move(residual_amps[key]))};
    branch.outcome_bits.resize(k);
    for (int j = 0; j < k; ++j)
      branch.outcome_bits[j] = static_cast<std::uint8_t>((key >> (k - 1 - j)) & 1u);
    branches.push_back(std::move(branch));
  }
  return branches;
}

StateVector make_eta_state(EtaIndex idx, const SchmidtParameter& sp) {
  const StateAmplitudes amp = amplitudes(idx, sp);
  std::vector<Amplitude> amps(4, Amplitude{0.0, 0.0});
  amps[0] = amp.on_zeros;
  amps[3] = amp.on_ones;
  return StateVector(2, std::move(amps));
}

StateVector make_xi_state(XiIndex idx, const SchmidtParameter& sp, bool mirrored) {
  const StateAmplitudes amp = amplitudes(EtaIndex(idx.m), sp);
  std::vector<Amplitude> amps(std::size_t{1} << idx.parties, Amplitude{0.0, 0.0});
  amps.front() = mirrored ? amp.on_ones : amp.on_zeros;
  amps.back() = mirrored ? amp.on_zeros : amp.on_ones;
  return StateVector(idx.parties, std::move(amps));
}

StateVector prepare_eta_pairs(int pair_count, const SchmidtParameter& sp) {
  if (pair_count < 1) throw std::invalid_argument("need at least one pair");
  if (2 * pair_count > kMaxRegisterQubits) throw OracleLimitError(2 * pair_count, kMaxRegisterQubits);
  StateVector state = make_eta_state(EtaIndex(1), sp);
  for (int pair = 1; pair < pair_count; ++pair)
    state = StateVector::tensor(state, make_eta_state(EtaIndex(1), sp));
  return state;
}

}  // namespace swapnet
