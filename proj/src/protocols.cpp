#include "swapnet/protocols.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "swapnet/errors.hpp"

namespace swapnet {

namespace {

constexpr int kHardQubitCeiling = 16;
constexpr double kClassificationThreshold = 1.0 - 1e-9;
// Distinct candidates at desk scale separate by >= 1e-4 in fidelity, so
// anything closer than this is the same physical state (a = b makes the
// whole family one GHZ state) and the earlier candidate must win the tie
// rather than a stray ulp.
constexpr double kFidelityTieMargin = 1e-12;

void require_within_cap(int qubits_needed, const OracleOptions& options) {
  const int cap = oracle_qubit_cap(options);
  if (qubits_needed > cap) throw OracleLimitError(qubits_needed, cap);
}

// One measurement outcome under expansion, carrying the running branch
// probability, the state of the live qubits, and the index the outcome
// record implies (swap target bit 0 -> m+p, 1 -> |m-p|).
struct Branch {
  double probability = 1.0;
  StateVector state;
  int walk_index = 0;
};

// Candidate list for a `total_steps` protocol: the outcome-implied index
// first (it settles exact-tie classification at a = b, where every family
// member is the same GHZ state), then the other parity-consistent indices.
std::vector<int> candidate_indices(int total_steps, int walk_index) {
  std::vector<int> candidates{walk_index};
  for (int idx = total_steps % 2; idx <= total_steps; idx += 2)
    if (idx != walk_index) candidates.push_back(idx);
  return candidates;
}

OutcomeDistribution aggregate_branches(const std::vector<Branch>& branches, int total_steps,
                                       int parties, const SchmidtParameter& sp) {
  OutcomeDistribution out(parties);
  for (const Branch& branch : branches) {
    const std::vector<int> candidates = candidate_indices(total_steps, branch.walk_index);
    const XiIndex found = classify_schmidt_index(branch.state, candidates, sp);
    out.add(found.m, branch.probability);
  }
  return out;
}

// One swap block at live position `slot`: adjoin a fresh pair, run
// CNOT(slot -> near) + H(slot), measure both, correct, and splice the far
// qubit of the fresh pair back into `slot`.
void extend_branch(const Branch& branch, int slot, const SchmidtParameter& sp,
                   const OracleOptions& options, std::vector<Branch>& out) {
  const int live = branch.state.qubit_count();
  StateVector joint = StateVector::tensor(branch.state, make_eta_state(EtaIndex(1), sp));
  joint.apply_cnot(slot, live);
  joint.apply_h(slot);
  const std::array<int, 2> measured{slot, live};
  for (MeasurementBranch& mb : enumerate_measurement(joint, measured)) {
    // Residual order: old qubits without `slot`, then the far fresh qubit.
    StateVector residual = std::move(mb.residual);
    if (options.apply_corrections) {
      if (mb.outcome_bits[0]) residual.apply_z(0);
      if (mb.outcome_bits[1]) residual.apply_x(live - 1);
    }
    const int walk = mb.outcome_bits[1] ? std::abs(branch.walk_index - 1)
                                        : branch.walk_index + 1;
    if (slot != live - 1) {
      std::vector<int> new_position(live);
      for (int q = 0; q < slot; ++q) new_position[q] = q;
      for (int q = slot; q < live - 1; ++q) new_position[q] = q + 1;
      new_position[live - 1] = slot;
      residual.reorder_qubits(new_position);
    }
    out.push_back(Branch{branch.probability * mb.probability, std::move(residual), walk});
  }
}

std::vector<Branch> run_swap_blocks(std::vector<Branch> branches, int slot, int blocks,
                                    const SchmidtParameter& sp, const OracleOptions& options) {
  for (int block = 0; block < blocks; ++block) {
    std::vector<Branch> next;
    next.reserve(branches.size() * 4);
    for (const Branch& branch : branches) extend_branch(branch, slot, sp, options, next);
    branches = std::move(next);
  }
  return branches;
}

// Joint hub measurement of a star, expanded into 2^arms branches with the
// peripherals (re-indexed 0..arms-1) as residual.
std::vector<Branch> star_stage(int arms, const SchmidtParameter& sp,
                               const OracleOptions& options) {
  StateVector joint = prepare_eta_pairs(arms, sp);
  for (int arm = 1; arm < arms; ++arm) joint.apply_cnot(1, 2 * arm + 1);
  joint.apply_h(1);
  std::vector<int> hubs(arms);
  for (int arm = 0; arm < arms; ++arm) hubs[arm] = 2 * arm + 1;

  std::vector<Branch> branches;
  for (MeasurementBranch& mb : enumerate_measurement(joint, hubs)) {
    StateVector residual = std::move(mb.residual);
    int target_flips = 0;
    for (int arm = 1; arm < arms; ++arm) target_flips += mb.outcome_bits[arm];
    if (options.apply_corrections) {
      if (mb.outcome_bits[0]) residual.apply_z(0);
      for (int arm = 1; arm < arms; ++arm)
        if (mb.outcome_bits[arm]) residual.apply_x(arm);
    }
    branches.push_back(
        Branch{mb.probability, std::move(residual), std::abs(arms - 2 * target_flips)});
  }
  return branches;
}

// Project onto one outcome of the listed qubits without dropping them.
double project_outcome(StateVector& state, std::span<const int> qubits,
                       std::span<const std::uint8_t> bits) {
  const int n = state.qubit_count();
  double probability = 0.0;
  for (std::size_t i = 0; i < state.dim(); ++i) {
    bool match = true;
    for (std::size_t j = 0; j < qubits.size(); ++j) {
      const std::size_t bit = (i >> (n - 1 - qubits[j])) & 1u;
      if (bit != bits[j]) {
        match = false;
        break;
      }
    }
    if (match)
      probability += std::norm(state.amplitude(i));
    else
      state.set_amplitude(i, Amplitude{0.0, 0.0});
  }
  if (probability > 0.0) {
    const double scale = 1.0 / std::sqrt(probability);
    for (std::size_t i = 0; i < state.dim(); ++i)
      state.set_amplitude(i, state.amplitude(i) * scale);
  }
  return probability;
}

// Linear run that keeps all 2*links qubits allocated; audit mode for the
// reduced runner above.
OutcomeDistribution run_linear_full_register(int links, const SchmidtParameter& sp,
                                             const OracleOptions& options) {
  std::vector<Branch> branches{Branch{1.0, prepare_eta_pairs(links, sp), 1}};
  for (int block = 1; block < links; ++block) {
    const int control = 2 * block - 1;
    const int target = 2 * block;
    std::vector<Branch> next;
    next.reserve(branches.size() * 4);
    for (Branch& branch : branches) {
      branch.state.apply_cnot(control, target);
      branch.state.apply_h(control);
      const std::array<int, 2> measured{control, target};
      for (int control_bit = 0; control_bit < 2; ++control_bit) {
        for (int target_bit = 0; target_bit < 2; ++target_bit) {
          StateVector collapsed = branch.state;
          const std::array<std::uint8_t, 2> bits{static_cast<std::uint8_t>(control_bit),
                                                 static_cast<std::uint8_t>(target_bit)};
          const double p = project_outcome(collapsed, measured, bits);
          if (p < 1e-14) continue;
          if (options.apply_corrections) {
            if (control_bit) collapsed.apply_z(0);
            if (target_bit) collapsed.apply_x(2 * block + 1);
          }
          const int walk = target_bit ? std::abs(branch.walk_index - 1)
                                      : branch.walk_index + 1;
          next.push_back(Branch{branch.probability * p, std::move(collapsed), walk});
        }
      }
    }
    branches = std::move(next);
  }

  if (links == 1) return aggregate_branches(branches, links, 2, sp);

  // All middle qubits are collapsed; reducing over them leaves exactly one
  // sub-branch holding the end-to-end pair.
  std::vector<int> middle;
  for (int q = 1; q < 2 * links - 1; ++q) middle.push_back(q);
  std::vector<Branch> finals;
  for (Branch& branch : branches) {
    auto sub = enumerate_measurement(branch.state, middle);
    if (sub.size() != 1)
      throw std::logic_error("collapsed register should reduce to a single branch");
    finals.push_back(Branch{branch.probability, std::move(sub.front().residual),
                            branch.walk_index});
  }
  return aggregate_branches(finals, links, 2, sp);
}

}  // namespace

int oracle_qubit_cap(const OracleOptions& options) {
  int cap = kHardQubitCeiling;
  if (options.max_qubits > 0) {
    cap = options.max_qubits;
  } else if (const char* env = std::getenv("SWAPNET_ORACLE_MAX_QUBITS")) {
    char* end = nullptr;
    const long parsed = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && parsed > 0) cap = static_cast<int>(parsed);
  }
  return std::min(cap, kHardQubitCeiling);
}

XiIndex classify_schmidt_index(const StateVector& residual, std::span<const int> candidates,
                               const SchmidtParameter& sp) {
  if (candidates.empty()) throw std::invalid_argument("candidate list must be nonempty");
  const int parties = residual.qubit_count();
  int best_index = candidates.front();
  double best_fidelity = -1.0;
  for (int candidate : candidates) {
    const XiIndex idx(candidate, parties);
    double fid = residual.fidelity(make_xi_state(idx, sp));
    fid = std::max(fid, residual.fidelity(make_xi_state(idx, sp, /*mirrored=*/true)));
    if (fid > best_fidelity + kFidelityTieMargin) {
      best_fidelity = fid;
      best_index = candidate;
    }
  }
  if (best_fidelity < kClassificationThreshold) {
    std::ostringstream msg;
    msg << "branch state matches no candidate index (best m = " << best_index
        << ", fidelity = " << best_fidelity << "); the simulated circuit is wired wrong";
    throw ClassificationError(msg.str());
  }
  return XiIndex(best_index, parties);
}

OutcomeDistribution oracle_swap_pair(EtaIndex m, EtaIndex p, const SchmidtParameter& sp,
                                     const OracleOptions& options) {
  require_within_cap(4, options);
  StateVector joint = StateVector::tensor(make_eta_state(m, sp), make_eta_state(p, sp));
  joint.apply_cnot(1, 2);
  joint.apply_h(1);
  OutcomeDistribution out(2);
  const std::array<int, 2> measured{1, 2};
  for (MeasurementBranch& mb : enumerate_measurement(joint, measured)) {
    StateVector residual = std::move(mb.residual);
    if (options.apply_corrections) {
      if (mb.outcome_bits[0]) residual.apply_z(0);
      if (mb.outcome_bits[1]) residual.apply_x(1);
    }
    const int walk = mb.outcome_bits[1] ? std::abs(m.m - p.m) : m.m + p.m;
    std::vector<int> candidates{walk};
    const int other = mb.outcome_bits[1] ? m.m + p.m : std::abs(m.m - p.m);
    if (other != walk) candidates.push_back(other);
    out.add(classify_schmidt_index(residual, candidates, sp).m, mb.probability);
  }
  return out;
}

OutcomeDistribution run_linear_protocol(int links, const SchmidtParameter& sp,
                                        const OracleOptions& options) {
  if (links < 1) throw std::invalid_argument("chain needs at least 1 link");
  require_within_cap(2 * links, options);
  if (options.full_register) return run_linear_full_register(links, sp, options);
  std::vector<Branch> branches{Branch{1.0, make_eta_state(EtaIndex(1), sp), 1}};
  branches = run_swap_blocks(std::move(branches), /*slot=*/1, links - 1, sp, options);
  return aggregate_branches(branches, links, 2, sp);
}

OutcomeDistribution run_star_protocol(int arms, const SchmidtParameter& sp,
                                      const OracleOptions& options) {
  if (arms < 2) throw std::invalid_argument("star needs at least 2 arms");
  require_within_cap(2 * arms, options);
  return aggregate_branches(star_stage(arms, sp, options), arms, arms, sp);
}

OutcomeDistribution run_star_linear_protocol(int arms, const std::vector<int>& arm_chains,
                                             const SchmidtParameter& sp,
                                             const OracleOptions& options) {
  if (arms < 2) throw std::invalid_argument("star needs at least 2 arms");
  if (static_cast<int>(arm_chains.size()) != arms)
    throw std::invalid_argument("arm_chains must list one chain length per arm");
  for (int links : arm_chains)
    if (links < 0) throw std::invalid_argument("arm chain length must be nonnegative");
  const int extension = std::accumulate(arm_chains.begin(), arm_chains.end(), 0);
  require_within_cap(2 * (arms + extension), options);

  std::vector<Branch> branches = star_stage(arms, sp, options);
  for (int arm = 0; arm < arms; ++arm)
    branches = run_swap_blocks(std::move(branches), arm, arm_chains[arm], sp, options);
  return aggregate_branches(branches, arms + extension, arms, sp);
}

}  // namespace swapnet
