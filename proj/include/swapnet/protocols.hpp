// protocols.hpp
// Circuit-level brute force for whole protocols. Each runner builds the
// actual gate sequence (CNOT + H + two-qubit measurement + classically
// controlled Z/X), expands every measurement outcome exactly, classifies the
// surviving state of each branch by Schmidt index, and aggregates the branch
// probabilities into the same OutcomeDistribution the analytic engines
// produce. No sampling anywhere: agreement checks carry no statistical error.

#pragma once

#include <span>
#include <vector>

#include "swapnet/distribution.hpp"
#include "swapnet/schmidt.hpp"
#include "swapnet/statevector.hpp"

namespace swapnet {

struct OracleOptions {
  // 0 means "use SWAPNET_ORACLE_MAX_QUBITS, default 16". The dense register
  // tops out at 16 qubits; the env var can only lower the budget.
  int max_qubits = 0;
  // Disable only to demonstrate that the classically controlled corrections
  // matter: without them some branch must fail classification.
  bool apply_corrections = true;
  // Keep every qubit allocated through a linear run instead of dropping
  // measured ones after each swap block. Slower, and kept as a cross-check
  // that the register bookkeeping of the reduced mode is sound.
  bool full_register = false;
};

// Effective qubit budget for the given options.
int oracle_qubit_cap(const OracleOptions& options = {});

// Best-match family index of a residual state. Tries each candidate in order
// against |xi_m> and its a<->b mirror (reflections of the index walk at zero
// leave later branches mirrored); ties keep the earlier candidate. Throws
// ClassificationError when the best fidelity falls below 1 - 1e-9.
XiIndex classify_schmidt_index(const StateVector& residual, std::span<const int> candidates,
                               const SchmidtParameter& sp);

// Single swap between explicit |eta_m> and |eta_p> inputs.
OutcomeDistribution oracle_swap_pair(EtaIndex m, EtaIndex p, const SchmidtParameter& sp,
                                     const OracleOptions& options = {});

// Chain of `links` pairs, swapped end to end one block at a time.
OutcomeDistribution run_linear_protocol(int links, const SchmidtParameter& sp,
                                        const OracleOptions& options = {});

// Star of `arms` pairs: CNOTs from the first hub qubit onto every other hub,
// H on the control, joint hub measurement, corrections on the peripherals.
OutcomeDistribution run_star_protocol(int arms, const SchmidtParameter& sp,
                                      const OracleOptions& options = {});

// Star stage followed by arm_chains[n] swap extensions on peripheral n.
OutcomeDistribution run_star_linear_protocol(int arms, const std::vector<int>& arm_chains,
                                             const SchmidtParameter& sp,
                                             const OracleOptions& options = {});

}  // namespace swapnet
