// closed_form.hpp
// Direct outcome distributions for whole topologies. Every one of them is an
// index-merged binomial: k "down" moves out of `steps` total give index
// |steps - 2k| with weight C(steps, k) a^{2(steps-k)} b^{2k}. The linear
// chain, the star hub measurement, and the two-stage star-linear composition
// all land on this same form; the two star-linear routes are kept separate
// so they can be checked against each other.

#pragma once

#include <vector>

#include "swapnet/distribution.hpp"
#include "swapnet/schmidt.hpp"

namespace swapnet {

// Index-merged binomial over `steps` swap steps.
OutcomeDistribution merged_binomial(int steps, int parties, const SchmidtParameter& sp);

// End-to-end distribution of a chain of `links` pairs (links - 1 swaps).
OutcomeDistribution linear_chain(int links, const SchmidtParameter& sp);

// Distribution of xi indices left on the peripherals of an `arms`-pair star
// after the joint hub measurement; parties = arms.
OutcomeDistribution star(int arms, const SchmidtParameter& sp);

// Star stage followed by a chain of `chain_links` swaps, written as the
// two-stage conditional average: sum over (i, j) of
// C(arms,i) C(chain_links,j) a^{2[(arms-i)+(chain_links-j)]} b^{2(i+j)}
// at index |(arms-2i) + (chain_links-2j)|.
OutcomeDistribution star_linear_double_sum(int arms, int chain_links,
                                           const SchmidtParameter& sp);

// The same composition collapsed to a single binomial over
// arms + chain_links steps.
OutcomeDistribution star_linear_collapsed(int arms, int chain_links,
                                          const SchmidtParameter& sp);

// Star whose arm n is extended by its own chain of arm_chains[n] links.
// Each extension link adds one swap step, so the result is the single
// binomial over arms + sum(arm_chains) steps.
OutcomeDistribution star_linear_network(int arms, const std::vector<int>& arm_chains,
                                        const SchmidtParameter& sp);

// Weight of the maximally entangled outcome (index 0); zero whenever the
// step-count parity forbids it.
double success_probability_maximal(const OutcomeDistribution& d);

// Ensemble-average concurrence over the mixture.
double expected_concurrence(const OutcomeDistribution& d, const SchmidtParameter& sp);

}  // namespace swapnet
