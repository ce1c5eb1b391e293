// swap.hpp
// The entanglement-swap map on Schmidt indices. A swap between family members
// with indices m and p consumes both and leaves a single state of index m+p
// or |m-p|; the two branch weights depend only on the Schmidt parameter.
// Folding the map over a chain gives the recurrence route to the same
// distributions closed_form.hpp computes directly.

#pragma once

#include "swapnet/distribution.hpp"
#include "swapnet/schmidt.hpp"

namespace swapnet {

// Outcome mixture of one swap:
//   m+p    with weight n_{m+p}^2 / (n_m^2 n_p^2)
//   |m-p|  with weight (a^{2m} b^{2p} + a^{2p} b^{2m}) / (n_m^2 n_p^2)
// The weights are symmetric in (m, p), so argument order is free. A zero
// index on either side relays the other index deterministically (swapping
// through a Bell pair is a perfect relay).
OutcomeDistribution swap_pair(EtaIndex m, EtaIndex p, const SchmidtParameter& sp);

// Swaps a fresh index-p pair onto every component of d and merges equal
// output indices. Works unchanged for multiparty distributions: only one
// qubit of a xi state takes part in a swap.
OutcomeDistribution extend_distribution(const OutcomeDistribution& d, EtaIndex p,
                                        const SchmidtParameter& sp);

// Folds extend_distribution over a chain of `links` unit-index pairs:
// links - 1 swaps starting from the single-pair distribution {1: 1}.
OutcomeDistribution chain_sequential(int links, const SchmidtParameter& sp);

}  // namespace swapnet
