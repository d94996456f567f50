#pragma once

#include <vector>

#include "moma/core/markov_automaton.hpp"
#include "moma/core/objective.hpp"

namespace moma {

// A normalized objective over a reward assignment aligned with the evaluated model.
struct RewardObjective {
    ObjectiveKind kind = ObjectiveKind::Total;
    const RewardAssignment* reward = nullptr;
};

struct ChainEvaluation {
    // Expected value per objective from the initial state.
    std::vector<ExtendedValue> values;
    // BSCCs reachable from the initial state, ordered by smallest state.
    std::vector<std::vector<StateId>> bsccs;
    // Stationary distribution of the embedded jump chain per BSCC, aligned with bsccs.
    std::vector<std::vector<double>> stationary;
    // Probability to eventually enter each BSCC.
    std::vector<double> reach_probabilities;
    // gains[j][b]: gain of BSCC b for objective j (empty for total objectives).
    std::vector<std::vector<double>> gains;
};

// Exact values of the objectives on the chain induced by sigma, via sparse LU solves.
[[nodiscard]] ChainEvaluation evaluate_strategy(const MarkovAutomaton& m, const MDStrategy& sigma,
                                                const std::vector<RewardObjective>& objectives);

// Long-run average reward per time unit of a strongly connected, nondeterminism-free model.
[[nodiscard]] double bscc_gain(const MarkovAutomaton& chain, const RewardAssignment& r);

// Stationary distribution of the embedded jump chain restricted to the closed class states,
// where state s moves along choice[s].
[[nodiscard]] std::vector<double> stationary_distribution(const MarkovAutomaton& m,
                                                          const std::vector<std::size_t>& choice,
                                                          const std::vector<StateId>& states);

}  // namespace moma
