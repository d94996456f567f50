#pragma once

#include "moma/core/markov_automaton.hpp"
#include "moma/single/solution.hpp"

namespace moma {

struct LraOptions {
    // Fraction of each uniformized Markovian step spent moving; the rest is a self-loop that
    // makes every policy aperiodic without changing gains.
    double damping = 0.95;
    std::size_t max_iterations = 2'000'000;
};

// Maximal long-run average reward per time unit of an end component given as its sub-model.
// Relative value iteration on the uniformized Markovian states, where each step first resolves
// the instantaneous probabilistic states optimally. Stops when the gain bounds are within
// eps * max(1, |gain|) of their midpoint; every BSCC of the returned strategy attains at least
// value - error_bound.
[[nodiscard]] ScalarSolution mec_lra(const MarkovAutomaton& sub, const RewardAssignment& r, double eps,
                                     const LraOptions& options = {});

}  // namespace moma
