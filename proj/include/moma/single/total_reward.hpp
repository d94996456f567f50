#pragma once

#include <optional>

#include "moma/core/markov_automaton.hpp"
#include "moma/single/solution.hpp"

namespace moma {

// Maximal expected total reward from the initial state.
//
// With a target, only strategies that reach the target almost surely are considered and reward
// stops at the target. Throws SolverError if no such strategy exists from the initial state.
// Without a target, zero-reward end components are collapsed and may be stayed in forever.
//
// Rewards inside end components that are not zero must be non-positive; a positive end component
// reachable from the initial state makes the value unbounded and the linear solve fails.
// Solved by policy iteration on the model where zero-reward end components are collapsed, which
// makes every strategy that avoids the target forever collect minus infinity.
[[nodiscard]] ScalarSolution max_total_reward(const MarkovAutomaton& m, const RewardAssignment& r,
                                              std::optional<StateId> target = std::nullopt);

// States that can reach target almost surely using only choices whose successors stay in the
// returned set, computed among the states flagged in region.
[[nodiscard]] std::vector<bool> prob1e(const MarkovAutomaton& m, StateId target, const std::vector<bool>& region);

}  // namespace moma
