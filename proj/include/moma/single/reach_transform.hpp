#pragma once

#include <string>
#include <vector>

#include "moma/core/markov_automaton.hpp"

namespace moma {

struct ReachProduct {
    MarkovAutomaton model;
    // Origins in the input model; the optional entry state has no origin.
    ModelMapping mapping;
    // Per product state: whether the goal has been visited.
    std::vector<bool> visited;
    // Reward whose expected total equals the reach probability or the goal-bounded total.
    RewardAssignment reward;
};

// Product of m with one visited bit for goal, restricted to states reachable from the initial
// state. Without goalBoundedBase, the reward pays 1 on every transition that sets the bit; if
// the initial state is a goal, a fresh probabilistic entry state pays that 1. With
// goalBoundedBase, the reward pays the base reward only while the bit is unset.
// Embedded rewards of m are carried over.
[[nodiscard]] ReachProduct reach_to_total(const MarkovAutomaton& m, const std::vector<StateId>& goal,
                                          const RewardAssignment* goalBoundedBase = nullptr,
                                          std::string rewardName = {});

}  // namespace moma
