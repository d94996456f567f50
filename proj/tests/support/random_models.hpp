#pragma once

#include <cstdint>
#include <random>

#include "moma/core/markov_automaton.hpp"
#include "moma/core/objective.hpp"

namespace moma::test {

struct RandomModelOptions {
    std::size_t min_states = 2;
    std::size_t max_states = 8;
    std::size_t max_actions = 2;
    std::size_t max_successors = 3;
    // Probability that a state is Markovian; 0 gives an MDP.
    double markovian_probability = 0.4;
    std::size_t total_rewards = 1;
    std::size_t lra_rewards = 1;
    double reward_bound = 3.0;
    // Probability that a reward entry is zero.
    double zero_probability = 0.4;
    // Inside MECs, total rewards are replaced by -|r| so that all total objectives are finite.
    bool nonpositive_inside_mecs = true;
    // The last states become Markovian self-loops without total rewards.
    std::size_t zero_sinks = 0;
    // Redraw until every MEC has a Markovian state.
    bool non_zeno = true;
};

// Total rewards are named T0, T1, ...; LRA rewards L0, L1, ...
[[nodiscard]] MarkovAutomaton random_model(std::mt19937_64& rng, const RandomModelOptions& options);

// Objectives for a model from random_model: totals first, then LRA, all maximized.
[[nodiscard]] std::vector<Objective> random_objectives(const RandomModelOptions& options);

[[nodiscard]] std::vector<double> random_weights(std::mt19937_64& rng, std::size_t dimension);

}  // namespace moma::test
