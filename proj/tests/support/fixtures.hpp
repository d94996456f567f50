#pragma once

#include "moma/core/markov_automaton.hpp"
#include "moma/core/objective.hpp"

namespace moma::test {

// The running example: initial s3, R1 an LRA reward, R2 a total reward.
inline MarkovAutomaton fig1() {
    ModelBuilder b;
    ActionId alpha = b.intern_action("alpha");
    ActionId beta = b.intern_action("beta");
    // s1..s6 are states 0..5.
    b.add_markovian_state(1.0, "s1");
    b.add_transition(1, 0.5);
    b.add_transition(2, 0.5);
    b.add_markovian_state(2.0, "s2");
    b.add_transition(3, 1.0);
    b.add_probabilistic_state("s3");
    b.add_choice(alpha);
    b.add_transition(0, 1.0);
    b.add_choice(beta);
    b.add_transition(4, 0.5);
    b.add_transition(5, 0.5);
    b.add_probabilistic_state("s4");
    b.add_choice(alpha);
    b.add_transition(1, 0.6);
    b.add_transition(5, 0.4);
    b.add_choice(beta);
    b.add_transition(1, 0.3);
    b.add_transition(5, 0.7);
    b.add_markovian_state(1.0, "s5");
    b.add_transition(4, 1.0);
    b.add_markovian_state(2.0, "s6");
    b.add_transition(3, 1.0);
    MarkovAutomaton m = b.build(2);

    RewardAssignment r1 = m.zero_reward("R1");
    RewardAssignment r2 = m.zero_reward("R2");
    r1.state_rewards[1] = 6.0;
    r1.state_rewards[4] = 2.0;
    r1.state_rewards[5] = 1.0;
    std::size_t alphaTransition = m.transition_begin(m.choice_begin(2));
    r1.transition_rewards[alphaTransition] = 1.0;
    r2.transition_rewards[alphaTransition] = -1.0;
    m.add_reward(std::move(r1));
    m.add_reward(std::move(r2));
    return m;
}

inline std::vector<Objective> fig1_objectives() {
    return {{ObjectiveKind::LongRunAverage, "R1", {}, Direction::Maximize},
            {ObjectiveKind::Total, "R2", {}, Direction::Maximize}};
}

}  // namespace moma::test
