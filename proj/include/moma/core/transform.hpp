#pragma once

#include "moma/core/markov_automaton.hpp"

namespace moma {

struct DerivedModel {
    MarkovAutomaton model;
    ModelMapping mapping;
};

// Turns an MDP into an MA where every step takes expected time 1. States with a single action
// become Markovian states with rate 1; other actions route through a fresh rate-1 Markovian state
// carrying the original distribution and its transition rewards.
[[nodiscard]] DerivedModel embed_mdp(const MarkovAutomaton& mdp);

// Nondeterminism-free model keeping only the choices picked by sigma. Unreachable states the
// strategy leaves open keep their first choice.
[[nodiscard]] DerivedModel induced_chain(const MarkovAutomaton& m, const MDStrategy& sigma);

// True if every probabilistic state has exactly one choice.
[[nodiscard]] bool is_deterministic(const MarkovAutomaton& m);

}  // namespace moma
