#pragma once

#include <vector>

#include "moma/core/markov_automaton.hpp"
#include "moma/core/transform.hpp"
#include "moma/graph/end_component.hpp"

namespace moma {

// Maximal end components, ordered by their smallest state.
[[nodiscard]] std::vector<EndComponent> mec_decomposition(const MarkovAutomaton& m);

// Maximal end components using only choices with allowed[c]; states without an allowed choice
// are dropped.
[[nodiscard]] std::vector<EndComponent> mec_decomposition(const MarkovAutomaton& m, std::vector<bool> allowed);

// Maximal end components in which none of the given assignments collects a nonzero reward.
[[nodiscard]] std::vector<EndComponent> zero_mecs(const MarkovAutomaton& m,
                                                  const std::vector<const RewardAssignment*>& totals);

// Choices of probabilistic states in the component that leave it.
[[nodiscard]] std::vector<std::size_t> exits(const MarkovAutomaton& m, const EndComponent& ec);

// Checks closedness and strong connectivity directly.
[[nodiscard]] bool is_closed(const MarkovAutomaton& m, const EndComponent& component);
[[nodiscard]] bool is_end_component(const MarkovAutomaton& m, const EndComponent& component);

// Model over the states of a closed component keeping only its choices. The initial state is
// the component's first state unless the original initial state belongs to it.
[[nodiscard]] DerivedModel sub_ma(const MarkovAutomaton& m, const EndComponent& component);

// Per-state choice that reaches target with probability one while staying inside the end
// component: a shortest-hop backward search, lowest local index first. States of the component
// other than target get a choice; everything else is left unset.
[[nodiscard]] MDStrategy reach_within(const MarkovAutomaton& m, const EndComponent& ec, StateId target);

// Per-state first choice that stays inside the end component. Other states are left unset.
[[nodiscard]] MDStrategy stay_within(const MarkovAutomaton& m, const EndComponent& ec);

}  // namespace moma
