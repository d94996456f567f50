#pragma once

#include <vector>

#include "moma/core/markov_automaton.hpp"
#include "moma/graph/end_component.hpp"

namespace moma {

enum class QuotientChoiceKind { Original, Exit, Bottom };

// What a quotient choice stands for in the original model.
struct QuotientChoice {
    QuotientChoiceKind kind = QuotientChoiceKind::Original;
    // Original choice for Original and Exit choices.
    std::size_t origin = kNoIndex;
    // Collapsed component for Exit and Bottom choices.
    std::size_t ec = kNoIndex;
};

// Model in which every given end component is collapsed into one probabilistic state. State
// order: retained original states, then one state per component, then the bottom state if any.
struct QuotientModel {
    MarkovAutomaton model;
    ModelMapping mapping;
    std::vector<EndComponent> ecs;
    StateId bottom_state = kNoState;
    std::vector<StateId> ec_state;
    // Per original state: its quotient state.
    std::vector<StateId> state_map;
    // Per original state: index of its collapsed component, kNoIndex if retained.
    std::vector<std::size_t> state_ec;
    std::vector<QuotientChoice> choice_info;

    [[nodiscard]] StateId origin(StateId q) const { return mapping.state_origin[q]; }
};

inline constexpr const char* kBottomActionName = "bottom";

// Collapses the given pairwise disjoint end components. With with_bottom, every collapsed state
// additionally enables an action to the fresh absorbing Markovian state s_bot (rate 1).
// Rewards embedded in m are carried over; fresh transitions get zero.
[[nodiscard]] QuotientModel quotient(const MarkovAutomaton& m, std::vector<EndComponent> ecs, bool with_bottom = true);

// Strategy on the original model induced by a strategy on the quotient. Inside a component whose
// quotient choice is an exit (s', a), s' plays a and all other states move toward s'. Inside a
// component whose choice is bottom, the states follow stay[ec]. Retained states copy the quotient
// choice.
[[nodiscard]] MDStrategy lift_strategy(const MarkovAutomaton& m, const QuotientModel& q, const MDStrategy& quotientSigma,
                                       const std::vector<MDStrategy>& stay);

}  // namespace moma
