#include "moma/core/transform.hpp"

#include "moma/core/validation.hpp"

namespace moma {

DerivedModel embed_mdp(const MarkovAutomaton& mdp) {
    std::size_t n = mdp.num_states();
    for (StateId s = 0; s < n; ++s) {
        if (mdp.is_markovian(s)) {
            throw ModelError("embedding expects an MDP but state '" + mdp.state_name(s) + "' is already Markovian");
        }
    }
    std::vector<StateId> intermediate(mdp.num_choices(), kNoState);
    auto next = static_cast<StateId>(n);
    for (StateId s = 0; s < n; ++s) {
        if (mdp.num_choices(s) > 1) {
            for (std::size_t c : mdp.choices(s)) {
                intermediate[c] = next++;
            }
        }
    }

    ModelBuilder builder;
    builder.set_action_names(mdp.action_names());
    for (StateId s = 0; s < n; ++s) {
        if (mdp.num_choices(s) == 1) {
            std::size_t c = mdp.choice_begin(s);
            builder.add_markovian_state(1.0, mdp.state_name(s), s, c);
            for (std::size_t t = mdp.transition_begin(c); t < mdp.transition_end(c); ++t) {
                const Transition& tr = mdp.all_transitions()[t];
                builder.add_transition(tr.target, tr.probability, t);
            }
        } else {
            builder.add_probabilistic_state(mdp.state_name(s), s);
            for (std::size_t c : mdp.choices(s)) {
                builder.add_choice(mdp.choice_action(c), c);
                builder.add_transition(intermediate[c], 1.0);
            }
        }
    }
    for (StateId s = 0; s < n; ++s) {
        if (mdp.num_choices(s) <= 1) {
            continue;
        }
        for (std::size_t c : mdp.choices(s)) {
            builder.add_markovian_state(1.0, mdp.state_name(s) + "/" + mdp.action_name(mdp.choice_action(c)));
            for (std::size_t t = mdp.transition_begin(c); t < mdp.transition_end(c); ++t) {
                const Transition& tr = mdp.all_transitions()[t];
                builder.add_transition(tr.target, tr.probability, t);
            }
        }
    }
    DerivedModel result{builder.build(mdp.initial_state()), builder.mapping()};
    result.mapping.carry_rewards(mdp, result.model);
    return result;
}

DerivedModel induced_chain(const MarkovAutomaton& m, const MDStrategy& sigma) {
    std::vector<bool> reachable(m.num_states(), false);
    {
        std::vector<StateId> stack{m.initial_state()};
        reachable[m.initial_state()] = true;
        while (!stack.empty()) {
            StateId s = stack.back();
            stack.pop_back();
            std::size_t c = m.choice_begin(s);
            if (!m.is_markovian(s)) {
                if (!sigma.is_set(s)) {
                    throw ModelError("strategy has no choice for reachable state '" + m.state_name(s) + "'");
                }
                c = sigma.choice(m, s);
            }
            for (const auto& t : m.transitions(c)) {
                if (!reachable[t.target]) {
                    reachable[t.target] = true;
                    stack.push_back(t.target);
                }
            }
        }
    }
    ModelBuilder builder;
    builder.set_action_names(m.action_names());
    for (StateId s = 0; s < m.num_states(); ++s) {
        std::size_t c = m.choice_begin(s);
        if (m.is_markovian(s)) {
            builder.add_markovian_state(m.exit_rate(s), m.state_name(s), s, c);
        } else {
            builder.add_probabilistic_state(m.state_name(s), s);
            if (s < sigma.size() && sigma.is_set(s)) {
                c = sigma.choice(m, s);
            }
            builder.add_choice(m.choice_action(c), c);
        }
        for (std::size_t t = m.transition_begin(c); t < m.transition_end(c); ++t) {
            builder.add_transition(m.all_transitions()[t].target, m.all_transitions()[t].probability, t);
        }
    }
    DerivedModel result{builder.build(m.initial_state()), builder.mapping()};
    result.mapping.carry_rewards(m, result.model);
    return result;
}

bool is_deterministic(const MarkovAutomaton& m) {
    for (StateId s = 0; s < m.num_states(); ++s) {
        if (m.num_choices(s) != 1) {
            return false;
        }
    }
    return true;
}

}  // namespace moma
