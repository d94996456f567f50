#include "moma/graph/quotient.hpp"

#include "moma/graph/end_components.hpp"

namespace moma {

QuotientModel quotient(const MarkovAutomaton& m, std::vector<EndComponent> ecs, bool with_bottom) {
    std::size_t n = m.num_states();
    QuotientModel q;
    q.state_ec.assign(n, kNoIndex);
    for (std::size_t i = 0; i < ecs.size(); ++i) {
        for (StateId s : ecs[i].states) {
            if (q.state_ec[s] != kNoIndex) {
                throw ModelError("quotient requested for overlapping end components");
            }
            q.state_ec[s] = i;
        }
    }
    q.state_map.assign(n, kNoState);
    StateId next = 0;
    for (StateId s = 0; s < n; ++s) {
        if (q.state_ec[s] == kNoIndex) {
            q.state_map[s] = next++;
        }
    }
    for (std::size_t i = 0; i < ecs.size(); ++i) {
        q.ec_state.push_back(next++);
    }
    for (StateId s = 0; s < n; ++s) {
        if (q.state_ec[s] != kNoIndex) {
            q.state_map[s] = q.ec_state[q.state_ec[s]];
        }
    }
    if (with_bottom) {
        q.bottom_state = next++;
    }

    ModelBuilder builder;
    builder.set_action_names(m.action_names());
    auto copyTransitions = [&](std::size_t c) {
        for (std::size_t t = m.transition_begin(c); t < m.transition_end(c); ++t) {
            const Transition& tr = m.all_transitions()[t];
            builder.add_transition(q.state_map[tr.target], tr.probability, t);
        }
    };
    for (StateId s = 0; s < n; ++s) {
        if (q.state_ec[s] != kNoIndex) {
            continue;
        }
        if (m.is_markovian(s)) {
            builder.add_markovian_state(m.exit_rate(s), m.state_name(s), s, m.choice_begin(s));
            q.choice_info.push_back({QuotientChoiceKind::Original, m.choice_begin(s), kNoIndex});
            copyTransitions(m.choice_begin(s));
        } else {
            builder.add_probabilistic_state(m.state_name(s), s);
            for (std::size_t c : m.choices(s)) {
                builder.add_choice(m.choice_action(c), c);
                q.choice_info.push_back({QuotientChoiceKind::Original, c, kNoIndex});
                copyTransitions(c);
            }
        }
    }
    ActionId bottomAction = with_bottom ? builder.intern_action(kBottomActionName) : kMarkovianAction;
    for (std::size_t i = 0; i < ecs.size(); ++i) {
        std::string name = "[";
        for (std::size_t k = 0; k < ecs[i].states.size(); ++k) {
            name += (k ? "," : "") + m.state_name(ecs[i].states[k]);
        }
        builder.add_probabilistic_state(name + "]");
        for (std::size_t c : exits(m, ecs[i])) {
            StateId s = m.choice_state(c);
            builder.add_choice(builder.intern_action(m.state_name(s) + "." + m.action_name(m.choice_action(c))), c);
            q.choice_info.push_back({QuotientChoiceKind::Exit, c, i});
            copyTransitions(c);
        }
        if (with_bottom) {
            builder.add_choice(bottomAction);
            q.choice_info.push_back({QuotientChoiceKind::Bottom, kNoIndex, i});
            builder.add_transition(q.bottom_state, 1.0);
        } else if (builder.num_choices() == 0 || q.choice_info.back().ec != i) {
            throw ModelError("collapsed end component without exits requires the bottom action");
        }
    }
    if (with_bottom) {
        builder.add_markovian_state(1.0, "bottom");
        q.choice_info.push_back({QuotientChoiceKind::Original, kNoIndex, kNoIndex});
        builder.add_transition(q.bottom_state, 1.0);
    }
    q.model = builder.build(q.state_map[m.initial_state()]);
    q.mapping = builder.mapping();
    q.mapping.carry_rewards(m, q.model);
    q.ecs = std::move(ecs);
    return q;
}

MDStrategy lift_strategy(const MarkovAutomaton& m, const QuotientModel& q, const MDStrategy& quotientSigma,
                         const std::vector<MDStrategy>& stay) {
    MDStrategy result(m.num_states());
    for (StateId s = 0; s < m.num_states(); ++s) {
        if (m.is_markovian(s)) {
            result.set(s, 0);
            continue;
        }
        if (q.state_ec[s] != kNoIndex) {
            continue;
        }
        StateId qs = q.state_map[s];
        if (!quotientSigma.is_set(qs)) {
            continue;
        }
        const QuotientChoice& info = q.choice_info[quotientSigma.choice(q.model, qs)];
        result.set(s, static_cast<std::uint32_t>(info.origin - m.choice_begin(s)));
    }
    for (std::size_t i = 0; i < q.ecs.size(); ++i) {
        const EndComponent& ec = q.ecs[i];
        StateId qs = q.ec_state[i];
        std::size_t qc = q.model.choice_begin(qs) + (quotientSigma.is_set(qs) ? quotientSigma.local_choice(qs) : 0);
        const QuotientChoice& info = q.choice_info[qc];
        if (info.kind == QuotientChoiceKind::Bottom) {
            for (StateId s : ec.states) {
                if (!m.is_markovian(s)) {
                    result.set(s, stay.at(i).local_choice(s));
                }
            }
            continue;
        }
        StateId exitState = m.choice_state(info.origin);
        MDStrategy toward = reach_within(m, ec, exitState);
        for (StateId s : ec.states) {
            if (m.is_markovian(s)) {
                continue;
            }
            if (s == exitState) {
                result.set(s, static_cast<std::uint32_t>(info.origin - m.choice_begin(s)));
            } else {
                result.set(s, toward.local_choice(s));
            }
        }
    }
    return result;
}

}  // namespace moma
