#include "moma/graph/end_components.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "moma/graph/scc.hpp"

namespace moma {

std::vector<EndComponent> mec_decomposition(const MarkovAutomaton& m) {
    return mec_decomposition(m, std::vector<bool>(m.num_choices(), true));
}

std::vector<EndComponent> mec_decomposition(const MarkovAutomaton& m, std::vector<bool> allowed) {
    std::size_t n = m.num_states();
    std::vector<bool> alive(n, false);
    for (StateId s = 0; s < n; ++s) {
        for (std::size_t c : m.choices(s)) {
            if (allowed[c]) {
                alive[s] = true;
            }
        }
    }
    SccDecomposition scc;
    while (true) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (StateId s = 0; s < n; ++s) {
                if (!alive[s]) {
                    continue;
                }
                bool any = false;
                for (std::size_t c : m.choices(s)) {
                    if (!allowed[c]) {
                        continue;
                    }
                    for (const auto& t : m.transitions(c)) {
                        if (!alive[t.target]) {
                            allowed[c] = false;
                            break;
                        }
                    }
                    any = any || allowed[c];
                }
                if (!any) {
                    alive[s] = false;
                    changed = true;
                }
            }
        }
        Digraph g;
        for (StateId s = 0; s < n; ++s) {
            g.add_node();
            if (!alive[s]) {
                continue;
            }
            for (std::size_t c : m.choices(s)) {
                if (allowed[c]) {
                    for (const auto& t : m.transitions(c)) {
                        g.add_edge(t.target);
                    }
                }
            }
        }
        scc = strongly_connected_components(g, alive);
        bool removed = false;
        for (StateId s = 0; s < n; ++s) {
            if (!alive[s]) {
                continue;
            }
            for (std::size_t c : m.choices(s)) {
                if (!allowed[c]) {
                    continue;
                }
                for (const auto& t : m.transitions(c)) {
                    if (scc.component[t.target] != scc.component[s]) {
                        allowed[c] = false;
                        removed = true;
                        break;
                    }
                }
            }
        }
        if (!removed) {
            break;
        }
    }

    std::map<std::uint32_t, std::size_t> byComponent;
    std::vector<EndComponent> result;
    for (StateId s = 0; s < n; ++s) {
        if (!alive[s]) {
            continue;
        }
        auto [it, inserted] = byComponent.emplace(scc.component[s], result.size());
        if (inserted) {
            result.emplace_back();
        }
        EndComponent& ec = result[it->second];
        ec.states.push_back(s);
        for (std::size_t c : m.choices(s)) {
            if (allowed[c]) {
                ec.choices.push_back(c);
            }
        }
    }
    return result;
}

std::vector<EndComponent> zero_mecs(const MarkovAutomaton& m, const std::vector<const RewardAssignment*>& totals) {
    std::vector<bool> allowed(m.num_choices(), true);
    for (std::size_t c = 0; c < m.num_choices(); ++c) {
        for (const RewardAssignment* r : totals) {
            if (choice_has_nonzero_reward(m, *r, c)) {
                allowed[c] = false;
                break;
            }
        }
    }
    return mec_decomposition(m, std::move(allowed));
}

std::vector<std::size_t> exits(const MarkovAutomaton& m, const EndComponent& ec) {
    std::vector<std::size_t> result;
    for (StateId s : ec.states) {
        if (m.is_markovian(s)) {
            continue;
        }
        for (std::size_t c : m.choices(s)) {
            if (!ec.contains_choice(c)) {
                result.push_back(c);
            }
        }
    }
    return result;
}

bool is_closed(const MarkovAutomaton& m, const EndComponent& component) {
    if (component.states.empty()) {
        return false;
    }
    for (std::size_t c : component.choices) {
        if (!component.contains_state(m.choice_state(c))) {
            return false;
        }
        for (const auto& t : m.transitions(c)) {
            if (!component.contains_state(t.target)) {
                return false;
            }
        }
    }
    for (StateId s : component.states) {
        bool any = false;
        for (std::size_t c : m.choices(s)) {
            any = any || component.contains_choice(c);
        }
        if (!any) {
            return false;
        }
    }
    return true;
}

bool is_end_component(const MarkovAutomaton& m, const EndComponent& component) {
    if (!is_closed(m, component)) {
        return false;
    }
    Digraph g;
    std::vector<bool> active(m.num_states(), false);
    for (StateId s = 0; s < m.num_states(); ++s) {
        g.add_node();
        active[s] = component.contains_state(s);
        if (!active[s]) {
            continue;
        }
        for (std::size_t c : m.choices(s)) {
            if (component.contains_choice(c)) {
                for (const auto& t : m.transitions(c)) {
                    g.add_edge(t.target);
                }
            }
        }
    }
    auto scc = strongly_connected_components(g, active);
    std::uint32_t first = scc.component[component.states.front()];
    return std::all_of(component.states.begin(), component.states.end(),
                       [&](StateId s) { return scc.component[s] == first; });
}

DerivedModel sub_ma(const MarkovAutomaton& m, const EndComponent& component) {
    if (!is_closed(m, component)) {
        throw ModelError("sub-model requested for a component that is not closed");
    }
    std::vector<StateId> index(m.num_states(), kNoState);
    for (std::size_t i = 0; i < component.states.size(); ++i) {
        index[component.states[i]] = static_cast<StateId>(i);
    }
    ModelBuilder builder;
    builder.set_action_names(m.action_names());
    for (StateId s : component.states) {
        if (m.is_markovian(s)) {
            builder.add_markovian_state(m.exit_rate(s), m.state_name(s), s, m.choice_begin(s));
        } else {
            builder.add_probabilistic_state(m.state_name(s), s);
        }
        for (std::size_t c : m.choices(s)) {
            if (!component.contains_choice(c)) {
                continue;
            }
            if (!m.is_markovian(s)) {
                builder.add_choice(m.choice_action(c), c);
            }
            for (std::size_t t = m.transition_begin(c); t < m.transition_end(c); ++t) {
                const Transition& tr = m.all_transitions()[t];
                builder.add_transition(index[tr.target], tr.probability, t);
            }
        }
    }
    StateId initial = index[m.initial_state()] != kNoState ? index[m.initial_state()] : 0;
    DerivedModel result{builder.build(initial), builder.mapping()};
    result.mapping.carry_rewards(m, result.model);
    return result;
}

MDStrategy reach_within(const MarkovAutomaton& m, const EndComponent& ec, StateId target) {
    std::size_t n = m.num_states();
    std::vector<std::vector<StateId>> predecessors(n);
    for (std::size_t c : ec.choices) {
        for (const auto& t : m.transitions(c)) {
            predecessors[t.target].push_back(m.choice_state(c));
        }
    }
    constexpr std::size_t kInfinite = kNoIndex;
    std::vector<std::size_t> distance(n, kInfinite);
    std::deque<StateId> queue{target};
    distance[target] = 0;
    while (!queue.empty()) {
        StateId s = queue.front();
        queue.pop_front();
        for (StateId p : predecessors[s]) {
            if (distance[p] == kInfinite) {
                distance[p] = distance[s] + 1;
                queue.push_back(p);
            }
        }
    }
    MDStrategy result(n);
    for (StateId s : ec.states) {
        if (m.is_markovian(s)) {
            result.set(s, 0);
            continue;
        }
        if (s == target) {
            continue;
        }
        if (distance[s] == kInfinite) {
            throw SolverError("state '" + m.state_name(s) + "' cannot reach '" + m.state_name(target) +
                              "' inside its end component");
        }
        for (std::size_t c : m.choices(s)) {
            if (!ec.contains_choice(c)) {
                continue;
            }
            bool closer = false;
            for (const auto& t : m.transitions(c)) {
                closer = closer || distance[t.target] < distance[s];
            }
            if (closer) {
                result.set(s, static_cast<std::uint32_t>(c - m.choice_begin(s)));
                break;
            }
        }
    }
    return result;
}

MDStrategy stay_within(const MarkovAutomaton& m, const EndComponent& ec) {
    MDStrategy sigma(m.num_states());
    for (StateId s : ec.states) {
        for (std::size_t c : m.choices(s)) {
            if (ec.contains_choice(c)) {
                sigma.set(s, static_cast<std::uint32_t>(c - m.choice_begin(s)));
                break;
            }
        }
    }
    return sigma;
}

}  // namespace moma
