#include "moma/single/chain_evaluation.hpp"

#include <algorithm>
#include <map>

#include "moma/graph/scc.hpp"
#include "moma/single/linear_system.hpp"

namespace moma {

std::vector<double> stationary_distribution(const MarkovAutomaton& m, const std::vector<std::size_t>& choice,
                                            const std::vector<StateId>& states) {
    std::size_t k = states.size();
    if (k == 1) {
        return {1.0};
    }
    std::map<StateId, std::size_t> local;
    for (std::size_t i = 0; i < k; ++i) {
        local.emplace(states[i], i);
    }
    // Solve (I - P)^T pi = 0 with the last equation replaced by sum(pi) = 1.
    std::vector<MatrixEntry> entries;
    for (std::size_t j = 0; j < k; ++j) {
        if (j != k - 1) {
            entries.push_back({j, j, 1.0});
        }
        for (const auto& t : m.transitions(choice[states[j]])) {
            auto it = local.find(t.target);
            if (it == local.end()) {
                throw SolverError("stationary distribution requested for a set that is not closed");
            }
            if (it->second != k - 1) {
                entries.push_back({it->second, j, -t.probability});
            }
        }
        entries.push_back({k - 1, j, 1.0});
    }
    SparseLinearSystem system(k, entries);
    std::vector<double> rhs(k, 0.0);
    rhs[k - 1] = 1.0;
    std::vector<double> pi = system.solve(rhs);
    for (auto& v : pi) {
        v = std::max(v, 0.0);
    }
    return pi;
}

namespace {

double gain_of(const MarkovAutomaton& m, const std::vector<std::size_t>& choice, const std::vector<StateId>& states,
               const std::vector<double>& pi, const RewardAssignment& r) {
    double reward = 0.0;
    double time = 0.0;
    for (std::size_t i = 0; i < states.size(); ++i) {
        std::size_t c = choice[states[i]];
        reward += pi[i] * choice_reward(m, r, c);
        time += pi[i] * choice_duration(m, c);
    }
    if (!(time > 0.0)) {
        throw ModelError("recurrent class without Markovian state: long-run average undefined");
    }
    return reward / time;
}

}  // namespace

ChainEvaluation evaluate_strategy(const MarkovAutomaton& m, const MDStrategy& sigma,
                                  const std::vector<RewardObjective>& objectives) {
    std::size_t n = m.num_states();
    std::vector<std::size_t> choice(n, kNoIndex);
    std::vector<bool> reachable(n, false);
    std::vector<StateId> order;
    {
        std::vector<StateId> stack{m.initial_state()};
        reachable[m.initial_state()] = true;
        while (!stack.empty()) {
            StateId s = stack.back();
            stack.pop_back();
            order.push_back(s);
            choice[s] = sigma.choice(m, s);
            for (const auto& t : m.transitions(choice[s])) {
                if (!reachable[t.target]) {
                    reachable[t.target] = true;
                    stack.push_back(t.target);
                }
            }
        }
    }
    Digraph g;
    for (StateId s = 0; s < n; ++s) {
        g.add_node();
        if (reachable[s]) {
            for (const auto& t : m.transitions(choice[s])) {
                g.add_edge(t.target);
            }
        }
    }
    auto scc = strongly_connected_components(g, reachable);
    auto bottom = bottom_components(g, scc);

    ChainEvaluation result;
    std::vector<std::size_t> bsccOf(n, kNoIndex);
    {
        std::map<std::uint32_t, std::size_t> index;
        for (StateId s = 0; s < n; ++s) {
            if (!reachable[s] || !bottom[scc.component[s]]) {
                continue;
            }
            auto [it, inserted] = index.emplace(scc.component[s], result.bsccs.size());
            if (inserted) {
                result.bsccs.emplace_back();
            }
            result.bsccs[it->second].push_back(s);
            bsccOf[s] = it->second;
        }
    }
    std::size_t numBsccs = result.bsccs.size();
    bool needGains = std::any_of(objectives.begin(), objectives.end(),
                                 [](const RewardObjective& o) { return o.kind == ObjectiveKind::LongRunAverage; });
    for (const auto& b : result.bsccs) {
        result.stationary.push_back(needGains ? stationary_distribution(m, choice, b) : std::vector<double>{});
    }

    // Transient part: reachable states outside BSCCs.
    std::vector<std::size_t> transientIndex(n, kNoIndex);
    std::vector<StateId> transient;
    std::sort(order.begin(), order.end());
    for (StateId s : order) {
        if (bsccOf[s] == kNoIndex) {
            transientIndex[s] = transient.size();
            transient.push_back(s);
        }
    }
    std::unique_ptr<SparseLinearSystem> system;
    if (!transient.empty()) {
        std::vector<MatrixEntry> entries;
        for (std::size_t i = 0; i < transient.size(); ++i) {
            entries.push_back({i, i, 1.0});
            for (const auto& t : m.transitions(choice[transient[i]])) {
                if (transientIndex[t.target] != kNoIndex) {
                    entries.push_back({i, transientIndex[t.target], -t.probability});
                }
            }
        }
        system = std::make_unique<SparseLinearSystem>(transient.size(), entries);
    }
    StateId init = m.initial_state();
    auto valueAtInitial = [&](const std::vector<double>& x) {
        return transientIndex[init] != kNoIndex ? x[transientIndex[init]] : 0.0;
    };

    result.reach_probabilities.assign(numBsccs, 0.0);
    if (bsccOf[init] != kNoIndex) {
        result.reach_probabilities[bsccOf[init]] = 1.0;
    } else {
        for (std::size_t b = 0; b < numBsccs; ++b) {
            std::vector<double> rhs(transient.size(), 0.0);
            for (std::size_t i = 0; i < transient.size(); ++i) {
                for (const auto& t : m.transitions(choice[transient[i]])) {
                    if (bsccOf[t.target] == b) {
                        rhs[i] += t.probability;
                    }
                }
            }
            result.reach_probabilities[b] = valueAtInitial(system->solve(rhs));
        }
    }

    for (const auto& objective : objectives) {
        const RewardAssignment& r = *objective.reward;
        if (objective.kind == ObjectiveKind::LongRunAverage) {
            std::vector<double> gains;
            double value = 0.0;
            for (std::size_t b = 0; b < numBsccs; ++b) {
                gains.push_back(gain_of(m, choice, result.bsccs[b], result.stationary[b], r));
                value += result.reach_probabilities[b] * gains.back();
            }
            result.gains.push_back(std::move(gains));
            result.values.push_back(ExtendedValue::finite(value));
            continue;
        }
        result.gains.emplace_back();
        bool negative = false;
        bool positive = false;
        for (const auto& b : result.bsccs) {
            for (StateId s : b) {
                std::size_t c = choice[s];
                if (m.is_markovian(s)) {
                    negative |= r.state_rewards[s] < 0.0;
                    positive |= r.state_rewards[s] > 0.0;
                }
                for (std::size_t t = m.transition_begin(c); t < m.transition_end(c); ++t) {
                    negative |= r.transition_rewards[t] < 0.0;
                    positive |= r.transition_rewards[t] > 0.0;
                }
            }
        }
        if (negative) {
            result.values.push_back(ExtendedValue::negative_infinity());
        } else if (positive) {
            result.values.push_back(ExtendedValue::positive_infinity());
        } else if (transient.empty()) {
            result.values.push_back(ExtendedValue::finite(0.0));
        } else {
            std::vector<double> rhs(transient.size());
            for (std::size_t i = 0; i < transient.size(); ++i) {
                rhs[i] = choice_reward(m, r, choice[transient[i]]);
            }
            result.values.push_back(ExtendedValue::finite(valueAtInitial(system->solve(rhs))));
        }
    }
    return result;
}

double bscc_gain(const MarkovAutomaton& chain, const RewardAssignment& r) {
    std::size_t n = chain.num_states();
    std::vector<std::size_t> choice(n);
    Digraph g;
    for (StateId s = 0; s < n; ++s) {
        if (chain.num_choices(s) != 1) {
            throw ModelError("gain requested for a model with nondeterminism");
        }
        choice[s] = chain.choice_begin(s);
        g.add_node();
        for (const auto& t : chain.transitions(choice[s])) {
            g.add_edge(t.target);
        }
    }
    if (strongly_connected_components(g).count != 1) {
        throw ModelError("gain requested for a model that is not strongly connected");
    }
    std::vector<StateId> states(n);
    for (StateId s = 0; s < n; ++s) {
        states[s] = s;
    }
    return gain_of(chain, choice, states, stationary_distribution(chain, choice, states), r);
}

}  // namespace moma
