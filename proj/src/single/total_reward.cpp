#include "moma/single/total_reward.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

#include "moma/core/validation.hpp"
#include "moma/graph/end_components.hpp"
#include "moma/graph/quotient.hpp"
#include "moma/single/linear_system.hpp"

namespace moma {

std::vector<bool> prob1e(const MarkovAutomaton& m, StateId target, const std::vector<bool>& region) {
    std::size_t n = m.num_states();
    std::vector<std::vector<std::size_t>> incoming(n);
    for (std::size_t c = 0; c < m.num_choices(); ++c) {
        for (const auto& t : m.transitions(c)) {
            incoming[t.target].push_back(c);
        }
    }
    std::vector<bool> current = region;
    current[target] = true;
    while (true) {
        std::vector<bool> allowed(m.num_choices(), false);
        for (std::size_t c = 0; c < m.num_choices(); ++c) {
            if (!current[m.choice_state(c)]) {
                continue;
            }
            auto tr = m.transitions(c);
            allowed[c] = std::all_of(tr.begin(), tr.end(), [&](const Transition& t) { return current[t.target]; });
        }
        std::vector<bool> reaching(n, false);
        reaching[target] = true;
        std::deque<StateId> queue{target};
        while (!queue.empty()) {
            StateId t = queue.front();
            queue.pop_front();
            for (std::size_t c : incoming[t]) {
                StateId s = m.choice_state(c);
                if (allowed[c] && !reaching[s]) {
                    reaching[s] = true;
                    queue.push_back(s);
                }
            }
        }
        if (reaching == current) {
            return current;
        }
        current = std::move(reaching);
    }
}

namespace {

// Model over the flagged states keeping the allowed choices. The target becomes an absorbing
// Markovian state whose choice has no origin.
DerivedModel restrict_model(const MarkovAutomaton& m, const std::vector<bool>& keep,
                            const std::vector<bool>& allowed, StateId target) {
    std::vector<StateId> index(m.num_states(), kNoState);
    StateId next = 0;
    for (StateId s = 0; s < m.num_states(); ++s) {
        if (keep[s]) {
            index[s] = next++;
        }
    }
    ModelBuilder builder;
    builder.set_action_names(m.action_names());
    for (StateId s = 0; s < m.num_states(); ++s) {
        if (!keep[s]) {
            continue;
        }
        if (s == target) {
            builder.add_markovian_state(1.0, m.state_name(s), s);
            builder.add_transition(index[s], 1.0);
            continue;
        }
        if (m.is_markovian(s)) {
            builder.add_markovian_state(m.exit_rate(s), m.state_name(s), s, m.choice_begin(s));
        } else {
            builder.add_probabilistic_state(m.state_name(s), s);
        }
        for (std::size_t c : m.choices(s)) {
            if (!allowed[c]) {
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
    DerivedModel result;
    result.model = builder.build(index[m.initial_state()]);
    result.mapping = builder.mapping();
    return result;
}

struct PolicyIterationResult {
    std::vector<double> values;
    MDStrategy strategy;
    double residual = 0.0;
    std::size_t iterations = 0;
};

// Policy iteration on a model where every state reaches target almost surely under the
// attractor strategy and every strategy avoiding target collects minus infinity.
PolicyIterationResult policy_iteration(const MarkovAutomaton& m, const RewardAssignment& r, StateId target) {
    std::size_t n = m.num_states();
    std::vector<double> rho(m.num_choices());
    for (std::size_t c = 0; c < m.num_choices(); ++c) {
        rho[c] = choice_reward(m, r, c);
    }

    // Attractor strategy: lowest-index choice with a successor one hop closer to the target.
    std::vector<std::size_t> choice(n, kNoIndex);
    {
        std::vector<std::vector<std::size_t>> incoming(n);
        for (std::size_t c = 0; c < m.num_choices(); ++c) {
            for (const auto& t : m.transitions(c)) {
                incoming[t.target].push_back(c);
            }
        }
        std::vector<bool> done(n, false);
        done[target] = true;
        std::deque<StateId> queue{target};
        while (!queue.empty()) {
            StateId t = queue.front();
            queue.pop_front();
            std::vector<std::size_t> candidates = incoming[t];
            std::sort(candidates.begin(), candidates.end());
            for (std::size_t c : candidates) {
                StateId s = m.choice_state(c);
                if (!done[s]) {
                    done[s] = true;
                    choice[s] = c;
                    queue.push_back(s);
                }
            }
        }
        for (StateId s = 0; s < n; ++s) {
            if (!done[s]) {
                throw SolverError("state " + m.state_name(s) + " cannot reach the target");
            }
        }
    }

    std::vector<std::size_t> variable(n, kNoIndex);
    std::size_t dimension = 0;
    for (StateId s = 0; s < n; ++s) {
        if (s != target) {
            variable[s] = dimension++;
        }
    }
    PolicyIterationResult result;
    result.values.assign(n, 0.0);
    auto qValue = [&](std::size_t c) {
        double q = rho[c];
        for (const auto& t : m.transitions(c)) {
            q += t.probability * result.values[t.target];
        }
        return q;
    };
    while (true) {
        ++result.iterations;
        if (dimension > 0) {
            std::vector<MatrixEntry> entries;
            std::vector<double> rhs(dimension);
            for (StateId s = 0; s < n; ++s) {
                if (s == target) {
                    continue;
                }
                std::size_t i = variable[s];
                entries.push_back({i, i, 1.0});
                for (const auto& t : m.transitions(choice[s])) {
                    if (t.target != target) {
                        entries.push_back({i, variable[t.target], -t.probability});
                    }
                }
                rhs[i] = rho[choice[s]];
            }
            std::vector<double> guess(dimension);
            for (StateId s = 0; s < n; ++s) {
                if (s != target) {
                    guess[variable[s]] = result.values[s];
                }
            }
            std::vector<double> x = solve_sparse(dimension, entries, rhs, guess);
            for (StateId s = 0; s < n; ++s) {
                if (s != target) {
                    result.values[s] = x[variable[s]];
                }
            }
        }
        bool changed = false;
        result.residual = 0.0;
        for (StateId s = 0; s < n; ++s) {
            if (s == target || m.is_markovian(s)) {
                continue;
            }
            double current = result.values[s];
            double bestValue = current;
            std::size_t best = choice[s];
            for (std::size_t c : m.choices(s)) {
                double q = qValue(c);
                if (q > bestValue + 1e-12 * std::max(1.0, std::abs(current))) {
                    bestValue = q;
                    best = c;
                }
            }
            result.residual = std::max(result.residual, bestValue - current);
            if (best != choice[s]) {
                choice[s] = best;
                changed = true;
            }
        }
        if (!changed) {
            break;
        }
    }
    result.strategy = MDStrategy(n);
    for (StateId s = 0; s < n; ++s) {
        if (s != target) {
            result.strategy.set(s, static_cast<std::uint32_t>(choice[s] - m.choice_begin(s)));
        }
    }
    return result;
}

ScalarSolution total_to_target(const MarkovAutomaton& m, const RewardAssignment& r, StateId target) {
    std::vector<bool> region = reachable_states(m);
    std::vector<bool> good = prob1e(m, target, region);
    if (!good[m.initial_state()]) {
        throw SolverError("the target cannot be reached almost surely from the initial state");
    }
    std::vector<bool> allowed(m.num_choices(), false);
    for (std::size_t c = 0; c < m.num_choices(); ++c) {
        if (!good[m.choice_state(c)]) {
            continue;
        }
        auto tr = m.transitions(c);
        allowed[c] = std::all_of(tr.begin(), tr.end(), [&](const Transition& t) { return good[t.target]; });
    }
    DerivedModel sub = restrict_model(m, good, allowed, target);
    RewardAssignment subReward = sub.mapping.pull_back(r, sub.model);
    StateId subTarget = kNoState;
    for (StateId s = 0; s < sub.model.num_states(); ++s) {
        if (sub.mapping.state_origin[s] == target) {
            subTarget = s;
        }
    }

    std::vector<EndComponent> ecs;
    for (auto& ec : zero_mecs(sub.model, {&subReward})) {
        if (!ec.contains_state(subTarget)) {
            ecs.push_back(std::move(ec));
        }
    }
    QuotientModel q = quotient(sub.model, ecs, false);
    RewardAssignment qReward = q.mapping.pull_back(subReward, q.model);
    PolicyIterationResult pi = policy_iteration(q.model, qReward, q.state_map[subTarget]);

    std::vector<MDStrategy> stay(q.ecs.size(), MDStrategy(sub.model.num_states()));
    MDStrategy subSigma = lift_strategy(sub.model, q, pi.strategy, stay);

    ScalarSolution solution;
    solution.value = pi.values[q.model.initial_state()];
    solution.error_bound = pi.residual;
    solution.iterations = pi.iterations;
    solution.strategy = MDStrategy::first_choice(m);
    for (StateId s = 0; s < sub.model.num_states(); ++s) {
        StateId origin = sub.mapping.state_origin[s];
        if (origin == target || m.is_markovian(origin) || !subSigma.is_set(s)) {
            continue;
        }
        std::size_t c = sub.mapping.choice_origin[subSigma.choice(sub.model, s)];
        solution.strategy.set(origin, static_cast<std::uint32_t>(c - m.choice_begin(origin)));
    }
    return solution;
}

}  // namespace

ScalarSolution max_total_reward(const MarkovAutomaton& m, const RewardAssignment& r, std::optional<StateId> target) {
    if (target) {
        return total_to_target(m, r, *target);
    }
    QuotientModel q = quotient(m, zero_mecs(m, {&r}), true);
    RewardAssignment qReward = q.mapping.pull_back(r, q.model);
    ScalarSolution inner = total_to_target(q.model, qReward, q.bottom_state);
    std::vector<MDStrategy> stay;
    for (const auto& ec : q.ecs) {
        stay.push_back(stay_within(m, ec));
    }
    ScalarSolution solution = inner;
    solution.strategy = lift_strategy(m, q, inner.strategy, stay);
    for (StateId s = 0; s < m.num_states(); ++s) {
        if (!solution.strategy.is_set(s)) {
            solution.strategy.set(s, 0);
        }
    }
    return solution;
}

}  // namespace moma
