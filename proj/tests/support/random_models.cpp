#include "random_models.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "moma/core/validation.hpp"
#include "moma/graph/end_components.hpp"

namespace moma::test {

namespace {

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

double reward_value(std::mt19937_64& rng, const RandomModelOptions& options) {
    if (std::bernoulli_distribution(options.zero_probability)(rng)) {
        return 0.0;
    }
    // Quarter steps keep values readable when a test fails.
    auto steps = static_cast<int>(options.reward_bound * 4);
    int k = std::uniform_int_distribution<int>(-steps, steps)(rng);
    return k / 4.0;
}

void add_distribution(ModelBuilder& b, std::mt19937_64& rng, std::size_t n, std::size_t maxSuccessors) {
    std::vector<StateId> all(n);
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), rng);
    std::size_t k = uniform(rng, 1, std::min(maxSuccessors, n));
    std::vector<double> weights(k);
    for (auto& w : weights) {
        w = static_cast<double>(uniform(rng, 1, 4));
    }
    double sum = std::accumulate(weights.begin(), weights.end(), 0.0);
    std::vector<StateId> targets(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k));
    std::sort(targets.begin(), targets.end());
    for (std::size_t i = 0; i < k; ++i) {
        b.add_transition(targets[i], weights[i] / sum);
    }
}

MarkovAutomaton draw(std::mt19937_64& rng, const RandomModelOptions& options) {
    std::size_t n = uniform(rng, options.min_states, options.max_states);
    ModelBuilder b;
    std::vector<ActionId> actions;
    for (std::size_t a = 0; a < options.max_actions; ++a) {
        actions.push_back(b.intern_action("a" + std::to_string(a)));
    }
    std::bernoulli_distribution markovian(options.markovian_probability);
    std::size_t sinks = std::min(options.zero_sinks, n);
    for (std::size_t s = 0; s < n; ++s) {
        if (s >= n - sinks) {
            b.add_markovian_state(1.0, "s" + std::to_string(s));
            b.add_transition(static_cast<StateId>(s), 1.0);
        } else if (markovian(rng)) {
            b.add_markovian_state(static_cast<double>(uniform(rng, 1, 4)), "s" + std::to_string(s));
            add_distribution(b, rng, n, options.max_successors);
        } else {
            b.add_probabilistic_state("s" + std::to_string(s));
            std::size_t k = uniform(rng, 1, options.max_actions);
            for (std::size_t a = 0; a < k; ++a) {
                b.add_choice(actions[a]);
                add_distribution(b, rng, n, options.max_successors);
            }
        }
    }
    MarkovAutomaton m = b.build(0);

    std::vector<EndComponent> mecs = mec_decomposition(m);
    std::vector<bool> internal(m.num_choices(), false);
    for (const auto& ec : mecs) {
        for (std::size_t c : ec.choices) {
            internal[c] = true;
        }
    }
    auto fill = [&](const std::string& name, bool total) {
        RewardAssignment r = m.zero_reward(name);
        for (StateId s = 0; s < m.num_states(); ++s) {
            if (m.is_markovian(s)) {
                r.state_rewards[s] = reward_value(rng, options);
            }
            for (std::size_t c : m.choices(s)) {
                for (std::size_t t = m.transition_begin(c); t < m.transition_end(c); ++t) {
                    r.transition_rewards[t] = reward_value(rng, options);
                }
            }
        }
        if (total) {
            for (StateId s = static_cast<StateId>(n - sinks); s < n; ++s) {
                r.state_rewards[s] = 0.0;
                r.transition_rewards[m.transition_begin(m.choice_begin(s))] = 0.0;
            }
        }
        if (total && options.nonpositive_inside_mecs) {
            for (StateId s = 0; s < m.num_states(); ++s) {
                for (std::size_t c : m.choices(s)) {
                    if (!internal[c]) {
                        continue;
                    }
                    if (m.is_markovian(s)) {
                        r.state_rewards[s] = -std::abs(r.state_rewards[s]);
                    }
                    for (std::size_t t = m.transition_begin(c); t < m.transition_end(c); ++t) {
                        r.transition_rewards[t] = -std::abs(r.transition_rewards[t]);
                    }
                }
            }
        }
        m.add_reward(std::move(r));
    };
    for (std::size_t i = 0; i < options.total_rewards; ++i) {
        fill("T" + std::to_string(i), true);
    }
    for (std::size_t i = 0; i < options.lra_rewards; ++i) {
        fill("L" + std::to_string(i), false);
    }
    return m;
}

}  // namespace

MarkovAutomaton random_model(std::mt19937_64& rng, const RandomModelOptions& options) {
    while (true) {
        MarkovAutomaton m = draw(rng, options);
        if (!options.non_zeno || check_non_zeno(m, mec_decomposition(m)).ok()) {
            return m;
        }
    }
}

std::vector<Objective> random_objectives(const RandomModelOptions& options) {
    std::vector<Objective> objectives;
    for (std::size_t i = 0; i < options.total_rewards; ++i) {
        objectives.push_back({ObjectiveKind::Total, "T" + std::to_string(i), {}, Direction::Maximize});
    }
    for (std::size_t i = 0; i < options.lra_rewards; ++i) {
        objectives.push_back({ObjectiveKind::LongRunAverage, "L" + std::to_string(i), {}, Direction::Maximize});
    }
    return objectives;
}

std::vector<double> random_weights(std::mt19937_64& rng, std::size_t dimension) {
    std::vector<double> w(dimension);
    std::exponential_distribution<double> exp(1.0);
    double sum = 0.0;
    for (auto& x : w) {
        x = exp(rng);
        sum += x;
    }
    for (auto& x : w) {
        x /= sum;
    }
    // Absorb rounding so the sum is one up to a single ulp.
    w.back() = std::max(0.0, 1.0 - std::accumulate(w.begin(), w.end() - 1, 0.0));
    return w;
}

}  // namespace moma::test
