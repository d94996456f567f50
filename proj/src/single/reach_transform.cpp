#include "moma/single/reach_transform.hpp"

#include <deque>
#include <map>

namespace moma {

ReachProduct reach_to_total(const MarkovAutomaton& m, const std::vector<StateId>& goal,
                            const RewardAssignment* goalBoundedBase, std::string rewardName) {
    if (goal.empty()) {
        throw ModelError("reachability objective with an empty goal set");
    }
    std::vector<bool> isGoal(m.num_states(), false);
    for (StateId s : goal) {
        if (s >= m.num_states()) {
            throw ModelError("goal state out of range");
        }
        isGoal[s] = true;
    }
    StateId init = m.initial_state();
    bool entry = goalBoundedBase == nullptr && isGoal[init];

    // Discover product states (s, bit) in breadth-first order.
    using Key = std::pair<StateId, bool>;
    std::map<Key, StateId> index;
    std::vector<Key> states;
    std::deque<Key> queue;
    auto discover = [&](Key key) {
        auto [it, inserted] = index.emplace(key, static_cast<StateId>(states.size() + (entry ? 1 : 0)));
        if (inserted) {
            states.push_back(key);
            queue.push_back(key);
        }
        return it->second;
    };
    discover({init, isGoal[init]});
    while (!queue.empty()) {
        auto [s, bit] = queue.front();
        queue.pop_front();
        for (std::size_t c : m.choices(s)) {
            for (const auto& t : m.transitions(c)) {
                discover({t.target, bit || isGoal[t.target]});
            }
        }
    }

    ModelBuilder builder;
    builder.set_action_names(m.action_names());
    std::vector<bool> visited;
    std::vector<double> flip;
    std::vector<bool> fromUnset;
    if (entry) {
        builder.add_probabilistic_state("entry:" + m.state_name(init));
        builder.add_choice(builder.intern_action("enter"));
        builder.add_transition(index.at({init, true}), 1.0);
        visited.push_back(false);
        flip.push_back(1.0);
        fromUnset.push_back(false);
    }
    for (const auto& [s, bit] : states) {
        std::string name = "(" + m.state_name(s) + "," + (bit ? "1" : "0") + ")";
        if (m.is_markovian(s)) {
            builder.add_markovian_state(m.exit_rate(s), std::move(name), s, m.choice_begin(s));
        } else {
            builder.add_probabilistic_state(std::move(name), s);
        }
        visited.push_back(bit);
        for (std::size_t c : m.choices(s)) {
            if (!m.is_markovian(s)) {
                builder.add_choice(m.choice_action(c), c);
            }
            for (std::size_t t = m.transition_begin(c); t < m.transition_end(c); ++t) {
                const Transition& tr = m.all_transitions()[t];
                bool next = bit || isGoal[tr.target];
                builder.add_transition(index.at({tr.target, next}), tr.probability, t);
                flip.push_back(!bit && next ? 1.0 : 0.0);
                fromUnset.push_back(!bit);
            }
        }
    }

    ReachProduct product;
    product.model = builder.build(0);
    product.mapping = builder.mapping();
    product.mapping.carry_rewards(m, product.model);
    product.visited = std::move(visited);
    if (goalBoundedBase == nullptr) {
        product.reward = product.model.zero_reward(std::move(rewardName));
        product.reward.transition_rewards = std::move(flip);
    } else {
        product.reward = product.mapping.pull_back(*goalBoundedBase, product.model);
        product.reward.name = std::move(rewardName);
        for (StateId s = 0; s < product.model.num_states(); ++s) {
            if (product.visited[s]) {
                product.reward.state_rewards[s] = 0.0;
            }
        }
        for (std::size_t t = 0; t < product.model.num_transitions(); ++t) {
            if (!fromUnset[t]) {
                product.reward.transition_rewards[t] = 0.0;
            }
        }
    }
    return product;
}

}  // namespace moma
