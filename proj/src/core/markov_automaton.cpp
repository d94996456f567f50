#include "moma/core/markov_automaton.hpp"

#include <algorithm>

namespace moma {

std::size_t MarkovAutomaton::num_markovian_states() const {
    return static_cast<std::size_t>(std::count(kinds_.begin(), kinds_.end(), StateKind::Markovian));
}

std::optional<StateId> MarkovAutomaton::find_state(std::string_view name) const {
    for (StateId s = 0; s < state_names_.size(); ++s) {
        if (state_names_[s] == name) {
            return s;
        }
    }
    return std::nullopt;
}

std::string MarkovAutomaton::action_name(ActionId a) const {
    if (a == kMarkovianAction) {
        return "<markovian>";
    }
    return a < action_names_.size() ? action_names_[a] : std::to_string(a);
}

std::optional<ActionId> MarkovAutomaton::find_action(std::string_view name) const {
    for (ActionId a = 0; a < action_names_.size(); ++a) {
        if (action_names_[a] == name) {
            return a;
        }
    }
    return std::nullopt;
}

std::optional<std::size_t> MarkovAutomaton::find_choice(StateId s, ActionId a) const {
    for (std::size_t c = choice_begin(s); c < choice_end(s); ++c) {
        if (choice_actions_[c] == a) {
            return c - choice_begin(s);
        }
    }
    return std::nullopt;
}

const RewardAssignment* MarkovAutomaton::find_reward(std::string_view name) const {
    for (const auto& r : rewards_) {
        if (r.name == name) {
            return &r;
        }
    }
    return nullptr;
}

std::size_t MarkovAutomaton::reward_index(std::string_view name) const {
    for (std::size_t i = 0; i < rewards_.size(); ++i) {
        if (rewards_[i].name == name) {
            return i;
        }
    }
    throw ModelError("unknown reward assignment '" + std::string(name) + "'");
}

std::size_t MarkovAutomaton::add_reward(RewardAssignment reward) {
    if (reward.state_rewards.size() != num_states() || reward.transition_rewards.size() != num_transitions()) {
        throw ModelError("reward assignment '" + reward.name + "' is not aligned with the model");
    }
    rewards_.push_back(std::move(reward));
    return rewards_.size() - 1;
}

void MarkovAutomaton::set_rewards(std::vector<RewardAssignment> rewards) {
    rewards_.clear();
    for (auto& r : rewards) {
        add_reward(std::move(r));
    }
}

RewardAssignment MarkovAutomaton::zero_reward(std::string name) const {
    return RewardAssignment{std::move(name), std::vector<double>(num_states(), 0.0),
                            std::vector<double>(num_transitions(), 0.0)};
}

double choice_reward(const MarkovAutomaton& m, const RewardAssignment& r, std::size_t c) {
    double result = 0.0;
    for (std::size_t t = m.transition_begin(c); t < m.transition_end(c); ++t) {
        result += m.all_transitions()[t].probability * r.transition_rewards[t];
    }
    StateId s = m.choice_state(c);
    if (m.is_markovian(s) && r.state_rewards[s] != 0.0) {
        result += r.state_rewards[s] / m.exit_rate(s);
    }
    return result;
}

bool choice_has_nonzero_reward(const MarkovAutomaton& m, const RewardAssignment& r, std::size_t c) {
    StateId s = m.choice_state(c);
    if (m.is_markovian(s) && r.state_rewards[s] != 0.0) {
        return true;
    }
    for (std::size_t t = m.transition_begin(c); t < m.transition_end(c); ++t) {
        if (r.transition_rewards[t] != 0.0) {
            return true;
        }
    }
    return false;
}

double choice_duration(const MarkovAutomaton& m, std::size_t c) {
    StateId s = m.choice_state(c);
    return m.is_markovian(s) ? 1.0 / m.exit_rate(s) : 0.0;
}

RewardAssignment scaled_reward(const RewardAssignment& r, double factor, std::string name) {
    RewardAssignment result{std::move(name), r.state_rewards, r.transition_rewards};
    for (auto& v : result.state_rewards) {
        v *= factor;
    }
    for (auto& v : result.transition_rewards) {
        v *= factor;
    }
    return result;
}

void add_scaled_reward(RewardAssignment& accumulator, const RewardAssignment& r, double factor) {
    if (factor == 0.0) {
        return;
    }
    for (std::size_t i = 0; i < r.state_rewards.size(); ++i) {
        accumulator.state_rewards[i] += factor * r.state_rewards[i];
    }
    for (std::size_t i = 0; i < r.transition_rewards.size(); ++i) {
        accumulator.transition_rewards[i] += factor * r.transition_rewards[i];
    }
}

MDStrategy MDStrategy::first_choice(const MarkovAutomaton& m) {
    MDStrategy result(m.num_states());
    for (StateId s = 0; s < m.num_states(); ++s) {
        result.set(s, 0);
    }
    return result;
}

std::size_t MDStrategy::choice(const MarkovAutomaton& m, StateId s) const {
    if (m.is_markovian(s)) {
        return m.choice_begin(s);
    }
    if (s >= choices_.size() || choices_[s] == kUnset) {
        throw ModelError("strategy has no choice for state '" + m.state_name(s) + "'");
    }
    if (choices_[s] >= m.num_choices(s)) {
        throw ModelError("strategy picks a disabled choice at state '" + m.state_name(s) + "'");
    }
    return m.choice_begin(s) + choices_[s];
}

ActionId MDStrategy::action(const MarkovAutomaton& m, StateId s) const { return m.choice_action(choice(m, s)); }

RewardAssignment ModelMapping::pull_back(const RewardAssignment& r, const MarkovAutomaton& derived) const {
    RewardAssignment result = derived.zero_reward(r.name);
    for (StateId s = 0; s < derived.num_states(); ++s) {
        StateId origin = state_origin[s];
        if (origin != kNoState && derived.is_markovian(s)) {
            result.state_rewards[s] = r.state_rewards[origin];
        }
    }
    for (std::size_t t = 0; t < derived.num_transitions(); ++t) {
        std::size_t origin = transition_origin[t];
        if (origin != kNoIndex) {
            result.transition_rewards[t] = r.transition_rewards[origin];
        }
    }
    return result;
}

void ModelMapping::carry_rewards(const MarkovAutomaton& source, MarkovAutomaton& derived) const {
    std::vector<RewardAssignment> rewards;
    rewards.reserve(source.rewards().size());
    for (const auto& r : source.rewards()) {
        rewards.push_back(pull_back(r, derived));
    }
    derived.set_rewards(std::move(rewards));
}

StateId ModelBuilder::add_markovian_state(double rate, std::string name, StateId origin, std::size_t choiceOrigin) {
    auto s = static_cast<StateId>(model_.kinds_.size());
    model_.kinds_.push_back(StateKind::Markovian);
    model_.rates_.push_back(rate);
    model_.state_names_.push_back(std::move(name));
    model_.choice_offsets_.push_back(model_.choice_actions_.size());
    mapping_.state_origin.push_back(origin);
    add_choice(kMarkovianAction, choiceOrigin);
    return s;
}

StateId ModelBuilder::add_probabilistic_state(std::string name, StateId origin) {
    auto s = static_cast<StateId>(model_.kinds_.size());
    model_.kinds_.push_back(StateKind::Probabilistic);
    model_.rates_.push_back(0.0);
    model_.state_names_.push_back(std::move(name));
    model_.choice_offsets_.push_back(model_.choice_actions_.size());
    mapping_.state_origin.push_back(origin);
    return s;
}

std::size_t ModelBuilder::add_choice(ActionId action, std::size_t origin) {
    if (model_.kinds_.empty()) {
        throw std::logic_error("choice added before any state");
    }
    std::size_t c = model_.choice_actions_.size();
    model_.choice_actions_.push_back(action);
    model_.choice_states_.push_back(static_cast<StateId>(model_.kinds_.size() - 1));
    model_.transition_offsets_.push_back(model_.transitions_.size());
    model_.choice_offsets_.back() = model_.choice_actions_.size();
    mapping_.choice_origin.push_back(origin);
    return c;
}

std::size_t ModelBuilder::add_transition(StateId target, double probability, std::size_t origin) {
    if (model_.choice_actions_.empty()) {
        throw std::logic_error("transition added before any choice");
    }
    std::size_t t = model_.transitions_.size();
    model_.transitions_.push_back({target, probability});
    model_.transition_offsets_.back() = model_.transitions_.size();
    mapping_.transition_origin.push_back(origin);
    return t;
}

ActionId ModelBuilder::intern_action(std::string_view name) {
    auto it = action_lookup_.find(std::string(name));
    if (it != action_lookup_.end()) {
        return it->second;
    }
    auto a = static_cast<ActionId>(model_.action_names_.size());
    model_.action_names_.emplace_back(name);
    action_lookup_.emplace(std::string(name), a);
    return a;
}

void ModelBuilder::set_action_names(std::vector<std::string> names) {
    action_lookup_.clear();
    model_.action_names_ = std::move(names);
    for (ActionId a = 0; a < model_.action_names_.size(); ++a) {
        action_lookup_.emplace(model_.action_names_[a], a);
    }
}

MarkovAutomaton ModelBuilder::build(StateId initial) {
    for (StateId s = 0; s < model_.state_names_.size(); ++s) {
        if (model_.state_names_[s].empty()) {
            model_.state_names_[s] = std::to_string(s);
        }
    }
    model_.initial_ = initial;
    MarkovAutomaton result = std::move(model_);
    model_ = MarkovAutomaton();
    action_lookup_.clear();
    return result;
}

}  // namespace moma
