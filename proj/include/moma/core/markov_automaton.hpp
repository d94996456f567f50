#pragma once

#include <optional>
#include <ranges>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "moma/core/types.hpp"

namespace moma {

enum class StateKind { Markovian, Probabilistic };

struct Transition {
    StateId target;
    double probability;
    bool operator==(const Transition&) const = default;
};

// Rewards aligned with one model: one entry per state and one per transition entry.
// State rewards are rates per time unit and only matter on Markovian states.
struct RewardAssignment {
    std::string name;
    std::vector<double> state_rewards;
    std::vector<double> transition_rewards;

    bool operator==(const RewardAssignment&) const = default;
};

// Closed Markov automaton in compressed row form. Every state owns a contiguous range of
// choices; a Markovian state owns exactly one choice labelled kMarkovianAction. MDPs are
// represented with probabilistic states only.
class MarkovAutomaton {
   public:
    using IndexRange = std::ranges::iota_view<std::size_t, std::size_t>;

    MarkovAutomaton() = default;

    [[nodiscard]] std::size_t num_states() const { return kinds_.size(); }
    [[nodiscard]] std::size_t num_choices() const { return choice_actions_.size(); }
    [[nodiscard]] std::size_t num_transitions() const { return transitions_.size(); }
    [[nodiscard]] std::size_t num_markovian_states() const;

    [[nodiscard]] StateKind kind(StateId s) const { return kinds_[s]; }
    [[nodiscard]] bool is_markovian(StateId s) const { return kinds_[s] == StateKind::Markovian; }
    [[nodiscard]] double exit_rate(StateId s) const { return rates_[s]; }

    [[nodiscard]] std::size_t choice_begin(StateId s) const { return choice_offsets_[s]; }
    [[nodiscard]] std::size_t choice_end(StateId s) const { return choice_offsets_[s + 1]; }
    [[nodiscard]] std::size_t num_choices(StateId s) const { return choice_end(s) - choice_begin(s); }
    [[nodiscard]] IndexRange choices(StateId s) const { return {choice_begin(s), choice_end(s)}; }
    [[nodiscard]] StateId choice_state(std::size_t c) const { return choice_states_[c]; }
    [[nodiscard]] ActionId choice_action(std::size_t c) const { return choice_actions_[c]; }

    [[nodiscard]] std::size_t transition_begin(std::size_t c) const { return transition_offsets_[c]; }
    [[nodiscard]] std::size_t transition_end(std::size_t c) const { return transition_offsets_[c + 1]; }
    [[nodiscard]] std::span<const Transition> transitions(std::size_t c) const {
        return {transitions_.data() + transition_begin(c), transition_end(c) - transition_begin(c)};
    }
    [[nodiscard]] const std::vector<Transition>& all_transitions() const { return transitions_; }

    [[nodiscard]] StateId initial_state() const { return initial_; }

    [[nodiscard]] const std::string& state_name(StateId s) const { return state_names_[s]; }
    [[nodiscard]] const std::vector<std::string>& state_names() const { return state_names_; }
    [[nodiscard]] std::optional<StateId> find_state(std::string_view name) const;
    [[nodiscard]] std::string action_name(ActionId a) const;
    [[nodiscard]] const std::vector<std::string>& action_names() const { return action_names_; }
    [[nodiscard]] std::optional<ActionId> find_action(std::string_view name) const;
    // Local index of the choice of s labelled a, if any.
    [[nodiscard]] std::optional<std::size_t> find_choice(StateId s, ActionId a) const;

    [[nodiscard]] const std::vector<RewardAssignment>& rewards() const { return rewards_; }
    [[nodiscard]] const RewardAssignment* find_reward(std::string_view name) const;
    [[nodiscard]] std::size_t reward_index(std::string_view name) const;
    // Appends an aligned reward assignment and returns its index. Throws on misaligned sizes.
    std::size_t add_reward(RewardAssignment reward);
    void set_rewards(std::vector<RewardAssignment> rewards);

    [[nodiscard]] RewardAssignment zero_reward(std::string name = {}) const;

    bool operator==(const MarkovAutomaton&) const = default;

   private:
    friend class ModelBuilder;

    std::vector<StateKind> kinds_;
    std::vector<double> rates_;
    std::vector<std::size_t> choice_offsets_{0};
    std::vector<StateId> choice_states_;
    std::vector<ActionId> choice_actions_;
    std::vector<std::size_t> transition_offsets_{0};
    std::vector<Transition> transitions_;
    StateId initial_ = 0;
    std::vector<std::string> state_names_;
    std::vector<std::string> action_names_;
    std::vector<RewardAssignment> rewards_;
};

// Expected reward collected when choice c is taken once: the state reward times the expected
// sojourn for Markovian choices plus the expected transition reward.
[[nodiscard]] double choice_reward(const MarkovAutomaton& m, const RewardAssignment& r, std::size_t c);
// Exact test whether taking choice c may ever collect a nonzero reward under r.
[[nodiscard]] bool choice_has_nonzero_reward(const MarkovAutomaton& m, const RewardAssignment& r, std::size_t c);
// Expected time spent when choice c is taken: 1/rate for Markovian choices, 0 otherwise.
[[nodiscard]] double choice_duration(const MarkovAutomaton& m, std::size_t c);

[[nodiscard]] RewardAssignment scaled_reward(const RewardAssignment& r, double factor, std::string name);
void add_scaled_reward(RewardAssignment& accumulator, const RewardAssignment& r, double factor);

// Memoryless deterministic strategy stored as one local choice index per state. Markovian
// states always map to their single choice.
class MDStrategy {
   public:
    static constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();

    MDStrategy() = default;
    explicit MDStrategy(std::size_t numStates) : choices_(numStates, kUnset) {}

    // Strategy picking the first choice everywhere.
    static MDStrategy first_choice(const MarkovAutomaton& m);

    [[nodiscard]] std::size_t size() const { return choices_.size(); }
    [[nodiscard]] bool is_set(StateId s) const { return choices_[s] != kUnset; }
    [[nodiscard]] std::uint32_t local_choice(StateId s) const { return choices_[s]; }
    void set(StateId s, std::uint32_t localChoice) { choices_[s] = localChoice; }

    // Global choice index taken at s. Unset probabilistic states throw.
    [[nodiscard]] std::size_t choice(const MarkovAutomaton& m, StateId s) const;
    [[nodiscard]] ActionId action(const MarkovAutomaton& m, StateId s) const;

    bool operator==(const MDStrategy&) const = default;

   private:
    std::vector<std::uint32_t> choices_;
};

// Records where states and transitions of a derived model come from.
struct ModelMapping {
    std::vector<StateId> state_origin;
    std::vector<std::size_t> choice_origin;
    std::vector<std::size_t> transition_origin;

    // Reward on the derived model: inherited entries copied, fresh entries zero.
    [[nodiscard]] RewardAssignment pull_back(const RewardAssignment& r, const MarkovAutomaton& derived) const;
    // Replaces the embedded rewards of derived with the pulled-back rewards of source.
    void carry_rewards(const MarkovAutomaton& source, MarkovAutomaton& derived) const;
};

// Sequential builder: states are appended in order, choices belong to the most recently added
// state, transitions to the most recently added choice.
class ModelBuilder {
   public:
    // Also opens the single Markovian choice of the new state.
    StateId add_markovian_state(double rate, std::string name = {}, StateId origin = kNoState,
                                std::size_t choiceOrigin = kNoIndex);
    StateId add_probabilistic_state(std::string name = {}, StateId origin = kNoState);
    std::size_t add_choice(ActionId action, std::size_t origin = kNoIndex);
    std::size_t add_transition(StateId target, double probability, std::size_t origin = kNoIndex);

    ActionId intern_action(std::string_view name);
    void set_action_names(std::vector<std::string> names);

    [[nodiscard]] std::size_t num_states() const { return model_.kinds_.size(); }
    [[nodiscard]] std::size_t num_choices() const { return model_.choice_actions_.size(); }
    [[nodiscard]] std::size_t num_transitions() const { return model_.transitions_.size(); }

    [[nodiscard]] const ModelMapping& mapping() const { return mapping_; }

    // Finishes the model. Unnamed states get their index as name. Embedded rewards are empty.
    MarkovAutomaton build(StateId initial);

   private:
    MarkovAutomaton model_;
    ModelMapping mapping_;
    std::unordered_map<std::string, ActionId> action_lookup_;
};

}  // namespace moma
