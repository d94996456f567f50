#pragma once

#include <utility>
#include <vector>

#include "moma/core/markov_automaton.hpp"
#include "moma/core/objective.hpp"
#include "moma/graph/end_component.hpp"
#include "moma/single/chain_evaluation.hpp"

namespace moma {

// Nonnegative weights summing to one.
class WeightVector {
   public:
    static constexpr double kSumTolerance = 1e-12;

    WeightVector() = default;
    // Throws std::invalid_argument on negative entries or a sum away from 1.
    explicit WeightVector(std::vector<double> entries);
    static WeightVector unit(std::size_t dimension, std::size_t j);

    [[nodiscard]] std::size_t size() const { return entries_.size(); }
    [[nodiscard]] double operator[](std::size_t j) const { return entries_[j]; }
    [[nodiscard]] const std::vector<double>& entries() const { return entries_; }
    [[nodiscard]] double dot(const std::vector<double>& point) const;

    bool operator==(const WeightVector&) const = default;

   private:
    std::vector<double> entries_;
};

// Objectives brought into the form the weighted-sum solver works on: a single model in which
// every objective is a maximized LRA or total reward over an embedded assignment.
struct PreparedProblem {
    MarkovAutomaton model;
    std::vector<Objective> objectives;
    std::vector<NormalizedObjective> normalized;
    // Per analyzed state: the input state it stands for, kNoState for fresh states.
    std::vector<StateId> state_origin;
    bool embedded_mdp = false;
    std::vector<EndComponent> mecs;

    [[nodiscard]] std::size_t dimension() const { return normalized.size(); }
    [[nodiscard]] bool has_lra() const;
    [[nodiscard]] const RewardAssignment& reward(std::size_t j) const { return model.rewards()[normalized[j].reward]; }
    // Total-kind assignments, in objective order.
    [[nodiscard]] std::vector<const RewardAssignment*> total_rewards() const;
    [[nodiscard]] std::vector<RewardObjective> reward_objectives() const;
};

// Validates the model, resolves reward names, unfolds reachability and goal-bounded objectives,
// embeds MDPs when LRA objectives are present, negates minimized objectives and checks the
// standing assumptions (non-Zeno with LRA objectives, sign consistency, finiteness).
// Throws ModelError for unknown rewards or states and AssumptionError for violations.
[[nodiscard]] PreparedProblem prepare_problem(const MarkovAutomaton& input, const std::vector<Objective>& objectives);

// Weighted sums of the total-kind and the LRA-kind objective rewards, in that order.
[[nodiscard]] std::pair<RewardAssignment, RewardAssignment> combine_rewards(const PreparedProblem& problem,
                                                                           const WeightVector& w);

}  // namespace moma
