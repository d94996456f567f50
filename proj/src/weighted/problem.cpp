#include "moma/weighted/problem.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "moma/core/transform.hpp"
#include "moma/core/validation.hpp"
#include "moma/graph/end_components.hpp"
#include "moma/graph/quotient.hpp"
#include "moma/single/reach_transform.hpp"
#include "moma/single/total_reward.hpp"

namespace moma {

WeightVector::WeightVector(std::vector<double> entries) : entries_(std::move(entries)) {
    double sum = 0.0;
    for (double e : entries_) {
        if (!(e >= 0.0) || !std::isfinite(e)) {
            throw std::invalid_argument("weight entries must be finite and nonnegative");
        }
        sum += e;
    }
    if (entries_.empty() || std::abs(sum - 1.0) > kSumTolerance) {
        throw std::invalid_argument("weights must sum to 1");
    }
}

WeightVector WeightVector::unit(std::size_t dimension, std::size_t j) {
    std::vector<double> entries(dimension, 0.0);
    entries.at(j) = 1.0;
    return WeightVector(std::move(entries));
}

double WeightVector::dot(const std::vector<double>& point) const {
    double sum = 0.0;
    for (std::size_t j = 0; j < entries_.size(); ++j) {
        if (entries_[j] != 0.0) {
            sum += entries_[j] * point[j];
        }
    }
    return sum;
}

bool PreparedProblem::has_lra() const {
    return std::any_of(normalized.begin(), normalized.end(),
                       [](const NormalizedObjective& o) { return o.kind == ObjectiveKind::LongRunAverage; });
}

std::vector<const RewardAssignment*> PreparedProblem::total_rewards() const {
    std::vector<const RewardAssignment*> result;
    for (const auto& o : normalized) {
        if (o.kind == ObjectiveKind::Total) {
            result.push_back(&model.rewards()[o.reward]);
        }
    }
    return result;
}

std::vector<RewardObjective> PreparedProblem::reward_objectives() const {
    std::vector<RewardObjective> result;
    for (const auto& o : normalized) {
        result.push_back({o.kind, &model.rewards()[o.reward]});
    }
    return result;
}

PreparedProblem prepare_problem(const MarkovAutomaton& input, const std::vector<Objective>& objectives) {
    if (objectives.empty()) {
        throw ModelError("at least one objective is required");
    }
    ValidationReport wellFormed = validate_model(input);
    if (!wellFormed.ok()) {
        throw AssumptionError(wellFormed);
    }
    bool hasLra = false;
    for (const auto& o : objectives) {
        if (o.kind == ObjectiveKind::Reachability && o.goal.empty()) {
            throw ModelError("reachability objective with an empty goal set");
        }
        if (o.kind != ObjectiveKind::Reachability) {
            (void)input.reward_index(o.reward);
        }
        for (StateId s : o.goal) {
            if (s >= input.num_states()) {
                throw ModelError("goal state out of range");
            }
        }
        hasLra |= o.kind == ObjectiveKind::LongRunAverage;
    }

    PreparedProblem problem;
    problem.objectives = objectives;
    MarkovAutomaton model = input;
    std::vector<StateId> origin(input.num_states());
    for (StateId s = 0; s < input.num_states(); ++s) {
        origin[s] = s;
    }
    // Unfold goals; each unfolded objective gets its reward embedded right away so that later
    // products carry it along.
    std::vector<std::string> rewardNames(objectives.size());
    for (std::size_t j = 0; j < objectives.size(); ++j) {
        const Objective& o = objectives[j];
        if (o.goal.empty()) {
            rewardNames[j] = o.reward;
            continue;
        }
        std::vector<bool> inGoal(input.num_states(), false);
        for (StateId s : o.goal) {
            inGoal[s] = true;
        }
        std::vector<StateId> goal;
        for (StateId s = 0; s < model.num_states(); ++s) {
            if (origin[s] != kNoState && inGoal[origin[s]]) {
                goal.push_back(s);
            }
        }
        rewardNames[j] = "#goal" + std::to_string(j + 1);
        const RewardAssignment* base = o.kind == ObjectiveKind::Reachability ? nullptr : model.find_reward(o.reward);
        if (goal.empty()) {
            // Goal unreachable in the current model: nothing is ever paid or stopped.
            RewardAssignment r = base ? *base : model.zero_reward();
            r.name = rewardNames[j];
            model.add_reward(std::move(r));
            continue;
        }
        ReachProduct product = reach_to_total(model, goal, base, rewardNames[j]);
        std::vector<StateId> composed(product.model.num_states(), kNoState);
        for (StateId s = 0; s < product.model.num_states(); ++s) {
            StateId o2 = product.mapping.state_origin[s];
            composed[s] = o2 == kNoState ? kNoState : origin[o2];
        }
        origin = std::move(composed);
        model = std::move(product.model);
        model.add_reward(std::move(product.reward));
    }
    if (hasLra && input.num_markovian_states() == 0) {
        DerivedModel embedded = embed_mdp(model);
        std::vector<StateId> composed(embedded.model.num_states(), kNoState);
        for (StateId s = 0; s < embedded.model.num_states(); ++s) {
            StateId o2 = embedded.mapping.state_origin[s];
            composed[s] = o2 == kNoState ? kNoState : origin[o2];
        }
        origin = std::move(composed);
        model = std::move(embedded.model);
        problem.embedded_mdp = true;
    }

    // One fresh maximized assignment per objective.
    std::vector<RewardAssignment> fresh;
    for (std::size_t j = 0; j < objectives.size(); ++j) {
        const Objective& o = objectives[j];
        bool negated = o.direction == Direction::Minimize;
        fresh.push_back(scaled_reward(model.rewards()[model.reward_index(rewardNames[j])], negated ? -1.0 : 1.0,
                                      "#f" + std::to_string(j + 1)));
        ObjectiveKind kind = o.kind == ObjectiveKind::LongRunAverage ? ObjectiveKind::LongRunAverage : ObjectiveKind::Total;
        problem.normalized.push_back({kind, 0, negated});
    }
    for (std::size_t j = 0; j < fresh.size(); ++j) {
        problem.normalized[j].reward = model.add_reward(std::move(fresh[j]));
    }
    problem.model = std::move(model);
    problem.state_origin = std::move(origin);

    problem.mecs = mec_decomposition(problem.model);
    ValidationReport report;
    if (hasLra) {
        report.append(check_non_zeno(problem.model, problem.mecs));
    }
    auto totals = problem.total_rewards();
    SignReport signs = check_sign_consistency(problem.model, totals, problem.mecs);
    report.append(signs.report);
    report.append(check_finiteness(problem.model, totals, problem.mecs, signs.signs));
    if (!report.ok()) {
        throw AssumptionError(report);
    }
    // Some strategy must keep every total finite, i.e. reach the zero-reward components
    // almost surely. Otherwise every point has a minus infinity coordinate.
    if (!totals.empty()) {
        QuotientModel q = quotient(problem.model, zero_mecs(problem.model, totals));
        std::vector<bool> all(q.model.num_states(), true);
        if (!prob1e(q.model, q.bottom_state, all)[q.model.initial_state()]) {
            report.add(Assumption::Finiteness, "objectives",
                       "every strategy collects minus infinity on some total objective; consider dropping one");
            throw AssumptionError(report);
        }
    }
    return problem;
}

std::pair<RewardAssignment, RewardAssignment> combine_rewards(const PreparedProblem& problem, const WeightVector& w) {
    if (w.size() != problem.dimension()) {
        throw std::invalid_argument("weight vector dimension does not match the objectives");
    }
    RewardAssignment total = problem.model.zero_reward("#total");
    RewardAssignment lra = problem.model.zero_reward("#lra");
    for (std::size_t j = 0; j < problem.dimension(); ++j) {
        if (w[j] == 0.0) {
            continue;
        }
        RewardAssignment& target = problem.normalized[j].kind == ObjectiveKind::LongRunAverage ? lra : total;
        add_scaled_reward(target, problem.reward(j), w[j]);
    }
    return {std::move(total), std::move(lra)};
}

}  // namespace moma
