#include "moma/weighted/weighted_sum.hpp"

#include "moma/graph/end_components.hpp"
#include "moma/single/long_run_average.hpp"
#include "moma/single/total_reward.hpp"

namespace moma {

WeightedSumSolver::WeightedSumSolver(const PreparedProblem& problem, double eps) : problem_(&problem), eps_(eps) {
    const MarkovAutomaton& m = problem.model;
    std::vector<EndComponent> ecs = zero_mecs(m, problem.total_rewards());
    for (const auto& ec : ecs) {
        sub_.push_back(sub_ma(m, ec));
    }
    quotient_ = quotient(m, std::move(ecs), true);
    bottom_transition_.assign(quotient_.ecs.size(), kNoIndex);
    for (std::size_t c = 0; c < quotient_.model.num_choices(); ++c) {
        const QuotientChoice& info = quotient_.choice_info[c];
        if (info.kind == QuotientChoiceKind::Bottom) {
            bottom_transition_[info.ec] = quotient_.model.transition_begin(c);
        }
    }
}

std::size_t WeightedSumSolver::states_in_zero_ecs() const {
    std::size_t count = 0;
    for (const auto& ec : quotient_.ecs) {
        count += ec.states.size();
    }
    return count;
}

WeightedResult WeightedSumSolver::optimize(const WeightVector& w) const {
    const MarkovAutomaton& m = problem_->model;
    auto [total, lra] = combine_rewards(*problem_, w);
    bool anyLra = false;
    for (std::size_t j = 0; j < problem_->dimension(); ++j) {
        anyLra |= problem_->normalized[j].kind == ObjectiveKind::LongRunAverage && w[j] != 0.0;
    }

    WeightedResult result;
    std::vector<MDStrategy> stay;
    for (std::size_t i = 0; i < quotient_.ecs.size(); ++i) {
        if (!anyLra) {
            result.ec_values.push_back(0.0);
            stay.push_back(stay_within(m, quotient_.ecs[i]));
            continue;
        }
        const DerivedModel& sub = sub_[i];
        ScalarSolution gain = mec_lra(sub.model, sub.mapping.pull_back(lra, sub.model), eps_ / 2);
        // The upper end keeps the halfspace sound.
        result.ec_values.push_back(gain.upper());
        MDStrategy sigma(m.num_states());
        for (StateId s = 0; s < sub.model.num_states(); ++s) {
            StateId origin = sub.mapping.state_origin[s];
            std::size_t c = sub.mapping.choice_origin[gain.strategy.choice(sub.model, s)];
            sigma.set(origin, static_cast<std::uint32_t>(c - m.choice_begin(origin)));
        }
        stay.push_back(std::move(sigma));
    }

    RewardAssignment star = quotient_.mapping.pull_back(total, quotient_.model);
    for (std::size_t i = 0; i < quotient_.ecs.size(); ++i) {
        star.transition_rewards[bottom_transition_[i]] = result.ec_values[i];
    }
    ScalarSolution solution = max_total_reward(quotient_.model, star, quotient_.bottom_state);
    result.value = solution.value + solution.error_bound;
    result.strategy = stitch_strategy(solution.strategy, stay, quotient_, m);
    return result;
}

WeightedResult optimize_weighted(const PreparedProblem& problem, const WeightVector& w, double eps) {
    return WeightedSumSolver(problem, eps).optimize(w);
}

MDStrategy stitch_strategy(const MDStrategy& quotientSigma, const std::vector<MDStrategy>& perEc,
                           const QuotientModel& q, const MarkovAutomaton& m) {
    MDStrategy sigma = lift_strategy(m, q, quotientSigma, perEc);
    for (StateId s = 0; s < m.num_states(); ++s) {
        if (!sigma.is_set(s)) {
            sigma.set(s, 0);
        }
    }
    return sigma;
}

}  // namespace moma
