#pragma once

#include <vector>

#include "moma/core/transform.hpp"
#include "moma/graph/quotient.hpp"
#include "moma/single/solution.hpp"
#include "moma/weighted/problem.hpp"

namespace moma {

struct WeightedResult {
    // v_w: upper bound on the best weighted sum, within eps of what strategy achieves.
    double value = 0.0;
    MDStrategy strategy;
    // Per zero-reward end component: the LRA value used for its bottom action.
    std::vector<double> ec_values;
};

// Weighted-sum optimization for a fixed prepared problem. The zero-reward end components, their
// sub-models and the quotient are computed once and reused for every weight vector.
class WeightedSumSolver {
   public:
    WeightedSumSolver(const PreparedProblem& problem, double eps);

    [[nodiscard]] WeightedResult optimize(const WeightVector& w) const;

    [[nodiscard]] const std::vector<EndComponent>& zero_ecs() const { return quotient_.ecs; }
    [[nodiscard]] std::size_t states_in_zero_ecs() const;
    [[nodiscard]] const QuotientModel& quotient_model() const { return quotient_; }

   private:
    const PreparedProblem* problem_;
    double eps_;
    std::vector<DerivedModel> sub_;
    QuotientModel quotient_;
    // Per component: transition index of its bottom action in the quotient.
    std::vector<std::size_t> bottom_transition_;
};

[[nodiscard]] WeightedResult optimize_weighted(const PreparedProblem& problem, const WeightVector& w, double eps);

// Strategy for the original model from a strategy on the quotient and one staying strategy per
// collapsed component.
[[nodiscard]] MDStrategy stitch_strategy(const MDStrategy& quotientSigma, const std::vector<MDStrategy>& perEc,
                                         const QuotientModel& q, const MarkovAutomaton& m);

}  // namespace moma
