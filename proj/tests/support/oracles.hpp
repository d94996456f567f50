#pragma once

#include <functional>
#include <vector>

#include "moma/core/markov_automaton.hpp"
#include "moma/graph/end_component.hpp"
#include "moma/single/chain_evaluation.hpp"
#include "moma/weighted/problem.hpp"

namespace moma::test {

// Calls f for every MD strategy of m (all combinations over all probabilistic states).
void for_each_md_strategy(const MarkovAutomaton& m, const std::function<void(const MDStrategy&)>& f);

[[nodiscard]] std::size_t count_md_strategies(const MarkovAutomaton& m);

// Maximal end components by subset enumeration: a state set is an EC if every state keeps an
// allowed choice staying inside (Markovian states must stay inside) and the graph over those
// choices is strongly connected. An empty allowed vector allows every choice.
[[nodiscard]] std::vector<EndComponent> brute_force_mecs(const MarkovAutomaton& m, const std::vector<bool>& allowed = {});

// Choices allowed in zero-reward components: no reward of totals is nonzero on them.
[[nodiscard]] std::vector<bool> zero_choices(const MarkovAutomaton& m, const std::vector<const RewardAssignment*>& totals);

// All MD strategies of the prepared model evaluated once; weighted sums are maximized over the
// strategies without minus infinity entries.
class WeightedOracle {
   public:
    explicit WeightedOracle(const PreparedProblem& problem);
    [[nodiscard]] double best(const std::vector<double>& w) const;
    [[nodiscard]] const std::vector<std::vector<double>>& points() const { return points_; }

   private:
    std::vector<std::vector<double>> points_;
};

// Weighted value of a point, minus infinity if some coordinate is.
[[nodiscard]] double weighted_value(const std::vector<ExtendedValue>& point, const std::vector<double>& w);

// Long-run average reward per step of an MDP under sigma from its initial state, computed with
// dense Gaussian elimination on the induced jump chain. Only transition rewards count.
[[nodiscard]] double step_lra(const MarkovAutomaton& mdp, const MDStrategy& sigma, const RewardAssignment& r);

// Dense solve of A x = b with partial pivoting.
[[nodiscard]] std::vector<double> dense_solve(std::vector<std::vector<double>> a, std::vector<double> b);

}  // namespace moma::test
