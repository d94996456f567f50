#include "moma/single/long_run_average.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

namespace moma {

ScalarSolution mec_lra(const MarkovAutomaton& sub, const RewardAssignment& r, double eps, const LraOptions& options) {
    std::size_t n = sub.num_states();
    std::vector<StateId> markovian;
    double maxRate = 0.0;
    for (StateId s = 0; s < n; ++s) {
        if (sub.is_markovian(s)) {
            markovian.push_back(s);
            maxRate = std::max(maxRate, sub.exit_rate(s));
        }
    }
    if (markovian.empty()) {
        throw ModelError("end component without Markovian state: long-run average undefined");
    }
    const double uniformRate = maxRate / options.damping;
    std::vector<double> move(n, 0.0);
    std::vector<double> stepReward(n, 0.0);
    for (StateId s : markovian) {
        move[s] = sub.exit_rate(s) / uniformRate;
        stepReward[s] = move[s] * choice_reward(sub, r, sub.choice_begin(s));
    }
    std::vector<double> rho(sub.num_choices(), 0.0);
    for (std::size_t c = 0; c < sub.num_choices(); ++c) {
        if (!sub.is_markovian(sub.choice_state(c))) {
            rho[c] = choice_reward(sub, r, c);
        }
    }

    // Sweep order for probabilistic states: closest to a Markovian state first.
    std::vector<StateId> order;
    {
        std::vector<std::vector<StateId>> predecessors(n);
        for (StateId s = 0; s < n; ++s) {
            if (sub.is_markovian(s)) {
                continue;
            }
            for (std::size_t c : sub.choices(s)) {
                for (const auto& t : sub.transitions(c)) {
                    predecessors[t.target].push_back(s);
                }
            }
        }
        std::vector<bool> seen(n, false);
        std::deque<StateId> queue(markovian.begin(), markovian.end());
        for (StateId s : markovian) {
            seen[s] = true;
        }
        while (!queue.empty()) {
            StateId s = queue.front();
            queue.pop_front();
            for (StateId p : predecessors[s]) {
                if (!seen[p]) {
                    seen[p] = true;
                    order.push_back(p);
                    queue.push_back(p);
                }
            }
        }
        for (StateId s = 0; s < n; ++s) {
            if (!seen[s]) {
                order.push_back(s);
            }
        }
    }

    auto qValue = [&](const std::vector<double>& val, std::size_t c) {
        double q = rho[c];
        for (const auto& t : sub.transitions(c)) {
            q += t.probability * val[t.target];
        }
        return q;
    };

    std::vector<double> val(n, 0.0);
    std::vector<double> next(n, 0.0);
    double gainScale = 1.0;
    ScalarSolution solution;
    for (std::size_t iteration = 1;; ++iteration) {
        if (iteration > options.max_iterations) {
            throw SolverError("long-run average value iteration did not converge");
        }
        // Resolve the instantaneous part for the current Markovian values.
        double innerTolerance = 1e-4 * eps * gainScale / uniformRate;
        for (std::size_t sweep = 0;; ++sweep) {
            double change = 0.0;
            double magnitude = 0.0;
            for (StateId p : order) {
                double best = -std::numeric_limits<double>::infinity();
                for (std::size_t c : sub.choices(p)) {
                    best = std::max(best, qValue(val, c));
                }
                change = std::max(change, std::abs(best - val[p]));
                magnitude = std::max(magnitude, std::abs(best));
                val[p] = best;
            }
            if (change <= std::max(innerTolerance, 1e-15 * (1.0 + magnitude))) {
                break;
            }
            if (sweep > options.max_iterations) {
                throw SolverError("instantaneous states of an end component do not reach a Markovian state");
            }
        }
        double lo = std::numeric_limits<double>::infinity();
        double hi = -std::numeric_limits<double>::infinity();
        for (StateId s : markovian) {
            std::size_t c = sub.choice_begin(s);
            double moved = 0.0;
            for (const auto& t : sub.transitions(c)) {
                moved += t.probability * val[t.target];
            }
            next[s] = stepReward[s] + move[s] * moved + (1.0 - move[s]) * val[s];
            double diff = next[s] - val[s];
            lo = std::min(lo, diff);
            hi = std::max(hi, diff);
        }
        double lb = uniformRate * lo;
        double ub = uniformRate * hi;
        double mid = 0.5 * (lb + ub);
        gainScale = std::max(1.0, std::max(std::abs(lb), std::abs(ub)));
        if (0.5 * (ub - lb) <= relative_tolerance(eps, mid) || iteration == options.max_iterations) {
            if (0.5 * (ub - lb) > relative_tolerance(eps, mid)) {
                throw SolverError("long-run average value iteration did not converge");
            }
            solution.value = mid;
            solution.error_bound = 0.5 * (ub - lb) + uniformRate * innerTolerance;
            solution.iterations = iteration;
            solution.strategy = MDStrategy(n);
            for (StateId s = 0; s < n; ++s) {
                if (sub.is_markovian(s)) {
                    solution.strategy.set(s, 0);
                    continue;
                }
                std::size_t best = sub.choice_begin(s);
                double bestValue = qValue(val, best);
                for (std::size_t c = best + 1; c < sub.choice_end(s); ++c) {
                    double q = qValue(val, c);
                    if (q > bestValue + 1e-12 * std::max(1.0, std::abs(bestValue))) {
                        best = c;
                        bestValue = q;
                    }
                }
                solution.strategy.set(s, static_cast<std::uint32_t>(best - sub.choice_begin(s)));
            }
            return solution;
        }
        double shift = next[markovian.front()];
        for (StateId s : markovian) {
            val[s] = next[s] - shift;
        }
        for (StateId p : order) {
            val[p] -= shift;
        }
    }
}

}  // namespace moma
