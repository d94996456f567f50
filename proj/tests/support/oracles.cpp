#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace moma::test {

void for_each_md_strategy(const MarkovAutomaton& m, const std::function<void(const MDStrategy&)>& f) {
    std::vector<StateId> free;
    MDStrategy sigma(m.num_states());
    for (StateId s = 0; s < m.num_states(); ++s) {
        sigma.set(s, 0);
        if (!m.is_markovian(s) && m.num_choices(s) > 1) {
            free.push_back(s);
        }
    }
    while (true) {
        f(sigma);
        std::size_t i = 0;
        for (; i < free.size(); ++i) {
            StateId s = free[i];
            if (sigma.local_choice(s) + 1 < m.num_choices(s)) {
                sigma.set(s, sigma.local_choice(s) + 1);
                break;
            }
            sigma.set(s, 0);
        }
        if (i == free.size()) {
            return;
        }
    }
}

std::size_t count_md_strategies(const MarkovAutomaton& m) {
    std::size_t count = 1;
    for (StateId s = 0; s < m.num_states(); ++s) {
        if (!m.is_markovian(s)) {
            count *= m.num_choices(s);
        }
    }
    return count;
}

namespace {

bool strongly_connected(const std::vector<std::vector<bool>>& edge, const std::vector<StateId>& states) {
    std::size_t k = states.size();
    // Transitive closure on the member states.
    std::vector<std::vector<bool>> reach(k, std::vector<bool>(k, false));
    for (std::size_t i = 0; i < k; ++i) {
        reach[i][i] = true;
        for (std::size_t j = 0; j < k; ++j) {
            if (edge[states[i]][states[j]]) {
                reach[i][j] = true;
            }
        }
    }
    for (std::size_t via = 0; via < k; ++via) {
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) {
                if (reach[i][via] && reach[via][j]) {
                    reach[i][j] = true;
                }
            }
        }
    }
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            if (!reach[i][j]) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace

std::vector<EndComponent> brute_force_mecs(const MarkovAutomaton& m, const std::vector<bool>& allowed) {
    std::size_t n = m.num_states();
    if (n > 20) {
        throw std::invalid_argument("brute force enumeration is limited to 20 states");
    }
    std::vector<EndComponent> ecs;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        auto inside = [&](StateId s) { return ((mask >> s) & 1u) != 0; };
        EndComponent ec;
        bool ok = true;
        std::vector<std::vector<bool>> edge(n, std::vector<bool>(n, false));
        for (StateId s = 0; s < n && ok; ++s) {
            if (!inside(s)) {
                continue;
            }
            ec.states.push_back(s);
            bool any = false;
            for (std::size_t c : m.choices(s)) {
                if (!allowed.empty() && !allowed[c]) {
                    continue;
                }
                bool stays = true;
                for (const auto& t : m.transitions(c)) {
                    stays = stays && inside(t.target);
                }
                if (!stays) {
                    continue;
                }
                any = true;
                ec.choices.push_back(c);
                for (const auto& t : m.transitions(c)) {
                    edge[s][t.target] = true;
                }
            }
            ok = any;
        }
        if (ok && strongly_connected(edge, ec.states)) {
            ecs.push_back(std::move(ec));
        }
    }
    std::vector<EndComponent> maximal;
    for (const auto& a : ecs) {
        bool dominated = std::any_of(ecs.begin(), ecs.end(), [&](const EndComponent& b) {
            return b.states.size() > a.states.size() &&
                   std::includes(b.states.begin(), b.states.end(), a.states.begin(), a.states.end());
        });
        if (!dominated) {
            maximal.push_back(a);
        }
    }
    std::sort(maximal.begin(), maximal.end(),
              [](const EndComponent& a, const EndComponent& b) { return a.states.front() < b.states.front(); });
    return maximal;
}

std::vector<bool> zero_choices(const MarkovAutomaton& m, const std::vector<const RewardAssignment*>& totals) {
    std::vector<bool> allowed(m.num_choices(), true);
    for (StateId s = 0; s < m.num_states(); ++s) {
        for (std::size_t c : m.choices(s)) {
            for (const auto* r : totals) {
                if (m.is_markovian(s) && r->state_rewards[s] != 0.0) {
                    allowed[c] = false;
                }
                for (std::size_t t = m.transition_begin(c); t < m.transition_end(c); ++t) {
                    if (r->transition_rewards[t] != 0.0) {
                        allowed[c] = false;
                    }
                }
            }
        }
    }
    return allowed;
}

double weighted_value(const std::vector<ExtendedValue>& point, const std::vector<double>& w) {
    double sum = 0.0;
    for (std::size_t j = 0; j < point.size(); ++j) {
        if (!point[j].is_finite()) {
            return -std::numeric_limits<double>::infinity();
        }
        sum += w[j] * point[j].value;
    }
    return sum;
}

WeightedOracle::WeightedOracle(const PreparedProblem& problem) {
    std::vector<RewardObjective> objectives = problem.reward_objectives();
    for_each_md_strategy(problem.model, [&](const MDStrategy& sigma) {
        ChainEvaluation e = evaluate_strategy(problem.model, sigma, objectives);
        std::vector<double> p;
        for (const auto& v : e.values) {
            if (!v.is_finite()) {
                return;
            }
            p.push_back(v.value);
        }
        points_.push_back(std::move(p));
    });
}

double WeightedOracle::best(const std::vector<double>& w) const {
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& p : points_) {
        double v = 0.0;
        for (std::size_t j = 0; j < p.size(); ++j) {
            v += w[j] * p[j];
        }
        best = std::max(best, v);
    }
    return best;
}

std::vector<double> dense_solve(std::vector<std::vector<double>> a, std::vector<double> b) {
    std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t row = col + 1; row < n; ++row) {
            if (std::abs(a[row][col]) > std::abs(a[pivot][col])) {
                pivot = row;
            }
        }
        if (std::abs(a[pivot][col]) < 1e-14) {
            throw std::runtime_error("singular system");
        }
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        for (std::size_t row = col + 1; row < n; ++row) {
            double f = a[row][col] / a[col][col];
            if (f == 0.0) {
                continue;
            }
            for (std::size_t k = col; k < n; ++k) {
                a[row][k] -= f * a[col][k];
            }
            b[row] -= f * b[col];
        }
    }
    std::vector<double> x(n);
    for (std::size_t i = n; i-- > 0;) {
        double sum = b[i];
        for (std::size_t k = i + 1; k < n; ++k) {
            sum -= a[i][k] * x[k];
        }
        x[i] = sum / a[i][i];
    }
    return x;
}

double step_lra(const MarkovAutomaton& mdp, const MDStrategy& sigma, const RewardAssignment& r) {
    std::size_t n = mdp.num_states();
    std::vector<std::vector<double>> p(n, std::vector<double>(n, 0.0));
    std::vector<double> reward(n, 0.0);
    for (StateId s = 0; s < n; ++s) {
        std::size_t c = mdp.choice_begin(s) + sigma.local_choice(s);
        for (std::size_t t = mdp.transition_begin(c); t < mdp.transition_end(c); ++t) {
            const Transition& tr = mdp.all_transitions()[t];
            p[s][tr.target] += tr.probability;
            reward[s] += tr.probability * r.transition_rewards[t];
        }
    }
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
        reach[i][i] = true;
        for (std::size_t j = 0; j < n; ++j) {
            reach[i][j] = reach[i][j] || p[i][j] > 0.0;
        }
    }
    for (std::size_t via = 0; via < n; ++via) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                reach[i][j] = reach[i][j] || (reach[i][via] && reach[via][j]);
            }
        }
    }
    // Recurrent states reach only states that reach them back.
    std::vector<bool> recurrent(n, true);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (reach[i][j] && !reach[j][i]) {
                recurrent[i] = false;
            }
        }
    }
    // Gain per recurrent class from its stationary distribution.
    std::vector<double> gain(n, 0.0);
    std::vector<bool> done(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (!recurrent[i] || done[i]) {
            continue;
        }
        std::vector<std::size_t> cls;
        for (std::size_t j = 0; j < n; ++j) {
            if (reach[i][j]) {
                cls.push_back(j);
            }
        }
        std::size_t k = cls.size();
        // pi (P - I) = 0 with the last equation replaced by sum pi = 1.
        std::vector<std::vector<double>> a(k, std::vector<double>(k, 0.0));
        std::vector<double> b(k, 0.0);
        for (std::size_t row = 0; row < k; ++row) {
            for (std::size_t col = 0; col < k; ++col) {
                a[row][col] = p[cls[col]][cls[row]] - (row == col ? 1.0 : 0.0);
            }
        }
        std::fill(a[k - 1].begin(), a[k - 1].end(), 1.0);
        b[k - 1] = 1.0;
        std::vector<double> pi = dense_solve(a, b);
        double g = 0.0;
        for (std::size_t j = 0; j < k; ++j) {
            g += pi[j] * reward[cls[j]];
        }
        for (std::size_t j : cls) {
            gain[j] = g;
            done[j] = true;
        }
    }
    // Transient states: g = P g.
    std::vector<std::size_t> transient;
    std::vector<std::size_t> index(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (!recurrent[i]) {
            index[i] = transient.size();
            transient.push_back(i);
        }
    }
    if (!transient.empty()) {
        std::size_t k = transient.size();
        std::vector<std::vector<double>> a(k, std::vector<double>(k, 0.0));
        std::vector<double> b(k, 0.0);
        for (std::size_t row = 0; row < k; ++row) {
            std::size_t s = transient[row];
            a[row][row] = 1.0;
            for (std::size_t j = 0; j < n; ++j) {
                if (p[s][j] == 0.0) {
                    continue;
                }
                if (recurrent[j]) {
                    b[row] += p[s][j] * gain[j];
                } else {
                    a[row][index[j]] -= p[s][j];
                }
            }
        }
        std::vector<double> x = dense_solve(a, b);
        for (std::size_t row = 0; row < k; ++row) {
            gain[transient[row]] = x[row];
        }
    }
    return gain[mdp.initial_state()];
}

}  // namespace moma::test
