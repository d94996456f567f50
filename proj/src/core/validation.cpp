#include "moma/core/validation.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>
#include <unordered_set>

#include "moma/core/objective.hpp"
#include "moma/graph/end_components.hpp"

namespace moma {

std::string to_string(Assumption assumption) {
    switch (assumption) {
        case Assumption::WellFormed:
            return "WellFormed";
        case Assumption::NonZeno:
            return "NonZeno";
        case Assumption::SignConsistency:
            return "SignConsistency";
        case Assumption::Finiteness:
            return "Finiteness";
    }
    return "?";
}

std::string to_string(ObjectiveKind kind) {
    switch (kind) {
        case ObjectiveKind::LongRunAverage:
            return "lra";
        case ObjectiveKind::Total:
            return "total";
        case ObjectiveKind::Reachability:
            return "reach";
    }
    return "?";
}

std::string to_string(Direction direction) { return direction == Direction::Maximize ? "max" : "min"; }

std::string describe(const Objective& objective) {
    std::string result = to_string(objective.direction) + " " + to_string(objective.kind);
    if (objective.kind != ObjectiveKind::Reachability) {
        result += " " + objective.reward;
    }
    return result;
}

void ValidationReport::append(const ValidationReport& other) {
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

void ValidationReport::add(Assumption assumption, std::string location, std::string message) {
    violations.push_back({assumption, std::move(location), std::move(message)});
}

std::string ValidationReport::to_string() const {
    std::ostringstream out;
    for (const auto& v : violations) {
        out << moma::to_string(v.assumption) << " at " << v.location << ": " << v.message << "\n";
    }
    return out.str();
}

AssumptionError::AssumptionError(ValidationReport report)
    : ModelError("model violates analysis assumptions:\n" + report.to_string()), report_(std::move(report)) {}

namespace {

std::string choice_location(const MarkovAutomaton& m, std::size_t c) {
    StateId s = m.choice_state(c);
    if (m.is_markovian(s)) {
        return "state " + m.state_name(s);
    }
    return "state " + m.state_name(s) + " action " + m.action_name(m.choice_action(c));
}

std::string ec_location(const MarkovAutomaton& m, const EndComponent& ec) {
    std::string result = "end component {";
    for (std::size_t i = 0; i < ec.states.size(); ++i) {
        result += (i ? "," : "") + m.state_name(ec.states[i]);
    }
    return result + "}";
}

std::string format_number(double v) {
    std::ostringstream out;
    out.precision(17);
    out << v;
    return out.str();
}

}  // namespace

ValidationReport validate_model(const MarkovAutomaton& m) {
    ValidationReport report;
    std::size_t n = m.num_states();
    if (n == 0) {
        report.add(Assumption::WellFormed, "model", "model has no states");
        return report;
    }
    if (m.initial_state() >= n) {
        report.add(Assumption::WellFormed, "model", "initial state out of range");
    }
    std::unordered_set<std::string> names;
    for (StateId s = 0; s < n; ++s) {
        std::string location = "state " + m.state_name(s);
        if (!names.insert(m.state_name(s)).second) {
            report.add(Assumption::WellFormed, location, "duplicate state name");
        }
        if (m.is_markovian(s)) {
            if (!(m.exit_rate(s) > 0.0) || !std::isfinite(m.exit_rate(s))) {
                report.add(Assumption::WellFormed, location, "rate must be positive");
            }
            if (m.num_choices(s) != 1 || m.choice_action(m.choice_begin(s)) != kMarkovianAction) {
                report.add(Assumption::WellFormed, location, "Markovian state must have exactly one distribution");
            }
        } else {
            if (m.num_choices(s) == 0) {
                report.add(Assumption::WellFormed, location, "probabilistic state has no enabled action");
            }
            std::unordered_set<ActionId> actions;
            for (std::size_t c : m.choices(s)) {
                if (m.choice_action(c) == kMarkovianAction) {
                    report.add(Assumption::WellFormed, location, "probabilistic state has a Markovian distribution");
                } else if (!actions.insert(m.choice_action(c)).second) {
                    report.add(Assumption::WellFormed, location,
                               "action " + m.action_name(m.choice_action(c)) + " enabled twice");
                }
            }
        }
        for (std::size_t c : m.choices(s)) {
            double sum = 0.0;
            if (m.transitions(c).empty()) {
                report.add(Assumption::WellFormed, choice_location(m, c), "empty distribution");
                continue;
            }
            for (const auto& t : m.transitions(c)) {
                if (t.target >= n) {
                    report.add(Assumption::WellFormed, choice_location(m, c), "successor out of range");
                }
                if (!(t.probability > 0.0 && t.probability <= 1.0)) {
                    report.add(Assumption::WellFormed, choice_location(m, c),
                               "probability " + format_number(t.probability) + " outside (0,1]");
                }
                sum += t.probability;
            }
            if (std::abs(sum - 1.0) > kProbabilityTolerance) {
                report.add(Assumption::WellFormed, choice_location(m, c), "distribution sums to " + format_number(sum));
            }
        }
    }
    for (const auto& r : m.rewards()) {
        std::string location = "reward " + r.name;
        if (r.state_rewards.size() != n || r.transition_rewards.size() != m.num_transitions()) {
            report.add(Assumption::WellFormed, location, "reward assignment not aligned with the model");
            continue;
        }
        for (StateId s = 0; s < n; ++s) {
            if (!std::isfinite(r.state_rewards[s])) {
                report.add(Assumption::WellFormed, location, "non-finite state reward at " + m.state_name(s));
            } else if (!m.is_markovian(s) && r.state_rewards[s] != 0.0) {
                report.add(Assumption::WellFormed, location, "state reward on probabilistic state " + m.state_name(s));
            }
        }
        for (double v : r.transition_rewards) {
            if (!std::isfinite(v)) {
                report.add(Assumption::WellFormed, location, "non-finite transition reward");
                break;
            }
        }
    }
    return report;
}

ValidationReport check_non_zeno(const MarkovAutomaton& m, const std::vector<EndComponent>& mecs) {
    // An end component without Markovian states exists iff the probabilistic choices alone
    // still form one. It lies inside some MEC, which is reported.
    std::vector<bool> probabilistic(m.num_choices(), false);
    for (StateId s = 0; s < m.num_states(); ++s) {
        if (!m.is_markovian(s)) {
            for (std::size_t c : m.choices(s)) {
                probabilistic[c] = true;
            }
        }
    }
    std::vector<EndComponent> zeno = mec_decomposition(m, std::move(probabilistic));
    ValidationReport report;
    for (const auto& ec : mecs) {
        auto inside = std::find_if(zeno.begin(), zeno.end(),
                                   [&](const EndComponent& z) { return ec.contains_state(z.states.front()); });
        if (inside == zeno.end()) {
            continue;
        }
        if (inside->states == ec.states) {
            report.add(Assumption::NonZeno, ec_location(m, ec), "end component without Markovian state");
        } else {
            report.add(Assumption::NonZeno, ec_location(m, ec),
                       "contains " + ec_location(m, *inside) + " without Markovian state");
        }
    }
    return report;
}

SignReport check_sign_consistency(const MarkovAutomaton& m, const std::vector<const RewardAssignment*>& totals,
                                  const std::vector<EndComponent>& mecs) {
    SignReport result;
    for (const RewardAssignment* r : totals) {
        bool positive = false;
        bool negative = false;
        for (const auto& ec : mecs) {
            for (std::size_t c : ec.choices) {
                StateId s = m.choice_state(c);
                if (m.is_markovian(s)) {
                    positive |= r->state_rewards[s] > 0.0;
                    negative |= r->state_rewards[s] < 0.0;
                }
                for (std::size_t t = m.transition_begin(c); t < m.transition_end(c); ++t) {
                    positive |= r->transition_rewards[t] > 0.0;
                    negative |= r->transition_rewards[t] < 0.0;
                }
            }
        }
        RewardSign sign = RewardSign::Zero;
        if (positive && negative) {
            sign = RewardSign::Mixed;
            result.report.add(Assumption::SignConsistency, "reward " + r->name,
                              "rewards inside end components have both signs");
        } else if (positive) {
            sign = RewardSign::NonNegative;
        } else if (negative) {
            sign = RewardSign::NonPositive;
        }
        result.signs.push_back(sign);
    }
    return result;
}

std::vector<bool> reachable_states(const MarkovAutomaton& m, StateId from) {
    std::vector<bool> seen(m.num_states(), false);
    std::deque<StateId> queue{from};
    seen[from] = true;
    while (!queue.empty()) {
        StateId s = queue.front();
        queue.pop_front();
        for (std::size_t c : m.choices(s)) {
            for (const auto& t : m.transitions(c)) {
                if (!seen[t.target]) {
                    seen[t.target] = true;
                    queue.push_back(t.target);
                }
            }
        }
    }
    return seen;
}

std::vector<bool> reachable_states(const MarkovAutomaton& m) { return reachable_states(m, m.initial_state()); }

ValidationReport check_finiteness(const MarkovAutomaton& m, const std::vector<const RewardAssignment*>& totals,
                                  const std::vector<EndComponent>& mecs, const std::vector<RewardSign>& signs) {
    ValidationReport report;
    std::vector<bool> reachable = reachable_states(m);
    for (std::size_t i = 0; i < totals.size(); ++i) {
        if (signs[i] != RewardSign::NonNegative && signs[i] != RewardSign::Mixed) {
            continue;
        }
        const RewardAssignment& r = *totals[i];
        for (const auto& ec : mecs) {
            if (!reachable[ec.states.front()]) {
                continue;
            }
            bool positive = false;
            for (std::size_t c : ec.choices) {
                StateId s = m.choice_state(c);
                positive |= m.is_markovian(s) && r.state_rewards[s] > 0.0;
                for (std::size_t t = m.transition_begin(c); t < m.transition_end(c); ++t) {
                    positive |= r.transition_rewards[t] > 0.0;
                }
            }
            if (positive) {
                report.add(Assumption::Finiteness, "reward " + r.name + " in " + ec_location(m, ec),
                           "positive reward inside a reachable end component makes the maximal total reward infinite");
            }
        }
    }
    return report;
}

}  // namespace moma
