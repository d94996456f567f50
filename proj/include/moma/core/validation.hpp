#pragma once

#include <string>
#include <vector>

#include "moma/core/markov_automaton.hpp"
#include "moma/graph/end_component.hpp"

namespace moma {

enum class Assumption { WellFormed, NonZeno, SignConsistency, Finiteness };

[[nodiscard]] std::string to_string(Assumption assumption);

struct Violation {
    Assumption assumption;
    std::string location;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;

    [[nodiscard]] bool ok() const { return violations.empty(); }
    void append(const ValidationReport& other);
    void add(Assumption assumption, std::string location, std::string message);
    [[nodiscard]] std::string to_string() const;
};

// Thrown when a model violates one of the standing assumptions of the analysis.
class AssumptionError : public ModelError {
   public:
    explicit AssumptionError(ValidationReport report);
    [[nodiscard]] const ValidationReport& report() const { return report_; }

   private:
    ValidationReport report_;
};

enum class RewardSign { Zero, NonNegative, NonPositive, Mixed };

struct SignReport {
    ValidationReport report;
    std::vector<RewardSign> signs;
};

inline constexpr double kProbabilityTolerance = 1e-12;

[[nodiscard]] ValidationReport validate_model(const MarkovAutomaton& m);

// One violation per MEC that contains an end component without Markovian states.
[[nodiscard]] ValidationReport check_non_zeno(const MarkovAutomaton& m, const std::vector<EndComponent>& mecs);

// Sign of the rewards collected inside MECs, per total reward assignment.
[[nodiscard]] SignReport check_sign_consistency(const MarkovAutomaton& m,
                                                const std::vector<const RewardAssignment*>& totals,
                                                const std::vector<EndComponent>& mecs);

// Maximized total rewards must not collect positive rewards inside a MEC reachable from the
// initial state. signs is aligned with totals.
[[nodiscard]] ValidationReport check_finiteness(const MarkovAutomaton& m,
                                                const std::vector<const RewardAssignment*>& totals,
                                                const std::vector<EndComponent>& mecs,
                                                const std::vector<RewardSign>& signs);

// States reachable from the initial state using any choice.
[[nodiscard]] std::vector<bool> reachable_states(const MarkovAutomaton& m);
[[nodiscard]] std::vector<bool> reachable_states(const MarkovAutomaton& m, StateId from);

}  // namespace moma
