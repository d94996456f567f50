#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "moma/pareto/approximation.hpp"
#include "moma/weighted/problem.hpp"

namespace moma {

enum class QueryKind { Pareto, Achievability, Quantitative };
enum class Verdict { Yes, No, Unknown };
enum class Termination { Converged, PrecisionLimited, IterationLimit, TimeLimit };

[[nodiscard]] std::string to_string(QueryKind kind);
[[nodiscard]] std::string to_string(Verdict verdict);
[[nodiscard]] std::string to_string(Termination termination);

// Coordinates are in the direction of each objective: minimized objectives keep their sign.
struct Query {
    QueryKind kind = QueryKind::Pareto;
    // Achievability: the point to decide, one entry per objective.
    Point point;
    // Quantitative: bounds for objectives 2..l; objective 1 is optimized.
    std::vector<double> thresholds;
    double precision = 1e-4;
    double solver_precision = 1e-6;
    std::size_t max_iterations = 100;
    // Seconds of wall time; unlimited if empty.
    std::optional<double> time_limit;
};

struct QueryFacet {
    std::vector<double> normal;
    double offset = 0.0;
};

struct QueryResult {
    QueryKind kind = QueryKind::Pareto;
    // Achievability: Yes/No. Quantitative: Yes on a closed bracket, No if the thresholds are
    // unachievable. Pareto: Yes once converged.
    Verdict verdict = Verdict::Unknown;
    Termination termination = Termination::IterationLimit;
    std::optional<Mixture> witness;
    // Quantitative bracket for the optimized objective.
    ExtendedValue lower = ExtendedValue::negative_infinity();
    ExtendedValue upper = ExtendedValue::positive_infinity();

    // Everything below is in objective coordinates. Halfspaces and facets read normal . x <= offset.
    std::vector<std::vector<ExtendedValue>> points;
    std::vector<MDStrategy> strategies;
    std::vector<std::size_t> vertices;
    std::vector<QueryFacet> facets;
    std::vector<QueryFacet> halfspaces;
    double precision_achieved = 0.0;
    // Weight vectors refer to the maximized objectives.
    std::vector<IterationRecord> history;
    std::size_t zero_ecs = 0;
    std::size_t states_in_zero_ecs = 0;

    [[nodiscard]] std::size_t iterations() const { return history.size(); }
};

using IterationObserver = std::function<void(const ApproximationState&)>;

// Runs the refinement loop until the query is answered or the budget is spent.
[[nodiscard]] QueryResult answer_query(const PreparedProblem& problem, const Query& query,
                                       const IterationObserver& observer = {});

}  // namespace moma
