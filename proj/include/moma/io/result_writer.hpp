#pragma once

#include <optional>
#include <string>

#include "moma/io/query_format.hpp"
#include "moma/pareto/query.hpp"
#include "moma/weighted/problem.hpp"

namespace moma {

struct ResultOptions {
    bool strategies = false;
    // Wall time is only written when given so that results stay byte-stable otherwise.
    std::optional<double> wall_time;
};

// Finite values as numbers, infinite ones as "-inf" / "+inf".
[[nodiscard]] Json to_json(const ExtendedValue& v);

[[nodiscard]] Json statistics_json(const PreparedProblem& problem, std::size_t zeroEcs, std::size_t statesInZeroEcs,
                                   std::size_t iterations);

[[nodiscard]] Json result_to_json(const QueryResult& result, const QueryFile& query, const PreparedProblem& problem,
                                  const MarkovAutomaton& input, const ResultOptions& options = {});

// State name to action name for every probabilistic state with more than one action.
[[nodiscard]] Json strategy_to_json(const MarkovAutomaton& m, const MDStrategy& sigma);

// Header coord_1,...,coord_l,kind; one row per vertex, and in two dimensions one row per corner
// of the outer approximation.
[[nodiscard]] std::string plot_csv(const QueryResult& result, std::size_t dimension);

}  // namespace moma
