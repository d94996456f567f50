#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "moma/io/model_format.hpp"
#include "moma/pareto/query.hpp"

namespace moma {

struct QueryFile {
    Query query;
    std::vector<Objective> objectives;
    bool emit_strategies = false;
    bool emit_plot = false;
};

// {"moma": "query", "version": 1, "type": "pareto" | "achievability" | "quantitative",
//  "objectives": [...], "point": [...], "thresholds": [...], "precision": 1e-4,
//  "solver_precision": 1e-6, "max_iterations": 100, "time_limit": seconds,
//  "emit_strategies": false, "emit_plot": false}
// State names are resolved against m.
[[nodiscard]] QueryFile parse_query_text(std::string_view text, const MarkovAutomaton& m);
[[nodiscard]] QueryFile parse_query(const std::filesystem::path& path, const MarkovAutomaton& m);
[[nodiscard]] Json query_to_json(const QueryFile& file, const MarkovAutomaton& m);

// Command-line objective: direction:kind:target, e.g. max:lra:R1, min:total:cost@goal1,goal2 or
// max:reach:s5,s6.
[[nodiscard]] Objective parse_objective_spec(std::string_view spec, const MarkovAutomaton& m);

// Comma-separated list of reals.
[[nodiscard]] std::vector<double> parse_real_list(std::string_view text);

}  // namespace moma
