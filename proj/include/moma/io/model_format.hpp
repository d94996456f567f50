#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "moma/core/markov_automaton.hpp"
#include "moma/core/objective.hpp"

namespace moma {

enum class ModelKind { MA, MDP };

// Syntax error with a 1-based position in the input text.
class ParseError : public ModelError {
   public:
    ParseError(std::size_t line, std::size_t column, const std::string& message);
    [[nodiscard]] std::size_t line() const { return line_; }
    [[nodiscard]] std::size_t column() const { return column_; }

   private:
    std::size_t line_;
    std::size_t column_;
};

struct ModelFile {
    MarkovAutomaton model;
    ModelKind kind = ModelKind::MA;
    // Default objectives used when a query does not name any.
    std::vector<Objective> objectives;
};

// Reads the JSON model format. The result passes validate_model; violations are reported as
// ModelError naming the offending element.
[[nodiscard]] ModelFile parse_model_text(std::string_view text);
[[nodiscard]] ModelFile parse_model(const std::filesystem::path& path);

[[nodiscard]] std::string serialize_model(const MarkovAutomaton& m, ModelKind kind,
                                          const std::vector<Objective>& objectives = {});

using Json = nlohmann::ordered_json;

// {"kind": "lra" | "total" | "reach", "reward": name, "goal": [state names], "direction": "max" | "min"}
[[nodiscard]] Json objective_to_json(const Objective& objective, const MarkovAutomaton& m);
[[nodiscard]] Objective objective_from_json(const Json& j, const MarkovAutomaton& m, const std::string& where);

[[nodiscard]] std::string read_file(const std::filesystem::path& path);

}  // namespace moma
