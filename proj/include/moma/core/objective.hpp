#pragma once

#include <string>
#include <vector>

#include "moma/core/types.hpp"

namespace moma {

enum class ObjectiveKind { LongRunAverage, Total, Reachability };
enum class Direction { Maximize, Minimize };

// One component f_j of the objective tuple. Total objectives with a nonempty goal are
// goal-bounded: rewards stop once a goal state has been reached.
struct Objective {
    ObjectiveKind kind = ObjectiveKind::Total;
    std::string reward;
    std::vector<StateId> goal;
    Direction direction = Direction::Maximize;

    bool operator==(const Objective&) const = default;
};

[[nodiscard]] std::string to_string(ObjectiveKind kind);
[[nodiscard]] std::string to_string(Direction direction);
[[nodiscard]] std::string describe(const Objective& objective);

// Objective after normalization: maximizing, LRA or total, reward embedded in the analyzed model.
struct NormalizedObjective {
    ObjectiveKind kind = ObjectiveKind::Total;
    std::size_t reward = 0;
    bool negated = false;
};

}  // namespace moma
