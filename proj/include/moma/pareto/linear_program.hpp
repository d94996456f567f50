#pragma once

#include <vector>

namespace moma {

enum class ConstraintSense { LessEqual, Equal, GreaterEqual };

struct LpConstraint {
    std::vector<double> coefficients;
    ConstraintSense sense = ConstraintSense::LessEqual;
    double rhs = 0.0;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    double objective = 0.0;
    std::vector<double> x;
};

// maximize c.x subject to the constraints and x >= 0. Dense two-phase simplex with Bland's
// rule; meant for the small programs of the geometry layer.
[[nodiscard]] LpResult maximize(const std::vector<double>& c, const std::vector<LpConstraint>& constraints);

}  // namespace moma
