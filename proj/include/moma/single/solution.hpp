#pragma once

#include <algorithm>
#include <cmath>

#include "moma/core/markov_automaton.hpp"

namespace moma {

struct ScalarSolution {
    double value = 0.0;
    MDStrategy strategy;
    // Absolute bound on |value - optimum|.
    double error_bound = 0.0;
    std::size_t iterations = 0;

    [[nodiscard]] double upper() const { return value + error_bound; }
    [[nodiscard]] double lower() const { return value - error_bound; }
};

// Relative precision with an absolute floor: eps * max(1, |v|).
[[nodiscard]] inline double relative_tolerance(double eps, double v) { return eps * std::max(1.0, std::abs(v)); }

}  // namespace moma
