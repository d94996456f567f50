#pragma once

#include <algorithm>
#include <vector>

#include "moma/core/types.hpp"

namespace moma {

// Set of states together with the choices (global choice indices) that stay inside. Markovian
// states contribute their single choice. Both vectors are sorted.
struct EndComponent {
    std::vector<StateId> states;
    std::vector<std::size_t> choices;

    [[nodiscard]] bool contains_state(StateId s) const { return std::binary_search(states.begin(), states.end(), s); }
    [[nodiscard]] bool contains_choice(std::size_t c) const {
        return std::binary_search(choices.begin(), choices.end(), c);
    }

    bool operator==(const EndComponent&) const = default;
};

}  // namespace moma
