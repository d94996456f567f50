#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace moma {

using StateId = std::uint32_t;
using ActionId = std::uint32_t;

inline constexpr StateId kNoState = std::numeric_limits<StateId>::max();
inline constexpr ActionId kMarkovianAction = std::numeric_limits<ActionId>::max();
inline constexpr std::size_t kNoIndex = std::numeric_limits<std::size_t>::max();

// Raised for malformed or semantically invalid models and queries.
class ModelError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

// Raised when a numerical procedure fails or detects an internal inconsistency.
class SolverError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

// A real value that may also be one of the two infinities. Infinite values never take part in arithmetic.
struct ExtendedValue {
    enum class Kind { Finite, NegativeInfinity, PositiveInfinity };

    Kind kind = Kind::Finite;
    double value = 0.0;

    static ExtendedValue finite(double v) { return {Kind::Finite, v}; }
    static ExtendedValue negative_infinity() { return {Kind::NegativeInfinity, 0.0}; }
    static ExtendedValue positive_infinity() { return {Kind::PositiveInfinity, 0.0}; }

    [[nodiscard]] bool is_finite() const { return kind == Kind::Finite; }
    [[nodiscard]] ExtendedValue negated() const {
        switch (kind) {
            case Kind::NegativeInfinity:
                return positive_infinity();
            case Kind::PositiveInfinity:
                return negative_infinity();
            default:
                return finite(-value);
        }
    }
    bool operator==(const ExtendedValue&) const = default;
};

}  // namespace moma
