#pragma once

#include <optional>
#include <vector>

#include "moma/core/markov_automaton.hpp"
#include "moma/pareto/geometry.hpp"
#include "moma/weighted/weighted_sum.hpp"

namespace moma {

// normal . x <= offset with nonnegative normal summing to one.
struct HalfSpace {
    std::vector<double> normal;
    double offset = 0.0;
};

struct StoredPoint {
    std::vector<ExtendedValue> values;
    MDStrategy strategy;

    [[nodiscard]] bool finite() const;
    [[nodiscard]] Point point() const;
};

struct IterationRecord {
    std::vector<double> weights;
    double value = 0.0;
    // Index of the point found in this iteration.
    std::size_t point = 0;
};

// Inner approximation P (points with witnessing strategies) and outer approximation Q
// (halfspaces) of the achievable set, in the coordinates of the maximized objectives.
class ApproximationState {
   public:
    explicit ApproximationState(std::size_t dimension);

    [[nodiscard]] std::size_t dimension() const { return dimension_; }
    [[nodiscard]] const std::vector<StoredPoint>& points() const { return points_; }
    [[nodiscard]] const std::vector<HalfSpace>& halfspaces() const { return halfspaces_; }
    [[nodiscard]] const std::vector<IterationRecord>& history() const { return history_; }

    // Records one weighted-sum result. The halfspace offset is max(value, w . point) so that
    // the point itself always satisfies it.
    void add(const WeightVector& w, double value, std::vector<ExtendedValue> point, MDStrategy strategy);

    // Downward hull of the points without minus infinity entries; indices refer to points().
    [[nodiscard]] const DownwardHull& hull() const;
    [[nodiscard]] bool in_q(const Point& x) const;
    [[nodiscard]] bool weight_used(const std::vector<double>& w) const;
    // sup over Q of normal . x minus offset; +infinity if unbounded.
    [[nodiscard]] double facet_gap(const Facet& facet) const;

   private:
    std::size_t dimension_;
    std::vector<StoredPoint> points_;
    std::vector<HalfSpace> halfspaces_;
    std::vector<IterationRecord> history_;
    mutable std::optional<DownwardHull> hull_;
};

// One iteration of the refinement loop for weight vector w.
void refine(ApproximationState& state, const WeightedSumSolver& solver, const PreparedProblem& problem,
            const WeightVector& w);

struct WeightSelection {
    std::optional<WeightVector> weights;
    // No weight left to try and the precision target holds.
    bool converged = false;
    // Largest relative facet gap seen (Pareto selection only).
    double gap = 0.0;
};

// Unit vectors first, then the unused facet normal with the largest relative gap
// gap / max(1, |offset|); converged once that gap is at most precision.
[[nodiscard]] WeightSelection select_weight(const ApproximationState& state, double precision);

// Unit vectors first, then the unused facet normal the guide point violates most.
[[nodiscard]] WeightSelection select_weight_toward(const ApproximationState& state, const Point& guide);

// Largest relative gap over all facets of the current hull, 0 without facets.
[[nodiscard]] double precision_achieved(const ApproximationState& state);

// Convex combination of stored points dominating target, if one exists.
struct Mixture {
    std::vector<std::size_t> points;
    std::vector<double> weights;
    Point value;
};
[[nodiscard]] std::optional<Mixture> find_mixture(const ApproximationState& state, const Point& target);

}  // namespace moma
