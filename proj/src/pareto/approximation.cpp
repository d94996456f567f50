#include "moma/pareto/approximation.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <limits>

#include "moma/pareto/linear_program.hpp"

namespace moma {

bool StoredPoint::finite() const {
    return std::all_of(values.begin(), values.end(), [](const ExtendedValue& v) { return v.is_finite(); });
}

Point StoredPoint::point() const {
    Point p;
    for (const auto& v : values) {
        p.push_back(v.is_finite() ? v.value
                                  : (v.kind == ExtendedValue::Kind::NegativeInfinity
                                         ? -std::numeric_limits<double>::infinity()
                                         : std::numeric_limits<double>::infinity()));
    }
    return p;
}

ApproximationState::ApproximationState(std::size_t dimension) : dimension_(dimension) {}

void ApproximationState::add(const WeightVector& w, double value, std::vector<ExtendedValue> point,
                             MDStrategy strategy) {
    StoredPoint stored{std::move(point), std::move(strategy)};
    double offset = value;
    if (stored.finite()) {
        offset = std::max(offset, w.dot(stored.point()));
    }
    history_.push_back({w.entries(), value, points_.size()});
    halfspaces_.push_back({w.entries(), offset});
    points_.push_back(std::move(stored));
    hull_.reset();
}

const DownwardHull& ApproximationState::hull() const {
    if (!hull_) {
        std::vector<std::size_t> index;
        std::vector<Point> finite;
        for (std::size_t i = 0; i < points_.size(); ++i) {
            if (points_[i].finite()) {
                index.push_back(i);
                finite.push_back(points_[i].point());
            }
        }
        DownwardHull h = downward_hull(finite, dimension_);
        for (auto& v : h.vertices) {
            v = index[v];
        }
        for (auto& f : h.facets) {
            for (auto& p : f.points) {
                p = index[p];
            }
        }
        hull_ = std::move(h);
    }
    return *hull_;
}

bool ApproximationState::in_q(const Point& x) const {
    return std::all_of(halfspaces_.begin(), halfspaces_.end(), [&](const HalfSpace& h) {
        return dot(h.normal, x) <= h.offset + geometry_tolerance(h.offset);
    });
}

bool ApproximationState::weight_used(const std::vector<double>& w) const {
    return std::any_of(history_.begin(), history_.end(), [&](const IterationRecord& r) {
        for (std::size_t j = 0; j < dimension_; ++j) {
            if (std::abs(r.weights[j] - w[j]) > 1e-9) {
                return false;
            }
        }
        return true;
    });
}

double ApproximationState::facet_gap(const Facet& facet) const {
    // Dual of max normal . x over Q: min sum mu_i offset_i s.t. sum mu_i normal_i = normal, mu >= 0.
    std::size_t k = halfspaces_.size();
    std::vector<double> c(k);
    for (std::size_t i = 0; i < k; ++i) {
        c[i] = -halfspaces_[i].offset;
    }
    std::vector<LpConstraint> constraints;
    for (std::size_t j = 0; j < dimension_; ++j) {
        LpConstraint row;
        row.sense = ConstraintSense::Equal;
        row.rhs = facet.normal[j];
        for (std::size_t i = 0; i < k; ++i) {
            row.coefficients.push_back(halfspaces_[i].normal[j]);
        }
        constraints.push_back(std::move(row));
    }
    LpResult lp = maximize(c, constraints);
    if (lp.status != LpStatus::Optimal) {
        return std::numeric_limits<double>::infinity();
    }
    return std::max(0.0, -lp.objective - facet.offset);
}

void refine(ApproximationState& state, const WeightedSumSolver& solver, const PreparedProblem& problem,
            const WeightVector& w) {
    WeightedResult result = solver.optimize(w);
    ChainEvaluation evaluation = evaluate_strategy(problem.model, result.strategy, problem.reward_objectives());
    state.add(w, result.value, std::move(evaluation.values), std::move(result.strategy));
}

namespace {

std::optional<WeightVector> next_unit(const ApproximationState& state) {
    std::size_t done = state.history().size();
    if (done < state.dimension()) {
        return WeightVector::unit(state.dimension(), done);
    }
    return std::nullopt;
}

double relative_gap(const ApproximationState& state, const Facet& f) {
    return state.facet_gap(f) / std::max(1.0, std::abs(f.offset));
}

}  // namespace

double precision_achieved(const ApproximationState& state) {
    double worst = 0.0;
    for (const auto& f : state.hull().facets) {
        worst = std::max(worst, relative_gap(state, f));
    }
    return worst;
}

WeightSelection select_weight(const ApproximationState& state, double precision) {
    WeightSelection selection;
    if (auto unit = next_unit(state)) {
        selection.weights = unit;
        selection.gap = std::numeric_limits<double>::infinity();
        return selection;
    }
    const Facet* best = nullptr;
    double bestGap = -1.0;
    for (const auto& f : state.hull().facets) {
        double gap = relative_gap(state, f);
        selection.gap = std::max(selection.gap, gap);
        if (!state.weight_used(f.normal) && gap > bestGap) {
            best = &f;
            bestGap = gap;
        }
    }
    if (best != nullptr && bestGap > precision) {
        selection.weights = WeightVector(best->normal);
        return selection;
    }
    selection.converged = selection.gap <= precision;
    return selection;
}

WeightSelection select_weight_toward(const ApproximationState& state, const Point& guide) {
    WeightSelection selection;
    if (auto unit = next_unit(state)) {
        selection.weights = unit;
        return selection;
    }
    const Facet* best = nullptr;
    double bestViolation = 0.0;
    for (const auto& f : state.hull().facets) {
        double violation = dot(f.normal, guide) - f.offset;
        if (violation > geometry_tolerance(f.offset) && violation > bestViolation && !state.weight_used(f.normal)) {
            best = &f;
            bestViolation = violation;
        }
    }
    if (best != nullptr) {
        selection.weights = WeightVector(best->normal);
    }
    return selection;
}

namespace {

std::optional<Mixture> solve_mixture(const ApproximationState& state, const std::vector<std::size_t>& candidates,
                                     const Point& target) {
    std::size_t l = state.dimension();
    std::size_t k = candidates.size();
    if (k == 0) {
        return std::nullopt;
    }
    // Variables: lambda_1..lambda_k, t+, t-. maximize t subject to sum lambda v - t >= target.
    std::vector<double> c(k + 2, 0.0);
    c[k] = 1.0;
    c[k + 1] = -1.0;
    std::vector<LpConstraint> constraints;
    double scale = 0.0;
    for (std::size_t j = 0; j < l; ++j) {
        LpConstraint row;
        row.sense = ConstraintSense::GreaterEqual;
        row.rhs = target[j];
        scale = std::max(scale, std::abs(target[j]));
        for (std::size_t i : candidates) {
            row.coefficients.push_back(state.points()[i].values[j].value);
        }
        row.coefficients.push_back(-1.0);
        row.coefficients.push_back(1.0);
        constraints.push_back(std::move(row));
    }
    LpConstraint sum;
    sum.sense = ConstraintSense::Equal;
    sum.rhs = 1.0;
    sum.coefficients.assign(k + 2, 1.0);
    sum.coefficients[k] = 0.0;
    sum.coefficients[k + 1] = 0.0;
    constraints.push_back(std::move(sum));
    LpResult lp = maximize(c, constraints);
    if (lp.status != LpStatus::Optimal || lp.objective < -geometry_tolerance(scale)) {
        return std::nullopt;
    }
    Mixture mixture;
    double total = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        if (lp.x[i] > 1e-12) {
            mixture.points.push_back(candidates[i]);
            mixture.weights.push_back(lp.x[i]);
            total += lp.x[i];
        }
    }
    mixture.value.assign(l, 0.0);
    for (std::size_t a = 0; a < mixture.points.size(); ++a) {
        mixture.weights[a] /= total;
        for (std::size_t j = 0; j < l; ++j) {
            mixture.value[j] += mixture.weights[a] * state.points()[mixture.points[a]].values[j].value;
        }
    }
    return mixture;
}

}  // namespace

std::optional<Mixture> find_mixture(const ApproximationState& state, const Point& target) {
    const DownwardHull& hull = state.hull();
    auto mixture = solve_mixture(state, hull.vertices, target);
    if (!mixture || mixture->points.size() <= state.dimension()) {
        return mixture;
    }
    // Target on the boundary: a facet through it yields a smaller support.
    for (const auto& f : hull.facets) {
        if (dot(f.normal, target) < f.offset - geometry_tolerance(f.offset)) {
            continue;
        }
        std::vector<std::size_t> onFacet;
        std::set_intersection(f.points.begin(), f.points.end(), hull.vertices.begin(), hull.vertices.end(),
                              std::back_inserter(onFacet));
        auto restricted = solve_mixture(state, onFacet, target);
        if (restricted && restricted->points.size() < mixture->points.size()) {
            return restricted;
        }
    }
    return mixture;
}

}  // namespace moma
