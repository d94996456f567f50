#include "moma/pareto/query.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace moma {

std::string to_string(QueryKind kind) {
    switch (kind) {
        case QueryKind::Pareto:
            return "pareto";
        case QueryKind::Achievability:
            return "achievability";
        case QueryKind::Quantitative:
            return "quantitative";
    }
    return "?";
}

std::string to_string(Verdict verdict) {
    switch (verdict) {
        case Verdict::Yes:
            return "yes";
        case Verdict::No:
            return "no";
        case Verdict::Unknown:
            return "unknown";
    }
    return "?";
}

std::string to_string(Termination termination) {
    switch (termination) {
        case Termination::Converged:
            return "converged";
        case Termination::PrecisionLimited:
            return "precision_limited";
        case Termination::IterationLimit:
            return "iteration_limit";
        case Termination::TimeLimit:
            return "time_limit";
    }
    return "?";
}

namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct Bracket {
    double lower = -kInfinity;
    double upper = kInfinity;
};

// sup of x_1 over the slice x_j >= t_j (j >= 2) of down(P) and of Q.
Bracket quantitative_bracket(const ApproximationState& state, const std::vector<double>& t) {
    Bracket b;
    auto rest = [&](const std::vector<double>& normal) {
        double sum = 0.0;
        for (std::size_t j = 1; j < normal.size(); ++j) {
            sum += normal[j] * t[j - 1];
        }
        return sum;
    };
    const DownwardHull& hull = state.hull();
    if (!hull.empty()) {
        b.lower = kInfinity;
        for (const auto& f : hull.facets) {
            double r = rest(f.normal);
            if (f.normal[0] > 0.0) {
                b.lower = std::min(b.lower, (f.offset - r) / f.normal[0]);
            } else if (r > f.offset + geometry_tolerance(f.offset)) {
                b.lower = -kInfinity;
                break;
            }
        }
    }
    for (const auto& h : state.halfspaces()) {
        double r = rest(h.normal);
        if (h.normal[0] > 0.0) {
            b.upper = std::min(b.upper, (h.offset - r) / h.normal[0]);
        } else if (r > h.offset + geometry_tolerance(h.offset)) {
            b.upper = -kInfinity;
            break;
        }
    }
    return b;
}

ExtendedValue to_extended(double v) {
    if (v == kInfinity) {
        return ExtendedValue::positive_infinity();
    }
    if (v == -kInfinity) {
        return ExtendedValue::negative_infinity();
    }
    return ExtendedValue::finite(v);
}

}  // namespace

QueryResult answer_query(const PreparedProblem& problem, const Query& query, const IterationObserver& observer) {
    std::size_t l = problem.dimension();
    if (l > kMaxDimension) {
        throw std::invalid_argument("at most 4 objectives are supported");
    }
    if (!(query.precision > 0.0) || !(query.solver_precision > 0.0)) {
        throw std::invalid_argument("precision must be positive");
    }
    std::vector<double> sign(l);
    for (std::size_t j = 0; j < l; ++j) {
        sign[j] = problem.normalized[j].negated ? -1.0 : 1.0;
    }
    Point target;
    if (query.kind == QueryKind::Achievability) {
        if (query.point.size() != l) {
            throw std::invalid_argument("achievability point needs one coordinate per objective");
        }
        for (std::size_t j = 0; j < l; ++j) {
            target.push_back(sign[j] * query.point[j]);
        }
    }
    std::vector<double> thresholds;
    if (query.kind == QueryKind::Quantitative) {
        if (query.thresholds.size() + 1 != l) {
            throw std::invalid_argument("quantitative query needs one threshold per objective except the first");
        }
        for (std::size_t j = 1; j < l; ++j) {
            thresholds.push_back(sign[j] * query.thresholds[j - 1]);
        }
    }

    auto start = std::chrono::steady_clock::now();
    WeightedSumSolver solver(problem, query.solver_precision);
    ApproximationState state(l);
    QueryResult result;
    result.kind = query.kind;
    result.zero_ecs = solver.zero_ecs().size();
    result.states_in_zero_ecs = solver.states_in_zero_ecs();
    Bracket bracket;

    // Returns true once the query is decided.
    auto decide = [&]() {
        switch (query.kind) {
            case QueryKind::Pareto:
                return false;
            case QueryKind::Achievability:
                if (state.hull().contains(target)) {
                    result.verdict = Verdict::Yes;
                    return true;
                }
                if (!state.in_q(target)) {
                    result.verdict = Verdict::No;
                    return true;
                }
                return false;
            case QueryKind::Quantitative:
                bracket = quantitative_bracket(state, thresholds);
                if (bracket.upper == -kInfinity) {
                    result.verdict = Verdict::No;
                    return true;
                }
                if (std::isfinite(bracket.lower) && std::isfinite(bracket.upper) &&
                    bracket.upper - bracket.lower <= query.precision * std::max(1.0, std::abs(bracket.lower))) {
                    result.verdict = Verdict::Yes;
                    return true;
                }
                return false;
        }
        return false;
    };

    while (true) {
        if (decide()) {
            result.termination = Termination::Converged;
            break;
        }
        if (state.history().size() >= query.max_iterations) {
            result.termination = Termination::IterationLimit;
            break;
        }
        if (query.time_limit) {
            std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
            if (elapsed.count() >= *query.time_limit) {
                result.termination = Termination::TimeLimit;
                break;
            }
        }
        WeightSelection selection;
        if (query.kind == QueryKind::Pareto) {
            selection = select_weight(state, query.precision);
        } else if (query.kind == QueryKind::Achievability) {
            selection = select_weight_toward(state, target);
        } else {
            Point guide{bracket.upper};
            guide.insert(guide.end(), thresholds.begin(), thresholds.end());
            selection = select_weight_toward(state, guide);
        }
        if (!selection.weights) {
            if (selection.converged) {
                result.termination = Termination::Converged;
                result.verdict = Verdict::Yes;
            } else {
                result.termination = Termination::PrecisionLimited;
            }
            break;
        }
        refine(state, solver, problem, *selection.weights);
        if (observer) {
            observer(state);
        }
    }

    // Witnesses in the maximized coordinates.
    if (query.kind == QueryKind::Achievability && result.verdict == Verdict::Yes) {
        result.witness = find_mixture(state, target);
    }
    if (query.kind == QueryKind::Quantitative) {
        if (std::isfinite(bracket.lower)) {
            Point at{bracket.lower};
            at.insert(at.end(), thresholds.begin(), thresholds.end());
            result.witness = find_mixture(state, at);
        }
        ExtendedValue lo = to_extended(bracket.lower);
        ExtendedValue up = to_extended(bracket.upper);
        if (sign[0] < 0.0) {
            result.lower = up.negated();
            result.upper = lo.negated();
        } else {
            result.lower = lo;
            result.upper = up;
        }
        if (bracket.upper == -kInfinity) {
            result.lower = ExtendedValue::negative_infinity();
            result.upper = ExtendedValue::negative_infinity();
            if (sign[0] < 0.0) {
                result.lower = ExtendedValue::positive_infinity();
                result.upper = ExtendedValue::positive_infinity();
            }
        }
    }
    if (result.witness) {
        for (std::size_t j = 0; j < l; ++j) {
            result.witness->value[j] *= sign[j];
        }
    }

    // Report in objective coordinates.
    for (const auto& p : state.points()) {
        std::vector<ExtendedValue> values;
        for (std::size_t j = 0; j < l; ++j) {
            values.push_back(sign[j] < 0.0 ? p.values[j].negated() : p.values[j]);
        }
        result.points.push_back(std::move(values));
        result.strategies.push_back(p.strategy);
    }
    const DownwardHull& hull = state.hull();
    result.vertices = hull.vertices;
    auto flip = [&](const std::vector<double>& normal, double offset) {
        QueryFacet f{normal, offset};
        for (std::size_t j = 0; j < l; ++j) {
            f.normal[j] *= sign[j];
            if (f.normal[j] == 0.0) {
                f.normal[j] = 0.0;
            }
        }
        return f;
    };
    for (const auto& f : hull.lower_facets()) {
        result.facets.push_back(flip(f.normal, f.offset));
    }
    for (const auto& h : state.halfspaces()) {
        result.halfspaces.push_back(flip(h.normal, h.offset));
    }
    result.precision_achieved = state.points().empty() ? kInfinity : precision_achieved(state);
    result.history = state.history();
    return result;
}

}  // namespace moma
