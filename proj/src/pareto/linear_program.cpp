#include "moma/pareto/linear_program.hpp"

#include <cmath>
#include <limits>

namespace moma {

namespace {

constexpr double kPivotTolerance = 1e-9;

class Tableau {
   public:
    Tableau(std::size_t rows, std::size_t columns)
        : columns_(columns), cells_((rows + 1) * (columns + 1), 0.0), basis_(rows, 0) {}

    double& at(std::size_t row, std::size_t column) { return cells_[row * (columns_ + 1) + column]; }
    double& rhs(std::size_t row) { return at(row, columns_); }
    double& cost(std::size_t column) { return at(basis_.size(), column); }
    std::size_t& basis(std::size_t row) { return basis_[row]; }
    [[nodiscard]] std::size_t rows() const { return basis_.size(); }
    [[nodiscard]] std::size_t columns() const { return columns_; }

    void pivot(std::size_t row, std::size_t column) {
        double p = at(row, column);
        for (std::size_t j = 0; j <= columns_; ++j) {
            at(row, j) /= p;
        }
        for (std::size_t i = 0; i <= rows(); ++i) {
            if (i == row) {
                continue;
            }
            double factor = at(i, column);
            if (factor == 0.0) {
                continue;
            }
            for (std::size_t j = 0; j <= columns_; ++j) {
                at(i, j) -= factor * at(row, j);
            }
        }
        basis_[row] = column;
    }

    // Runs simplex iterations on the objective row; columns at or beyond limit never enter.
    // Returns false if the objective is unbounded.
    bool optimize(std::size_t limit) {
        while (true) {
            std::size_t entering = limit;
            for (std::size_t j = 0; j < limit; ++j) {
                if (cost(j) < -kPivotTolerance) {
                    entering = j;
                    break;
                }
            }
            if (entering == limit) {
                return true;
            }
            std::size_t leaving = rows();
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < rows(); ++i) {
                double a = at(i, entering);
                if (a <= kPivotTolerance) {
                    continue;
                }
                double ratio = rhs(i) / a;
                if (ratio < best - 1e-12 || (ratio <= best + 1e-12 && leaving < rows() && basis_[i] < basis_[leaving])) {
                    best = ratio;
                    leaving = i;
                }
            }
            if (leaving == rows()) {
                return false;
            }
            pivot(leaving, entering);
        }
    }

   private:
    std::size_t columns_;
    std::vector<double> cells_;
    std::vector<std::size_t> basis_;
};

}  // namespace

LpResult maximize(const std::vector<double>& c, const std::vector<LpConstraint>& constraints) {
    std::size_t n = c.size();
    std::size_t m = constraints.size();
    std::size_t slacks = 0;
    std::size_t artificials = 0;
    for (const auto& row : constraints) {
        ConstraintSense sense = row.sense;
        if (row.rhs < 0.0 && sense != ConstraintSense::Equal) {
            sense = sense == ConstraintSense::LessEqual ? ConstraintSense::GreaterEqual : ConstraintSense::LessEqual;
        }
        slacks += sense != ConstraintSense::Equal ? 1 : 0;
        artificials += sense != ConstraintSense::LessEqual ? 1 : 0;
    }
    std::size_t firstArtificial = n + slacks;
    Tableau t(m, n + slacks + artificials);
    std::size_t nextSlack = n;
    std::size_t nextArtificial = firstArtificial;
    for (std::size_t i = 0; i < m; ++i) {
        const LpConstraint& row = constraints[i];
        double sign = row.rhs < 0.0 ? -1.0 : 1.0;
        ConstraintSense sense = row.sense;
        if (sign < 0.0 && sense != ConstraintSense::Equal) {
            sense = sense == ConstraintSense::LessEqual ? ConstraintSense::GreaterEqual : ConstraintSense::LessEqual;
        }
        for (std::size_t j = 0; j < n; ++j) {
            t.at(i, j) = sign * row.coefficients.at(j);
        }
        t.rhs(i) = sign * row.rhs;
        if (sense == ConstraintSense::LessEqual) {
            t.at(i, nextSlack) = 1.0;
            t.basis(i) = nextSlack++;
        } else {
            if (sense == ConstraintSense::GreaterEqual) {
                t.at(i, nextSlack++) = -1.0;
            }
            t.at(i, nextArtificial) = 1.0;
            t.basis(i) = nextArtificial++;
        }
    }

    LpResult result;
    if (artificials > 0) {
        // Phase one: maximize minus the sum of artificial variables.
        for (std::size_t i = 0; i < m; ++i) {
            if (t.basis(i) >= firstArtificial) {
                for (std::size_t j = 0; j <= t.columns(); ++j) {
                    if (j < firstArtificial || j == t.columns()) {
                        t.at(m, j) -= t.at(i, j);
                    }
                }
            }
        }
        t.optimize(t.columns());
        if (t.rhs(m) < -1e-9 * (1.0 + std::abs(t.rhs(m)))) {
            return result;
        }
        for (std::size_t i = 0; i < m; ++i) {
            if (t.basis(i) < firstArtificial) {
                continue;
            }
            for (std::size_t j = 0; j < firstArtificial; ++j) {
                if (std::abs(t.at(i, j)) > kPivotTolerance) {
                    t.pivot(i, j);
                    break;
                }
            }
        }
    }
    for (std::size_t j = 0; j <= t.columns(); ++j) {
        t.cost(j) = j < n ? -c[j] : 0.0;
    }
    for (std::size_t i = 0; i < m; ++i) {
        double factor = t.cost(t.basis(i));
        if (factor != 0.0) {
            for (std::size_t j = 0; j <= t.columns(); ++j) {
                t.cost(j) -= factor * t.at(i, j);
            }
        }
    }
    if (!t.optimize(firstArtificial)) {
        result.status = LpStatus::Unbounded;
        return result;
    }
    result.status = LpStatus::Optimal;
    result.x.assign(n, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        if (t.basis(i) < n) {
            result.x[t.basis(i)] = t.rhs(i);
        }
    }
    result.objective = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        result.objective += c[j] * result.x[j];
    }
    return result;
}

}  // namespace moma
