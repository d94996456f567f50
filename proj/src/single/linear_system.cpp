#include "moma/single/linear_system.hpp"

#include <Eigen/IterativeLinearSolvers>
#include <Eigen/Sparse>
#include <Eigen/SparseLU>
#include <algorithm>

#include "moma/core/types.hpp"

namespace moma {

struct SparseLinearSystem::Impl {
    Eigen::SparseMatrix<double> matrix;
    Eigen::SparseLU<Eigen::SparseMatrix<double>, Eigen::COLAMDOrdering<int>> lu;
};

SparseLinearSystem::SparseLinearSystem(std::size_t dimension, const std::vector<MatrixEntry>& entries)
    : impl_(std::make_unique<Impl>()) {
    std::vector<Eigen::Triplet<double>> triplets;
    triplets.reserve(entries.size());
    for (const auto& e : entries) {
        triplets.emplace_back(static_cast<int>(e.row), static_cast<int>(e.column), e.value);
    }
    auto n = static_cast<Eigen::Index>(dimension);
    impl_->matrix.resize(n, n);
    impl_->matrix.setFromTriplets(triplets.begin(), triplets.end());
    impl_->matrix.makeCompressed();
    impl_->lu.compute(impl_->matrix);
    if (impl_->lu.info() != Eigen::Success) {
        throw SolverError("singular linear system: " + impl_->lu.lastErrorMessage());
    }
}

SparseLinearSystem::~SparseLinearSystem() = default;

std::vector<double> SparseLinearSystem::solve(const std::vector<double>& rhs) const {
    Eigen::Map<const Eigen::VectorXd> b(rhs.data(), static_cast<Eigen::Index>(rhs.size()));
    Eigen::VectorXd x = impl_->lu.solve(b);
    if (impl_->lu.info() != Eigen::Success) {
        throw SolverError("linear solve failed");
    }
    return {x.data(), x.data() + x.size()};
}

std::vector<double> solve_sparse(std::size_t dimension, const std::vector<MatrixEntry>& entries,
                                 const std::vector<double>& rhs, const std::vector<double>& guess, double tolerance) {
    std::vector<Eigen::Triplet<double>> triplets;
    triplets.reserve(entries.size());
    for (const auto& e : entries) {
        triplets.emplace_back(static_cast<int>(e.row), static_cast<int>(e.column), e.value);
    }
    auto n = static_cast<Eigen::Index>(dimension);
    Eigen::SparseMatrix<double> matrix(n, n);
    matrix.setFromTriplets(triplets.begin(), triplets.end());
    matrix.makeCompressed();
    Eigen::Map<const Eigen::VectorXd> b(rhs.data(), n);

    Eigen::BiCGSTAB<Eigen::SparseMatrix<double>> iterative;
    iterative.setTolerance(tolerance);
    iterative.setMaxIterations(std::max<Eigen::Index>(1000, n));
    iterative.compute(matrix);
    if (iterative.info() == Eigen::Success) {
        Eigen::Map<const Eigen::VectorXd> x0(guess.data(), n);
        Eigen::VectorXd x = iterative.solveWithGuess(b, x0);
        // Backward error check on the true residual; BiCGSTAB may report success on breakdown.
        Eigen::VectorXd rowSums = Eigen::VectorXd::Zero(n);
        for (Eigen::Index k = 0; k < matrix.outerSize(); ++k) {
            for (Eigen::SparseMatrix<double>::InnerIterator it(matrix, k); it; ++it) {
                rowSums[it.row()] += std::abs(it.value());
            }
        }
        double scale = rowSums.maxCoeff() * x.lpNorm<Eigen::Infinity>() + b.lpNorm<Eigen::Infinity>();
        if (iterative.info() == Eigen::Success && x.allFinite() &&
            (matrix * x - b).lpNorm<Eigen::Infinity>() <= 100 * tolerance * scale) {
            return {x.data(), x.data() + x.size()};
        }
    }
    Eigen::SparseLU<Eigen::SparseMatrix<double>, Eigen::COLAMDOrdering<int>> lu;
    lu.compute(matrix);
    if (lu.info() != Eigen::Success) {
        throw SolverError("singular linear system: " + lu.lastErrorMessage());
    }
    Eigen::VectorXd x = lu.solve(b);
    return {x.data(), x.data() + x.size()};
}

}  // namespace moma
