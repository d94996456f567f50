#pragma once

#include <memory>
#include <vector>

namespace moma {

struct MatrixEntry {
    std::size_t row;
    std::size_t column;
    double value;
};

// Sparse square system factorized once (LU with partial pivoting), solved for several right-hand
// sides. Duplicate entries are summed.
class SparseLinearSystem {
   public:
    SparseLinearSystem(std::size_t dimension, const std::vector<MatrixEntry>& entries);
    ~SparseLinearSystem();
    SparseLinearSystem(const SparseLinearSystem&) = delete;
    SparseLinearSystem& operator=(const SparseLinearSystem&) = delete;

    [[nodiscard]] std::vector<double> solve(const std::vector<double>& rhs) const;

   private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// Single solve of a sparse square system: preconditioned BiCGSTAB started from guess, falling back
// to sparse LU when the iteration does not reach a relative residual of tolerance.
[[nodiscard]] std::vector<double> solve_sparse(std::size_t dimension, const std::vector<MatrixEntry>& entries,
                                               const std::vector<double>& rhs, const std::vector<double>& guess,
                                               double tolerance = 1e-14);

}  // namespace moma
