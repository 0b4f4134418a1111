#pragma once

// Lowest eigenpairs of large symmetric sparse operators: dense solver below a
// dimension threshold, thick-restart Lanczos with full reorthogonalization
// above it. Both paths are deterministic (fixed start vector, sequential
// arithmetic), so eigenvalues do not depend on thread counts.

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <optional>
#include <stdexcept>

namespace jjline {

using SparseSym = Eigen::SparseMatrix<double, Eigen::RowMajor>;

struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EigenResult {
    Eigen::VectorXd energies;                 // ascending, k lowest
    std::optional<Eigen::MatrixXd> vectors;   // columns, if requested
    Eigen::VectorXd residual_norms;           // ||H v - E v|| per pair
};

struct EigsOptions {
    int dense_threshold = 1600;   // full dense diagonalization below this dim
    double tol = 1e-10;           // residual tolerance relative to ||H||_1
    int max_restarts = 600;
    int subspace = 0;             // 0 = auto (max(2k+16, 40))
    bool want_vectors = false;
};

EigenResult lowest_eigs(const SparseSym& h, int k, const EigsOptions& opts = {});

}  // namespace jjline
