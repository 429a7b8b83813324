// solvers.hpp - extremal eigensolvers and Krylov time propagation
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "dicke/hamiltonian.hpp"

namespace dicke {

// Dimension at and below which dense symmetric solvers are used.
inline constexpr std::size_t kDenseDimLimit = 4000;

struct EigenPair {
    double value = 0.0;
    std::vector<double> vector;
    double residual = 0.0;  // ||H v - E v||
    int iterations = 0;     // 0 for the dense path
};

Eigen::MatrixXd to_dense(const SparseHamiltonian& h);

/// Full spectrum via a dense symmetric solver; only valid for moderate dims.
struct DenseSpectrum {
    Eigen::VectorXd values;
    Eigen::MatrixXd vectors;
};
DenseSpectrum dense_spectrum(const SparseHamiltonian& h);

/// Lowest eigenpair. Dense solver for dim <= dense_limit, otherwise Lanczos
/// with full reorthogonalization. Throws NoConvergence when the iteration
/// budget is exhausted with residual above tol*|E|.
EigenPair lowest_eigenpair(const SparseHamiltonian& h, double tol = 1e-10,
                           std::size_t dense_limit = kDenseDimLimit);

/// Lanczos with full reorthogonalization, independent of the dense path.
EigenPair lanczos_lowest(const SparseHamiltonian& h, double tol, int max_basis = 300,
                         int max_restarts = 20);

/// In-place psi <- exp(-i H t) psi by adaptive short-iterate Lanczos steps.
/// Per-step error is controlled to step_tol; if the estimate cannot be pushed
/// below abort_tol the propagation throws StepTooLarge.
void krylov_propagate(const SparseHamiltonian& h,
                      std::vector<std::complex<double>>& psi, double t,
                      double step_tol = 1e-10, double abort_tol = 1e-8,
                      int basis_size = 40);

}  // namespace dicke
