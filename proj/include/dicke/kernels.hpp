// kernels.hpp - hot inner loops, each with a serial reference used in tests
#pragma once

#include <complex>

#include "dicke/hamiltonian.hpp"

namespace dicke::kernels {

// y = H x, plain row loop. Reference implementation for the parallel kernel.
template <typename Scalar>
void spmv_serial(const SparseHamiltonian& h, const Scalar* x, Scalar* y);

// y = H x, OpenMP over rows. Each row accumulates in the same order as the
// serial kernel, so the result is bit-identical for any thread count.
template <typename Scalar>
void spmv(const SparseHamiltonian& h, const Scalar* x, Scalar* y);

// w -= sum_j coeff[j] * basis[j], serial reference.
void subtract_projections_serial(double* w, std::size_t dim,
                                 const double* const* basis, const double* coeff,
                                 std::size_t count);

// Same contraction, OpenMP over vector elements; inner j loop keeps a fixed
// order so results match the serial kernel bit-for-bit.
void subtract_projections(double* w, std::size_t dim, const double* const* basis,
                          const double* coeff, std::size_t count);

double dot(const double* a, const double* b, std::size_t dim);
double norm2(const double* a, std::size_t dim);

}  // namespace dicke::kernels
