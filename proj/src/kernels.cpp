#include "dicke/kernels.hpp"

#include <cmath>

namespace dicke::kernels {

template <typename Scalar>
void spmv_serial(const SparseHamiltonian& h, const Scalar* x, Scalar* y) {
    for (std::size_t r = 0; r < h.dim; ++r) {
        Scalar acc{};
        for (std::size_t j = h.row_ptr[r]; j < h.row_ptr[r + 1]; ++j) {
            acc += h.val[j] * x[h.col[j]];
        }
        y[r] = acc;
    }
}

template <typename Scalar>
void spmv(const SparseHamiltonian& h, const Scalar* x, Scalar* y) {
    const long long n = static_cast<long long>(h.dim);
#pragma omp parallel for schedule(static)
    for (long long r = 0; r < n; ++r) {
        Scalar acc{};
        for (std::size_t j = h.row_ptr[r]; j < h.row_ptr[r + 1]; ++j) {
            acc += h.val[j] * x[h.col[j]];
        }
        y[r] = acc;
    }
}

template void spmv_serial<double>(const SparseHamiltonian&, const double*, double*);
template void spmv_serial<std::complex<double>>(const SparseHamiltonian&,
                                                const std::complex<double>*,
                                                std::complex<double>*);
template void spmv<double>(const SparseHamiltonian&, const double*, double*);
template void spmv<std::complex<double>>(const SparseHamiltonian&,
                                         const std::complex<double>*,
                                         std::complex<double>*);

void subtract_projections_serial(double* w, std::size_t dim,
                                 const double* const* basis, const double* coeff,
                                 std::size_t count) {
    for (std::size_t i = 0; i < dim; ++i) {
        double acc = w[i];
        for (std::size_t j = 0; j < count; ++j) {
            acc -= coeff[j] * basis[j][i];
        }
        w[i] = acc;
    }
}

void subtract_projections(double* w, std::size_t dim, const double* const* basis,
                          const double* coeff, std::size_t count) {
    const long long n = static_cast<long long>(dim);
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < n; ++i) {
        double acc = w[i];
        for (std::size_t j = 0; j < count; ++j) {
            acc -= coeff[j] * basis[j][i];
        }
        w[i] = acc;
    }
}

double dot(const double* a, const double* b, std::size_t dim) {
    double acc = 0.0;
    for (std::size_t i = 0; i < dim; ++i) acc += a[i] * b[i];
    return acc;
}

double norm2(const double* a, std::size_t dim) {
    return std::sqrt(dot(a, a, dim));
}

}  // namespace dicke::kernels
