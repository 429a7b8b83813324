#include <doctest.h>
#include <omp.h>

#include <complex>
#include <random>
#include <vector>

#include "dicke/hamiltonian.hpp"
#include "dicke/kernels.hpp"

using namespace dicke;

namespace {

SparseHamiltonian test_matrix() {
    const DickeParams p = DickeParams::make(1.0, 1.44, 0.8, 25, 0.0);
    return build_hamiltonian(p, FockSpinBasis(40, 25));
}

}  // namespace

TEST_CASE("parallel spmv is bit-identical to the serial reference") {
    const SparseHamiltonian h = test_matrix();
    std::mt19937_64 rng(3);
    std::normal_distribution<double> gauss;

    std::vector<double> x(h.dim), y_ref(h.dim), y_par(h.dim);
    for (double& v : x) v = gauss(rng);
    kernels::spmv_serial(h, x.data(), y_ref.data());

    const int saved = omp_get_max_threads();
    for (int threads : {1, 2, 4, 7}) {
        omp_set_num_threads(threads);
        kernels::spmv(h, x.data(), y_par.data());
        for (std::size_t i = 0; i < h.dim; ++i) {
            REQUIRE(y_par[i] == y_ref[i]);
        }
    }
    omp_set_num_threads(saved);
}

TEST_CASE("complex spmv matches the serial reference bitwise") {
    const SparseHamiltonian h = test_matrix();
    std::mt19937_64 rng(4);
    std::normal_distribution<double> gauss;
    using C = std::complex<double>;

    std::vector<C> x(h.dim), y_ref(h.dim), y_par(h.dim);
    for (C& v : x) v = C(gauss(rng), gauss(rng));
    kernels::spmv_serial(h, x.data(), y_ref.data());
    kernels::spmv(h, x.data(), y_par.data());
    for (std::size_t i = 0; i < h.dim; ++i) {
        REQUIRE(y_par[i] == y_ref[i]);
    }
}

TEST_CASE("projection subtraction matches the serial reference bitwise") {
    std::mt19937_64 rng(5);
    std::normal_distribution<double> gauss;
    const std::size_t dim = 3001;
    const std::size_t count = 17;

    std::vector<std::vector<double>> basis(count, std::vector<double>(dim));
    std::vector<const double*> ptrs(count);
    std::vector<double> coeff(count);
    for (std::size_t j = 0; j < count; ++j) {
        for (double& v : basis[j]) v = gauss(rng);
        ptrs[j] = basis[j].data();
        coeff[j] = gauss(rng);
    }
    std::vector<double> w(dim);
    for (double& v : w) v = gauss(rng);

    std::vector<double> w_ref = w, w_par = w;
    kernels::subtract_projections_serial(w_ref.data(), dim, ptrs.data(),
                                         coeff.data(), count);
    kernels::subtract_projections(w_par.data(), dim, ptrs.data(), coeff.data(),
                                  count);
    for (std::size_t i = 0; i < dim; ++i) {
        REQUIRE(w_par[i] == w_ref[i]);
    }
}

TEST_CASE("dot and norm") {
    const std::vector<double> a{1.0, -2.0, 3.0};
    const std::vector<double> b{0.5, 0.25, -1.0};
    CHECK(kernels::dot(a.data(), b.data(), 3) == doctest::Approx(-3.0));
    CHECK(kernels::norm2(a.data(), 3) == doctest::Approx(std::sqrt(14.0)));
}
