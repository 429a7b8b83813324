#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "dicke/hamiltonian.hpp"
#include "dicke/kernels.hpp"
#include "dicke/solvers.hpp"

using namespace dicke;

namespace {

SparseHamiltonian dicke_matrix(double g, int n_atoms, int n_max) {
    const DickeParams p = DickeParams::make(1.0, 1.44, g, n_atoms, 0.0);
    return build_hamiltonian(p, FockSpinBasis(n_max, n_atoms));
}

}  // namespace

TEST_CASE("lanczos agrees with the dense solver") {
    const SparseHamiltonian h = dicke_matrix(0.9, 20, 40);  // dim 861
    const DenseSpectrum dense = dense_spectrum(h);
    const EigenPair lz = lanczos_lowest(h, 1e-11);
    CHECK(lz.value == doctest::Approx(dense.values(0)).epsilon(1e-11));
    CHECK(lz.residual <= 1e-11 * std::abs(lz.value));

    // same state up to global sign
    double overlap = 0.0;
    for (std::size_t i = 0; i < h.dim; ++i) {
        overlap += lz.vector[i] * dense.vectors(static_cast<Eigen::Index>(i), 0);
    }
    CHECK(std::abs(std::abs(overlap) - 1.0) < 1e-9);
}

TEST_CASE("lowest_eigenpair picks the dense path for small problems") {
    const SparseHamiltonian h = dicke_matrix(0.3, 6, 12);
    const EigenPair pair = lowest_eigenpair(h);
    CHECK(pair.iterations == 0);
    CHECK(pair.residual < 1e-10 * std::abs(pair.value));
}

TEST_CASE("lowest_eigenpair falls back to lanczos above the dense limit") {
    const SparseHamiltonian h = dicke_matrix(0.3, 6, 12);
    const EigenPair pair = lowest_eigenpair(h, 1e-10, /*dense_limit=*/16);
    CHECK(pair.iterations > 0);
    const EigenPair dense = lowest_eigenpair(h);
    CHECK(pair.value == doctest::Approx(dense.value).epsilon(1e-11));
}

TEST_CASE("diagonal matrix: exact unit vector on the minimal entry") {
    const SparseHamiltonian h = dicke_matrix(0.0, 5, 9);
    const EigenPair pair = lanczos_lowest(h, 1e-12);
    CHECK(pair.value == doctest::Approx(-1.44 * 5 / 2.0).epsilon(1e-12));
    std::size_t arg = 0;
    double best = 0.0;
    for (std::size_t i = 0; i < h.dim; ++i) {
        if (std::abs(pair.vector[i]) > best) {
            best = std::abs(pair.vector[i]);
            arg = i;
        }
    }
    CHECK(arg == FockSpinBasis(9, 5).index(0, 0));
    CHECK(best == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("krylov propagation matches the spectral route") {
    const SparseHamiltonian h = dicke_matrix(0.7, 8, 20);  // dim 189
    const DenseSpectrum sp = dense_spectrum(h);

    // start from a localized state with a little structure
    std::vector<std::complex<double>> psi(h.dim, 0.0);
    psi[0] = std::complex<double>(0.8, 0.0);
    psi[5] = std::complex<double>(0.0, 0.6);

    const double t = 7.3;
    std::vector<std::complex<double>> krylov = psi;
    krylov_propagate(h, krylov, t);

    // exact: psi(t) = V exp(-i E t) V^T psi
    Eigen::VectorXcd v0(h.dim);
    for (std::size_t i = 0; i < h.dim; ++i) v0(i) = psi[i];
    Eigen::VectorXcd coeff = sp.vectors.transpose() * v0;
    for (Eigen::Index j = 0; j < coeff.size(); ++j) {
        coeff(j) *= std::exp(std::complex<double>(0.0, -sp.values(j) * t));
    }
    const Eigen::VectorXcd exact = sp.vectors * coeff;

    double max_err = 0.0, norm = 0.0;
    for (std::size_t i = 0; i < h.dim; ++i) {
        max_err = std::max(max_err, std::abs(krylov[i] - exact(i)));
        norm += std::norm(krylov[i]);
    }
    CHECK(max_err < 1e-8);
    CHECK(std::abs(std::sqrt(norm) - 1.0) < 1e-8);  // norm conservation
}

TEST_CASE("krylov propagation with t = 0 is the identity") {
    const SparseHamiltonian h = dicke_matrix(0.7, 4, 8);
    std::vector<std::complex<double>> psi(h.dim, 0.0);
    psi[3] = 1.0;
    const auto copy = psi;
    krylov_propagate(h, psi, 0.0);
    CHECK(psi == copy);
}

TEST_CASE("krylov propagation handles negative times") {
    const SparseHamiltonian h = dicke_matrix(0.5, 4, 10);
    std::vector<std::complex<double>> psi(h.dim, 0.0);
    psi[1] = 1.0;
    auto forward = psi;
    krylov_propagate(h, forward, 2.5);
    krylov_propagate(h, forward, -2.5);
    double err = 0.0;
    for (std::size_t i = 0; i < h.dim; ++i) {
        err = std::max(err, std::abs(forward[i] - psi[i]));
    }
    CHECK(err < 1e-9);
}
