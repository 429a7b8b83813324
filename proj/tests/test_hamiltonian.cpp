#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "dicke/hamiltonian.hpp"
#include "dicke/solvers.hpp"
#include "test_support.hpp"

using namespace dicke;

TEST_CASE("basis index map is a bijection") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> un(0, 40), ua(1, 30);
    for (int trial = 0; trial < 50; ++trial) {
        const FockSpinBasis basis(un(rng), ua(rng));
        CHECK(basis.dim() ==
              static_cast<std::size_t>(basis.n_max + 1) * (basis.n_atoms + 1));
        for (std::size_t idx = 0; idx < basis.dim(); ++idx) {
            const auto [n, k] = basis.levels(idx);
            CHECK(n >= 0);
            CHECK(n <= basis.n_max);
            CHECK(k >= 0);
            CHECK(k <= basis.n_atoms);
            CHECK(basis.index(n, k) == idx);
        }
    }
    CHECK(FockSpinBasis(3, 4).m_of_k(0) == doctest::Approx(-2.0));
    CHECK(FockSpinBasis(3, 5).m_of_k(5) == doctest::Approx(2.5));
}

TEST_CASE("decoupled limit is diagonal with ground energy -omega0 N / 2") {
    const int n_atoms = 7;
    const DickeParams p = DickeParams::make(1.0, 1.3, 0.0, n_atoms);
    const FockSpinBasis basis(10, n_atoms);
    const SparseHamiltonian h = build_hamiltonian(p, basis);
    CHECK(h.nnz() == h.dim);  // diagonal only
    const EigenPair pair = lowest_eigenpair(h);
    CHECK(pair.value == doctest::Approx(-1.3 * n_atoms / 2.0).epsilon(1e-14));
    // exact unit vector on |n=0, m=-J>
    for (std::size_t i = 0; i < h.dim; ++i) {
        const double expected = i == basis.index(0, 0) ? 1.0 : 0.0;
        CHECK(std::abs(std::abs(pair.vector[i]) - expected) < 1e-12);
    }
}

TEST_CASE("N = 1 reduces to the one-atom Rabi Hamiltonian") {
    const double w = 1.0, w0 = 0.8, g = 0.35;
    const int n_max = 12;
    const DickeParams p = DickeParams::make(w, w0, g, 1);
    const SparseHamiltonian h = build_hamiltonian(p, FockSpinBasis(n_max, 1));

    // H_rabi = w a^dag a + (w0/2) sigma_z + g (a^dag + a) sigma_x on |n> x {g,e}
    const auto dim = static_cast<Eigen::Index>(2 * (n_max + 1));
    Eigen::MatrixXd rabi = Eigen::MatrixXd::Zero(dim, dim);
    const auto idx = [&](int n, int s) { return 2 * n + s; };  // s: 0 = g, 1 = e
    for (int n = 0; n <= n_max; ++n) {
        rabi(idx(n, 0), idx(n, 0)) = w * n - 0.5 * w0;
        rabi(idx(n, 1), idx(n, 1)) = w * n + 0.5 * w0;
        if (n < n_max) {
            for (int s : {0, 1}) {
                rabi(idx(n + 1, 1 - s), idx(n, s)) += g * std::sqrt(n + 1.0);
                rabi(idx(n, s), idx(n + 1, 1 - s)) += g * std::sqrt(n + 1.0);
            }
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> rabi_es(rabi);
    const DenseSpectrum ours = dense_spectrum(h);
    for (int i = 0; i < 6; ++i) {
        CHECK(ours.values(i) == doctest::Approx(rabi_es.eigenvalues()(i)).epsilon(1e-12));
    }
}

TEST_CASE("CSR assembly matches the independent dense reference") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> ug(0.0, 1.0);
    for (int trial = 0; trial < 5; ++trial) {
        const int n_atoms = 2 + trial * 3;
        const int n_max = 8 + trial;
        const DickeParams p = DickeParams::make(1.0, 1.44, ug(rng), n_atoms);
        const SparseHamiltonian h = build_hamiltonian(p, FockSpinBasis(n_max, n_atoms));
        const Eigen::MatrixXd dense = to_dense(h);
        const Eigen::MatrixXd ref = testing::dense_reference(p, n_max);
        CHECK((dense - ref).cwiseAbs().maxCoeff() < 1e-14);
    }
}

TEST_CASE("assembled matrix equals its transpose exactly") {
    const DickeParams p = DickeParams::make(1.0, 1.44, 0.7, 9);
    const SparseHamiltonian h = build_hamiltonian(p, FockSpinBasis(14, 9));
    const Eigen::MatrixXd dense = to_dense(h);
    CHECK((dense - dense.transpose()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("couplings beyond the cutoff are recorded, not dropped silently") {
    const DickeParams p = DickeParams::make(1.0, 1.44, 0.5, 4);
    const SparseHamiltonian tight = build_hamiltonian(p, FockSpinBasis(2, 4));
    CHECK(tight.truncated_links > 0);
    CHECK(tight.truncated_weight > 0.0);

    const DickeParams free = DickeParams::make(1.0, 1.44, 0.0, 4);
    const SparseHamiltonian diag = build_hamiltonian(free, FockSpinBasis(2, 4));
    CHECK(diag.truncated_links == 0);
}

TEST_CASE("basis mismatch is rejected") {
    const DickeParams p = DickeParams::make(1.0, 1.44, 0.5, 4);
    CHECK_THROWS_AS(build_hamiltonian(p, FockSpinBasis(5, 5)), std::invalid_argument);
}
