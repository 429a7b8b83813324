#include "dicke/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "dicke/errors.hpp"
#include "dicke/kernels.hpp"

namespace dicke {

Eigen::MatrixXd to_dense(const SparseHamiltonian& h) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(h.dim, h.dim);
    for (std::size_t r = 0; r < h.dim; ++r) {
        for (std::size_t j = h.row_ptr[r]; j < h.row_ptr[r + 1]; ++j) {
            m(static_cast<Eigen::Index>(r), h.col[j]) = h.val[j];
        }
    }
    return m;
}

DenseSpectrum dense_spectrum(const SparseHamiltonian& h) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(to_dense(h));
    if (es.info() != Eigen::Success) {
        throw NoConvergence("dense symmetric eigensolver failed");
    }
    return {es.eigenvalues(), es.eigenvectors()};
}

namespace {

double exact_residual(const SparseHamiltonian& h, const std::vector<double>& v,
                      double value) {
    std::vector<double> hv(h.dim);
    kernels::spmv(h, v.data(), hv.data());
    double acc = 0.0;
    for (std::size_t i = 0; i < h.dim; ++i) {
        const double r = hv[i] - value * v[i];
        acc += r * r;
    }
    return std::sqrt(acc);
}

}  // namespace

EigenPair lanczos_lowest(const SparseHamiltonian& h, double tol, int max_basis,
                         int max_restarts) {
    const std::size_t dim = h.dim;
    const int m_cap = static_cast<int>(std::min<std::size_t>(max_basis, dim));

    // deterministic start vector; restarts continue from the best Ritz vector
    std::vector<double> start(dim);
    std::mt19937_64 rng(0x5eedULL);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (double& x : start) x = gauss(rng);
    double nrm = kernels::norm2(start.data(), dim);
    for (double& x : start) x /= nrm;

    EigenPair best;
    best.residual = std::numeric_limits<double>::infinity();
    int total_iters = 0;

    for (int restart = 0; restart < max_restarts; ++restart) {
        std::vector<std::vector<double>> basis;
        basis.reserve(m_cap + 1);
        basis.push_back(start);
        std::vector<double> alphas, betas;
        std::vector<double> w(dim);
        bool breakdown = false;

        for (int k = 0; k < m_cap; ++k) {
            ++total_iters;
            kernels::spmv(h, basis[k].data(), w.data());
            const double alpha = kernels::dot(basis[k].data(), w.data(), dim);
            alphas.push_back(alpha);

            // full reorthogonalization, two passes
            std::vector<const double*> ptrs(basis.size());
            for (std::size_t j = 0; j < basis.size(); ++j) ptrs[j] = basis[j].data();
            for (int pass = 0; pass < 2; ++pass) {
                std::vector<double> coeff(basis.size());
                for (std::size_t j = 0; j < basis.size(); ++j) {
                    coeff[j] = kernels::dot(ptrs[j], w.data(), dim);
                }
                kernels::subtract_projections(w.data(), dim, ptrs.data(),
                                              coeff.data(), basis.size());
            }

            const double beta = kernels::norm2(w.data(), dim);
            betas.push_back(beta);
            if (beta < 1e-13) {
                breakdown = true;  // exact invariant subspace
                break;
            }
            std::vector<double> next(dim);
            for (std::size_t i = 0; i < dim; ++i) next[i] = w[i] / beta;
            basis.push_back(std::move(next));
        }

        const int m = static_cast<int>(alphas.size());
        Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
        for (int i = 0; i < m; ++i) {
            t(i, i) = alphas[i];
            if (i + 1 < m) t(i, i + 1) = t(i + 1, i) = betas[i];
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
        const double theta = es.eigenvalues()(0);
        const Eigen::VectorXd s = es.eigenvectors().col(0);

        std::vector<double> ritz(dim, 0.0);
        for (int j = 0; j < m; ++j) {
            const double c = s(j);
            for (std::size_t i = 0; i < dim; ++i) ritz[i] += c * basis[j][i];
        }
        nrm = kernels::norm2(ritz.data(), dim);
        for (double& x : ritz) x /= nrm;

        const double resid = exact_residual(h, ritz, theta);
        if (resid < best.residual) {
            best.value = theta;
            best.vector = ritz;
            best.residual = resid;
            best.iterations = total_iters;
        }
        if (breakdown || resid <= tol * std::max(std::abs(theta), 1e-30)) {
            return best;
        }
        start = std::move(ritz);
    }

    std::ostringstream err;
    err << "Lanczos did not reach residual " << tol << "*|E| after " << total_iters
        << " iterations (best " << best.residual << " at E = " << best.value << ")";
    throw NoConvergence(err.str());
}

EigenPair lowest_eigenpair(const SparseHamiltonian& h, double tol,
                           std::size_t dense_limit) {
    if (h.dim <= dense_limit) {
        const DenseSpectrum sp = dense_spectrum(h);
        EigenPair pair;
        pair.value = sp.values(0);
        pair.vector.assign(sp.vectors.col(0).data(), sp.vectors.col(0).data() + h.dim);
        pair.residual = exact_residual(h, pair.vector, pair.value);
        pair.iterations = 0;
        return pair;
    }
    return lanczos_lowest(h, tol);
}

namespace {

using Complex = std::complex<double>;

double cnorm(const std::vector<Complex>& v) {
    double acc = 0.0;
    for (const Complex& x : v) acc += std::norm(x);
    return std::sqrt(acc);
}

}  // namespace

void krylov_propagate(const SparseHamiltonian& h, std::vector<Complex>& psi,
                      double t, double step_tol, double abort_tol, int basis_size) {
    if (t == 0.0 || h.dim == 0) return;
    const std::size_t dim = h.dim;
    const int m_cap = static_cast<int>(std::min<std::size_t>(basis_size, dim));
    const double direction = t > 0.0 ? 1.0 : -1.0;
    double remaining = std::abs(t);
    const Complex im(0.0, 1.0);

    while (remaining > 0.0) {
        const double beta0 = cnorm(psi);
        if (beta0 == 0.0) return;

        // Lanczos basis for the Hermitian H on the current state
        std::vector<std::vector<Complex>> basis;
        basis.reserve(m_cap + 1);
        {
            std::vector<Complex> v0(dim);
            for (std::size_t i = 0; i < dim; ++i) v0[i] = psi[i] / beta0;
            basis.push_back(std::move(v0));
        }
        std::vector<double> alphas, betas;
        std::vector<Complex> w(dim);
        bool breakdown = false;

        for (int k = 0; k < m_cap; ++k) {
            kernels::spmv(h, basis[k].data(), w.data());
            Complex alpha_c{};
            for (std::size_t i = 0; i < dim; ++i)
                alpha_c += std::conj(basis[k][i]) * w[i];
            const double alpha = alpha_c.real();  // Hermitian
            alphas.push_back(alpha);
            for (std::size_t i = 0; i < dim; ++i) {
                w[i] -= alpha * basis[k][i];
                if (k > 0) w[i] -= betas[k - 1] * basis[k - 1][i];
            }
            // one extra orthogonalization pass keeps the short basis clean
            for (std::size_t j = 0; j < basis.size(); ++j) {
                Complex c{};
                for (std::size_t i = 0; i < dim; ++i) c += std::conj(basis[j][i]) * w[i];
                for (std::size_t i = 0; i < dim; ++i) w[i] -= c * basis[j][i];
            }
            const double beta = cnorm(w);
            betas.push_back(beta);
            if (beta < 1e-14) {
                breakdown = true;
                break;
            }
            std::vector<Complex> next(dim);
            for (std::size_t i = 0; i < dim; ++i) next[i] = w[i] / beta;
            basis.push_back(std::move(next));
        }

        const int m = static_cast<int>(alphas.size());
        Eigen::MatrixXd tmat = Eigen::MatrixXd::Zero(m, m);
        for (int i = 0; i < m; ++i) {
            tmat(i, i) = alphas[i];
            if (i + 1 < m) tmat(i, i + 1) = tmat(i + 1, i) = betas[i];
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(tmat);
        const Eigen::VectorXd theta = es.eigenvalues();
        const Eigen::MatrixXd u = es.eigenvectors();
        const Eigen::VectorXd u_row0 = u.row(0);

        double tau = remaining;
        Eigen::VectorXcd coeff(m);
        for (;;) {
            for (int j = 0; j < m; ++j) {
                coeff(j) = std::exp(-im * direction * tau * theta(j)) * u_row0(j);
            }
            const Eigen::VectorXcd small = u * coeff;  // exp(-i tau T) e1
            const double err =
                breakdown ? 0.0 : betas[m - 1] * std::abs(small(m - 1)) * tau;
            if (err <= step_tol * std::max(beta0, 1e-300)) {
                // accept: psi = beta0 * V * small
                const long long n = static_cast<long long>(dim);
#pragma omp parallel for schedule(static)
                for (long long i = 0; i < n; ++i) {
                    Complex acc{};
                    for (int j = 0; j < m; ++j) acc += small(j) * basis[j][i];
                    psi[i] = beta0 * acc;
                }
                remaining -= tau;
                break;
            }
            if (err > abort_tol * std::max(beta0, 1e-300) && tau <= remaining * 1e-12) {
                std::ostringstream msg;
                msg << "propagation step error estimate " << err
                    << " exceeds bound at minimal step " << tau;
                throw StepTooLarge(msg.str());
            }
            tau *= 0.5;
            if (tau < remaining * 1e-15) {
                throw StepTooLarge("propagation step collapsed without meeting tolerance");
            }
        }
    }
}

}  // namespace dicke
