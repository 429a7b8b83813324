// Test-only oracles, deliberately independent of the library code paths they
// check: a generic 2x2 symmetric eigensolver and a from-scratch dense
// assembly of the finite-N Hamiltonian.
#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <utility>

#include "dicke/fock_basis.hpp"
#include "dicke/model.hpp"

namespace dicke::testing {

// eigenvalues of [[a, c], [c, b]] via the generic dense solver
inline std::pair<double, double> eig2x2(double a, double c, double b) {
    Eigen::Matrix2d m;
    m << a, c, c, b;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(m);
    return {es.eigenvalues()(0), es.eigenvalues()(1)};
}

// dense H = omega a^dag a + omega0 Jz + (g/sqrt(N)) (a^dag + a)(J+ + J-),
// assembled element-by-element with the angular-momentum formula in terms of
// (J, m) rather than the library's integer-product shortcut
inline Eigen::MatrixXd dense_reference(const DickeParams& p, int n_max) {
    const int n_atoms = p.n_atoms;
    const double j = 0.5 * n_atoms;
    const auto dim = static_cast<Eigen::Index>((n_max + 1) * (n_atoms + 1));
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    const double c = p.g / std::sqrt(static_cast<double>(n_atoms));
    const auto idx = [&](int n, int k) { return n * (n_atoms + 1) + k; };
    for (int n = 0; n <= n_max; ++n) {
        for (int k = 0; k <= n_atoms; ++k) {
            const double m = k - j;
            h(idx(n, k), idx(n, k)) = p.omega * n + p.omega0 * m;
            for (int dn : {+1, -1}) {
                const int n2 = n + dn;
                if (n2 < 0 || n2 > n_max) continue;
                const double fock = dn > 0 ? std::sqrt(n + 1.0) : std::sqrt(double(n));
                for (int dk : {+1, -1}) {
                    const int k2 = k + dk;
                    if (k2 < 0 || k2 > n_atoms) continue;
                    const double spin =
                        dk > 0 ? std::sqrt(j * (j + 1) - m * (m + 1))
                               : std::sqrt(j * (j + 1) - m * (m - 1));
                    h(idx(n2, k2), idx(n, k)) += c * fock * spin;
                }
            }
        }
    }
    return h;
}

}  // namespace dicke::testing
