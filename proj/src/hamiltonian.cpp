#include "dicke/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dicke {

namespace {

// matrix elements of J+ and J- between adjacent k states, using the exact
// integer products (J -+ m)(J +- m + 1) = (N - k)(k + 1) and k(N - k + 1)
inline double spin_raise(int n_atoms, int k) {
    return std::sqrt(static_cast<double>(n_atoms - k) * (k + 1));
}

inline double spin_lower(int n_atoms, int k) {
    return std::sqrt(static_cast<double>(k) * (n_atoms - k + 1));
}

}  // namespace

SparseHamiltonian build_hamiltonian(const DickeParams& p, const FockSpinBasis& basis) {
    p.validate();
    if (basis.n_atoms != p.n_atoms) {
        throw std::invalid_argument("basis atom number does not match parameters");
    }
    const int nmax = basis.n_max;
    const int natoms = basis.n_atoms;
    const double coupling = p.g / std::sqrt(static_cast<double>(natoms));

    SparseHamiltonian h;
    h.dim = basis.dim();
    h.row_ptr.assign(h.dim + 1, 0);
    h.col.reserve(5 * h.dim);
    h.val.reserve(5 * h.dim);

    for (int n = 0; n <= nmax; ++n) {
        for (int k = 0; k <= natoms; ++k) {
            const std::size_t row = basis.index(n, k);
            // emit columns in ascending order: (n-1, k-1), (n-1, k+1),
            // diagonal, (n+1, k-1), (n+1, k+1)
            if (n > 0 && coupling != 0.0) {
                const double fock = std::sqrt(static_cast<double>(n));
                if (k > 0) {
                    h.col.push_back(static_cast<std::uint32_t>(basis.index(n - 1, k - 1)));
                    h.val.push_back(coupling * fock * spin_lower(natoms, k));
                }
                if (k < natoms) {
                    h.col.push_back(static_cast<std::uint32_t>(basis.index(n - 1, k + 1)));
                    h.val.push_back(coupling * fock * spin_raise(natoms, k));
                }
            }
            h.col.push_back(static_cast<std::uint32_t>(row));
            h.val.push_back(p.omega * n + p.omega0 * basis.m_of_k(k));
            if (n < nmax && coupling != 0.0) {
                const double fock = std::sqrt(static_cast<double>(n + 1));
                if (k > 0) {
                    h.col.push_back(static_cast<std::uint32_t>(basis.index(n + 1, k - 1)));
                    h.val.push_back(coupling * fock * spin_lower(natoms, k));
                }
                if (k < natoms) {
                    h.col.push_back(static_cast<std::uint32_t>(basis.index(n + 1, k + 1)));
                    h.val.push_back(coupling * fock * spin_raise(natoms, k));
                }
            } else if (coupling != 0.0) {
                // couplings out of the cutoff: record instead of failing
                const double fock = std::sqrt(static_cast<double>(n + 1));
                if (k > 0) {
                    ++h.truncated_links;
                    h.truncated_weight = std::max(
                        h.truncated_weight, coupling * fock * spin_lower(natoms, k));
                }
                if (k < natoms) {
                    ++h.truncated_links;
                    h.truncated_weight = std::max(
                        h.truncated_weight, coupling * fock * spin_raise(natoms, k));
                }
            }
            h.row_ptr[row + 1] = h.col.size();
        }
    }
    return h;
}

}  // namespace dicke
