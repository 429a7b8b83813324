#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>

namespace dicke {

/// Truncated photon Fock space tensored with the symmetric spin-J sector,
/// J = N/2. States are |n, m> with n in [0, n_max] and m = k - J, k in [0, N].
/// Flat index: n * (N + 1) + k.
struct FockSpinBasis {
    int n_max = 0;
    int n_atoms = 1;

    FockSpinBasis(int n_max_, int n_atoms_) : n_max(n_max_), n_atoms(n_atoms_) {
        if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
        if (n_atoms < 1) throw std::invalid_argument("n_atoms must be >= 1");
    }

    std::size_t dim() const {
        return static_cast<std::size_t>(n_max + 1) * (n_atoms + 1);
    }

    std::size_t index(int n, int k) const {
        return static_cast<std::size_t>(n) * (n_atoms + 1) + k;
    }

    // inverse of index(): (photon number n, spin index k)
    std::pair<int, int> levels(std::size_t idx) const {
        const int n = static_cast<int>(idx / (n_atoms + 1));
        const int k = static_cast<int>(idx % (n_atoms + 1));
        return {n, k};
    }

    double j() const { return 0.5 * n_atoms; }
    double m_of_k(int k) const { return k - 0.5 * n_atoms; }
};

}  // namespace dicke
