#pragma once

#include <cstdint>
#include <vector>

#include "dicke/fock_basis.hpp"
#include "dicke/model.hpp"

namespace dicke {

/// Real symmetric sparse matrix in CSR form. Column indices are sorted
/// within each row.
struct SparseHamiltonian {
    std::size_t dim = 0;
    std::vector<std::size_t> row_ptr;
    std::vector<std::uint32_t> col;
    std::vector<double> val;

    // couplings that would leave the photon cutoff are dropped, not an error;
    // their count and largest magnitude are recorded here
    std::size_t truncated_links = 0;
    double truncated_weight = 0.0;

    std::size_t nnz() const { return val.size(); }
};

/// Assembles H = omega a^dag a + omega0 Jz + (g/sqrt(N)) (a^dag + a)(J+ + J-)
/// on the given basis. Counter-rotating terms are kept.
SparseHamiltonian build_hamiltonian(const DickeParams& p, const FockSpinBasis& basis);

}  // namespace dicke
