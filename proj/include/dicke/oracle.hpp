// oracle.hpp - finite-N ground truth: exact ground state, photon statistics,
// and the exact decoherence factor D(t)
#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "dicke/fock_basis.hpp"
#include "dicke/hamiltonian.hpp"
#include "dicke/model.hpp"
#include "dicke/polariton.hpp"
#include "dicke/solvers.hpp"

namespace dicke {

struct OracleOptions {
    int initial_n_max = -1;       // -1: use the displacement-based heuristic
    double tol = 1e-10;           // eigensolver residual, relative to |E|
    int max_doublings = 6;        // cutoff escalation budget
    std::size_t dense_limit = kDenseDimLimit;
    bool force_krylov = false;    // use the iterative propagator regardless of dim
    double energy_tol = 1e-8;     // |dE0|/|E0| across a cutoff doubling
    double nbar_tol = 1e-6;       // |d<n>| across a cutoff doubling
};

struct GroundStateResult {
    DickeParams params;
    int n_max_used = 0;
    double energy = 0.0;
    std::vector<double> vector;   // unit norm, real amplitudes over the basis
    double delta_energy_rel = 0.0;  // convergence metadata at the last doubling
    double delta_nbar = 0.0;
    double residual = 0.0;
    int iterations = 0;
    std::size_t truncated_links = 0;

    FockSpinBasis basis() const { return {n_max_used, params.n_atoms}; }
};

struct PhotonStatistics {
    double mean = 0.0;
    double variance = 0.0;
    std::vector<double> distribution;  // p(n), n = 0..n_max
};

struct ExactEcho {
    EchoCurve curve;                       // L(t) = |D(t)|^2
    std::vector<std::complex<double>> d;   // complex decoherence factor
    double max_norm_drift = 0.0;           // worst |  ||psi|| - 1 | over the grid
};

/// Photon cutoff start value: mean displaced occupation plus a wide margin.
int heuristic_n_max(const DickeParams& p);

/// Ground state of the ensemble Hamiltonian with automatic cutoff escalation:
/// n_max is doubled until both the energy and <n> are stable.
GroundStateResult solve_ground_state(const DickeParams& p,
                                     const OracleOptions& opts = {});

PhotonStatistics photon_statistics(const GroundStateResult& gs);

/// D(t) = <G| exp(i H_g t) exp(-i H_e t) |G> on a shared basis, with L = |D|^2.
/// const_g / const_e optionally restore the dropped c-number offsets, which
/// rotate the phase of D but leave L unchanged.
ExactEcho echo_exact(const DickeParams& p, const std::vector<double>& times,
                     const OracleOptions& opts = {}, double const_g = 0.0,
                     double const_e = 0.0);

/// Same, reusing an already-converged ground state.
ExactEcho echo_exact(const GroundStateResult& gs, const std::vector<double>& times,
                     const OracleOptions& opts = {}, double const_g = 0.0,
                     double const_e = 0.0);

/// L(t) = |sum_n p(n) exp(-2 i delta_tilde t n)|^2, the squared characteristic
/// function of the photon-number distribution.
EchoCurve echo_characteristic(const GroundStateResult& gs,
                              const std::vector<double>& times);

/// Off-diagonal element of the probe's reduced density matrix.
std::complex<double> reduced_coherence(const ProbeAtom& probe,
                                       std::complex<double> d);

/// JSON report for regression fixtures: params, n_max_used, energy, mean,
/// variance, distribution, convergence metadata.
std::string oracle_report_json(const GroundStateResult& gs,
                               const PhotonStatistics& stats);

}  // namespace dicke
