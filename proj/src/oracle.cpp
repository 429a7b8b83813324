#include "dicke/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "dicke/errors.hpp"
#include "dicke/solvers.hpp"

namespace dicke {

namespace {

PhotonStatistics stats_of(const std::vector<double>& vec, const FockSpinBasis& basis) {
    PhotonStatistics st;
    st.distribution.assign(basis.n_max + 1, 0.0);
    for (std::size_t idx = 0; idx < vec.size(); ++idx) {
        const auto [n, k] = basis.levels(idx);
        st.distribution[n] += vec[idx] * vec[idx];
    }
    double m1 = 0.0, m2 = 0.0;
    for (int n = 0; n <= basis.n_max; ++n) {
        m1 += st.distribution[n] * n;
        m2 += st.distribution[n] * static_cast<double>(n) * n;
    }
    st.mean = m1;
    st.variance = std::max(0.0, m2 - m1 * m1);
    return st;
}

}  // namespace

int heuristic_n_max(const DickeParams& p) {
    double abar = 0.0;
    if (classify_phase(p) == Phase::SuperRadiant) {
        const double mu = p.omega * p.omega0 / (4.0 * p.g * p.g);
        abar = p.g * p.g * p.n_atoms * (1.0 - mu * mu) / (p.omega * p.omega);
    }
    return static_cast<int>(std::ceil(abar + 10.0 * std::sqrt(abar + 1.0) + 20.0));
}

GroundStateResult solve_ground_state(const DickeParams& p, const OracleOptions& opts) {
    p.validate();
    int n_max = opts.initial_n_max > 0 ? opts.initial_n_max : heuristic_n_max(p);

    GroundStateResult prev;
    bool have_prev = false;
    double prev_nbar = 0.0;

    for (int round = 0; round <= opts.max_doublings; ++round) {
        const FockSpinBasis basis(n_max, p.n_atoms);
        const SparseHamiltonian h = build_hamiltonian(p, basis);
        EigenPair pair = lowest_eigenpair(h, opts.tol, opts.dense_limit);
        if (pair.residual > opts.tol * std::max(std::abs(pair.value), 1e-30)) {
            std::ostringstream err;
            err << "eigensolver residual " << pair.residual << " above " << opts.tol
                << "*|E| at n_max = " << n_max;
            throw NoConvergence(err.str());
        }

        GroundStateResult cur;
        cur.params = p;
        cur.n_max_used = n_max;
        cur.energy = pair.value;
        cur.vector = std::move(pair.vector);
        cur.residual = pair.residual;
        cur.iterations = pair.iterations;
        cur.truncated_links = h.truncated_links;
        const double nbar = stats_of(cur.vector, basis).mean;

        if (have_prev) {
            cur.delta_energy_rel = std::abs(cur.energy - prev.energy) /
                                   std::max(std::abs(cur.energy), 1e-30);
            cur.delta_nbar = std::abs(nbar - prev_nbar);
            if (cur.delta_energy_rel < opts.energy_tol && cur.delta_nbar < opts.nbar_tol) {
                return cur;
            }
        }
        prev = std::move(cur);
        prev_nbar = nbar;
        have_prev = true;
        n_max *= 2;
    }

    std::ostringstream err;
    err << "photon cutoff escalation exhausted at n_max = " << n_max
        << " (last dE_rel = " << prev.delta_energy_rel << ", d<n> = " << prev.delta_nbar
        << ")";
    throw NoConvergence(err.str());
}

PhotonStatistics photon_statistics(const GroundStateResult& gs) {
    PhotonStatistics st = stats_of(gs.vector, gs.basis());
    double total = 0.0;
    for (double pn : st.distribution) total += pn;
    if (std::abs(total - 1.0) > 1e-10) {
        std::ostringstream err;
        err << "photon distribution not normalized: sum = " << total;
        throw std::logic_error(err.str());
    }
    return st;
}

namespace {

using Complex = std::complex<double>;

// Spectral-decomposition route for moderate dimensions: evolve |G> under both
// conditional Hamiltonians exactly and take the overlap per time point.
ExactEcho echo_spectral(const DickeParams& p, const GroundStateResult& gs,
                        const SparseHamiltonian& hmat_g, const SparseHamiltonian& hmat_e,
                        const std::vector<double>& times) {
    const DenseSpectrum sg = dense_spectrum(hmat_g);
    const DenseSpectrum se = dense_spectrum(hmat_e);
    const Eigen::Map<const Eigen::VectorXd> ground(gs.vector.data(), gs.vector.size());
    const Eigen::VectorXd cg = sg.vectors.transpose() * ground;
    const Eigen::VectorXd ce = se.vectors.transpose() * ground;
    const Eigen::MatrixXd overlap = sg.vectors.transpose() * se.vectors;

    std::vector<Complex> d(times.size());
    std::vector<double> values(times.size());
    const Complex im(0.0, 1.0);
    Eigen::VectorXcd left(cg.size()), right(ce.size());
    for (std::size_t it = 0; it < times.size(); ++it) {
        const double t = times[it];
        // <psi_g(t)| contributes the conjugated phase; cg, ce are real
        for (Eigen::Index j = 0; j < cg.size(); ++j)
            left(j) = cg(j) * std::exp(im * sg.values(j) * t);
        for (Eigen::Index j = 0; j < ce.size(); ++j)
            right(j) = ce(j) * std::exp(-im * se.values(j) * t);
        const Complex dval = (left.array() * (overlap * right).array()).sum();
        d[it] = dval;
        values[it] = std::norm(dval);
    }

    ExactEcho out;
    out.d = std::move(d);
    out.curve = EchoCurve::make(times, std::move(values), EchoMethod::Exact, p);
    out.max_norm_drift =
        std::max(std::abs(cg.norm() - 1.0), std::abs(ce.norm() - 1.0));
    return out;
}

ExactEcho echo_krylov(const DickeParams& p, const GroundStateResult& gs,
                      const SparseHamiltonian& hmat_g, const SparseHamiltonian& hmat_e,
                      const std::vector<double>& times) {
    const std::size_t dim = gs.vector.size();
    std::vector<Complex> psi_g(dim), psi_e(dim);
    for (std::size_t i = 0; i < dim; ++i) psi_g[i] = psi_e[i] = gs.vector[i];

    std::vector<Complex> d(times.size());
    std::vector<double> values(times.size());
    double drift = 0.0;
    double t_now = 0.0;
    for (std::size_t it = 0; it < times.size(); ++it) {
        const double dt = times[it] - t_now;
        if (dt > 0.0) {
            krylov_propagate(hmat_g, psi_g, dt);
            krylov_propagate(hmat_e, psi_e, dt);
            t_now = times[it];
        }
        Complex overlap{};
        for (std::size_t i = 0; i < dim; ++i) overlap += std::conj(psi_g[i]) * psi_e[i];
        d[it] = overlap;
        values[it] = std::norm(overlap);
        double ng = 0.0, ne = 0.0;
        for (std::size_t i = 0; i < dim; ++i) {
            ng += std::norm(psi_g[i]);
            ne += std::norm(psi_e[i]);
        }
        drift = std::max({drift, std::abs(std::sqrt(ng) - 1.0),
                          std::abs(std::sqrt(ne) - 1.0)});
    }

    ExactEcho out;
    out.d = std::move(d);
    out.curve = EchoCurve::make(times, std::move(values), EchoMethod::Exact, p);
    out.max_norm_drift = drift;
    return out;
}

}  // namespace

ExactEcho echo_exact(const DickeParams& p, const std::vector<double>& times,
                     const OracleOptions& opts, double const_g, double const_e) {
    return echo_exact(solve_ground_state(p, opts), times, opts, const_g, const_e);
}

ExactEcho echo_exact(const GroundStateResult& gs, const std::vector<double>& times,
                     const OracleOptions& opts, double const_g, double const_e) {
    const DickeParams& p = gs.params;
    const FockSpinBasis basis = gs.basis();

    SparseHamiltonian hg = build_hamiltonian(shifted_params(p, Branch::Ground), basis);
    SparseHamiltonian he = build_hamiltonian(shifted_params(p, Branch::Excited), basis);
    const auto add_diagonal = [](SparseHamiltonian& h, double c) {
        if (c == 0.0) return;
        for (std::size_t r = 0; r < h.dim; ++r) {
            for (std::size_t j = h.row_ptr[r]; j < h.row_ptr[r + 1]; ++j) {
                if (h.col[j] == r) h.val[j] += c;
            }
        }
    };
    add_diagonal(hg, const_g);
    add_diagonal(he, const_e);

    if (!opts.force_krylov && basis.dim() <= opts.dense_limit) {
        return echo_spectral(p, gs, hg, he, times);
    }
    return echo_krylov(p, gs, hg, he, times);
}

EchoCurve echo_characteristic(const GroundStateResult& gs,
                              const std::vector<double>& times) {
    const PhotonStatistics st = photon_statistics(gs);
    const double shift = gs.params.delta_tilde;
    std::vector<double> values(times.size());
    const Complex im(0.0, 1.0);
    for (std::size_t it = 0; it < times.size(); ++it) {
        Complex chi{};
        for (std::size_t n = 0; n < st.distribution.size(); ++n) {
            chi += st.distribution[n] *
                   std::exp(-2.0 * im * shift * times[it] * static_cast<double>(n));
        }
        values[it] = std::norm(chi);
    }
    return EchoCurve::make(times, std::move(values),
                           EchoMethod::AnalyticCharacteristic, gs.params);
}

std::complex<double> reduced_coherence(const ProbeAtom& probe,
                                       std::complex<double> d) {
    probe.validate();
    return d * std::conj(probe.alpha_amp) * probe.beta_amp;
}

std::string oracle_report_json(const GroundStateResult& gs,
                               const PhotonStatistics& stats) {
    nlohmann::json j;
    j["params"] = {{"omega", gs.params.omega},
                   {"omega0", gs.params.omega0},
                   {"g", gs.params.g},
                   {"n_atoms", gs.params.n_atoms},
                   {"delta_tilde", gs.params.delta_tilde}};
    j["n_max_used"] = gs.n_max_used;
    j["energy"] = gs.energy;
    j["mean"] = stats.mean;
    j["variance"] = stats.variance;
    j["distribution"] = stats.distribution;
    j["convergence"] = {{"delta_energy_rel", gs.delta_energy_rel},
                        {"delta_nbar", gs.delta_nbar},
                        {"residual", gs.residual},
                        {"truncated_links", gs.truncated_links}};
    return j.dump(2);
}

}  // namespace dicke
