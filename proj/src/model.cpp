#include "dicke/model.hpp"

#include <cmath>
#include <sstream>

namespace dicke {

const char* to_string(Phase p) {
    switch (p) {
        case Phase::Normal: return "normal";
        case Phase::SuperRadiant: return "super-radiant";
        case Phase::Critical: return "critical";
    }
    return "?";
}

DickeParams DickeParams::make(double omega, double omega0, double g, int n_atoms,
                              double delta_tilde) {
    DickeParams p{omega, omega0, g, n_atoms, delta_tilde};
    p.validate();
    return p;
}

void DickeParams::validate() const {
    std::ostringstream err;
    if (!(omega > 0.0)) {
        err << "omega must be positive, got " << omega;
    } else if (!(omega0 > 0.0)) {
        err << "omega0 must be positive, got " << omega0;
    } else if (!(g >= 0.0)) {
        err << "g must be non-negative, got " << g;
    } else if (n_atoms < 1) {
        err << "n_atoms must be >= 1, got " << n_atoms;
    } else if (!(delta_tilde >= 0.0)) {
        err << "delta_tilde must be non-negative, got " << delta_tilde;
    } else if (!(delta_tilde < omega)) {
        err << "delta_tilde must stay below omega (" << delta_tilde
            << " >= " << omega << ")";
    } else {
        return;
    }
    throw std::invalid_argument(err.str());
}

ProbeAtom ProbeAtom::make(double g_s, double delta_s, double omega,
                          std::complex<double> alpha_amp,
                          std::complex<double> beta_amp) {
    ProbeAtom a;
    a.g_s = g_s;
    a.delta_s = delta_s;
    a.omega_s = omega + delta_s;
    a.alpha_amp = alpha_amp;
    a.beta_amp = beta_amp;
    a.validate();
    return a;
}

void ProbeAtom::validate() const {
    const double norm = std::norm(alpha_amp) + std::norm(beta_amp);
    if (std::abs(norm - 1.0) > 1e-12) {
        std::ostringstream err;
        err << "probe amplitudes must be normalized: |alpha|^2+|beta|^2 = " << norm;
        throw std::invalid_argument(err.str());
    }
    if (g_s < 0.0) {
        throw std::invalid_argument("probe coupling g_s must be non-negative");
    }
    if (std::abs(delta_s) < kDispersiveGuard * g_s) {
        std::ostringstream err;
        err << "dispersive regime requires |delta_s| >= " << kDispersiveGuard
            << " * g_s, got |" << delta_s << "| < " << kDispersiveGuard * g_s;
        throw RegimeViolation(err.str());
    }
}

double critical_coupling(const DickeParams& p) {
    return std::sqrt(p.omega * p.omega0) / 2.0;
}

Phase classify_phase(const DickeParams& p) {
    const double gc = critical_coupling(p);
    if (p.g < gc * (1.0 - kCriticalBand)) return Phase::Normal;
    if (p.g > gc * (1.0 + kCriticalBand)) return Phase::SuperRadiant;
    return Phase::Critical;
}

double dispersive_shift(const ProbeAtom& probe) {
    if (probe.delta_s == 0.0) {
        throw RegimeViolation("dispersive shift undefined at zero detuning");
    }
    if (std::abs(probe.delta_s) < kDispersiveGuard * probe.g_s) {
        std::ostringstream err;
        err << "dispersive regime violated: |delta_s| = " << std::abs(probe.delta_s)
            << " < " << kDispersiveGuard << " * g_s = " << kDispersiveGuard * probe.g_s;
        throw RegimeViolation(err.str());
    }
    return probe.g_s * probe.g_s / probe.delta_s;
}

DickeParams shifted_params(const DickeParams& p, Branch branch) {
    DickeParams out = p;
    if (branch == Branch::Ground) {
        const double shifted = p.omega - p.delta_tilde;
        if (!(shifted > 0.0)) {
            std::ostringstream err;
            err << "shift would close the cavity frequency: omega - delta_tilde = "
                << shifted;
            throw InvalidShift(err.str());
        }
        out.omega = shifted;
    } else {
        out.omega = p.omega + p.delta_tilde;
    }
    out.delta_tilde = 0.0;
    return out;
}

}  // namespace dicke
