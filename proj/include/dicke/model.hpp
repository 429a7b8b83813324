// model.hpp - physical parameter set, phase classification, dispersive shift
#pragma once

#include <complex>
#include <string>

#include "dicke/errors.hpp"

namespace dicke {

// Relative half-width of the band around g_c classified as Critical.
inline constexpr double kCriticalBand = 1e-9;
// Relative half-width of the band around g_c flagged NearCritical.
inline constexpr double kNearCriticalBand = 1e-2;
// Dispersive-regime guard: require |delta_s| >= kDispersiveGuard * g_s.
inline constexpr double kDispersiveGuard = 10.0;

enum class Phase { Normal, SuperRadiant, Critical };

enum class Branch { Ground, Excited };

const char* to_string(Phase p);

/// Ensemble configuration in units of the cavity frequency omega.
/// Immutable after construction; validated by make().
struct DickeParams {
    double omega = 1.0;        // cavity frequency (reference scale)
    double omega0 = 1.0;       // atomic level spacing
    double g = 0.0;            // collective coupling strength
    int n_atoms = 1;           // N
    double delta_tilde = 0.0;  // cavity shift, stored non-negative

    static DickeParams make(double omega, double omega0, double g, int n_atoms,
                            double delta_tilde = 0.0);
    void validate() const;  // throws std::invalid_argument
};

/// Far-detuned probe atom passing through the cavity.
struct ProbeAtom {
    double omega_s = 0.0;  // probe transition frequency
    double g_s = 0.0;      // probe-cavity coupling
    double delta_s = 0.0;  // detuning omega_s - omega
    std::complex<double> alpha_amp{1.0, 0.0};  // ground amplitude
    std::complex<double> beta_amp{0.0, 0.0};   // excited amplitude

    static ProbeAtom make(double g_s, double delta_s, double omega,
                          std::complex<double> alpha_amp,
                          std::complex<double> beta_amp);
    void validate() const;
};

/// g_c = sqrt(omega * omega0) / 2.
double critical_coupling(const DickeParams& p);

Phase classify_phase(const DickeParams& p);

/// Effective cavity shift g_s^2 / delta_s induced by the probe.
/// Sign follows delta_s; the caller maps |shift| onto DickeParams.delta_tilde.
/// Throws RegimeViolation outside the dispersive regime.
double dispersive_shift(const ProbeAtom& probe);

/// Parameters seen by the ensemble conditioned on the probe state:
/// omega -> omega - delta_tilde (Ground) or omega + delta_tilde (Excited),
/// with delta_tilde zeroed in the result.
DickeParams shifted_params(const DickeParams& p, Branch branch);

}  // namespace dicke
