// polariton.hpp - thermodynamic-limit diagonalization, photon variance,
// and the Gaussian short-time Loschmidt echo
#pragma once

#include <array>
#include <utility>
#include <vector>

#include "dicke/model.hpp"

namespace dicke {

/// One phase's diagonalization result: polariton frequencies, mixing angle,
/// and the four photon-sector Bogoliubov coefficients. Super-radiant frames
/// additionally carry mu and the mean-field displacements alpha, beta.
struct PolaritonFrame {
    Phase phase = Phase::Normal;
    double omega_minus = 0.0;  // lower polariton frequency
    double omega_plus = 0.0;   // upper polariton frequency
    double theta = 0.0;        // mixing angle in [0, pi/2)
    std::array<double, 4> f{1.0, 0.0, 0.0, 0.0};
    double mu = 0.0;           // omega*omega0/(4 g^2), super-radiant only
    double alpha_disp = 0.0;   // photon displacement (super-radiant only)
    double beta_disp = 0.0;    // atomic displacement (super-radiant only)
    bool near_critical = false;
    double condition = 1.0;    // omega / omega_minus, coefficient blow-up scale

    // f1^2 - f2^2 + f3^2 - f4^2, equals 1 for a canonical transformation
    double symplectic_invariant() const {
        return f[0] * f[0] - f[1] * f[1] + f[2] * f[2] - f[3] * f[3];
    }
};

struct VarianceReport {
    double gamma = 0.0;             // photon-number variance of the ground state
    Phase phase = Phase::Normal;
    double n_term = 0.0;            // displacement-proportional part (SR only)
    double fluctuation_term = 0.0;  // pure Bogoliubov-coefficient part
    bool near_critical = false;
    double condition = 1.0;
};

enum class EchoMethod { AnalyticGaussian, AnalyticCharacteristic, Exact };

const char* to_string(EchoMethod m);

/// Sampled Loschmidt echo L(t) over a strictly increasing time grid.
struct EchoCurve {
    std::vector<double> times;
    std::vector<double> values;
    EchoMethod method = EchoMethod::AnalyticGaussian;
    DickeParams params;

    // Validates the grid, requires L(0) ~ 1, and absorbs <= 1e-12 excursions
    // above 1; larger excursions throw (they indicate a bug, not roundoff).
    static EchoCurve make(std::vector<double> times, std::vector<double> values,
                          EchoMethod method, const DickeParams& params);
};

/// Normal-phase frame. Throws WrongPhase unless classify_phase(p) == Normal.
PolaritonFrame normal_frame(const DickeParams& p);

/// Super-radiant frame. Throws WrongPhase unless classify_phase(p) == SuperRadiant.
PolaritonFrame super_radiant_frame(const DickeParams& p);

/// Dispatch on the phase of p; throws CriticalPoint at g = g_c.
PolaritonFrame polariton_frame(const DickeParams& p);

VarianceReport photon_variance(const PolaritonFrame& frame);

/// L(t) = exp(-4 gamma delta_tilde^2 t^2).
EchoCurve loschmidt_echo_gaussian(const DickeParams& p, double gamma,
                                  std::vector<double> times);

/// gamma versus atom number at fixed (omega, omega0, g); super-radiant only.
std::vector<std::pair<int, double>> decay_scaling(const DickeParams& p,
                                                  const std::vector<int>& n_list);

}  // namespace dicke
