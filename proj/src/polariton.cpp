#include "dicke/polariton.hpp"

#include <cmath>
#include <sstream>

namespace dicke {

const char* to_string(EchoMethod m) {
    switch (m) {
        case EchoMethod::AnalyticGaussian: return "analytic-gaussian";
        case EchoMethod::AnalyticCharacteristic: return "analytic-characteristic";
        case EchoMethod::Exact: return "exact";
    }
    return "?";
}

namespace {

// Shared tail of both constructions: the photon-sector coefficients have the
// same form in either phase, only the frequencies and angle differ.
void fill_coefficients(PolaritonFrame& fr, double omega) {
    const double c = std::cos(fr.theta);
    const double s = std::sin(fr.theta);
    const double wa = fr.omega_minus;
    const double wb = fr.omega_plus;
    fr.f[0] = 0.5 * c * (omega + wa) / std::sqrt(omega * wa);
    fr.f[1] = 0.5 * c * (omega - wa) / std::sqrt(omega * wa);
    fr.f[2] = 0.5 * s * (omega + wb) / std::sqrt(omega * wb);
    fr.f[3] = 0.5 * s * (omega - wb) / std::sqrt(omega * wb);
}

void flag_near_critical(PolaritonFrame& fr, const DickeParams& p) {
    const double gc = critical_coupling(p);
    fr.near_critical = std::abs(p.g - gc) < kNearCriticalBand * gc ||
                       fr.omega_minus < 1e-6 * p.omega;
    fr.condition = p.omega / fr.omega_minus;
}

}  // namespace

PolaritonFrame normal_frame(const DickeParams& p) {
    p.validate();
    if (classify_phase(p) != Phase::Normal) {
        std::ostringstream err;
        err << "normal frame requested at g = " << p.g << " (phase "
            << to_string(classify_phase(p)) << ")";
        throw WrongPhase(err.str());
    }
    const double w = p.omega, w0 = p.omega0, g = p.g;
    const double sum2 = w0 * w0 + w * w;
    const double dif2 = w0 * w0 - w * w;
    const double disc = std::sqrt(dif2 * dif2 + 16.0 * g * g * w0 * w);

    PolaritonFrame fr;
    fr.phase = Phase::Normal;
    fr.omega_minus = std::sqrt(0.5 * (sum2 - disc));
    fr.omega_plus = std::sqrt(0.5 * (sum2 + disc));
    // two-argument arctangent keeps 2*theta in [0, pi), so cos(theta) >= 0 and
    // the g -> 0 limit lands on f = (1, 0, 0, 0)
    fr.theta = 0.5 * std::atan2(4.0 * g * std::sqrt(w * w0), dif2);
    fill_coefficients(fr, w);
    flag_near_critical(fr, p);
    return fr;
}

PolaritonFrame super_radiant_frame(const DickeParams& p) {
    p.validate();
    if (classify_phase(p) != Phase::SuperRadiant) {
        std::ostringstream err;
        err << "super-radiant frame requested at g = " << p.g << " (phase "
            << to_string(classify_phase(p)) << ")";
        throw WrongPhase(err.str());
    }
    const double w = p.omega, w0 = p.omega0, g = p.g;
    const double mu = w * w0 / (4.0 * g * g);
    const double x = w0 * w0 / (mu * mu);
    const double disc = std::sqrt((x - w * w) * (x - w * w) + 4.0 * w * w * w0 * w0);

    PolaritonFrame fr;
    fr.phase = Phase::SuperRadiant;
    fr.mu = mu;
    fr.alpha_disp = g * g * p.n_atoms * (1.0 - mu * mu) / (w * w);
    fr.beta_disp = 0.5 * p.n_atoms * (1.0 - mu);
    fr.omega_minus = std::sqrt(0.5 * (x + w * w - disc));
    fr.omega_plus = std::sqrt(0.5 * (x + w * w + disc));
    fr.theta = 0.5 * std::atan2(2.0 * w * w0 * mu * mu, w0 * w0 - mu * mu * w * w);
    fill_coefficients(fr, w);
    flag_near_critical(fr, p);
    return fr;
}

PolaritonFrame polariton_frame(const DickeParams& p) {
    switch (classify_phase(p)) {
        case Phase::Normal: return normal_frame(p);
        case Phase::SuperRadiant: return super_radiant_frame(p);
        case Phase::Critical: break;
    }
    std::ostringstream err;
    err << "spectrum undefined at the critical point g_c = " << critical_coupling(p);
    throw CriticalPoint(err.str());
}

VarianceReport photon_variance(const PolaritonFrame& frame) {
    const auto& f = frame.f;
    VarianceReport rep;
    rep.phase = frame.phase;
    rep.near_critical = frame.near_critical;
    rep.condition = frame.condition;
    rep.fluctuation_term = 2.0 * f[0] * f[0] * f[1] * f[1] +
                           2.0 * f[2] * f[2] * f[3] * f[3] +
                           (f[0] * f[3] + f[1] * f[2]) * (f[0] * f[3] + f[1] * f[2]);
    const double s01 = f[0] + f[1];
    const double s23 = f[2] + f[3];
    rep.n_term = frame.alpha_disp * (s01 * s01 + s23 * s23);
    rep.gamma = rep.fluctuation_term + rep.n_term;
    return rep;
}

EchoCurve EchoCurve::make(std::vector<double> times, std::vector<double> values,
                          EchoMethod method, const DickeParams& params) {
    if (times.size() != values.size()) {
        throw std::invalid_argument("echo grid and values differ in length");
    }
    for (std::size_t i = 1; i < times.size(); ++i) {
        if (!(times[i] > times[i - 1])) {
            throw std::invalid_argument("echo time grid must be strictly increasing");
        }
    }
    for (double& v : values) {
        if (v > 1.0) {
            if (v - 1.0 > 1e-12) {
                std::ostringstream err;
                err << "echo value " << v << " exceeds 1 beyond roundoff";
                throw std::logic_error(err.str());
            }
            v = 1.0;
        }
        if (v < 0.0) {
            throw std::logic_error("negative echo value");
        }
    }
    if (!times.empty() && times.front() == 0.0 && std::abs(values.front() - 1.0) > 1e-9) {
        throw std::logic_error("echo must start at L(0) = 1");
    }
    EchoCurve c;
    c.times = std::move(times);
    c.values = std::move(values);
    c.method = method;
    c.params = params;
    return c;
}

EchoCurve loschmidt_echo_gaussian(const DickeParams& p, double gamma,
                                  std::vector<double> times) {
    if (!(gamma >= 0.0)) {
        throw std::invalid_argument("gamma must be non-negative");
    }
    const double rate = 4.0 * gamma * p.delta_tilde * p.delta_tilde;
    std::vector<double> values(times.size());
    for (std::size_t i = 0; i < times.size(); ++i) {
        values[i] = std::exp(-rate * times[i] * times[i]);
    }
    return EchoCurve::make(std::move(times), std::move(values),
                           EchoMethod::AnalyticGaussian, p);
}

std::vector<std::pair<int, double>> decay_scaling(const DickeParams& p,
                                                  const std::vector<int>& n_list) {
    if (classify_phase(p) != Phase::SuperRadiant) {
        throw WrongPhase("decay scaling is defined in the super-radiant phase");
    }
    // the f' coefficients depend on mu only; N enters through alpha alone
    const PolaritonFrame fr = super_radiant_frame(p);
    const VarianceReport base = photon_variance(fr);
    const double s01 = fr.f[0] + fr.f[1];
    const double s23 = fr.f[2] + fr.f[3];
    const double coeff = s01 * s01 + s23 * s23;
    const double alpha_per_atom = fr.alpha_disp / p.n_atoms;

    std::vector<std::pair<int, double>> out;
    out.reserve(n_list.size());
    for (int n : n_list) {
        if (n < 1) throw std::invalid_argument("atom numbers must be >= 1");
        out.emplace_back(n, base.fluctuation_term + alpha_per_atom * n * coeff);
    }
    return out;
}

}  // namespace dicke
