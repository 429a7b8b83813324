#include "dicke/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <omp.h>

#include <json.hpp>

#include "dicke/polariton.hpp"

namespace dicke {

const char* to_string(SweepEngine e) {
    return e == SweepEngine::Analytic ? "analytic" : "exact";
}

Axis linspace_axis(std::string name, double start, double stop, int count) {
    if (count < 1) throw std::invalid_argument("axis needs at least one point");
    if (count > 1 && !(stop > start)) {
        throw std::invalid_argument("axis range must be ordered");
    }
    Axis ax{std::move(name), {}};
    ax.values.reserve(count);
    if (count == 1) {
        ax.values.push_back(start);
        return ax;
    }
    const double step = (stop - start) / (count - 1);
    for (int i = 0; i < count; ++i) ax.values.push_back(start + step * i);
    ax.values.back() = stop;  // guard against accumulated roundoff
    return ax;
}

Axis logspace_axis(std::string name, double start, double stop, int count) {
    if (!(start > 0.0) || !(stop > 0.0)) {
        throw std::invalid_argument("log axis requires positive bounds");
    }
    Axis lin = linspace_axis(std::move(name), std::log10(start), std::log10(stop), count);
    for (double& v : lin.values) v = std::pow(10.0, v);
    return lin;
}

void SweepSpec::validate() const {
    base.validate();
    if (axis1.values.size() < 2) {
        throw std::invalid_argument("axis1 needs at least two points");
    }
    if (axis2.values.empty()) {
        throw std::invalid_argument("axis2 needs at least one point");
    }
    for (const Axis* ax : {&axis1, &axis2}) {
        for (std::size_t i = 1; i < ax->values.size(); ++i) {
            if (!(ax->values[i] > ax->values[i - 1])) {
                throw std::invalid_argument("axis values must be strictly increasing");
            }
        }
    }
    if (axis2.name != "t" && axis2.name != "n") {
        throw std::invalid_argument("axis2 must be \"t\" or \"n\"");
    }
    if (skip_band < kCriticalBand) {
        throw std::invalid_argument("skip band must be at least the critical band");
    }
}

namespace {

// fig2 coupling grid: two linear segments bracketing the critical point
Axis fig_g_axis() {
    Axis lo = linspace_axis("g", 0.01, 0.59, 60);
    Axis hi = linspace_axis("g", 0.61, 1.20, 60);
    lo.values.insert(lo.values.end(), hi.values.begin(), hi.values.end());
    return lo;
}

DickeParams fig_base() { return DickeParams::make(1.0, 1.44, 0.0, 100, 0.001); }

}  // namespace

SweepSpec fig2_spec() {
    SweepSpec s;
    s.base = fig_base();
    s.axis1 = fig_g_axis();
    s.axis2 = linspace_axis("t", 0.0, 100.0, 101);
    s.label = "fig2";
    return s;
}

SweepSpec fig3_spec() {
    SweepSpec s;
    s.base = fig_base();
    s.axis1 = fig_g_axis();
    s.axis2 = Axis{"t", {100.0}};
    s.label = "fig3";
    return s;
}

SweepSpec fig4_spec() {
    SweepSpec s;
    s.base = fig_base();
    s.axis1 = fig_g_axis();
    s.axis2 = Axis{"n", {100.0, 1000.0, 10000.0}};
    s.cross_section_t = 100.0;
    s.label = "fig4";
    return s;
}

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

DickeParams cell_params(const SweepSpec& spec, double g, double x2) {
    DickeParams p = spec.base;
    p.g = g;
    if (spec.axis2.name == "n") p.n_atoms = static_cast<int>(x2);
    return p;
}

void eval_analytic_column(const SweepSpec& spec, std::size_t i1, SweepCell* out) {
    const double g = spec.axis1.values[i1];
    const std::size_t n2 = spec.axis2.values.size();
    const double gc = critical_coupling(spec.base);
    const bool in_band = std::abs(g - gc) <= spec.skip_band * gc;

    for (std::size_t i2 = 0; i2 < n2; ++i2) {
        SweepCell& cell = out[i2];
        const double x2 = spec.axis2.values[i2];
        cell.g = g;
        cell.x2 = x2;
        const DickeParams p = cell_params(spec, g, x2);
        cell.phase = classify_phase(p);
        if (in_band) {
            cell.l = kNan;
            cell.gamma = kNan;
            cell.flags = "skipped";
            continue;
        }
        try {
            const PolaritonFrame frame = polariton_frame(p);
            const VarianceReport var = photon_variance(frame);
            const double t = spec.axis2.name == "t" ? x2 : spec.cross_section_t;
            const double rate = 4.0 * var.gamma * p.delta_tilde * p.delta_tilde;
            cell.gamma = var.gamma;
            cell.l = std::exp(-rate * t * t);
            cell.flags = var.near_critical ? "near-critical" : "ok";
            if (cell.l > 1.0) {
                cell.flags += cell.l - 1.0 <= 1e-12 ? ";clamped" : ";clamp-bug";
                if (cell.l - 1.0 <= 1e-12) cell.l = 1.0;
            }
        } catch (const Error& e) {
            cell.l = kNan;
            cell.gamma = kNan;
            cell.flags = std::string("error:") + e.what();
        }
    }
}

void eval_exact_column(const SweepSpec& spec, std::size_t i1, SweepCell* out) {
    const double g = spec.axis1.values[i1];
    const std::size_t n2 = spec.axis2.values.size();

    if (spec.axis2.name == "t") {
        for (std::size_t i2 = 0; i2 < n2; ++i2) {
            out[i2].g = g;
            out[i2].x2 = spec.axis2.values[i2];
        }
        try {
            const DickeParams p = cell_params(spec, g, 0.0);
            const GroundStateResult gs = solve_ground_state(p);
            const PhotonStatistics stats = photon_statistics(gs);
            const ExactEcho echo = echo_exact(gs, spec.axis2.values);
            for (std::size_t i2 = 0; i2 < n2; ++i2) {
                out[i2].phase = classify_phase(p);
                out[i2].gamma = stats.variance;
                out[i2].l = echo.curve.values[i2];
                out[i2].flags = "ok";
            }
        } catch (const std::exception& e) {
            for (std::size_t i2 = 0; i2 < n2; ++i2) {
                out[i2].l = kNan;
                out[i2].gamma = kNan;
                out[i2].flags = std::string("error:") + e.what();
            }
        }
        return;
    }

    for (std::size_t i2 = 0; i2 < n2; ++i2) {
        SweepCell& cell = out[i2];
        cell.g = g;
        cell.x2 = spec.axis2.values[i2];
        try {
            const DickeParams p = cell_params(spec, g, cell.x2);
            cell.phase = classify_phase(p);
            const GroundStateResult gs = solve_ground_state(p);
            cell.gamma = photon_statistics(gs).variance;
            cell.l = echo_exact(gs, {spec.cross_section_t}).curve.values[0];
            cell.flags = "ok";
        } catch (const std::exception& e) {
            cell.l = kNan;
            cell.gamma = kNan;
            cell.flags = std::string("error:") + e.what();
        }
    }
}

}  // namespace

SweepResult run_sweep(const SweepSpec& spec) {
    spec.validate();
    SweepResult result;
    result.spec = spec;
    const std::size_t n1 = spec.axis1.values.size();
    const std::size_t n2 = spec.axis2.values.size();
    result.cells.resize(n1 * n2);

    const int threads = spec.threads > 0 ? spec.threads : omp_get_max_threads();
    // columns are independent; cells land at fixed indices, so the gather is
    // identical for any schedule or thread count
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (long long i1 = 0; i1 < static_cast<long long>(n1); ++i1) {
        SweepCell* column = result.cells.data() + static_cast<std::size_t>(i1) * n2;
        if (spec.engine == SweepEngine::Analytic) {
            eval_analytic_column(spec, static_cast<std::size_t>(i1), column);
        } else {
            eval_exact_column(spec, static_cast<std::size_t>(i1), column);
        }
    }
    return result;
}

namespace {

Quantiles quantiles_of(std::vector<double> v) {
    Quantiles q;
    if (v.empty()) return q;
    std::sort(v.begin(), v.end());
    q.min = v.front();
    q.max = v.back();
    q.median = v[v.size() / 2];
    return q;
}

}  // namespace

CompareReport compare_engines(const DickeParams& base,
                              const std::vector<double>& g_values,
                              const std::vector<int>& n_values, double t,
                              const OracleOptions& opts) {
    CompareReport report;
    report.t = t;
    report.cells.resize(g_values.size() * n_values.size());

#pragma omp parallel for schedule(dynamic) collapse(2)
    for (long long ig = 0; ig < static_cast<long long>(g_values.size()); ++ig) {
        for (long long in = 0; in < static_cast<long long>(n_values.size()); ++in) {
            CompareCell& cell = report.cells[ig * n_values.size() + in];
            cell.g = g_values[ig];
            cell.n_atoms = n_values[in];
            DickeParams p = base;
            p.g = cell.g;
            p.n_atoms = cell.n_atoms;
            try {
                bool near_critical = false;
                if (classify_phase(p) != Phase::Critical) {
                    const PolaritonFrame frame = polariton_frame(p);
                    const VarianceReport var = photon_variance(frame);
                    cell.gamma_analytic = var.gamma;
                    near_critical = var.near_critical;
                    const double rate =
                        4.0 * cell.gamma_analytic * p.delta_tilde * p.delta_tilde;
                    cell.l_gaussian = std::exp(-rate * t * t);
                } else {
                    cell.flags = "critical";
                }
                const GroundStateResult gs = solve_ground_state(p, opts);
                cell.gamma_exact = photon_statistics(gs).variance;
                cell.l_exact = echo_exact(gs, {t}, opts).curve.values[0];
                cell.gamma_abs_dev = std::abs(cell.gamma_analytic - cell.gamma_exact);
                cell.l_abs_dev = std::abs(cell.l_gaussian - cell.l_exact);
                if (cell.flags.empty()) cell.flags = near_critical ? "near-critical" : "ok";
            } catch (const std::exception& e) {
                cell.flags = std::string("error:") + e.what();
            }
        }
    }

    std::vector<double> gdev, ldev;
    for (const CompareCell& cell : report.cells) {
        if (cell.flags != "ok") {
            ++report.excluded;
            continue;
        }
        gdev.push_back(cell.gamma_abs_dev);
        ldev.push_back(cell.l_abs_dev);
    }
    report.gamma_dev = quantiles_of(std::move(gdev));
    report.l_dev = quantiles_of(std::move(ldev));
    return report;
}

std::string compare_report_json(const CompareReport& report) {
    nlohmann::json j;
    j["t"] = report.t;
    j["excluded"] = report.excluded;
    j["gamma_dev"] = {{"min", report.gamma_dev.min},
                      {"median", report.gamma_dev.median},
                      {"max", report.gamma_dev.max}};
    j["l_dev"] = {{"min", report.l_dev.min},
                  {"median", report.l_dev.median},
                  {"max", report.l_dev.max}};
    j["cells"] = nlohmann::json::array();
    for (const CompareCell& cell : report.cells) {
        j["cells"].push_back({{"g", cell.g},
                              {"n_atoms", cell.n_atoms},
                              {"gamma_analytic", cell.gamma_analytic},
                              {"gamma_exact", cell.gamma_exact},
                              {"L_gaussian", cell.l_gaussian},
                              {"L_exact", cell.l_exact},
                              {"gamma_abs_dev", cell.gamma_abs_dev},
                              {"L_abs_dev", cell.l_abs_dev},
                              {"flags", cell.flags}});
    }
    return j.dump(2);
}

}  // namespace dicke
