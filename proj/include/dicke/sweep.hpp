// sweep.hpp - parameter grids over (g, t) and (g, N), figure presets, and the
// analytic/exact engine comparison
#pragma once

#include <string>
#include <vector>

#include "dicke/model.hpp"
#include "dicke/oracle.hpp"

namespace dicke {

enum class SweepEngine { Analytic, Exact };

const char* to_string(SweepEngine e);

struct Axis {
    std::string name;            // "g", "t" or "n"
    std::vector<double> values;  // strictly increasing
};

Axis linspace_axis(std::string name, double start, double stop, int count);
Axis logspace_axis(std::string name, double start, double stop, int count);

struct SweepSpec {
    DickeParams base;
    Axis axis1;                 // coupling axis, name "g"
    Axis axis2;                 // "t" (echo time) or "n" (atom number)
    SweepEngine engine = SweepEngine::Analytic;
    double skip_band = 1e-3;    // relative band around g_c excluded (analytic)
    double cross_section_t = 100.0;  // echo time used when axis2 is "n"
    int threads = 0;            // 0: library default
    std::string label = "custom";

    void validate() const;
};

struct SweepCell {
    double g = 0.0;
    double x2 = 0.0;  // t or N depending on axis2
    double l = 0.0;
    double gamma = 0.0;
    Phase phase = Phase::Normal;
    std::string flags;  // ok | skipped | near-critical | error:<reason>
};

struct SweepResult {
    SweepSpec spec;
    std::vector<SweepCell> cells;  // row-major: axis1 outer, axis2 inner
};

// Figure presets: omega0 = 1.44, delta_tilde = 0.001, N = 100, in units of omega.
SweepSpec fig2_spec();  // L over g x t
SweepSpec fig3_spec();  // the t = 100 cross-section
SweepSpec fig4_spec();  // g x N at t = 100

/// Deterministic grid evaluation; per-cell failures land in flags, never throw.
SweepResult run_sweep(const SweepSpec& spec);

struct CompareCell {
    double g = 0.0;
    int n_atoms = 0;
    double gamma_analytic = 0.0;
    double gamma_exact = 0.0;
    double l_gaussian = 0.0;
    double l_exact = 0.0;
    double gamma_abs_dev = 0.0;
    double l_abs_dev = 0.0;
    std::string flags;
};

struct Quantiles {
    double min = 0.0;
    double median = 0.0;
    double max = 0.0;
};

struct CompareReport {
    double t = 0.0;
    std::vector<CompareCell> cells;
    Quantiles gamma_dev;  // over cells not flagged near-critical or failed
    Quantiles l_dev;
    int excluded = 0;
};

/// Evaluates both engines on g x N at a single echo time t.
CompareReport compare_engines(const DickeParams& base,
                              const std::vector<double>& g_values,
                              const std::vector<int>& n_values, double t,
                              const OracleOptions& opts = {});

std::string compare_report_json(const CompareReport& report);

}  // namespace dicke
