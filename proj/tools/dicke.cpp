// dicke - command-line surface: spectrum, variance, echo, oracle, sweep, compare
#include <CLI11.hpp>
#include <omp.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <json.hpp>

#include "dicke/csv.hpp"
#include "dicke/model.hpp"
#include "dicke/oracle.hpp"
#include "dicke/polariton.hpp"
#include "dicke/sweep.hpp"
#include "dicke/version.hpp"

namespace {

using namespace dicke;

struct GlobalOpts {
    double omega = 1.0;
    double omega0 = 1.0;
    double g = 0.0;
    int n_atoms = 100;
    double delta_tilde = 0.0;
    double g_s = 0.0;
    double delta_s = 0.0;
    bool probe_given = false;
    std::string output = "-";
    std::string format = "csv";
    int threads = 0;
    bool deterministic = false;
};

// exit codes: 0 ok, 1 usage, 2 critical-point analytic request, 3 no convergence
constexpr int kExitUsage = 1;
constexpr int kExitCritical = 2;
constexpr int kExitNoConvergence = 3;

DickeParams params_of(const GlobalOpts& opt) {
    double shift = opt.delta_tilde;
    if (opt.probe_given) {
        const ProbeAtom probe = ProbeAtom::make(opt.g_s, opt.delta_s, opt.omega,
                                                {1.0, 0.0}, {0.0, 0.0});
        shift = std::abs(dispersive_shift(probe));
    }
    return DickeParams::make(opt.omega, opt.omega0, opt.g, opt.n_atoms, shift);
}

class Output {
  public:
    explicit Output(const std::string& path) {
        if (path != "-") {
            file_.open(path);
            if (!file_) throw std::runtime_error("cannot open output file " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

std::vector<double> time_grid(double t_min, double t_max, int points) {
    if (points < 1) throw std::invalid_argument("need at least one time point");
    if (points == 1) return {t_min};
    return linspace_axis("t", t_min, t_max, points).values;
}

void emit_frame(std::ostream& out, const GlobalOpts& opt, const DickeParams& p,
                const PolaritonFrame& fr) {
    const VarianceReport var = photon_variance(fr);
    const double residual = fr.symplectic_invariant() - 1.0;
    if (opt.format == "json") {
        nlohmann::json j;
        j["phase"] = to_string(fr.phase);
        j["g_c"] = critical_coupling(p);
        j["omega_minus"] = fr.omega_minus;
        j["omega_plus"] = fr.omega_plus;
        j["theta"] = fr.theta;
        j["f"] = fr.f;
        if (fr.phase == Phase::SuperRadiant) {
            j["mu"] = fr.mu;
            j["alpha"] = fr.alpha_disp;
            j["beta"] = fr.beta_disp;
        }
        j["symplectic_residual"] = residual;
        j["near_critical"] = fr.near_critical;
        j["gamma"] = var.gamma;
        out << j.dump(2) << "\n";
        return;
    }
    out << "phase,g_c,omega_minus,omega_plus,theta,f1,f2,f3,f4,mu,alpha,beta,"
           "symplectic_residual,near_critical,gamma\n";
    out << to_string(fr.phase) << ',' << format_double(critical_coupling(p)) << ','
        << format_double(fr.omega_minus) << ',' << format_double(fr.omega_plus)
        << ',' << format_double(fr.theta);
    for (double f : fr.f) out << ',' << format_double(f);
    out << ',' << format_double(fr.mu) << ',' << format_double(fr.alpha_disp) << ','
        << format_double(fr.beta_disp) << ',' << format_double(residual) << ','
        << (fr.near_critical ? 1 : 0) << ',' << format_double(var.gamma) << '\n';
}

int cmd_spectrum(const GlobalOpts& opt) {
    const DickeParams p = params_of(opt);
    const PolaritonFrame fr = polariton_frame(p);
    Output out(opt.output);
    emit_frame(out.stream(), opt, p, fr);
    return 0;
}

int cmd_variance(const GlobalOpts& opt) {
    const DickeParams p = params_of(opt);
    const VarianceReport var = photon_variance(polariton_frame(p));
    Output out(opt.output);
    if (opt.format == "json") {
        nlohmann::json j;
        j["phase"] = to_string(var.phase);
        j["gamma"] = var.gamma;
        j["fluctuation_term"] = var.fluctuation_term;
        j["n_term"] = var.n_term;
        j["near_critical"] = var.near_critical;
        j["condition"] = var.condition;
        out.stream() << j.dump(2) << "\n";
    } else {
        out.stream() << "phase,gamma,fluctuation_term,n_term,near_critical,condition\n"
                     << to_string(var.phase) << ',' << format_double(var.gamma) << ','
                     << format_double(var.fluctuation_term) << ','
                     << format_double(var.n_term) << ',' << (var.near_critical ? 1 : 0)
                     << ',' << format_double(var.condition) << '\n';
    }
    return 0;
}

int cmd_echo(const GlobalOpts& opt, double t_min, double t_max, int t_points) {
    const DickeParams p = params_of(opt);
    const VarianceReport var = photon_variance(polariton_frame(p));
    const EchoCurve curve =
        loschmidt_echo_gaussian(p, var.gamma, time_grid(t_min, t_max, t_points));
    Output out(opt.output);
    if (opt.format == "json") {
        nlohmann::json j;
        j["method"] = to_string(curve.method);
        j["gamma"] = var.gamma;
        j["t"] = curve.times;
        j["L"] = curve.values;
        out.stream() << j.dump(2) << "\n";
    } else {
        write_echo_csv(out.stream(), curve);
    }
    return 0;
}

int cmd_oracle(const GlobalOpts& opt, const OracleOptions& oracle_opts,
               int exact_budget, bool force, const std::string& echo_path,
               const std::string& characteristic_path, double t_min, double t_max,
               int t_points) {
    if (opt.n_atoms > exact_budget && !force) {
        std::ostringstream err;
        err << "n_atoms = " << opt.n_atoms << " exceeds the exact budget "
            << exact_budget << " (pass --force to override)";
        throw CLI::ValidationError("oracle", err.str());
    }
    const DickeParams p = params_of(opt);
    const GroundStateResult gs = solve_ground_state(p, oracle_opts);
    const PhotonStatistics stats = photon_statistics(gs);
    Output out(opt.output);
    out.stream() << oracle_report_json(gs, stats) << "\n";

    if (!echo_path.empty()) {
        const ExactEcho echo =
            echo_exact(gs, time_grid(t_min, t_max, t_points), oracle_opts);
        std::ofstream f(echo_path);
        if (!f) throw std::runtime_error("cannot open " + echo_path);
        write_echo_csv(f, echo.curve, &echo.d);
    }
    if (!characteristic_path.empty()) {
        const EchoCurve curve =
            echo_characteristic(gs, time_grid(t_min, t_max, t_points));
        std::ofstream f(characteristic_path);
        if (!f) throw std::runtime_error("cannot open " + characteristic_path);
        write_echo_csv(f, curve);
    }
    return 0;
}

int cmd_sweep(const GlobalOpts& opt, const std::string& preset, double g_min,
              double g_max, int g_points, bool g_log, double t_min, double t_max,
              int t_points, const std::vector<int>& n_list, double cross_t,
              const std::string& engine, double skip_band, int exact_budget,
              bool force) {
    SweepSpec spec;
    if (preset == "fig2") {
        spec = fig2_spec();
    } else if (preset == "fig3") {
        spec = fig3_spec();
    } else if (preset == "fig4") {
        spec = fig4_spec();
    } else {
        spec.base = params_of(opt);
        spec.base.g = 0.0;
        spec.axis1 = g_log ? logspace_axis("g", g_min, g_max, g_points)
                           : linspace_axis("g", g_min, g_max, g_points);
        if (!n_list.empty()) {
            std::vector<double> ns(n_list.begin(), n_list.end());
            spec.axis2 = Axis{"n", ns};
            spec.cross_section_t = cross_t;
        } else {
            spec.axis2 = linspace_axis("t", t_min, t_max, t_points);
        }
        spec.skip_band = skip_band;
    }
    spec.threads = opt.threads;

    if (engine == "both") {
        // validation mode: evaluate both engines over the g axis at the
        // cross-section time and emit the comparison table
        std::vector<int> ns;
        if (spec.axis2.name == "n") {
            for (double v : spec.axis2.values) ns.push_back(static_cast<int>(v));
        } else {
            ns.push_back(spec.base.n_atoms);
        }
        for (int n : ns) {
            if (n > exact_budget && !force) {
                throw CLI::ValidationError(
                    "sweep", "exact engine over budget; pass --force");
            }
        }
        const double t = spec.axis2.name == "t" ? spec.axis2.values.back()
                                                : spec.cross_section_t;
        const CompareReport report =
            compare_engines(spec.base, spec.axis1.values, ns, t);
        Output out(opt.output);
        if (opt.format == "json") {
            out.stream() << compare_report_json(report) << "\n";
        } else {
            write_compare_csv(out.stream(), report);
        }
        return 0;
    }

    spec.engine = engine == "exact" ? SweepEngine::Exact : SweepEngine::Analytic;
    if (spec.engine == SweepEngine::Exact && spec.base.n_atoms > exact_budget &&
        !force) {
        throw CLI::ValidationError("sweep", "exact engine over budget; pass --force");
    }
    const SweepResult result = run_sweep(spec);
    Output out(opt.output);
    write_sweep_csv(out.stream(), result, !opt.deterministic);
    return 0;
}

int cmd_compare(const GlobalOpts& opt, std::vector<double> g_list,
                std::vector<int> n_list, double t, int exact_budget, bool force) {
    for (int n : n_list) {
        if (n > exact_budget && !force) {
            throw CLI::ValidationError("compare",
                                       "n beyond the exact budget; pass --force");
        }
    }
    DickeParams base = params_of(opt);
    const CompareReport report = compare_engines(base, g_list, n_list, t);
    Output out(opt.output);
    if (opt.format == "csv") {
        write_compare_csv(out.stream(), report);
    } else {
        out.stream() << compare_report_json(report) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string(dicke::kProjectName) +
                 " - Dicke-model Loschmidt echo near the critical point"};
    app.set_version_flag("--version",
                         std::string(dicke::kProjectName) + " " + dicke::kVersion);
    app.set_config("--config", "", "flat key=value file with option defaults");
    app.require_subcommand(1);

    GlobalOpts opt;
    app.add_option("--omega", opt.omega, "cavity frequency (reference unit)")
        ->capture_default_str();
    app.add_option("--omega0", opt.omega0, "atomic level spacing, units of omega")
        ->capture_default_str();
    app.add_option("--g", opt.g, "collective coupling strength")
        ->capture_default_str();
    app.add_option("--n-atoms", opt.n_atoms, "atom number N")->capture_default_str();
    auto* shift_opt = app.add_option("--delta-tilde", opt.delta_tilde,
                                     "cavity frequency shift (direct)");
    auto* gs_opt = app.add_option("--g-s", opt.g_s, "probe-cavity coupling");
    auto* ds_opt = app.add_option("--delta-s", opt.delta_s, "probe detuning");
    shift_opt->excludes(gs_opt)->excludes(ds_opt);
    gs_opt->needs(ds_opt);
    ds_opt->needs(gs_opt);
    app.add_option("-o,--output", opt.output, "output path, '-' for stdout")
        ->capture_default_str();
    app.add_option("--format", opt.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--threads", opt.threads,
                   "worker threads (0: library default; env DICKE_THREADS wins)")
        ->capture_default_str();
    app.add_flag("--deterministic", opt.deterministic,
                 "omit the timestamp so output files are byte-reproducible");

    auto* spectrum = app.add_subcommand("spectrum", "polariton frequencies and "
                                                    "Bogoliubov coefficients");
    spectrum->fallthrough();
    auto* variance = app.add_subcommand("variance", "ground-state photon-number "
                                                    "variance");
    variance->fallthrough();
    auto* echo = app.add_subcommand("echo", "Gaussian short-time Loschmidt echo");
    echo->fallthrough();
    double t_min = 0.0, t_max = 100.0;
    int t_points = 101;
    echo->add_option("--t-min", t_min)->capture_default_str();
    echo->add_option("--t-max", t_max)->capture_default_str();
    echo->add_option("--t-points", t_points)->capture_default_str();

    auto* oracle = app.add_subcommand("oracle", "exact finite-N ground state, "
                                                "photon statistics and echo");
    oracle->fallthrough();
    OracleOptions oracle_opts;
    int exact_budget = 40;
    bool force = false;
    std::string echo_path, characteristic_path;
    double o_t_min = 0.0, o_t_max = 100.0;
    int o_t_points = 101;
    oracle->add_option("--n-max", oracle_opts.initial_n_max,
                       "initial photon cutoff (-1: heuristic)");
    oracle->add_option("--tol", oracle_opts.tol, "eigensolver residual tolerance")
        ->capture_default_str();
    oracle->add_option("--max-doublings", oracle_opts.max_doublings,
                       "cutoff escalation budget")
        ->capture_default_str();
    oracle->add_option("--exact-budget", exact_budget,
                       "largest N accepted without --force")
        ->capture_default_str();
    oracle->add_flag("--force", force, "run beyond the exact budget");
    oracle->add_flag("--krylov", oracle_opts.force_krylov,
                     "force the iterative propagator");
    oracle->add_option("--echo", echo_path, "write the exact echo CSV here");
    oracle->add_option("--characteristic", characteristic_path,
                       "write the characteristic-function echo CSV here");
    oracle->add_option("--t-min", o_t_min)->capture_default_str();
    oracle->add_option("--t-max", o_t_max)->capture_default_str();
    oracle->add_option("--t-points", o_t_points)->capture_default_str();

    auto* sweep = app.add_subcommand("sweep", "parameter grid over (g, t) or (g, N)");
    sweep->fallthrough();
    std::string preset = "custom";
    double g_min = 0.01, g_max = 1.2;
    int g_points = 60;
    bool g_log = false;
    double s_t_min = 0.0, s_t_max = 100.0, cross_t = 100.0;
    int s_t_points = 101;
    std::vector<int> sweep_n_list;
    std::string engine = "analytic";
    double skip_band = 1e-3;
    sweep->add_option("--preset", preset, "fig2, fig3, fig4 or custom")
        ->check(CLI::IsMember({"fig2", "fig3", "fig4", "custom"}))
        ->capture_default_str();
    sweep->add_option("--g-min", g_min)->capture_default_str();
    sweep->add_option("--g-max", g_max)->capture_default_str();
    sweep->add_option("--g-points", g_points)->capture_default_str();
    sweep->add_flag("--g-log", g_log, "log-spaced coupling axis");
    sweep->add_option("--t-min", s_t_min)->capture_default_str();
    sweep->add_option("--t-max", s_t_max)->capture_default_str();
    sweep->add_option("--t-points", s_t_points)->capture_default_str();
    sweep->add_option("--n-list", sweep_n_list,
                      "atom numbers for a (g, N) sweep at fixed t");
    sweep->add_option("--t", cross_t, "echo time for (g, N) sweeps")
        ->capture_default_str();
    sweep->add_option("--engine", engine, "analytic, exact or both")
        ->check(CLI::IsMember({"analytic", "exact", "both"}))
        ->capture_default_str();
    sweep->add_option("--skip-band", skip_band,
                      "relative band around g_c skipped by the analytic engine")
        ->capture_default_str();
    sweep->add_option("--exact-budget", exact_budget)->capture_default_str();
    sweep->add_flag("--force", force, "run beyond the exact budget");

    auto* compare = app.add_subcommand("compare", "analytic vs exact engine table");
    compare->fallthrough();
    std::vector<double> cmp_g_list{0.1, 0.3};
    std::vector<int> cmp_n_list{10, 20, 40};
    double cmp_t = 100.0;
    compare->add_option("--g-list", cmp_g_list, "coupling values")
        ->capture_default_str();
    compare->add_option("--n-list", cmp_n_list, "atom numbers")
        ->capture_default_str();
    compare->add_option("--t", cmp_t, "echo time")->capture_default_str();
    compare->add_option("--exact-budget", exact_budget)->capture_default_str();
    compare->add_flag("--force", force, "run beyond the exact budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (const char* env = std::getenv("DICKE_THREADS")) {
        opt.threads = std::atoi(env);
    }
    if (opt.threads > 0) omp_set_num_threads(opt.threads);
    opt.probe_given = gs_opt->count() > 0;

    try {
        if (spectrum->parsed()) return cmd_spectrum(opt);
        if (variance->parsed()) return cmd_variance(opt);
        if (echo->parsed()) return cmd_echo(opt, t_min, t_max, t_points);
        if (oracle->parsed()) {
            return cmd_oracle(opt, oracle_opts, exact_budget, force, echo_path,
                              characteristic_path, o_t_min, o_t_max, o_t_points);
        }
        if (sweep->parsed()) {
            return cmd_sweep(opt, preset, g_min, g_max, g_points, g_log, s_t_min,
                             s_t_max, s_t_points, sweep_n_list, cross_t, engine,
                             skip_band, exact_budget, force);
        }
        if (compare->parsed()) {
            return cmd_compare(opt, cmp_g_list, cmp_n_list, cmp_t, exact_budget,
                               force);
        }
    } catch (const dicke::CriticalPoint& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCritical;
    } catch (const dicke::NoConvergence& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNoConvergence;
    } catch (const dicke::StepTooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNoConvergence;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
