// bench - serial reference vs OpenMP kernels on realistic problem sizes
#include <omp.h>

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <vector>

#include "dicke/hamiltonian.hpp"
#include "dicke/kernels.hpp"
#include "dicke/solvers.hpp"
#include "dicke/sweep.hpp"

using namespace dicke;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

template <typename F>
double time_best_of(int reps, F&& fn) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = Clock::now();
        fn();
        best = std::min(best, seconds_since(t0));
    }
    return best;
}

void bench_spmv(int n_atoms, int n_max, int reps) {
    const DickeParams p = DickeParams::make(1.0, 1.44, 0.9, n_atoms, 0.0);
    const FockSpinBasis basis(n_max, n_atoms);
    const SparseHamiltonian h = build_hamiltonian(p, basis);
    std::vector<double> x(h.dim), y_serial(h.dim), y_par(h.dim);
    for (std::size_t i = 0; i < h.dim; ++i) x[i] = std::sin(0.37 * i);

    const double ts = time_best_of(reps, [&] {
        kernels::spmv_serial(h, x.data(), y_serial.data());
    });
    const double tp = time_best_of(reps, [&] {
        kernels::spmv(h, x.data(), y_par.data());
    });
    double max_diff = 0.0;
    for (std::size_t i = 0; i < h.dim; ++i) {
        max_diff = std::max(max_diff, std::abs(y_serial[i] - y_par[i]));
    }
    std::printf("spmv          dim=%-8zu nnz=%-9zu serial %.4f s  omp %.4f s  "
                "speedup %.2fx  max|diff| %.1e\n",
                h.dim, h.nnz(), ts, tp, ts / tp, max_diff);
}

void bench_ground_state(int n_atoms, int n_max) {
    const DickeParams p = DickeParams::make(1.0, 1.44, 0.9, n_atoms, 0.0);
    const FockSpinBasis basis(n_max, n_atoms);
    const SparseHamiltonian h = build_hamiltonian(p, basis);

    const auto t0 = Clock::now();
    const EigenPair pair = lanczos_lowest(h, 1e-10);
    const double t_lanczos = seconds_since(t0);
    std::printf("lanczos       dim=%-8zu E0=%.10f  %.3f s  (%d matvecs, resid %.1e)\n",
                h.dim, pair.value, t_lanczos, pair.iterations, pair.residual);
}

void bench_sweep() {
    SweepSpec spec = fig2_spec();
    spec.threads = 1;
    const auto t0 = Clock::now();
    const SweepResult serial = run_sweep(spec);
    const double ts = seconds_since(t0);

    spec.threads = omp_get_max_threads();
    const auto t1 = Clock::now();
    const SweepResult par = run_sweep(spec);
    const double tp = seconds_since(t1);

    double max_diff = 0.0;
    for (std::size_t i = 0; i < serial.cells.size(); ++i) {
        const double a = serial.cells[i].l, b = par.cells[i].l;
        if (std::isnan(a) && std::isnan(b)) continue;
        max_diff = std::max(max_diff, std::abs(a - b));
    }
    std::printf("sweep fig2    cells=%-6zu 1 thread %.4f s  %d threads %.4f s  "
                "speedup %.2fx  max|diff| %.1e\n",
                serial.cells.size(), ts, spec.threads, tp, ts / tp, max_diff);
}

}  // namespace

int main(int argc, char** argv) {
    bool quick = false;
    for (int i = 1; i < argc; ++i) {
        if (std::string_view(argv[i]) == "--quick") quick = true;
    }
    std::printf("threads available: %d\n", omp_get_max_threads());

    bench_spmv(40, 120, quick ? 3 : 20);
    bench_spmv(100, 200, quick ? 3 : 20);
    if (!quick) bench_spmv(200, 400, 10);

    bench_ground_state(60, quick ? 80 : 120);
    bench_sweep();
    return 0;
}
