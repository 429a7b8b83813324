#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "dicke/csv.hpp"
#include "dicke/polariton.hpp"
#include "dicke/sweep.hpp"

using namespace dicke;

namespace {

bool cells_identical(const SweepResult& a, const SweepResult& b) {
    if (a.cells.size() != b.cells.size()) return false;
    for (std::size_t i = 0; i < a.cells.size(); ++i) {
        const SweepCell &x = a.cells[i], &y = b.cells[i];
        const bool l_same =
            (std::isnan(x.l) && std::isnan(y.l)) || x.l == y.l;
        const bool g_same =
            (std::isnan(x.gamma) && std::isnan(y.gamma)) || x.gamma == y.gamma;
        if (!l_same || !g_same || x.g != y.g || x.x2 != y.x2 ||
            x.phase != y.phase || x.flags != y.flags) {
            return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("axis constructors") {
    const Axis lin = linspace_axis("g", 0.0, 1.0, 5);
    CHECK(lin.values == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});
    const Axis log = logspace_axis("t", 1.0, 100.0, 3);
    CHECK(log.values[1] == doctest::Approx(10.0).epsilon(1e-12));
    CHECK_THROWS_AS(linspace_axis("g", 1.0, 0.0, 5), std::invalid_argument);
    CHECK_THROWS_AS(logspace_axis("g", -1.0, 1.0, 5), std::invalid_argument);
}

TEST_CASE("figure presets are wired to the reference parameter set") {
    const SweepSpec f2 = fig2_spec();
    CHECK(f2.base.omega0 == 1.44);
    CHECK(f2.base.delta_tilde == 0.001);
    CHECK(f2.base.n_atoms == 100);
    CHECK(f2.axis1.values.size() == 120);
    CHECK(f2.axis1.values.front() == doctest::Approx(0.01));
    CHECK(f2.axis1.values[59] == doctest::Approx(0.59));
    CHECK(f2.axis1.values[60] == doctest::Approx(0.61));
    CHECK(f2.axis1.values.back() == doctest::Approx(1.2));
    CHECK(f2.axis2.values.size() == 101);

    CHECK(fig3_spec().axis2.values == std::vector<double>{100.0});
    const SweepSpec f4 = fig4_spec();
    CHECK(f4.axis2.name == "n");
    CHECK(f4.axis2.values == std::vector<double>{100.0, 1000.0, 10000.0});
    CHECK(f4.cross_section_t == 100.0);
}

TEST_CASE("sweep is deterministic and thread-count independent") {
    SweepSpec spec = fig3_spec();
    spec.threads = 1;
    const SweepResult serial = run_sweep(spec);
    const SweepResult serial2 = run_sweep(spec);
    CHECK(cells_identical(serial, serial2));

    spec.threads = 4;
    const SweepResult par = run_sweep(spec);
    CHECK(cells_identical(serial, par));
}

TEST_CASE("every cell is tagged with the phase of its own parameters") {
    const SweepResult res = run_sweep(fig3_spec());
    for (const SweepCell& cell : res.cells) {
        DickeParams p = res.spec.base;
        p.g = cell.g;
        CHECK(cell.phase == classify_phase(p));
        if (cell.flags == "ok" || cell.flags == "near-critical") {
            CHECK(cell.l >= 0.0);
            CHECK(cell.l <= 1.0);
            CHECK(cell.gamma >= 0.0);
        }
    }
}

TEST_CASE("grid points inside the skip band are skipped, not evaluated") {
    SweepSpec spec;
    spec.base = DickeParams::make(1.0, 1.44, 0.0, 100, 0.001);
    spec.axis1 = linspace_axis("g", 0.59, 0.61, 21);  // includes g = 0.6
    spec.axis2 = Axis{"t", {100.0}};
    spec.skip_band = 1e-3;
    const SweepResult res = run_sweep(spec);
    int skipped = 0;
    for (const SweepCell& cell : res.cells) {
        if (std::abs(cell.g - 0.6) <= 1e-3 * 0.6) {
            CHECK(cell.flags == "skipped");
            CHECK(std::isnan(cell.l));
            ++skipped;
        } else {
            CHECK(cell.flags != "skipped");
        }
    }
    CHECK(skipped == 1);  // exactly the g = 0.6 point
}

TEST_CASE("near-critical analytic cells carry the flag") {
    SweepSpec spec;
    spec.base = DickeParams::make(1.0, 1.44, 0.0, 100, 0.001);
    spec.axis1 = Axis{"g", {0.3, 0.597}};
    spec.axis2 = Axis{"t", {100.0}};
    const SweepResult res = run_sweep(spec);
    CHECK(res.cells[0].flags == "ok");
    CHECK(res.cells[1].flags == "near-critical");
}

TEST_CASE("exact-engine sweep over a small grid") {
    SweepSpec spec;
    spec.base = DickeParams::make(1.0, 1.44, 0.0, 6, 0.001);
    spec.axis1 = Axis{"g", {0.1, 0.3}};
    spec.axis2 = Axis{"t", {0.0, 50.0, 100.0}};
    spec.engine = SweepEngine::Exact;
    const SweepResult res = run_sweep(spec);
    for (const SweepCell& cell : res.cells) {
        CHECK(cell.flags == "ok");
        CHECK(cell.l >= 0.0);
        CHECK(cell.l <= 1.0);
        CHECK(cell.gamma > 0.0);
        if (cell.x2 == 0.0) CHECK(cell.l == doctest::Approx(1.0).epsilon(1e-12));
    }
    // exact engine has no skip band: a critical-point column still evaluates
    SweepSpec crit = spec;
    crit.axis1 = Axis{"g", {0.3, 0.6}};
    const SweepResult res2 = run_sweep(crit);
    for (const SweepCell& cell : res2.cells) CHECK(cell.flags == "ok");
}

TEST_CASE("exact-engine (g, N) sweep at fixed t") {
    SweepSpec spec;
    spec.base = DickeParams::make(1.0, 1.44, 0.0, 6, 0.001);
    spec.axis1 = Axis{"g", {0.1, 0.3}};
    spec.axis2 = Axis{"n", {6.0, 10.0}};
    spec.cross_section_t = 50.0;
    spec.engine = SweepEngine::Exact;
    const SweepResult res = run_sweep(spec);
    CHECK(res.cells.size() == 4);
    for (const SweepCell& cell : res.cells) {
        CHECK(cell.flags == "ok");
        CHECK(cell.gamma > 0.0);
    }
}

TEST_CASE("doubles survive the CSV round trip bit-exactly") {
    std::mt19937_64 rng(9);
    std::normal_distribution<double> gauss;
    for (int i = 0; i < 2000; ++i) {
        const double x = std::ldexp(gauss(rng), (i % 600) - 300);
        CHECK(parse_double(format_double(x)) == x);
    }
    CHECK(parse_double(format_double(0.0)) == 0.0);
    CHECK(parse_double(format_double(5e-324)) == 5e-324);
    CHECK(std::isnan(parse_double(format_double(
        std::numeric_limits<double>::quiet_NaN()))));
    CHECK_THROWS_AS(parse_double("bogus"), std::invalid_argument);
}

TEST_CASE("sweep CSV round-trips through the repo's own reader") {
    SweepSpec spec = fig3_spec();
    const SweepResult res = run_sweep(spec);
    std::ostringstream out;
    write_sweep_csv(out, res, /*with_timestamp=*/false);

    std::istringstream in(out.str());
    const CsvTable table = read_csv(in);
    REQUIRE(table.header ==
            std::vector<std::string>{"g", "t", "L", "gamma", "phase", "flags"});
    REQUIRE(table.rows.size() == res.cells.size());
    const std::size_t cl = table.column("L");
    const std::size_t cg = table.column("g");
    const std::size_t cgam = table.column("gamma");
    for (std::size_t i = 0; i < res.cells.size(); ++i) {
        CHECK(table.number(i, cg) == res.cells[i].g);
        if (std::isnan(res.cells[i].l)) {
            CHECK(std::isnan(table.number(i, cl)));
        } else {
            CHECK(table.number(i, cl) == res.cells[i].l);
            CHECK(table.number(i, cgam) == res.cells[i].gamma);
        }
        CHECK(table.rows[i][5] == res.cells[i].flags);
    }
}

TEST_CASE("sweep CSV bodies are identical across thread counts") {
    SweepSpec spec = fig3_spec();
    spec.threads = 1;
    std::ostringstream a;
    write_sweep_csv(a, run_sweep(spec), false);
    spec.threads = 8;
    std::ostringstream b;
    write_sweep_csv(b, run_sweep(spec), false);
    CHECK(a.str() == b.str());
}

TEST_CASE("engine comparison") {
    const DickeParams base = DickeParams::make(1.0, 1.44, 0.0, 10, 0.001);
    const CompareReport rep =
        compare_engines(base, {0.0, 0.3, 0.597}, {6, 10}, 100.0);
    REQUIRE(rep.cells.size() == 6);

    double dev_gamma_n6 = -1.0, dev_gamma_n10 = -1.0;
    for (const CompareCell& cell : rep.cells) {
        if (cell.g == 0.0) {
            // decoupled column: both engines are exactly trivial
            CHECK(cell.gamma_abs_dev <= 1e-10);
            CHECK(cell.l_abs_dev <= 1e-10);
            CHECK(cell.flags == "ok");
        }
        if (cell.g == 0.3 && cell.n_atoms == 6) dev_gamma_n6 = cell.gamma_abs_dev;
        if (cell.g == 0.3 && cell.n_atoms == 10) dev_gamma_n10 = cell.gamma_abs_dev;
        if (cell.g == 0.597) {
            CHECK(cell.flags == "near-critical");  // excluded from quantiles
        }
    }
    // finite-N deviation from the thermodynamic-limit variance shrinks with N
    CHECK(dev_gamma_n10 < dev_gamma_n6);
    CHECK(rep.excluded == 2);
    CHECK(rep.gamma_dev.max >= rep.gamma_dev.median);
    CHECK(rep.gamma_dev.median >= rep.gamma_dev.min);

    const auto json_text = compare_report_json(rep);
    CHECK(json_text.find("\"gamma_dev\"") != std::string::npos);
}

TEST_CASE("spec validation") {
    SweepSpec spec = fig3_spec();
    spec.skip_band = 0.0;
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    spec = fig3_spec();
    spec.axis2.name = "z";
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    spec = fig3_spec();
    spec.axis1.values = {0.3};
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    spec = fig3_spec();
    spec.axis1.values = {0.3, 0.2};
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
}
