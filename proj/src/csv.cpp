#include "dicke/csv.hpp"

#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "dicke/version.hpp"

namespace dicke {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

double parse_double(const std::string& s) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str()) {
        throw std::invalid_argument("not a number: '" + s + "'");
    }
    return v;
}

std::size_t CsvTable::column(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) return i;
    }
    throw std::invalid_argument("no column named '" + name + "'");
}

double CsvTable::number(std::size_t row, std::size_t col) const {
    return parse_double(rows.at(row).at(col));
}

namespace {

std::vector<std::string> split_row(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) out.push_back(field);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

std::string utc_now() {
    std::time_t now = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    return buf;
}

}  // namespace

CsvTable read_csv(std::istream& in) {
    CsvTable table;
    std::string line;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::size_t start = line.find_first_not_of("# ");
            table.comments.push_back(start == std::string::npos ? ""
                                                                : line.substr(start));
            continue;
        }
        if (!have_header) {
            table.header = split_row(line);
            have_header = true;
        } else {
            table.rows.push_back(split_row(line));
        }
    }
    return table;
}

void write_sweep_csv(std::ostream& out, const SweepResult& result,
                     bool with_timestamp) {
    const SweepSpec& spec = result.spec;
    out << "# " << kProjectName << " sweep " << spec.label << "\n";
    out << "# version=" << kVersion << " engine=" << to_string(spec.engine) << "\n";
    out << "# omega=" << format_double(spec.base.omega)
        << " omega0=" << format_double(spec.base.omega0)
        << " delta_tilde=" << format_double(spec.base.delta_tilde)
        << " n_atoms=" << spec.base.n_atoms
        << " skip_band=" << format_double(spec.skip_band);
    if (spec.axis2.name == "n") {
        out << " t=" << format_double(spec.cross_section_t);
    }
    out << "\n";
    if (with_timestamp) {
        out << "# generated=" << utc_now() << "\n";
    }
    out << "g," << spec.axis2.name << ",L,gamma,phase,flags\n";
    for (const SweepCell& cell : result.cells) {
        out << format_double(cell.g) << ',' << format_double(cell.x2) << ','
            << format_double(cell.l) << ',' << format_double(cell.gamma) << ','
            << to_string(cell.phase) << ',' << cell.flags << '\n';
    }
}

void write_echo_csv(std::ostream& out, const EchoCurve& curve,
                    const std::vector<std::complex<double>>* d) {
    out << "# " << kProjectName << " echo method=" << to_string(curve.method)
        << " omega=" << format_double(curve.params.omega)
        << " omega0=" << format_double(curve.params.omega0)
        << " g=" << format_double(curve.params.g)
        << " n_atoms=" << curve.params.n_atoms
        << " delta_tilde=" << format_double(curve.params.delta_tilde) << "\n";
    out << (d ? "t,L,ReD,ImD\n" : "t,L\n");
    for (std::size_t i = 0; i < curve.times.size(); ++i) {
        out << format_double(curve.times[i]) << ',' << format_double(curve.values[i]);
        if (d) {
            out << ',' << format_double((*d)[i].real()) << ','
                << format_double((*d)[i].imag());
        }
        out << '\n';
    }
}

void write_compare_csv(std::ostream& out, const CompareReport& report) {
    out << "# " << kProjectName << " compare t=" << format_double(report.t) << "\n";
    out << "g,n,gamma_analytic,gamma_exact,gamma_abs_dev,L_gaussian,L_exact,"
           "L_abs_dev,flags\n";
    for (const CompareCell& cell : report.cells) {
        out << format_double(cell.g) << ',' << cell.n_atoms << ','
            << format_double(cell.gamma_analytic) << ','
            << format_double(cell.gamma_exact) << ','
            << format_double(cell.gamma_abs_dev) << ','
            << format_double(cell.l_gaussian) << ',' << format_double(cell.l_exact)
            << ',' << format_double(cell.l_abs_dev) << ',' << cell.flags << '\n';
    }
}

}  // namespace dicke
