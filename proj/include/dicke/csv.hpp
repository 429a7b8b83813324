// csv.hpp - CSV emission and parsing; doubles round-trip bit-exactly
#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

#include "dicke/polariton.hpp"
#include "dicke/sweep.hpp"

namespace dicke {

/// 17 significant digits, '.' decimal separator; strtod recovers the bits.
std::string format_double(double x);
double parse_double(const std::string& s);

struct CsvTable {
    std::vector<std::string> comments;  // leading '#' lines, without the '#'
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::size_t column(const std::string& name) const;  // throws if missing
    double number(std::size_t row, std::size_t col) const;
};

CsvTable read_csv(std::istream& in);

/// Header comments carry provenance; the body (header row + cells) is
/// byte-identical across runs and thread counts. with_timestamp=false keeps
/// the whole file reproducible.
void write_sweep_csv(std::ostream& out, const SweepResult& result,
                     bool with_timestamp = true);

/// Columns t,L; with the decoherence factor present, t,L,ReD,ImD.
void write_echo_csv(std::ostream& out, const EchoCurve& curve,
                    const std::vector<std::complex<double>>* d = nullptr);

void write_compare_csv(std::ostream& out, const CompareReport& report);

}  // namespace dicke
