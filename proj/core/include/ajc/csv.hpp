#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ajc/scan.hpp"

namespace ajc::csv {

inline constexpr std::string_view kSeriesHeader =
    "tau,W,p_e,p_g,r_x,r_y,r_z,purity,skew_I,quantifier_N,excitation";

// Shortest form that still carries 17 significant digits ("%.17g" without
// locale effects). Negative zero prints as 0.
std::string format_number(double value);
double parse_number(std::string_view text);

void emit_series(std::span<const TimeSeriesRecord> records, std::ostream& out);
std::string series_to_string(std::span<const TimeSeriesRecord> records);

// Inverse of emit_series. Derived fields are read back as written.
TimeSeries parse_series(std::istream& in);

void emit_distribution(std::span<const double> probabilities,
                       std::ostream& out);

// Generic numeric table, used to plot arbitrary CSV columns.
struct Table {
  std::vector<std::string> headers;
  std::vector<std::vector<double>> columns;

  std::size_t rows() const { return columns.empty() ? 0 : columns[0].size(); }
  const std::vector<double>& column(std::string_view name) const;
};

Table read_table(std::istream& in);

}  // namespace ajc::csv
