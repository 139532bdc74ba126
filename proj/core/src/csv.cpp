#include "ajc/csv.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace ajc::csv {
namespace {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string_view strip_cr(std::string_view s) {
  if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
  return s;
}

}  // namespace

std::string format_number(double value) {
  if (value == 0.0) value = 0.0;  // drops the sign of -0
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value,
                                 std::chars_format::general, 17);
  if (res.ec != std::errc{}) throw std::runtime_error("number formatting failed");
  return std::string(buf, res.ptr);
}

double parse_number(std::string_view text) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  const auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc{} || res.ptr != last) {
    throw std::invalid_argument("not a number: '" + std::string(text) + "'");
  }
  return value;
}

void emit_series(std::span<const TimeSeriesRecord> records, std::ostream& out) {
  if (records.empty()) throw std::invalid_argument("no records to write");
  out << kSeriesHeader << '\n';
  for (const auto& r : records) {
    const double fields[] = {r.tau,      r.W,       r.p_e,     r.p_g,
                             r.bloch.x,  r.bloch.y, r.bloch.z, r.purity,
                             r.skew_I,   r.quantifier_N, r.excitation};
    bool first = true;
    for (const double f : fields) {
      if (!first) out << ',';
      out << format_number(f);
      first = false;
    }
    out << '\n';
  }
  if (!out) throw std::runtime_error("CSV write failed");
}

std::string series_to_string(std::span<const TimeSeriesRecord> records) {
  std::ostringstream os;
  emit_series(records, os);
  return os.str();
}

TimeSeries parse_series(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || strip_cr(line) != kSeriesHeader) {
    throw std::invalid_argument("unexpected CSV header");
  }
  TimeSeries out;
  while (std::getline(in, line)) {
    const std::string_view row = strip_cr(line);
    if (row.empty()) continue;
    const auto cells = split(row);
    if (cells.size() != 11) {
      throw std::invalid_argument("expected 11 columns, got " +
                                  std::to_string(cells.size()));
    }
    TimeSeriesRecord r;
    r.tau = parse_number(cells[0]);
    r.W = parse_number(cells[1]);
    r.p_e = parse_number(cells[2]);
    r.p_g = parse_number(cells[3]);
    r.bloch.x = parse_number(cells[4]);
    r.bloch.y = parse_number(cells[5]);
    r.bloch.z = parse_number(cells[6]);
    r.purity = parse_number(cells[7]);
    r.skew_I = parse_number(cells[8]);
    r.quantifier_N = parse_number(cells[9]);
    r.excitation = parse_number(cells[10]);
    out.push_back(r);
  }
  return out;
}

void emit_distribution(std::span<const double> probabilities,
                       std::ostream& out) {
  out << "n,P\n";
  for (std::size_t n = 0; n < probabilities.size(); ++n) {
    out << n << ',' << format_number(probabilities[n]) << '\n';
  }
  if (!out) throw std::runtime_error("CSV write failed");
}

const std::vector<double>& Table::column(std::string_view name) const {
  for (std::size_t i = 0; i < headers.size(); ++i) {
    if (headers[i] == name) return columns[i];
  }
  throw std::invalid_argument("no column named '" + std::string(name) + "'");
}

Table read_table(std::istream& in) {
  Table t;
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("empty CSV input");
  for (const auto cell : split(strip_cr(line))) t.headers.emplace_back(cell);
  t.columns.resize(t.headers.size());
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view row = strip_cr(line);
    if (row.empty()) continue;
    const auto cells = split(row);
    if (cells.size() != t.headers.size()) {
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": column count mismatch");
    }
    for (std::size_t i = 0; i < cells.size(); ++i) {
      t.columns[i].push_back(parse_number(cells[i]));
    }
  }
  return t;
}

}  // namespace ajc::csv
