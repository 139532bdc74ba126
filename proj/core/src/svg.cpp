#include "ajc/svg.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace ajc::svg {
namespace {

constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 20.0;
constexpr double kMarginTop = 40.0;
constexpr double kMarginBottom = 60.0;

constexpr const char* kPalette[] = {"#000000", "#e6862b", "#1f77b4", "#2ca02c",
                                    "#d62728", "#9467bd"};

std::string num(double v, int precision = 6) {
  if (v == 0.0) v = 0.0;
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v,
                                 std::chars_format::general, precision);
  return std::string(buf, res.ptr);
}

std::string escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (const char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

double nice_step(double raw) {
  const double magnitude = std::pow(10.0, std::floor(std::log10(raw)));
  const double f = raw / magnitude;
  const double nice = f <= 1.0 ? 1.0 : f <= 2.0 ? 2.0 : f <= 5.0 ? 5.0 : 10.0;
  return nice * magnitude;
}

}  // namespace

std::vector<double> nice_ticks(double lo, double hi, int target) {
  std::vector<double> out;
  if (!(hi > lo) || target < 1) return out;
  const double step = nice_step((hi - lo) / target);
  const double first = std::ceil(lo / step - 1e-9) * step;
  for (double t = first; t <= hi + step * 1e-9; t += step) {
    // Snap to the step lattice so labels like 0.30000000000000004 vanish.
    out.push_back(std::round(t / step) * step);
  }
  return out;
}

std::string render(std::span<const double> x, std::span<const Trace> traces,
                   const PlotSpec& spec) {
  if (x.size() < 2) throw std::invalid_argument("plot needs at least two points");
  if (traces.empty()) throw std::invalid_argument("plot needs at least one trace");
  for (const auto& t : traces) {
    if (t.values.size() != x.size()) {
      throw std::invalid_argument("trace '" + t.label + "' length differs from x");
    }
  }

  const auto [xmin_it, xmax_it] = std::minmax_element(x.begin(), x.end());
  const double x_lo = *xmin_it;
  const double x_hi = *xmax_it;
  if (!std::isfinite(x_lo) || !std::isfinite(x_hi) || !(x_hi > x_lo)) {
    throw std::invalid_argument("degenerate x-axis range");
  }
  double y_lo = std::numeric_limits<double>::infinity();
  double y_hi = -std::numeric_limits<double>::infinity();
  for (const auto& t : traces) {
    for (const double v : t.values) {
      if (!std::isfinite(v)) throw std::invalid_argument("non-finite y value");
      y_lo = std::min(y_lo, v);
      y_hi = std::max(y_hi, v);
    }
  }
  if (y_hi == y_lo) {
    const double pad = std::max(0.5, 0.1 * std::abs(y_lo));
    y_lo -= pad;
    y_hi += pad;
  }

  const double plot_w = kWidth - kMarginLeft - kMarginRight;
  const double plot_h = kHeight - kMarginTop - kMarginBottom;
  auto px = [&](double v) { return kMarginLeft + (v - x_lo) / (x_hi - x_lo) * plot_w; };
  auto py = [&](double v) {
    return kMarginTop + (y_hi - v) / (y_hi - y_lo) * plot_h;
  };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
     << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' '
     << kHeight << "\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight
     << "\" fill=\"#ffffff\"/>\n";
  if (!spec.title.empty()) {
    os << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" "
       << "font-family=\"sans-serif\" font-size=\"16\">" << escape(spec.title)
       << "</text>\n";
  }

  // Frame and ticks.
  os << "<g stroke=\"#444444\" stroke-width=\"1\" fill=\"none\">\n";
  os << "<rect x=\"" << num(kMarginLeft) << "\" y=\"" << num(kMarginTop)
     << "\" width=\"" << num(plot_w) << "\" height=\"" << num(plot_h) << "\"/>\n";
  const auto xticks = nice_ticks(x_lo, x_hi);
  const auto yticks = nice_ticks(y_lo, y_hi);
  for (const double t : xticks) {
    const double X = px(t);
    os << "<line x1=\"" << num(X) << "\" y1=\"" << num(kMarginTop + plot_h)
       << "\" x2=\"" << num(X) << "\" y2=\"" << num(kMarginTop + plot_h + 5)
       << "\"/>\n";
  }
  for (const double t : yticks) {
    const double Y = py(t);
    os << "<line x1=\"" << num(kMarginLeft - 5) << "\" y1=\"" << num(Y)
       << "\" x2=\"" << num(kMarginLeft) << "\" y2=\"" << num(Y) << "\"/>\n";
  }
  os << "</g>\n";

  os << "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"#222222\">\n";
  for (const double t : xticks) {
    os << "<text x=\"" << num(px(t)) << "\" y=\"" << num(kMarginTop + plot_h + 20)
       << "\" text-anchor=\"middle\">" << num(t, 4) << "</text>\n";
  }
  for (const double t : yticks) {
    os << "<text x=\"" << num(kMarginLeft - 8) << "\" y=\"" << num(py(t) + 4)
       << "\" text-anchor=\"end\">" << num(t, 4) << "</text>\n";
  }
  if (!spec.x_label.empty()) {
    os << "<text x=\"" << num(kMarginLeft + plot_w / 2) << "\" y=\""
       << num(kHeight - 15) << "\" text-anchor=\"middle\">"
       << escape(spec.x_label) << "</text>\n";
  }
  if (!spec.y_label.empty()) {
    os << "<text x=\"18\" y=\"" << num(kMarginTop + plot_h / 2)
       << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
       << num(kMarginTop + plot_h / 2) << ")\">" << escape(spec.y_label)
       << "</text>\n";
  }
  os << "</g>\n";

  for (std::size_t k = 0; k < traces.size(); ++k) {
    const Trace& t = traces[k];
    const std::string color =
        t.color.empty() ? kPalette[k % std::size(kPalette)] : t.color;
    os << "<polyline fill=\"none\" stroke=\"" << escape(color)
       << "\" stroke-width=\"1.2\" points=\"";
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (i) os << ' ';
      os << num(px(x[i])) << ',' << num(py(t.values[i]));
    }
    os << "\"/>\n";
  }

  // Legend.
  os << "<g font-family=\"sans-serif\" font-size=\"12\">\n";
  for (std::size_t k = 0; k < traces.size(); ++k) {
    const Trace& t = traces[k];
    const std::string color =
        t.color.empty() ? kPalette[k % std::size(kPalette)] : t.color;
    const double ly = kMarginTop + 14 + 16 * static_cast<double>(k);
    const double lx = kMarginLeft + plot_w - 120;
    os << "<line x1=\"" << num(lx) << "\" y1=\"" << num(ly - 4) << "\" x2=\""
       << num(lx + 20) << "\" y2=\"" << num(ly - 4) << "\" stroke=\""
       << escape(color) << "\" stroke-width=\"2\"/>\n";
    os << "<text x=\"" << num(lx + 26) << "\" y=\"" << num(ly) << "\">"
       << escape(t.label) << "</text>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace ajc::svg
