#pragma once

#include <span>
#include <string>
#include <vector>

namespace ajc::svg {

struct Trace {
  std::string label;
  std::vector<double> values;
  std::string color;  // empty picks from the default palette
};

struct PlotSpec {
  std::string title;
  std::string x_label = "tau";
  std::string y_label;
};

inline constexpr int kWidth = 800;
inline constexpr int kHeight = 500;

// Standalone SVG, 800x500 view box, one <polyline> per trace. Axes scale to
// the data; a flat y range is padded so constant traces stay visible.
// Throws std::invalid_argument if fewer than two points are given, if trace
// lengths differ from x, or if the x range is degenerate.
std::string render(std::span<const double> x, std::span<const Trace> traces,
                   const PlotSpec& spec = {});

// Tick positions at 1/2/5 x 10^k spacing covering [lo, hi].
std::vector<double> nice_ticks(double lo, double hi, int target = 6);

}  // namespace ajc::svg
