#pragma once

#include <cstddef>
#include <vector>

namespace ajc {

// Uniform scaled-time grid with both endpoints included.
struct TimeGrid {
  double tau_start = 0.0;
  double tau_end = 100.0;
  std::size_t steps = 4001;

  double spacing() const;
  double at(std::size_t i) const;
  std::vector<double> points() const;

  // Throws std::invalid_argument on tau_start < 0, tau_end <= tau_start or
  // steps < 2. The single-point grid {tau_start} is built with single().
  void validate() const;

  static TimeGrid single(double tau);
};

}  // namespace ajc
