#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ajc/dynamics.hpp"
#include "ajc/squeezed_field.hpp"
#include "ajc/time_grid.hpp"

namespace ajc {

enum class SweepParameter { xi, alpha_sq, r };

const char* to_string(SweepParameter p);
SweepParameter parse_sweep_parameter(std::string_view name);

struct CollapseSettings {
  std::size_t window = 51;      // grid points
  double collapse_threshold = 0.1;
  double revival_threshold = 0.3;
};

struct OutputPaths {
  std::optional<std::string> csv;
  std::optional<std::string> svg;
};

struct SweepRequest {
  SweepParameter param = SweepParameter::xi;
  std::vector<double> values;
};

struct SimulationConfig {
  SqueezedStateParams state;
  AjcParams model;
  TimeGrid grid;
  double tail_epsilon = kDefaultTailEpsilon;
  std::optional<std::size_t> n_max_override;
  OutputPaths outputs;
  CollapseSettings metrics;
  std::optional<SweepRequest> sweep;

  void validate() const;
};

// Parses a JSON configuration document. Recognised keys:
//   alpha_sq | alpha, r, theta, xi, beta, lambda, tail_epsilon,
//   n_max_override, grid{tau_start,tau_end,steps}, outputs{csv,svg},
//   metrics{window,collapse_threshold,revival_threshold},
//   sweep{param,values}
// Overrides are "key=value" strings applied before validation; nested keys
// use dots (grid.steps=1000). Values are read as JSON when they parse as
// such and as plain strings otherwise. Every failure is a ConfigError naming
// the key at fault.
SimulationConfig parse_config(std::string_view text,
                              const std::vector<std::string>& overrides = {});

// Canonical JSON rendering of a config (round-trips through parse_config).
std::string to_json(const SimulationConfig& config);

}  // namespace ajc
