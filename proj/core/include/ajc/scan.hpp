#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ajc/config.hpp"
#include "ajc/nonclassicality.hpp"
#include "ajc/time_grid.hpp"

namespace ajc {

struct TimeSeriesRecord {
  double tau = 0.0;
  double W = 0.0;
  double skew_I = 0.0;
  double quantifier_N = 0.0;
  BlochVector bloch;
  double purity = 0.0;
  double excitation = 0.0;
  double p_e = 0.0;
  double p_g = 0.0;

  bool operator==(const TimeSeriesRecord&) const = default;
};

using TimeSeries = std::vector<TimeSeriesRecord>;

FockAmplitudes field_amplitudes(const SimulationConfig& config);

TimeSeriesRecord make_record(const AjcEvolution& evolution, double tau);

// One record per grid point. Deterministic: the same config always yields
// bit-identical records.
TimeSeries evolve_series(const SimulationConfig& config);

SimulationConfig with_value(const SimulationConfig& config,
                            SweepParameter param, double value);

struct SweepSpec {
  SweepParameter swept = SweepParameter::xi;
  std::vector<double> values;
  SimulationConfig fixed;

  void validate() const;
};

struct SweepEntry {
  double value = 0.0;
  TimeSeries series;
};

// Independent runs, one per value, in the order given. Values are evaluated
// concurrently.
std::vector<SweepEntry> sweep(const SweepSpec& spec, const TimeGrid& grid);

enum class Observable { inversion, quantifier_n, skew_information, excited_population };

double observable_value(const TimeSeriesRecord& record, Observable which);

struct CollapseMetrics {
  std::vector<double> envelope;
  std::optional<double> collapse_tau;
  std::optional<double> revival_tau;
};

// Envelope is the largest deviation from the window mean inside a centred
// window of settings.window points (clipped at the ends). Collapse is the
// first point whose envelope drops below collapse_threshold times the
// envelope at the first point; revival is the first later point climbing
// back to revival_threshold times that value.
CollapseMetrics collapse_metrics(std::span<const double> tau,
                                 std::span<const double> values,
                                 const CollapseSettings& settings = {});

CollapseMetrics collapse_metrics(std::span<const TimeSeriesRecord> series,
                                 Observable which,
                                 const CollapseSettings& settings = {});

}  // namespace ajc
