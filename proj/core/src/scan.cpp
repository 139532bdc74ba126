#include "ajc/scan.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <stdexcept>
#include <string>

namespace ajc {

double TimeGrid::spacing() const {
  return steps > 1 ? (tau_end - tau_start) / static_cast<double>(steps - 1)
                   : 0.0;
}

double TimeGrid::at(std::size_t i) const {
  if (i + 1 == steps) return tau_end;
  return tau_start + static_cast<double>(i) * spacing();
}

std::vector<double> TimeGrid::points() const {
  std::vector<double> out(steps);
  for (std::size_t i = 0; i < steps; ++i) out[i] = at(i);
  return out;
}

void TimeGrid::validate() const {
  if (!(tau_start >= 0.0) || !std::isfinite(tau_start) ||
      !std::isfinite(tau_end)) {
    throw std::invalid_argument("grid.tau_start must be finite and >= 0");
  }
  if (steps == 1) {
    if (tau_end != tau_start) {
      throw std::invalid_argument("a one-point grid needs tau_end == tau_start");
    }
    return;
  }
  if (steps < 2) throw std::invalid_argument("grid.steps must be >= 2");
  if (!(tau_end > tau_start)) {
    throw std::invalid_argument("grid.tau_end must exceed grid.tau_start");
  }
}

TimeGrid TimeGrid::single(double tau) { return {tau, tau, 1}; }

FockAmplitudes field_amplitudes(const SimulationConfig& config) {
  if (config.n_max_override) {
    return amplitudes_to(config.state, *config.n_max_override);
  }
  return amplitudes(config.state, config.tail_epsilon);
}

TimeSeriesRecord make_record(const AjcEvolution& evolution, double tau) {
  const AtomState rho = evolution.reduced_density(tau);
  TimeSeriesRecord rec;
  rec.tau = tau;
  rec.p_e = rho.rho_ee;
  rec.p_g = rho.rho_gg;
  rec.W = atomic_inversion(rho);
  rec.bloch = bloch_vector(rho);
  rec.purity = purity(rho);
  rec.skew_I = skew_information(rho);
  rec.quantifier_N = spin_quantifier(rec.bloch);
  rec.excitation = excitation_expectation(evolution.joint_state(tau));
  return rec;
}

TimeSeries evolve_series(const SimulationConfig& config) {
  config.validate();
  const AjcEvolution evolution(config.model, field_amplitudes(config));
  TimeSeries out;
  out.reserve(config.grid.steps);
  for (std::size_t i = 0; i < config.grid.steps; ++i) {
    out.push_back(make_record(evolution, config.grid.at(i)));
  }
  return out;
}

SimulationConfig with_value(const SimulationConfig& config,
                            SweepParameter param, double value) {
  SimulationConfig out = config;
  switch (param) {
    case SweepParameter::xi:
      out.model.xi = value;
      break;
    case SweepParameter::alpha_sq:
      if (!(value >= 0.0)) {
        throw std::invalid_argument("alpha_sq sweep value must be >= 0");
      }
      out.state.alpha = complex{std::sqrt(value), 0.0};
      break;
    case SweepParameter::r:
      out.state.r = value;
      break;
  }
  out.sweep.reset();
  return out;
}

void SweepSpec::validate() const {
  if (values.empty()) throw std::invalid_argument("sweep needs at least one value");
  for (const double v : values) with_value(fixed, swept, v).validate();
}

std::vector<SweepEntry> sweep(const SweepSpec& spec, const TimeGrid& grid) {
  spec.validate();
  grid.validate();
  std::vector<std::future<TimeSeries>> jobs;
  jobs.reserve(spec.values.size());
  for (const double v : spec.values) {
    SimulationConfig cfg = with_value(spec.fixed, spec.swept, v);
    cfg.grid = grid;
    jobs.push_back(std::async(std::launch::async,
                              [cfg = std::move(cfg)] { return evolve_series(cfg); }));
  }
  std::vector<SweepEntry> out;
  out.reserve(jobs.size());
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    out.push_back({spec.values[i], jobs[i].get()});
  }
  return out;
}

double observable_value(const TimeSeriesRecord& record, Observable which) {
  switch (which) {
    case Observable::inversion:
      return record.W;
    case Observable::quantifier_n:
      return record.quantifier_N;
    case Observable::skew_information:
      return record.skew_I;
    case Observable::excited_population:
      return record.p_e;
  }
  return record.W;
}

CollapseMetrics collapse_metrics(std::span<const double> tau,
                                 std::span<const double> values,
                                 const CollapseSettings& settings) {
  if (tau.size() != values.size()) {
    throw std::invalid_argument("tau and values differ in length");
  }
  if (settings.window == 0 || settings.window > values.size()) {
    throw std::invalid_argument("envelope window (" +
                                std::to_string(settings.window) +
                                ") exceeds series length (" +
                                std::to_string(values.size()) + ")");
  }
  const std::size_t n = values.size();
  const std::size_t half = settings.window / 2;

  CollapseMetrics out;
  out.envelope.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t lo = i >= half ? i - half : 0;
    const std::size_t hi = std::min(n, i + half + 1);
    double mean = 0.0;
    for (std::size_t j = lo; j < hi; ++j) mean += values[j];
    mean /= static_cast<double>(hi - lo);
    double dev = 0.0;
    for (std::size_t j = lo; j < hi; ++j) {
      dev = std::max(dev, std::abs(values[j] - mean));
    }
    out.envelope[i] = dev;
  }

  const double reference = out.envelope.front();
  std::size_t i = 0;
  for (; i < n; ++i) {
    if (out.envelope[i] < settings.collapse_threshold * reference) {
      out.collapse_tau = tau[i];
      break;
    }
  }
  if (out.collapse_tau) {
    for (++i; i < n; ++i) {
      if (out.envelope[i] >= settings.revival_threshold * reference) {
        out.revival_tau = tau[i];
        break;
      }
    }
  }
  return out;
}

CollapseMetrics collapse_metrics(std::span<const TimeSeriesRecord> series,
                                 Observable which,
                                 const CollapseSettings& settings) {
  std::vector<double> tau;
  std::vector<double> values;
  tau.reserve(series.size());
  values.reserve(series.size());
  for (const auto& rec : series) {
    tau.push_back(rec.tau);
    values.push_back(observable_value(rec, which));
  }
  return collapse_metrics(tau, values, settings);
}

}  // namespace ajc
