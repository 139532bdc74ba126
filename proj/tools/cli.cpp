#include "cli.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ajc/config.hpp"
#include "ajc/csv.hpp"
#include "ajc/errors.hpp"
#include "ajc/oracle.hpp"
#include "ajc/output.hpp"
#include "ajc/scan.hpp"
#include "ajc/svg.hpp"
#include "json.hpp"

namespace ajc::cli {
namespace {

struct CommonOptions {
  std::string config_path;
  std::vector<std::string> overrides;
  std::string out;
  std::string svg;
  bool quiet = false;
};

void add_common(CLI::App* cmd, CommonOptions& opts, bool with_svg) {
  cmd->add_option("--config", opts.config_path, "JSON configuration document")
      ->check(CLI::ExistingFile);
  cmd->add_option("--set", opts.overrides, "Override a config key (key=value)")
      ->take_all();
  cmd->add_option("--out", opts.out, "Output path (stdout when omitted)");
  if (with_svg) cmd->add_option("--svg", opts.svg, "SVG plot output path");
  cmd->add_flag("--quiet", opts.quiet, "Suppress the summary on stderr");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SimulationConfig load_config(const CommonOptions& opts) {
  const std::string text = opts.config_path.empty() ? "{}" : read_file(opts.config_path);
  SimulationConfig cfg = parse_config(text, opts.overrides);
  if (!opts.out.empty()) cfg.outputs.csv = opts.out;
  if (!opts.svg.empty()) cfg.outputs.svg = opts.svg;
  return cfg;
}

void emit(const std::optional<std::string>& path, const std::string& body,
          std::ostream& out) {
  if (path && !path->empty()) {
    write_file_atomic(*path, body);
  } else {
    out << body;
  }
}

std::string shortest(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general);
  return std::string(buf, res.ptr);
}

std::string plot_series(const TimeSeries& series, const std::string& title) {
  std::vector<double> tau;
  svg::Trace w{"W(tau)", {}, "#000000"};
  svg::Trace n{"N(rho)", {}, "#e6862b"};
  for (const auto& r : series) {
    tau.push_back(r.tau);
    w.values.push_back(r.W);
    n.values.push_back(r.quantifier_N);
  }
  const std::vector<svg::Trace> traces{w, n};
  return svg::render(tau, traces, {title, "tau", ""});
}

std::string describe(const SimulationConfig& cfg) {
  return "alpha_sq=" + shortest(std::norm(cfg.state.alpha)) +
         " r=" + shortest(cfg.state.r) + " xi=" + shortest(cfg.model.xi) +
         " beta=" + shortest(cfg.model.beta);
}

void summarize(const TimeSeries& series, const SimulationConfig& cfg,
               std::ostream& err) {
  if (series.size() < cfg.metrics.window) return;
  const CollapseMetrics m =
      collapse_metrics(series, Observable::inversion, cfg.metrics);
  double n_min = series.front().quantifier_N;
  double n_max = n_min;
  for (const auto& r : series) {
    n_min = std::min(n_min, r.quantifier_N);
    n_max = std::max(n_max, r.quantifier_N);
  }
  err << describe(cfg) << ": points=" << series.size()
      << " collapse_tau=" << (m.collapse_tau ? shortest(*m.collapse_tau) : "none")
      << " revival_tau=" << (m.revival_tau ? shortest(*m.revival_tau) : "none")
      << " N_min=" << shortest(n_min) << " N_max=" << shortest(n_max) << '\n';
}

int cmd_distribution(const CommonOptions& opts, std::ostream& out,
                     std::ostream& err) {
  const SimulationConfig cfg = load_config(opts);
  const FockAmplitudes amps = field_amplitudes(cfg);
  const std::vector<double> p = photon_distribution(amps);
  std::ostringstream body;
  csv::emit_distribution(p, body);
  emit(cfg.outputs.csv, body.str(), out);
  if (!opts.quiet) {
    double mean = 0.0;
    for (std::size_t n = 0; n < p.size(); ++n) mean += static_cast<double>(n) * p[n];
    err << "n_max=" << amps.n_max() << " tail=" << shortest(amps.tail_bound)
        << " <n>=" << shortest(mean)
        << " expected=" << shortest(mean_photon_number(cfg.state)) << '\n';
  }
  return 0;
}

int cmd_evolve(const CommonOptions& opts, std::ostream& out, std::ostream& err) {
  const SimulationConfig cfg = load_config(opts);
  const TimeSeries series = evolve_series(cfg);
  emit(cfg.outputs.csv, csv::series_to_string(series), out);
  if (cfg.outputs.svg) {
    write_file_atomic(*cfg.outputs.svg, plot_series(series, describe(cfg)));
  }
  if (!opts.quiet) summarize(series, cfg, err);
  return 0;
}

int cmd_sweep(const CommonOptions& opts, const std::string& param,
              const std::vector<double>& values, std::ostream& out,
              std::ostream& err) {
  SimulationConfig cfg = load_config(opts);
  SweepRequest req = cfg.sweep.value_or(SweepRequest{});
  if (!param.empty()) req.param = parse_sweep_parameter(param);
  if (!values.empty()) req.values = values;
  if (req.values.empty()) {
    throw ConfigError("sweep.values", "no sweep values given");
  }
  cfg.sweep = req;
  cfg.validate();

  SweepSpec spec{req.param, req.values, cfg};
  const auto results = sweep(spec, cfg.grid);
  const std::string name = to_string(req.param);
  for (const auto& entry : results) {
    const SimulationConfig run_cfg = with_value(cfg, req.param, entry.value);
    const std::string body = csv::series_to_string(entry.series);
    if (cfg.outputs.csv) {
      write_file_atomic(sweep_output_path(*cfg.outputs.csv, name, entry.value), body);
    } else {
      out << "# " << name << '=' << shortest(entry.value) << '\n' << body;
    }
    if (cfg.outputs.svg) {
      write_file_atomic(sweep_output_path(*cfg.outputs.svg, name, entry.value),
                        plot_series(entry.series, describe(run_cfg)));
    }
    if (!opts.quiet) summarize(entry.series, run_cfg, err);
  }
  return 0;
}

int cmd_verify(const CommonOptions& opts, double tolerance,
               std::optional<std::size_t> n_cap, std::ostream& out,
               std::ostream& err) {
  const SimulationConfig cfg = load_config(opts);
  const FockAmplitudes amps = field_amplitudes(cfg);
  const oracle::DeviationReport rep =
      oracle::compare(cfg.model, amps, cfg.grid, n_cap);
  const bool ok = rep.max_rho_deviation <= tolerance;
  nlohmann::json doc = {{"max_rho_deviation", rep.max_rho_deviation},
                        {"max_norm_deviation", rep.max_norm_deviation},
                        {"max_trace_deviation", rep.max_trace_deviation},
                        {"max_excitation_drift", rep.max_excitation_drift},
                        {"n_max", amps.n_max()},
                        {"n_cap", rep.n_cap},
                        {"points", rep.points},
                        {"tolerance", tolerance},
                        {"pass", ok}};
  emit(cfg.outputs.csv, doc.dump(2) + "\n", out);
  if (!opts.quiet) {
    err << (ok ? "PASS" : "FAIL") << " max |rho_closed - rho_oracle| = "
        << shortest(rep.max_rho_deviation) << " (tolerance " << shortest(tolerance)
        << ")\n";
  }
  return ok ? 0 : 1;
}

int cmd_plot(const std::string& input, const std::string& output,
             const std::string& x_column, const std::vector<std::string>& columns,
             const std::string& title, std::ostream& out) {
  std::ifstream in(input);
  if (!in) throw std::runtime_error("cannot read " + input);
  const csv::Table table = csv::read_table(in);
  std::vector<svg::Trace> traces;
  for (const auto& c : columns) traces.push_back({c, table.column(c), ""});
  const std::string body =
      svg::render(table.column(x_column), traces, {title, x_column, ""});
  emit(output.empty() ? std::nullopt : std::optional<std::string>(output), body, out);
  return 0;
}

}  // namespace

std::string sweep_output_path(const std::string& base, const std::string& param,
                              double value) {
  const std::filesystem::path p(base);
  const std::string stem = p.stem().string() + "_" + param + "=" + shortest(value);
  return (p.parent_path() / (stem + p.extension().string())).string();
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"AJC squeezed-coherent atomic non-classicality simulator", "ajcsim"};
  app.require_subcommand(1);

  CommonOptions dist_opts, evolve_opts, sweep_opts, verify_opts;
  auto* dist = app.add_subcommand("distribution", "Photon-number distribution P(n)");
  add_common(dist, dist_opts, false);

  auto* evolve = app.add_subcommand("evolve", "Time series of atomic observables");
  add_common(evolve, evolve_opts, true);

  auto* sweep_cmd = app.add_subcommand("sweep", "One time series per parameter value");
  add_common(sweep_cmd, sweep_opts, true);
  std::string sweep_param;
  std::vector<double> sweep_values;
  sweep_cmd->add_option("--param", sweep_param, "xi, alpha_sq or r");
  sweep_cmd->add_option("--values", sweep_values, "Comma separated values")
      ->delimiter(',');

  auto* verify = app.add_subcommand("verify", "Compare against the dense-matrix oracle");
  add_common(verify, verify_opts, false);
  double tolerance = 1e-8;
  std::size_t n_cap_value = 0;
  verify->add_option("--tolerance", tolerance, "Maximum entrywise deviation");
  auto* n_cap_opt = verify->add_option("--n-cap", n_cap_value, "Oracle Fock cutoff");

  auto* plot = app.add_subcommand("plot", "Render CSV columns as an SVG line plot");
  std::string plot_in, plot_out, plot_title, plot_x = "tau";
  std::vector<std::string> plot_columns{"W", "quantifier_N"};
  bool plot_quiet = false;
  plot->add_option("--in,--csv", plot_in, "Input CSV")->required()->check(CLI::ExistingFile);
  plot->add_option("--svg,--out", plot_out, "Output SVG (stdout when omitted)");
  plot->add_option("--x", plot_x, "Column for the horizontal axis");
  plot->add_option("--columns", plot_columns, "Columns to draw")->delimiter(',');
  plot->add_option("--title", plot_title, "Plot title");
  plot->add_flag("--quiet", plot_quiet, "Accepted for symmetry; plot prints nothing");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "ajcsim: " << e.what() << '\n';
    return e.get_exit_code() ? e.get_exit_code() : 2;
  }

  try {
    if (*dist) return cmd_distribution(dist_opts, out, err);
    if (*evolve) return cmd_evolve(evolve_opts, out, err);
    if (*sweep_cmd) return cmd_sweep(sweep_opts, sweep_param, sweep_values, out, err);
    if (*verify) {
      std::optional<std::size_t> n_cap;
      if (n_cap_opt->count()) n_cap = n_cap_value;
      return cmd_verify(verify_opts, tolerance, n_cap, out, err);
    }
    if (*plot) return cmd_plot(plot_in, plot_out, plot_x, plot_columns, plot_title, out);
  } catch (const ConfigError& e) {
    err << "ajcsim: config error: " << e.what() << '\n';
    return 3;
  } catch (const TruncationError& e) {
    err << "ajcsim: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    err << "ajcsim: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace ajc::cli
