#include "ajc/config.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

#include "ajc/errors.hpp"
#include "json.hpp"

namespace ajc {
namespace {

using nlohmann::json;

void require(bool ok, const std::string& key, const std::string& message) {
  if (!ok) throw ConfigError(key, message);
}

double get_number(const json& doc, const std::string& key,
                  const std::string& path) {
  const json& v = doc.at(key);
  require(v.is_number(), path, "expected a number");
  const double x = v.get<double>();
  require(std::isfinite(x), path, "must be finite");
  return x;
}

std::size_t get_count(const json& doc, const std::string& key,
                      const std::string& path) {
  const json& v = doc.at(key);
  require(v.is_number_integer() ||
              (v.is_number_float() && std::floor(v.get<double>()) == v.get<double>()),
          path, "expected an integer");
  const double x = v.get<double>();
  require(x >= 0.0, path, "must be >= 0");
  return static_cast<std::size_t>(x);
}

std::string get_string(const json& doc, const std::string& key,
                       const std::string& path) {
  const json& v = doc.at(key);
  require(v.is_string(), path, "expected a string");
  return v.get<std::string>();
}

void reject_unknown(const json& obj, const std::set<std::string>& allowed,
                    const std::string& prefix) {
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.count(key)) throw ConfigError(prefix + key, "unknown key");
  }
}

const json& get_object(const json& doc, const std::string& key) {
  const json& v = doc.at(key);
  require(v.is_object(), key, "expected an object");
  return v;
}

json parse_override_value(const std::string& text) {
  json v = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (v.is_discarded()) return json(text);
  return v;
}

void apply_override(json& doc, const std::string& assignment) {
  const auto eq = assignment.find('=');
  require(eq != std::string::npos && eq > 0, assignment,
          "override must look like key=value");
  const std::string key = assignment.substr(0, eq);
  const json value = parse_override_value(assignment.substr(eq + 1));

  json* node = &doc;
  std::size_t start = 0;
  while (true) {
    const auto dot = key.find('.', start);
    const std::string part = key.substr(start, dot - start);
    require(!part.empty(), key, "empty key segment");
    if (dot == std::string::npos) {
      (*node)[part] = value;
      break;
    }
    json& child = (*node)[part];
    if (child.is_null()) child = json::object();
    require(child.is_object(), key, "cannot index into a non-object");
    node = &child;
    start = dot + 1;
  }

  // An explicit override of one amplitude form replaces the other.
  if (key == "alpha_sq") doc.erase("alpha");
  if (key == "alpha") doc.erase("alpha_sq");
}

}  // namespace

const char* to_string(SweepParameter p) {
  switch (p) {
    case SweepParameter::xi:
      return "xi";
    case SweepParameter::alpha_sq:
      return "alpha_sq";
    case SweepParameter::r:
      return "r";
  }
  return "xi";
}

SweepParameter parse_sweep_parameter(std::string_view name) {
  if (name == "xi") return SweepParameter::xi;
  if (name == "alpha_sq") return SweepParameter::alpha_sq;
  if (name == "r") return SweepParameter::r;
  throw ConfigError("sweep.param", "expected one of xi, alpha_sq, r; got '" +
                                       std::string(name) + "'");
}

void SimulationConfig::validate() const {
  require(std::isfinite(state.alpha.real()) && std::isfinite(state.alpha.imag()),
          "alpha", "must be finite");
  require(state.r >= 0.0 && std::isfinite(state.r), "r", "must be >= 0");
  require(std::isfinite(state.theta), "theta", "must be finite");
  require(model.xi >= 0.0 && std::isfinite(model.xi), "xi", "must be >= 0");
  require(std::isfinite(model.beta), "beta", "must be finite");
  require(model.lambda > 0.0 && std::isfinite(model.lambda), "lambda",
          "must be > 0");
  require(tail_epsilon > 0.0 && tail_epsilon < 1.0, "tail_epsilon",
          "must lie in (0, 1)");
  require(grid.tau_start >= 0.0, "grid.tau_start", "must be >= 0");
  if (grid.steps == 1) {
    require(grid.tau_end == grid.tau_start, "grid.tau_end",
            "must equal grid.tau_start for a one-point grid");
  } else {
    require(grid.steps >= 2, "grid.steps", "must be >= 1");
    require(grid.tau_end > grid.tau_start, "grid.tau_end",
            "must exceed grid.tau_start");
  }
  require(metrics.window >= 1, "metrics.window", "must be >= 1");
  require(metrics.collapse_threshold > 0.0, "metrics.collapse_threshold",
          "must be > 0");
  require(metrics.revival_threshold > 0.0, "metrics.revival_threshold",
          "must be > 0");
  if (sweep) {
    require(!sweep->values.empty(), "sweep.values", "must not be empty");
    for (const double v : sweep->values) {
      require(std::isfinite(v), "sweep.values", "must be finite");
      switch (sweep->param) {
        case SweepParameter::xi:
        case SweepParameter::alpha_sq:
        case SweepParameter::r:
          require(v >= 0.0, "sweep.values",
                  std::string(to_string(sweep->param)) + " values must be >= 0");
          break;
      }
    }
  }
}

SimulationConfig parse_config(std::string_view text,
                              const std::vector<std::string>& overrides) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ConfigError("", std::string("parse error: ") + e.what());
  }
  require(doc.is_object(), "", "configuration must be a JSON object");
  for (const auto& o : overrides) apply_override(doc, o);

  reject_unknown(doc,
                 {"alpha_sq", "alpha", "r", "theta", "xi", "beta", "lambda",
                  "tail_epsilon", "n_max_override", "grid", "outputs",
                  "metrics", "sweep"},
                 "");

  SimulationConfig cfg;
  const bool has_sq = doc.contains("alpha_sq");
  const bool has_alpha = doc.contains("alpha");
  require(has_sq != has_alpha, "alpha_sq",
          "exactly one of alpha_sq or alpha is required");
  if (has_sq) {
    const double a2 = get_number(doc, "alpha_sq", "alpha_sq");
    require(a2 >= 0.0, "alpha_sq", "must be >= 0");
    cfg.state.alpha = complex{std::sqrt(a2), 0.0};
  } else {
    const json& a = doc.at("alpha");
    if (a.is_array()) {
      // [re, im]
      require(a.size() == 2 && a[0].is_number() && a[1].is_number(), "alpha",
              "expected a number or [re, im]");
      cfg.state.alpha = complex{a[0].get<double>(), a[1].get<double>()};
    } else {
      cfg.state.alpha = complex{get_number(doc, "alpha", "alpha"), 0.0};
    }
  }

  require(doc.contains("r"), "r", "is required");
  cfg.state.r = get_number(doc, "r", "r");
  require(cfg.state.r >= 0.0, "r", "must be >= 0");
  if (doc.contains("theta")) cfg.state.theta = get_number(doc, "theta", "theta");

  require(doc.contains("xi"), "xi", "is required");
  cfg.model.xi = get_number(doc, "xi", "xi");
  if (doc.contains("beta")) cfg.model.beta = get_number(doc, "beta", "beta");
  if (doc.contains("lambda")) {
    cfg.model.lambda = get_number(doc, "lambda", "lambda");
  }
  if (doc.contains("tail_epsilon")) {
    cfg.tail_epsilon = get_number(doc, "tail_epsilon", "tail_epsilon");
  }
  if (doc.contains("n_max_override") && !doc.at("n_max_override").is_null()) {
    cfg.n_max_override = get_count(doc, "n_max_override", "n_max_override");
  }

  if (doc.contains("grid")) {
    const json& g = get_object(doc, "grid");
    reject_unknown(g, {"tau_start", "tau_end", "steps"}, "grid.");
    if (g.contains("tau_start")) {
      cfg.grid.tau_start = get_number(g, "tau_start", "grid.tau_start");
    }
    if (g.contains("tau_end")) {
      cfg.grid.tau_end = get_number(g, "tau_end", "grid.tau_end");
    }
    if (g.contains("steps")) cfg.grid.steps = get_count(g, "steps", "grid.steps");
  }

  if (doc.contains("outputs")) {
    const json& o = get_object(doc, "outputs");
    reject_unknown(o, {"csv", "svg"}, "outputs.");
    if (o.contains("csv")) cfg.outputs.csv = get_string(o, "csv", "outputs.csv");
    if (o.contains("svg")) cfg.outputs.svg = get_string(o, "svg", "outputs.svg");
  }

  if (doc.contains("metrics")) {
    const json& m = get_object(doc, "metrics");
    reject_unknown(m, {"window", "collapse_threshold", "revival_threshold"},
                   "metrics.");
    if (m.contains("window")) {
      cfg.metrics.window = get_count(m, "window", "metrics.window");
    }
    if (m.contains("collapse_threshold")) {
      cfg.metrics.collapse_threshold =
          get_number(m, "collapse_threshold", "metrics.collapse_threshold");
    }
    if (m.contains("revival_threshold")) {
      cfg.metrics.revival_threshold =
          get_number(m, "revival_threshold", "metrics.revival_threshold");
    }
  }

  if (doc.contains("sweep")) {
    const json& s = get_object(doc, "sweep");
    reject_unknown(s, {"param", "values"}, "sweep.");
    require(s.contains("param"), "sweep.param", "is required");
    require(s.contains("values"), "sweep.values", "is required");
    SweepRequest req;
    req.param = parse_sweep_parameter(get_string(s, "param", "sweep.param"));
    const json& values = s.at("values");
    require(values.is_array(), "sweep.values", "expected an array");
    for (const json& v : values) {
      require(v.is_number(), "sweep.values", "expected numbers");
      req.values.push_back(v.get<double>());
    }
    cfg.sweep = std::move(req);
  }

  cfg.validate();
  return cfg;
}

std::string to_json(const SimulationConfig& config) {
  json doc;
  if (config.state.alpha.imag() == 0.0 && config.state.alpha.real() >= 0.0) {
    doc["alpha_sq"] = std::norm(config.state.alpha);
  } else if (config.state.alpha.imag() == 0.0) {
    doc["alpha"] = config.state.alpha.real();
  } else {
    doc["alpha"] = {config.state.alpha.real(), config.state.alpha.imag()};
  }
  doc["r"] = config.state.r;
  doc["theta"] = config.state.theta;
  doc["xi"] = config.model.xi;
  doc["beta"] = config.model.beta;
  doc["lambda"] = config.model.lambda;
  doc["tail_epsilon"] = config.tail_epsilon;
  if (config.n_max_override) doc["n_max_override"] = *config.n_max_override;
  doc["grid"] = {{"tau_start", config.grid.tau_start},
                 {"tau_end", config.grid.tau_end},
                 {"steps", config.grid.steps}};
  json outputs = json::object();
  if (config.outputs.csv) outputs["csv"] = *config.outputs.csv;
  if (config.outputs.svg) outputs["svg"] = *config.outputs.svg;
  if (!outputs.empty()) doc["outputs"] = outputs;
  doc["metrics"] = {{"window", config.metrics.window},
                    {"collapse_threshold", config.metrics.collapse_threshold},
                    {"revival_threshold", config.metrics.revival_threshold}};
  if (config.sweep) {
    doc["sweep"] = {{"param", to_string(config.sweep->param)},
                    {"values", config.sweep->values}};
  }
  return doc.dump(2);
}

}  // namespace ajc
