#include <gtest/gtest.h>

#include <cmath>

#include "ajc/config.hpp"
#include "ajc/errors.hpp"

namespace ajc {
namespace {

std::string error_key(const std::string& doc, const std::vector<std::string>& overrides = {}) {
  try {
    parse_config(doc, overrides);
  } catch (const ConfigError& e) {
    return e.key();
  }
  return "<no error>";
}

TEST(ParseConfig, AppliesDefaults) {
  const SimulationConfig cfg = parse_config(R"({"alpha_sq":30,"r":2,"xi":0.0001})");
  EXPECT_NEAR(std::norm(cfg.state.alpha), 30.0, 1e-13);
  EXPECT_EQ(cfg.state.r, 2.0);
  EXPECT_EQ(cfg.state.theta, 0.0);
  EXPECT_EQ(cfg.model.xi, 0.0001);
  EXPECT_EQ(cfg.model.beta, 0.0);
  EXPECT_EQ(cfg.model.lambda, 1.0);
  EXPECT_EQ(cfg.grid.tau_start, 0.0);
  EXPECT_EQ(cfg.grid.tau_end, 100.0);
  EXPECT_EQ(cfg.grid.steps, 4001u);
  EXPECT_EQ(cfg.tail_epsilon, 1e-10);
  EXPECT_FALSE(cfg.n_max_override);
  EXPECT_EQ(cfg.metrics.window, 51u);
  EXPECT_EQ(cfg.metrics.collapse_threshold, 0.1);
  EXPECT_EQ(cfg.metrics.revival_threshold, 0.3);
}

TEST(ParseConfig, TypicalDocumentAccepted) {
  const SimulationConfig cfg = parse_config(R"({"alpha_sq":30,"r":1.5,"xi":0.9})");
  EXPECT_EQ(cfg.state.r, 1.5);
  EXPECT_EQ(cfg.model.xi, 0.9);
}

TEST(ParseConfig, DomainViolationsNameTheKey) {
  EXPECT_EQ(error_key(R"({"alpha_sq":30,"r":-1,"xi":0.1})"), "r");
  EXPECT_EQ(error_key(R"({"alpha_sq":-3,"r":1,"xi":0.1})"), "alpha_sq");
  EXPECT_EQ(error_key(R"({"alpha_sq":3,"r":1,"xi":-0.1})"), "xi");
  EXPECT_EQ(error_key(R"({"alpha_sq":3,"r":1,"xi":0.1,"lambda":0})"), "lambda");
  EXPECT_EQ(error_key(R"({"alpha_sq":3,"r":1,"xi":0.1,"tail_epsilon":2})"), "tail_epsilon");
  EXPECT_EQ(error_key(R"({"alpha_sq":3,"r":1,"xi":0.1,"grid":{"steps":1}})"), "grid.tau_end");
  EXPECT_EQ(error_key(R"({"alpha_sq":3,"r":1,"xi":0.1,"grid":{"tau_end":-2}})"),
            "grid.tau_end");
  EXPECT_EQ(error_key(R"({"alpha_sq":3,"r":"big","xi":0.1})"), "r");
  EXPECT_EQ(error_key(R"({"alpha_sq":3,"r":1,"xi":0.1,"colour":"red"})"), "colour");
  EXPECT_EQ(error_key(R"({"alpha_sq":3,"r":1,"xi":0.1,"grid":{"stepz":3}})"), "grid.stepz");
  EXPECT_EQ(error_key(R"({"alpha_sq":3,"r":1,"xi":0.1,"n_max_override":2.5})"),
            "n_max_override");
}

TEST(ParseConfig, ExactlyOneAmplitudeForm) {
  EXPECT_EQ(error_key(R"({"alpha_sq":3,"alpha":1,"r":1,"xi":0.1})"), "alpha_sq");
  EXPECT_EQ(error_key(R"({"r":1,"xi":0.1})"), "alpha_sq");
  const SimulationConfig cfg = parse_config(R"({"alpha":1.5,"r":1,"xi":0.1})");
  EXPECT_EQ(cfg.state.alpha.real(), 1.5);
}

TEST(ParseConfig, ComplexAmplitude) {
  const SimulationConfig cfg = parse_config(R"({"alpha":[1.5,-0.5],"r":1,"xi":0.1})");
  EXPECT_EQ(cfg.state.alpha, complex(1.5, -0.5));
  EXPECT_EQ(parse_config(to_json(cfg)).state.alpha, cfg.state.alpha);
  EXPECT_EQ(error_key(R"({"alpha":[1,2,3],"r":1,"xi":0.1})"), "alpha");
  EXPECT_EQ(error_key(R"({"alpha":["x",2],"r":1,"xi":0.1})"), "alpha");
}

TEST(ParseConfig, MalformedDocument) {
  EXPECT_THROW(parse_config("{\"alpha_sq\": 3,"), ConfigError);
  EXPECT_THROW(parse_config("[1,2]"), ConfigError);
}

TEST(ParseConfig, OverridesIncludingNestedKeys) {
  const SimulationConfig cfg =
      parse_config(R"({"alpha_sq":30,"r":2,"xi":0.0001})",
                   {"xi=1.5", "grid.steps=101", "grid.tau_end=10", "outputs.csv=run.csv"});
  EXPECT_EQ(cfg.model.xi, 1.5);
  EXPECT_EQ(cfg.grid.steps, 101u);
  EXPECT_EQ(cfg.grid.tau_end, 10.0);
  ASSERT_TRUE(cfg.outputs.csv);
  EXPECT_EQ(*cfg.outputs.csv, "run.csv");
}

TEST(ParseConfig, AmplitudeOverrideReplacesOtherForm) {
  const SimulationConfig cfg = parse_config(R"({"alpha":1,"r":2,"xi":0.1})", {"alpha_sq=4"});
  EXPECT_NEAR(cfg.state.alpha.real(), 2.0, 1e-15);
}

TEST(ParseConfig, BadOverrideSyntax) {
  EXPECT_EQ(error_key(R"({"alpha_sq":3,"r":1,"xi":0.1})", {"xi"}), "xi");
  EXPECT_EQ(error_key(R"({"alpha_sq":3,"r":1,"xi":0.1})", {"r=-2"}), "r");
}

TEST(ParseConfig, SweepBlock) {
  const SimulationConfig cfg = parse_config(
      R"({"alpha_sq":30,"r":2,"xi":0.0001,"sweep":{"param":"xi","values":[0.0001,0.01,1.5,2]}})");
  ASSERT_TRUE(cfg.sweep);
  EXPECT_EQ(cfg.sweep->param, SweepParameter::xi);
  EXPECT_EQ(cfg.sweep->values.size(), 4u);
  EXPECT_EQ(error_key(R"({"alpha_sq":30,"r":2,"xi":0.1,"sweep":{"param":"q","values":[1]}})"),
            "sweep.param");
  EXPECT_EQ(error_key(R"({"alpha_sq":30,"r":2,"xi":0.1,"sweep":{"param":"r","values":[]}})"),
            "sweep.values");
}

TEST(ParseConfig, JsonRoundTrip) {
  const SimulationConfig a = parse_config(
      R"({"alpha_sq":20,"r":1.5,"xi":0.9,"beta":0.25,"lambda":2,"grid":{"tau_end":40,"steps":801},
          "n_max_override":300,"outputs":{"csv":"x.csv"},"sweep":{"param":"alpha_sq","values":[10,20]}})");
  const SimulationConfig b = parse_config(to_json(a));
  EXPECT_NEAR(std::norm(b.state.alpha), 20.0, 1e-12);
  EXPECT_EQ(b.model.beta, 0.25);
  EXPECT_EQ(b.model.lambda, 2.0);
  EXPECT_EQ(b.grid.steps, 801u);
  EXPECT_EQ(b.n_max_override, a.n_max_override);
  EXPECT_EQ(b.outputs.csv, a.outputs.csv);
  EXPECT_EQ(b.sweep->values, a.sweep->values);
}

}  // namespace
}  // namespace ajc
