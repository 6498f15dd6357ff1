#include <gtest/gtest.h>

#include <sstream>

#include "ncvif/errors.hpp"
#include "ncvif/montecarlo.hpp"

using namespace ncvif;
using namespace ncvif::mc;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an ncvif::Error";
  return ErrorKind::InvalidArgument;
}

void expect_monotone(const DiagnosticStats& s) {
  EXPECT_LE(s.median, s.p90);
  EXPECT_LE(s.p90, s.p95);
  EXPECT_LE(s.p95, s.p99);
  EXPECT_LE(s.p99, s.max);
}

ScenarioConfig parse(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

}  // namespace

TEST(Percentile, LinearInterpolation) {
  const std::vector<double> v = {1, 2, 3, 4, 5};
  EXPECT_EQ(percentile(v, 0.5), 3.0);
  EXPECT_EQ(percentile(v, 0.0), 1.0);
  EXPECT_EQ(percentile(v, 1.0), 5.0);
  EXPECT_DOUBLE_EQ(percentile(v, 0.9), 4.6);
  EXPECT_EQ(percentile({7.0}, 0.99), 7.0);
}

TEST(Scenario, Validation) {
  EXPECT_EQ(kind_of([] { ScenarioSpec{Independent{}, 3, 10, 1}.validate(); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([] { ScenarioSpec{Independent{}, 10, 0, 1}.validate(); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([] { ScenarioSpec{Essential{1.0, 0.0}, 10, 5, 1}.validate(); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([] { ScenarioSpec{NonEssential{1.0, -1.0}, 10, 5, 1}.validate(); }), ErrorKind::InvalidArgument);
}

TEST(Scenario, DesignsAreReproducible) {
  const ScenarioSpec spec{NonEssential{1.0, 0.002}, 20, 5, 99};
  EXPECT_EQ(generate_design(spec, 3), generate_design(spec, 3));
  EXPECT_FALSE(generate_design(spec, 3) == generate_design(spec, 4));
}

TEST(Scenario, IndependentGolden) {
  const auto s = run_scenario({Independent{}, 20, 200, 1}, {}, 1);
  EXPECT_EQ(s.designated.column, "X1");
  EXPECT_EQ(s.designated.vif.successful, 200u);
  // Self-golden values frozen from the first run of this implementation.
  EXPECT_DOUBLE_EQ(s.designated.vif.p95, 1.3976180395964046);
  EXPECT_DOUBLE_EQ(s.designated.vifnc.p95, 2.6650223744110044);
  EXPECT_GT(s.designated.vif.p95, 1.0);
  EXPECT_LT(s.designated.vif.p95, 3.0);
  expect_monotone(s.designated.vif);
  expect_monotone(s.designated.vifnc);
}

TEST(Scenario, NonEssentialSeparatesVifFromVifnc) {
  const auto s = run_scenario({NonEssential{1.0, 0.002}, 20, 200, 5}, {}, 2);
  EXPECT_GT(s.designated.vifnc.median, 1e4);
  EXPECT_LT(s.designated.vif.median, 2.0);
  EXPECT_GT(s.designated.vifnc.exceedance_rate, s.designated.vif.exceedance_rate);
  expect_monotone(s.designated.vif);
  expect_monotone(s.designated.vifnc);
}

TEST(Scenario, EssentialFlagsBoth) {
  const auto s = run_scenario({Essential{2.0, 0.05}, 30, 100, 11}, {}, 2);
  EXPECT_EQ(s.designated.column, "X2");
  EXPECT_EQ(s.designated.vif.exceedance_rate, 1.0);
  EXPECT_EQ(s.designated.vifnc.exceedance_rate, 1.0);
  EXPECT_GE(s.designated.vifnc.median, 10.0);
}

TEST(Scenario, DeterministicAcrossThreadCounts) {
  const ScenarioSpec spec{NonEssential{1.0, 0.002}, 20, 64, 77, true};
  const auto a = run_scenario(spec, {}, 1);
  const auto b = run_scenario(spec, {}, 4);
  const auto c = run_scenario(spec, {}, 0);
  EXPECT_EQ(a.designated, b.designated);
  EXPECT_EQ(a.designated, c.designated);
  EXPECT_EQ(a.sweep, b.sweep);
  ASSERT_EQ(a.sweep.size(), 3u);
}

TEST(Scenario, SingleReplicationRepeatable) {
  const ScenarioSpec spec{Independent{}, 10, 1, 123};
  EXPECT_EQ(run_scenario(spec).designated, run_scenario(spec).designated);
}

TEST(Scenario, PerfectCollinearityIsTallied) {
  // Noise this small makes X2 an exact multiple of X1 at the sentinel tolerance.
  const auto s = run_scenario({Essential{3.0, 1e-300}, 12, 10, 3}, {}, 1);
  EXPECT_EQ(s.designated.vif.perfect_collinearity + s.designated.vif.successful + s.designated.vif.failed, 10u);
  EXPECT_EQ(s.designated.vif.perfect_collinearity, 10u);
  EXPECT_EQ(s.designated.vif.successful, 0u);
}

TEST(Config, ParsesAllKinds) {
  const auto ne = parse("# comment\nkind = nonessential\nn = 20\nreplications = 50\nmaster_seed = 7\n"
                        "base = 1\nnoise_sd = 0.002\nvifnc_threshold = 1000\n");
  ASSERT_TRUE(std::holds_alternative<NonEssential>(ne.spec.kind));
  EXPECT_EQ(std::get<NonEssential>(ne.spec.kind).noise_sd, 0.002);
  EXPECT_EQ(ne.spec.master_seed, 7u);
  EXPECT_EQ(ne.thresholds.vifnc, 1000.0);
  EXPECT_EQ(ne.thresholds.vif, 10.0);

  const auto e = parse("kind=essential\nn=10\nreplications=3\nmaster_seed=18446744073709551615\nlambda=2\nnoise_sd=1\n"
                       "sweep = true\n");
  EXPECT_EQ(e.spec.master_seed, 18446744073709551615ULL);
  EXPECT_TRUE(e.spec.sweep);

  EXPECT_TRUE(std::holds_alternative<Independent>(parse("kind=independent\nn=10\nreplications=3\nmaster_seed=1\n").spec.kind));
}

TEST(Config, ErrorsNameTheKey) {
  auto message = [](const std::string& text) {
    try {
      parse(text);
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::ConfigError);
      return std::string(e.what());
    }
    ADD_FAILURE() << "expected ConfigError for: " << text;
    return std::string();
  };
  EXPECT_NE(message("kind=independent\nn=10\nreplications=3\n").find("master_seed"), std::string::npos);
  EXPECT_NE(message("kind=independent\nn=10\nreplications=3\nmaster_seed=1\ncolour=red\n").find("colour"), std::string::npos);
  EXPECT_NE(message("kind=essential\nn=10\nreplications=3\nmaster_seed=1\nlambda=1\n").find("noise_sd"), std::string::npos);
  EXPECT_NE(message("kind=independent\nn=ten\nreplications=3\nmaster_seed=1\n").find("'n'"), std::string::npos);
  EXPECT_NE(message("kind=independent\nn=10\nn=11\nreplications=3\nmaster_seed=1\n").find("'n'"), std::string::npos);
  EXPECT_NE(message("kind=weird\nn=10\nreplications=3\nmaster_seed=1\n").find("kind"), std::string::npos);
  EXPECT_NE(message("kind=independent\nn=10\nreplications=3\nmaster_seed=1\nbase=1\n").find("base"), std::string::npos);
  message("kind=independent\nn=2\nreplications=3\nmaster_seed=1\n");
  message("just some text\n");
}
