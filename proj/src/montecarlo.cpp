#include "ncvif/montecarlo.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <thread>

#include "ncvif/datasets.hpp"
#include "ncvif/errors.hpp"

namespace ncvif::mc {

namespace {

constexpr double kIndependentMean = 4.0;
constexpr double kIndependentSd = 4.0;  // variance 16

const std::vector<std::string> kColumns = {"X1", "X2", "X3"};

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

// Outcome of one diagnostic on one replication.
struct Draw {
  enum class State { Ok, Perfect, Failed } state = State::Failed;
  double value = 0.0;
};

Draw evaluate(const auto& diagnostic) {
  try {
    const Inflation v = diagnostic();
    if (v.infinite) return {Draw::State::Perfect, 0.0};
    return {Draw::State::Ok, v.value};
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::PerfectCollinearity) return {Draw::State::Perfect, 0.0};
    return {Draw::State::Failed, 0.0};
  }
}

DiagnosticStats summarize(const std::vector<Draw>& draws, double threshold) {
  DiagnosticStats s;
  std::vector<double> values;
  values.reserve(draws.size());
  for (const auto& d : draws) {
    switch (d.state) {
      case Draw::State::Ok: values.push_back(d.value); break;
      case Draw::State::Perfect: ++s.perfect_collinearity; break;
      case Draw::State::Failed: ++s.failed; break;
    }
  }
  s.successful = values.size();
  if (values.empty()) return s;
  std::sort(values.begin(), values.end());
  double total = 0.0;
  std::size_t exceed = 0;
  for (double v : values) {
    total += v;
    if (v >= threshold) ++exceed;
  }
  const double count = static_cast<double>(values.size());
  s.mean = total / count;
  s.median = percentile(values, 0.5);
  s.p90 = percentile(values, 0.90);
  s.p95 = percentile(values, 0.95);
  s.p99 = percentile(values, 0.99);
  s.max = values.back();
  s.exceedance_rate = static_cast<double>(exceed) / count;
  return s;
}

}  // namespace

void ScenarioSpec::validate() const {
  if (replications < 1) throw Error(ErrorKind::InvalidArgument, "replications must be >= 1");
  if (n < 4) throw Error(ErrorKind::InvalidArgument, "scenario needs n >= 4");
  std::visit(overloaded{
                 [](const Independent&) {},
                 [](const Essential& e) {
                   if (!(e.noise_sd > 0.0) || !std::isfinite(e.noise_sd) || !std::isfinite(e.lambda))
                     throw Error(ErrorKind::InvalidArgument, "essential scenario needs finite lambda and noise_sd > 0");
                 },
                 [](const NonEssential& e) {
                   if (!(e.noise_sd > 0.0) || !std::isfinite(e.noise_sd) || !std::isfinite(e.base))
                     throw Error(ErrorKind::InvalidArgument, "nonessential scenario needs finite base and noise_sd > 0");
                 },
             },
             kind);
}

std::string kind_name(const ScenarioKind& kind) {
  return std::visit(overloaded{
                        [](const Independent&) { return std::string("independent"); },
                        [](const Essential&) { return std::string("essential"); },
                        [](const NonEssential&) { return std::string("nonessential"); },
                    },
                    kind);
}

std::string designated_column(const ScenarioKind& kind) {
  return std::holds_alternative<Essential>(kind) ? "X2" : "X1";
}

DataMatrix generate_design(const ScenarioSpec& spec, std::size_t index) {
  NormalStream rng(child_seed(spec.master_seed, index));
  const std::size_t n = spec.n;
  std::vector<std::vector<double>> cols(3, std::vector<double>(n));
  auto fill = [&](std::vector<double>& col, double mu, double sd) {
    for (auto& v : col) v = rng.next(mu, sd);
  };
  std::visit(overloaded{
                 [&](const Independent&) {
                   for (auto& c : cols) fill(c, kIndependentMean, kIndependentSd);
                 },
                 [&](const Essential& e) {
                   fill(cols[0], kIndependentMean, kIndependentSd);
                   for (std::size_t i = 0; i < n; ++i) cols[1][i] = e.lambda * cols[0][i] + rng.next(0.0, e.noise_sd);
                   fill(cols[2], kIndependentMean, kIndependentSd);
                 },
                 [&](const NonEssential& e) {
                   fill(cols[0], e.base, e.noise_sd);
                   fill(cols[1], e.base, e.noise_sd);
                   fill(cols[2], kIndependentMean, kIndependentSd);
                 },
             },
             spec.kind);
  return DataMatrix(kColumns, std::move(cols));
}

double percentile(const std::vector<double>& sorted, double q) {
  if (sorted.empty()) throw Error(ErrorKind::InvalidArgument, "percentile of an empty sample");
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

MonteCarloSummary run_scenario(const ScenarioSpec& spec, const Thresholds& thresholds, unsigned threads) {
  spec.validate();
  std::vector<std::string> targets;
  if (spec.sweep) {
    targets = kColumns;
  } else {
    targets = {designated_column(spec.kind)};
  }

  const std::size_t reps = spec.replications;
  // draws[t][r] for target t: index-addressed so the schedule cannot matter.
  std::vector<std::vector<Draw>> vif_draws(targets.size(), std::vector<Draw>(reps));
  std::vector<std::vector<Draw>> vifnc_draws(targets.size(), std::vector<Draw>(reps));

  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t r = first; r < reps; r += stride) {
      const DataMatrix data = generate_design(spec, r);
      for (std::size_t t = 0; t < targets.size(); ++t) {
        std::vector<std::string> others;
        for (const auto& c : kColumns)
          if (c != targets[t]) others.push_back(c);
        vif_draws[t][r] = evaluate([&] { return vif(data, targets[t], others); });
        vifnc_draws[t][r] = evaluate([&] { return vifnc(data, targets[t], others); });
      }
    }
  };

  unsigned workers = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, reps));
  if (workers <= 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
  }

  MonteCarloSummary out;
  out.scenario = spec;
  out.thresholds = thresholds;
  for (std::size_t t = 0; t < targets.size(); ++t) {
    ColumnSummary cs{targets[t], summarize(vif_draws[t], thresholds.vif), summarize(vifnc_draws[t], thresholds.vifnc)};
    if (targets[t] == designated_column(spec.kind)) out.designated = cs;
    if (spec.sweep) out.sweep.push_back(std::move(cs));
  }
  return out;
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <class T>
T parse_number(const std::string& key, const std::string& text) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorKind::ConfigError, "key '" + key + "': cannot parse '" + text + "'");
  }
  if constexpr (std::is_floating_point_v<T>) {
    if (!std::isfinite(value)) throw Error(ErrorKind::ConfigError, "key '" + key + "': value must be finite");
  }
  return value;
}

}  // namespace

ScenarioConfig parse_config(std::istream& in) {
  static const std::vector<std::string> known = {"kind",    "n",    "replications",  "master_seed",     "lambda",
                                                 "noise_sd", "base", "vif_threshold", "vifnc_threshold", "sweep"};
  std::map<std::string, std::string> values;
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorKind::ConfigError, "line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw Error(ErrorKind::ConfigError, "unknown key '" + key + "'");
    }
    if (!values.emplace(key, value).second) throw Error(ErrorKind::ConfigError, "key '" + key + "' given twice");
  }

  auto require = [&](const std::string& key) -> const std::string& {
    auto it = values.find(key);
    if (it == values.end()) throw Error(ErrorKind::ConfigError, "missing required key '" + key + "'");
    return it->second;
  };
  auto reject = [&](const std::string& key, const std::string& kind) {
    if (values.count(key)) throw Error(ErrorKind::ConfigError, "key '" + key + "' does not apply to kind " + kind);
  };

  ScenarioConfig cfg;
  const std::string kind = require("kind");
  if (kind == "independent") {
    reject("lambda", kind);
    reject("noise_sd", kind);
    reject("base", kind);
    cfg.spec.kind = Independent{};
  } else if (kind == "essential") {
    reject("base", kind);
    cfg.spec.kind = Essential{parse_number<double>("lambda", require("lambda")),
                              parse_number<double>("noise_sd", require("noise_sd"))};
  } else if (kind == "nonessential") {
    reject("lambda", kind);
    cfg.spec.kind = NonEssential{parse_number<double>("base", require("base")),
                                 parse_number<double>("noise_sd", require("noise_sd"))};
  } else {
    throw Error(ErrorKind::ConfigError, "key 'kind': expected independent, essential or nonessential, got '" + kind + "'");
  }
  cfg.spec.n = parse_number<std::size_t>("n", require("n"));
  cfg.spec.replications = parse_number<std::size_t>("replications", require("replications"));
  cfg.spec.master_seed = parse_number<std::uint64_t>("master_seed", require("master_seed"));
  if (values.count("vif_threshold")) cfg.thresholds.vif = parse_number<double>("vif_threshold", values["vif_threshold"]);
  if (values.count("vifnc_threshold"))
    cfg.thresholds.vifnc = parse_number<double>("vifnc_threshold", values["vifnc_threshold"]);
  if (values.count("sweep")) {
    const auto& s = values["sweep"];
    if (s != "true" && s != "false") throw Error(ErrorKind::ConfigError, "key 'sweep': expected true or false");
    cfg.spec.sweep = s == "true";
  }
  try {
    cfg.spec.validate();
  } catch (const Error& e) {
    throw Error(ErrorKind::ConfigError, e.what());
  }
  return cfg;
}

ScenarioConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open '" + path + "'");
  return parse_config(in);
}

}  // namespace ncvif::mc
