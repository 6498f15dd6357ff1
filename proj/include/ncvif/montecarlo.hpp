#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <variant>
#include <vector>

#include "ncvif/data.hpp"
#include "ncvif/diagnostics.hpp"

namespace ncvif::mc {

// Three N(4, 16) columns.
struct Independent {};
// X2 = lambda·X1 + N(0, noise_sd²); X1, X3 ~ N(4, 16).
struct Essential {
  double lambda = 1.0;
  double noise_sd = 1.0;
};
// X1, X2 = base + N(0, noise_sd²); X3 ~ N(4, 16).
struct NonEssential {
  double base = 1.0;
  double noise_sd = 0.01;
};

using ScenarioKind = std::variant<Independent, Essential, NonEssential>;

struct ScenarioSpec {
  ScenarioKind kind;
  std::size_t n = 20;
  std::size_t replications = 100;
  std::uint64_t master_seed = 0;
  bool sweep = false;  // summarize every column, not only the designated one

  void validate() const;
};

std::string kind_name(const ScenarioKind& kind);
// The structurally collinear column of each scenario.
std::string designated_column(const ScenarioKind& kind);

// Replication `index` of the scenario; columns X1, X2, X3 drawn in order.
DataMatrix generate_design(const ScenarioSpec& spec, std::size_t index);

struct DiagnosticStats {
  double mean = 0.0;
  double median = 0.0;
  double p90 = 0.0;
  double p95 = 0.0;
  double p99 = 0.0;
  double max = 0.0;
  double exceedance_rate = 0.0;  // share of successful replications at or above the threshold
  std::size_t successful = 0;
  std::size_t perfect_collinearity = 0;
  std::size_t failed = 0;  // other diagnostic errors

  friend bool operator==(const DiagnosticStats&, const DiagnosticStats&) = default;
};

struct ColumnSummary {
  std::string column;
  DiagnosticStats vif;
  DiagnosticStats vifnc;

  friend bool operator==(const ColumnSummary&, const ColumnSummary&) = default;
};

struct MonteCarloSummary {
  ScenarioSpec scenario;
  Thresholds thresholds;
  ColumnSummary designated;
  std::vector<ColumnSummary> sweep;
};

// Linear interpolation between order statistics; `sorted` must be ascending.
double percentile(const std::vector<double>& sorted, double q);

// `threads` = 0 picks the hardware concurrency. Results do not depend on it.
MonteCarloSummary run_scenario(const ScenarioSpec& spec, const Thresholds& thresholds = {}, unsigned threads = 0);

struct ScenarioConfig {
  ScenarioSpec spec;
  Thresholds thresholds;
};

// Flat `key = value` text, '#' starts a comment. Keys: kind
// (independent|essential|nonessential), n, replications, master_seed,
// lambda, noise_sd, base, vif_threshold, vifnc_threshold, sweep.
ScenarioConfig parse_config(std::istream& in);
ScenarioConfig load_config_file(const std::string& path);

}  // namespace ncvif::mc
