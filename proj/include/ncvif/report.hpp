#pragma once

#include <string>
#include <vector>

#include "ncvif/diagnostics.hpp"
#include "ncvif/montecarlo.hpp"
#include "ncvif/ols.hpp"

namespace ncvif {

enum class OutputFormat { Text, Json, Csv };

OutputFormat parse_format(const std::string& name);

// Text tables print 7 significant digits; JSON and CSV carry full
// round-trip precision.
std::string format_7g(double value);

std::string render_report(const CollinearityReport& report, const std::string& dataset, OutputFormat format);

std::string render_fit(const FitResult& fit, const std::string& column, AuxiliaryMode mode, OutputFormat format);

std::string render_summary(const mc::MonteCarloSummary& summary, OutputFormat format);

struct ReplicationCheck {
  std::string label;
  double target;
  double computed;
  double tolerance;
  bool relative;  // false: absolute window

  bool pass() const;
};

// Every published Belsley-data value the library can reproduce, computed
// from the embedded data set.
std::vector<ReplicationCheck> replication_checks();

std::string render_replication(const std::vector<ReplicationCheck>& checks, OutputFormat format);

}  // namespace ncvif
