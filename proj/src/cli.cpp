#include "ncvif/cli.hpp"

#include <algorithm>

#include "CLI11.hpp"

#include "ncvif/datasets.hpp"
#include "ncvif/diagnostics.hpp"
#include "ncvif/errors.hpp"
#include "ncvif/montecarlo.hpp"
#include "ncvif/report.hpp"

namespace ncvif {

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;
constexpr int kDegenerate = 3;

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::RankDeficient:
    case ErrorKind::PerfectCollinearity:
      return kDegenerate;
    default:
      return kUsage;
  }
}

// All columns except `exclude`; constant columns are dropped when an
// intercept already supplies the constant.
std::vector<std::string> default_regressors(const DataMatrix& data, const std::string& exclude, bool intercept) {
  std::vector<std::string> out;
  for (const auto& name : data.column_names()) {
    if (name == exclude) continue;
    if (intercept && is_constant(data.column(name))) continue;
    out.push_back(name);
  }
  return out;
}

bool row_computable(const CollinearityRow& row) {
  return (row.vif && !row.vif->infinite) || !row.vifnc.infinite;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Centered and non-centered variance inflation diagnostics", "ncvif"};
  app.require_subcommand(1);

  std::string format_name = "text";
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format_name, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  };

  std::string csv_path, dependent, column, mode_name = "noncentered", config_path;
  std::vector<std::string> regressors;
  bool intercept = false;
  Thresholds thresholds;

  auto* diagnose = app.add_subcommand("diagnose", "Collinearity report for a regression model read from CSV");
  diagnose->add_option("csv", csv_path, "Input CSV file")->required();
  diagnose->add_option("--dependent", dependent, "Dependent column")->required();
  diagnose->add_option("--regressors", regressors, "Regressor columns (default: all others)")->delimiter(',');
  diagnose->add_flag("--intercept", intercept, "Model includes an intercept");
  diagnose->add_option("--vif-threshold", thresholds.vif, "VIF flag threshold")->capture_default_str();
  diagnose->add_option("--vifnc-threshold", thresholds.vifnc, "VIFnc flag threshold (provisional)")->capture_default_str();
  add_format(diagnose);

  auto* replicate = app.add_subcommand("replicate", "Recompute the published Belsley-data values");
  add_format(replicate);

  auto* aux = app.add_subcommand("aux", "Inspect one auxiliary regression");
  aux->add_option("csv", csv_path, "Input CSV file")->required();
  aux->add_option("--column", column, "Column regressed on the others")->required();
  aux->add_option("--regressors", regressors, "Regressor columns (default: all others)")->delimiter(',');
  aux->add_option("--mode", mode_name, "centered or noncentered")->check(CLI::IsMember({"centered", "noncentered"}));
  add_format(aux);

  auto* montecarlo = app.add_subcommand("montecarlo", "Run a seeded Monte Carlo scenario");
  montecarlo->add_option("config", config_path, "Scenario configuration file")->required();
  add_format(montecarlo);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    const OutputFormat format = parse_format(format_name);

    if (diagnose->parsed()) {
      const DataMatrix data = load_csv_file(csv_path);
      data.index_of(dependent);
      if (regressors.empty()) regressors = default_regressors(data, dependent, intercept);
      if (regressors.size() < 2) {
        err << "usage error: diagnose needs at least 2 regressors, got " << regressors.size() << "\n";
        return kUsage;
      }
      const auto report = full_report(data, ModelSpec{dependent, regressors, intercept}, thresholds);
      out << render_report(report, csv_path, format);
      if (std::none_of(report.rows.begin(), report.rows.end(), row_computable)) {
        err << "degenerate input: no regressor has a finite diagnostic\n";
        return kDegenerate;
      }
      return kOk;
    }

    if (replicate->parsed()) {
      const auto checks = replication_checks();
      out << render_replication(checks, format);
      const bool ok = std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass(); });
      return ok ? kOk : kMismatch;
    }

    if (aux->parsed()) {
      const DataMatrix data = load_csv_file(csv_path);
      const AuxiliaryMode mode = mode_name == "centered" ? AuxiliaryMode::Centered : AuxiliaryMode::NonCentered;
      data.index_of(column);
      if (mode == AuxiliaryMode::Centered && is_constant(data.column(column))) {
        throw Error(ErrorKind::ConstantRegressor, "column '" + column + "' is constant; centered fit is undefined");
      }
      if (regressors.empty()) regressors = default_regressors(data, column, mode == AuxiliaryMode::Centered);
      const FitResult fit = auxiliary_regression(data, column, regressors, mode);
      out << render_fit(fit, column, mode, format);
      return kOk;
    }

    if (montecarlo->parsed()) {
      const auto cfg = mc::load_config_file(config_path);
      out << render_summary(mc::run_scenario(cfg.spec, cfg.thresholds), format);
      return kOk;
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_code_for(e);
  }
  return kUsage;
}

}  // namespace ncvif
