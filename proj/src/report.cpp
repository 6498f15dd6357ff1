#include "ncvif/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

#include "ncvif/datasets.hpp"
#include "ncvif/errors.hpp"

namespace ncvif {

using nlohmann::json;

namespace {

json json_number(double v) {
  if (std::isfinite(v)) return v;
  return json{{"value", nullptr}, {"infinite", true}};
}

json json_inflation(const std::optional<Inflation>& v) {
  if (!v) return nullptr;
  if (v->infinite) return json{{"value", nullptr}, {"infinite", true}};
  return v->value;
}

json json_optional(const std::optional<double>& v) { return v ? json_number(*v) : json(nullptr); }

std::string text_number(double v) { return std::isfinite(v) ? format_7g(v) : "inf"; }
std::string text_inflation(const std::optional<Inflation>& v) {
  if (!v) return "NA";
  return v->infinite ? "inf" : format_7g(v->value);
}
std::string text_optional(const std::optional<double>& v) { return v ? text_number(*v) : "NA"; }

std::string csv_number(double v) { return std::isfinite(v) ? format_shortest(v) : "inf"; }
std::string csv_inflation(const std::optional<Inflation>& v) {
  if (!v) return "NA";
  return v->infinite ? "inf" : format_shortest(v->value);
}
std::string csv_optional(const std::optional<double>& v) { return v ? csv_number(*v) : "NA"; }

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

std::string mode_name(AuxiliaryMode mode) { return mode == AuxiliaryMode::Centered ? "centered" : "noncentered"; }

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  throw Error(ErrorKind::InvalidArgument, "unknown format '" + name + "' (expected text, json or csv)");
}

std::string format_7g(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.7g", value);
  return buf;
}

std::string render_report(const CollinearityReport& report, const std::string& dataset, OutputFormat format) {
  if (format == OutputFormat::Json) {
    json rows = json::array();
    for (const auto& r : report.rows) {
      rows.push_back({
          {"variable", r.variable},
          {"mean", r.mean},
          {"coefficient_of_variation", json_number(r.coefficient_of_variation)},
          {"vif", json_inflation(r.vif)},
          {"vifnc", json_inflation(r.vifnc)},
          {"stewart_k2", json_inflation(r.stewart_k2)},
          {"nonessential_term", json_optional(r.nonessential_term)},
          {"rss_aux_centered", json_optional(r.rss_aux_centered)},
          {"rss_aux_noncentered", r.rss_aux_noncentered},
          {"flags",
           {{"essential_suspect", r.flags.essential_suspect}, {"nonessential_suspect", r.flags.nonessential_suspect}}},
      });
    }
    json doc = {
        {"dataset", dataset},
        {"model",
         {{"dependent", report.model.dependent},
          {"regressors", report.model.regressors},
          {"intercept", report.model.intercept},
          {"n", report.n}}},
        {"rows", rows},
        {"thresholds", {{"vif", report.thresholds.vif}, {"vifnc", report.thresholds.vifnc}}},
        {"caveats", report.caveats},
    };
    return doc.dump(2) + "\n";
  }

  if (format == OutputFormat::Csv) {
    std::string out =
        "variable,mean,coefficient_of_variation,vif,vifnc,stewart_k2,nonessential_term,rss_aux_centered,"
        "rss_aux_noncentered,essential_suspect,nonessential_suspect\n";
    for (const auto& r : report.rows) {
      out += join({r.variable, csv_number(r.mean), csv_number(r.coefficient_of_variation), csv_inflation(r.vif),
                   csv_inflation(r.vifnc), csv_inflation(r.stewart_k2), csv_optional(r.nonessential_term),
                   csv_optional(r.rss_aux_centered), csv_number(r.rss_aux_noncentered),
                   r.flags.essential_suspect ? "1" : "0", r.flags.nonessential_suspect ? "1" : "0"},
                  ",") +
             "\n";
    }
    return out;
  }

  std::ostringstream out;
  out << "dataset: " << dataset << "\n";
  out << "model: " << report.model.dependent << " ~ " << (report.model.intercept ? "1 + " : "")
      << join(report.model.regressors, " + ") << "  (n = " << report.n << ")\n";
  out << "thresholds: vif >= " << format_7g(report.thresholds.vif) << ", vifnc >= "
      << format_7g(report.thresholds.vifnc) << "\n\n";
  const std::vector<std::string> header = {"variable", "mean", "cv", "vif", "vifnc", "stewart_k2", "nonessential", "flags"};
  std::size_t name_width = 10;
  for (const auto& r : report.rows) name_width = std::max(name_width, r.variable.size() + 2);
  out << pad(header[0], name_width);
  for (std::size_t i = 1; i < header.size(); ++i) out << pad(header[i], 15);
  out << "\n";
  for (const auto& r : report.rows) {
    std::vector<std::string> flags;
    if (r.flags.essential_suspect) flags.emplace_back("essential?");
    if (r.flags.nonessential_suspect) flags.emplace_back("non-essential?");
    out << pad(r.variable, name_width) << pad(text_number(r.mean), 15) << pad(text_number(r.coefficient_of_variation), 15)
        << pad(text_inflation(r.vif), 15) << pad(text_inflation(r.vifnc), 15) << pad(text_inflation(r.stewart_k2), 15)
        << pad(text_optional(r.nonessential_term), 15) << (flags.empty() ? "-" : join(flags, ",")) << "\n";
  }
  out << "\n";
  for (const auto& c : report.caveats) out << "note: " << c << "\n";
  return out.str();
}

std::string render_fit(const FitResult& fit, const std::string& column, AuxiliaryMode mode, OutputFormat format) {
  const bool centered = mode == AuxiliaryMode::Centered;
  const double r2nc = r2_noncentered(fit);
  const std::optional<double> r2c = centered ? std::optional<double>(r2_centered(fit)) : std::nullopt;

  if (format == OutputFormat::Json) {
    json coefs = json::object();
    for (std::size_t i = 0; i < fit.coefficients.size(); ++i) coefs[fit.coefficient_names[i]] = fit.coefficients[i];
    json doc = {
        {"column", column},
        {"mode", mode_name(mode)},
        {"n", fit.n()},
        {"coefficients", coefs},
        {"rss", fit.rss},
        {"tss_uncentered", fit.tss_uncentered},
        {"tss_centered", fit.tss_centered},
        {"ess_uncentered", fit.ess_uncentered},
        {"ess_centered", fit.ess_centered},
        {"r2_noncentered", r2nc},
        {"rank_deficient", fit.rank_deficient},
    };
    if (r2c) doc["r2_centered"] = *r2c;
    return doc.dump(2) + "\n";
  }

  std::vector<std::pair<std::string, double>> fields;
  for (std::size_t i = 0; i < fit.coefficients.size(); ++i) {
    const auto& name = fit.coefficient_names[i];
    fields.emplace_back("coef_" + (name == kInterceptName ? std::string("intercept") : name), fit.coefficients[i]);
  }
  fields.emplace_back("rss", fit.rss);
  fields.emplace_back("tss_uncentered", fit.tss_uncentered);
  fields.emplace_back("tss_centered", fit.tss_centered);
  fields.emplace_back("ess_uncentered", fit.ess_uncentered);
  fields.emplace_back("ess_centered", fit.ess_centered);
  fields.emplace_back("r2_noncentered", r2nc);
  if (r2c) fields.emplace_back("r2_centered", *r2c);

  if (format == OutputFormat::Csv) {
    std::vector<std::string> names, values;
    for (const auto& [k, v] : fields) {
      names.push_back(k);
      values.push_back(csv_number(v));
    }
    return join(names, ",") + "\n" + join(values, ",") + "\n";
  }

  std::ostringstream out;
  out << "auxiliary regression of " << column << " (" << mode_name(mode) << ", n = " << fit.n() << ")\n";
  if (fit.rank_deficient) out << "warning: design is rank deficient at solver tolerance\n";
  for (const auto& [k, v] : fields) out << pad(k, 24) << text_number(v) << "\n";
  return out.str();
}

std::string render_summary(const mc::MonteCarloSummary& summary, OutputFormat format) {
  const auto& sc = summary.scenario;
  std::vector<const mc::ColumnSummary*> columns;
  if (sc.sweep) {
    for (const auto& c : summary.sweep) columns.push_back(&c);
  } else {
    columns.push_back(&summary.designated);
  }

  auto stats_json = [](const mc::DiagnosticStats& s) {
    return json{{"mean", s.mean},
                {"median", s.median},
                {"p90", s.p90},
                {"p95", s.p95},
                {"p99", s.p99},
                {"max", s.max},
                {"exceedance_rate", s.exceedance_rate},
                {"successful", s.successful},
                {"perfect_collinearity", s.perfect_collinearity},
                {"failed", s.failed}};
  };

  if (format == OutputFormat::Json) {
    json scenario = {{"kind", mc::kind_name(sc.kind)},
                     {"n", sc.n},
                     {"replications", sc.replications},
                     {"master_seed", sc.master_seed},
                     {"designated_column", mc::designated_column(sc.kind)}};
    if (auto* e = std::get_if<mc::Essential>(&sc.kind)) {
      scenario["lambda"] = e->lambda;
      scenario["noise_sd"] = e->noise_sd;
    } else if (auto* ne = std::get_if<mc::NonEssential>(&sc.kind)) {
      scenario["base"] = ne->base;
      scenario["noise_sd"] = ne->noise_sd;
    }
    json cols = json::array();
    for (const auto* c : columns) cols.push_back({{"column", c->column}, {"vif", stats_json(c->vif)}, {"vifnc", stats_json(c->vifnc)}});
    json doc = {{"scenario", scenario},
                {"thresholds", {{"vif", summary.thresholds.vif}, {"vifnc", summary.thresholds.vifnc}}},
                {"columns", cols}};
    return doc.dump(2) + "\n";
  }

  if (format == OutputFormat::Csv) {
    std::string out =
        "column,diagnostic,mean,median,p90,p95,p99,max,exceedance_rate,successful,perfect_collinearity,failed\n";
    for (const auto* c : columns) {
      for (const auto& [name, s] : {std::pair{"vif", &c->vif}, std::pair{"vifnc", &c->vifnc}}) {
        out += join({c->column, name, csv_number(s->mean), csv_number(s->median), csv_number(s->p90),
                     csv_number(s->p95), csv_number(s->p99), csv_number(s->max), csv_number(s->exceedance_rate),
                     std::to_string(s->successful), std::to_string(s->perfect_collinearity), std::to_string(s->failed)},
                    ",") +
               "\n";
      }
    }
    return out;
  }

  std::ostringstream out;
  out << "scenario: " << mc::kind_name(sc.kind) << ", n = " << sc.n << ", replications = " << sc.replications
      << ", master_seed = " << sc.master_seed << "\n";
  out << "thresholds: vif >= " << format_7g(summary.thresholds.vif) << ", vifnc >= "
      << format_7g(summary.thresholds.vifnc) << "\n\n";
  out << pad("column", 8) << pad("diag", 7);
  for (const char* h : {"mean", "median", "p90", "p95", "p99", "max", "exceed"}) out << pad(h, 14);
  out << "ok/perfect/failed\n";
  for (const auto* c : columns) {
    for (const auto& [name, s] : {std::pair{"vif", &c->vif}, std::pair{"vifnc", &c->vifnc}}) {
      out << pad(c->column, 8) << pad(name, 7);
      for (double v : {s->mean, s->median, s->p90, s->p95, s->p99, s->max, s->exceedance_rate}) out << pad(text_number(v), 14);
      out << s->successful << "/" << s->perfect_collinearity << "/" << s->failed << "\n";
    }
  }
  out << "\nnote: percentiles are over successful replications only; no canonical VIFnc threshold is implied\n";
  return out.str();
}

bool ReplicationCheck::pass() const {
  const double err = std::abs(computed - target);
  return relative ? err <= tolerance * std::abs(target) : err <= tolerance;
}

std::vector<ReplicationCheck> replication_checks() {
  const DataMatrix d = belsley();
  auto value = [](const Inflation& v) { return v.infinite ? std::numeric_limits<double>::infinity() : v.value; };
  auto vifv = [&](const std::string& j, const std::vector<std::string>& o) { return value(vif(d, j, o)); };
  auto vifncv = [&](const std::string& j, const std::vector<std::string>& o) { return value(vifnc(d, j, o)); };

  std::vector<ReplicationCheck> out = {
      {"VIFnc(X3 | X2)", 100032.1, vifncv("X3", {"X2"}), 5e-3, true},
      {"VIF(X3 | 1, X2)", 1.00, vifv("X3", {"X2"}), 0.01, false},
      {"VIF(X2 | 1, X3, X4)", 1.155364, vifv("X2", {"X3", "X4"}), 1e-3, true},
      {"VIF(X3 | 1, X2, X4)", 1.084168, vifv("X3", {"X2", "X4"}), 1e-3, true},
      {"VIF(X4 | 1, X2, X3)", 1.239559, vifv("X4", {"X2", "X3"}), 1e-3, true},
      {"VIFnc(X2 | X3, X4)", 100453.8, vifncv("X2", {"X3", "X4"}), 5e-3, true},
      {"VIFnc(X3 | X2, X4)", 100490.6, vifncv("X3", {"X2", "X4"}), 5e-3, true},
      {"VIFnc(X4 | X2, X3)", 1.773768, vifncv("X4", {"X2", "X3"}), 1e-3, true},
      {"VIF(X2 | 1, X4)", 1.143328, vifv("X2", {"X4"}), 1e-3, true},
      {"VIFnc(X2 | X4)", 1.765676, vifncv("X2", {"X4"}), 1e-3, true},
      {"VIF(X3 | 1, X4)", 1.072873, vifv("X3", {"X4"}), 1e-3, true},
      {"VIFnc(X3 | X4)", 1.766323, vifncv("X3", {"X4"}), 1e-3, true},
  };
  const auto trick = intercept_trick(d, {"X1", "X2", "X3"});
  const double targets[] = {400031.4, 199921.7, 200158.3};
  for (std::size_t i = 0; i < trick.size(); ++i) {
    out.push_back({"trick VIFnc(" + trick[i].first + ") over {X1, X2, X3}", targets[i], value(trick[i].second), 5e-3, true});
  }
  out.push_back({"trick VIFnc(X2) over {X1, X2}", 199921.7, value(intercept_trick(d, {"X1", "X2"})[1].second), 5e-3, true});
  out.push_back({"trick VIFnc(X3) over {X1, X3}", 200158.3, value(intercept_trick(d, {"X1", "X3"})[1].second), 5e-3, true});
  return out;
}

std::string render_replication(const std::vector<ReplicationCheck>& checks, OutputFormat format) {
  auto tol_text = [](const ReplicationCheck& c) {
    return c.relative ? format_7g(c.tolerance * 100.0) + "%" : "±" + format_7g(c.tolerance);
  };
  if (format == OutputFormat::Json) {
    json rows = json::array();
    for (const auto& c : checks) {
      rows.push_back({{"label", c.label},
                      {"target", c.target},
                      {"computed", json_number(c.computed)},
                      {"tolerance", c.tolerance},
                      {"relative", c.relative},
                      {"pass", c.pass()}});
    }
    return json{{"checks", rows}}.dump(2) + "\n";
  }
  if (format == OutputFormat::Csv) {
    std::string out = "label,target,computed,tolerance,relative,pass\n";
    for (const auto& c : checks) {
      out += "\"" + c.label + "\"," + csv_number(c.target) + "," + csv_number(c.computed) + "," +
             csv_number(c.tolerance) + "," + (c.relative ? "1" : "0") + "," + (c.pass() ? "1" : "0") + "\n";
    }
    return out;
  }
  std::ostringstream out;
  out << pad("quantity", 40) << pad("target", 14) << pad("computed", 14) << pad("tolerance", 12) << "result\n";
  std::size_t passed = 0;
  for (const auto& c : checks) {
    out << pad(c.label, 40) << pad(format_7g(c.target), 14) << pad(text_number(c.computed), 14) << pad(tol_text(c), 12)
        << (c.pass() ? "PASS" : "FAIL") << "\n";
    passed += c.pass() ? 1 : 0;
  }
  out << "\n" << passed << "/" << checks.size() << " checks passed\n";
  return out.str();
}

}  // namespace ncvif
