#include "ncvif/diagnostics.hpp"

#include <algorithm>
#include <cmath>

#include "ncvif/errors.hpp"

namespace ncvif {

namespace {

Inflation centered_from_fit(const FitResult& aux, const DiagnosticOptions& options) {
  return Inflation::from_ratio(aux.tss_centered, aux.rss, options.perfect_fit_epsilon);
}

Inflation noncentered_from_fit(const FitResult& aux, const DiagnosticOptions& options) {
  return Inflation::from_ratio(aux.tss_uncentered, aux.rss, options.perfect_fit_epsilon);
}

void require_non_constant(const DataMatrix& data, const std::string& target) {
  if (is_constant(data.column(target))) {
    throw Error(ErrorKind::ConstantRegressor, "column '" + target + "' is constant; centered VIF is undefined");
  }
}

void require_nonzero(const DataMatrix& data, const std::string& target) {
  auto x = data.column(target);
  if (std::all_of(x.begin(), x.end(), [](double v) { return v == 0.0; })) {
    throw Error(ErrorKind::ZeroColumn, "column '" + target + "' is identically zero");
  }
}

}  // namespace

Inflation Inflation::from_ratio(double total, double rss, double epsilon) {
  if (rss <= epsilon * total) return perfect();
  return {total / rss, false};
}

FitResult auxiliary_regression(const DataMatrix& data, const std::string& target,
                               const std::vector<std::string>& regressors, AuxiliaryMode mode,
                               const DiagnosticOptions& options) {
  ModelSpec spec{target, regressors, mode == AuxiliaryMode::Centered};
  return fit(data, spec, options.rank_tolerance);
}

std::vector<std::string> other_regressors(const ModelSpec& spec, const std::string& target) {
  std::vector<std::string> out;
  for (const auto& r : spec.regressors)
    if (r != target) out.push_back(r);
  return out;
}

Inflation vif(const DataMatrix& data, const std::string& target, const std::vector<std::string>& regressors,
              const DiagnosticOptions& options) {
  require_non_constant(data, target);
  return centered_from_fit(auxiliary_regression(data, target, regressors, AuxiliaryMode::Centered, options), options);
}

Inflation vifnc(const DataMatrix& data, const std::string& target, const std::vector<std::string>& regressors,
                const DiagnosticOptions& options) {
  require_nonzero(data, target);
  return noncentered_from_fit(auxiliary_regression(data, target, regressors, AuxiliaryMode::NonCentered, options),
                              options);
}

Inflation stewart_index(const DataMatrix& data, const std::string& target, const std::vector<std::string>& regressors,
                        bool with_constant, const DiagnosticOptions& options) {
  // Validated the same way as the auxiliary regression it mirrors.
  const Matrix others = design_matrix(data, ModelSpec{target, regressors, with_constant});
  require_nonzero(data, target);
  if (numerical_rank(others, options.rank_tolerance) < others.cols()) {
    throw Error(ErrorKind::RankDeficient, "regressors of '" + target + "' are numerically collinear");
  }
  const Matrix xj = Matrix::column(data.column(target));

  const double xtx = cross_product(xj, xj)(0, 0);
  const Eigen::MatrixXd gram = cross_product(others, others).eigen();
  const Eigen::VectorXd v = cross_product(others, xj).eigen().col(0);
  Eigen::LLT<Eigen::MatrixXd> chol(gram);
  if (chol.info() != Eigen::Success) {
    throw Error(ErrorKind::RankDeficient, "cross-product matrix of the regressors of '" + target + "' is singular");
  }
  const double projected = v.dot(chol.solve(v));
  return Inflation::from_ratio(xtx, xtx - projected, options.perfect_fit_epsilon);
}

StewartParts stewart_decomposition(const DataMatrix& data, const std::string& target,
                                   const std::vector<std::string>& regressors, const DiagnosticOptions& options) {
  require_non_constant(data, target);
  const FitResult aux = auxiliary_regression(data, target, regressors, AuxiliaryMode::Centered, options);
  const Inflation v = centered_from_fit(aux, options);
  if (v.infinite) throw Error(ErrorKind::PerfectCollinearity, "'" + target + "' is an exact combination of its regressors");
  const double n = static_cast<double>(aux.n());
  return {v, n * aux.dependent_mean * aux.dependent_mean / aux.rss, aux.dependent_mean, aux.rss};
}

std::vector<VarianceFactor> variance_factors(const DataMatrix& data, const ModelSpec& spec,
                                             const DiagnosticOptions& options) {
  const Matrix design = design_matrix(data, spec);
  if (numerical_rank(design, options.rank_tolerance) < design.cols()) {
    throw Error(ErrorKind::RankDeficient, "design matrix of the model is numerically singular");
  }
  std::vector<std::string> names;
  if (spec.intercept) names.emplace_back(kInterceptName);
  names.insert(names.end(), spec.regressors.begin(), spec.regressors.end());

  std::vector<VarianceFactor> out;
  out.reserve(names.size());
  for (std::size_t c = 0; c < design.cols(); ++c) {
    const Vector xj = design.column_values(c);
    const double dj = sum_of_squares(xj);
    double rss = dj;
    if (design.cols() > 1) {
      const auto sol = solve_least_squares(design.without_column(c), xj, options.rank_tolerance);
      rss = sol.residual_norm * sol.residual_norm;
    }
    VarianceFactor f;
    f.variable = names[c];
    f.var_over_sigma2 = 1.0 / rss;
    f.var_orthogonal_over_sigma2 = 1.0 / dj;
    f.ratio = f.var_over_sigma2 / f.var_orthogonal_over_sigma2;
    f.outside_decomposition = spec.intercept && c == 0;
    out.push_back(f);
  }
  return out;
}

std::vector<std::pair<std::string, Inflation>> intercept_trick(const DataMatrix& data,
                                                               const std::vector<std::string>& regressors,
                                                               const DiagnosticOptions& options) {
  if (regressors.size() < 2) throw Error(ErrorKind::InvalidArgument, "intercept trick needs at least 2 regressors");
  std::size_t ones = 0;
  for (const auto& r : regressors) {
    auto x = data.column(r);
    if (std::all_of(x.begin(), x.end(), [](double v) { return v == 1.0; })) ++ones;
  }
  if (ones == 0) throw Error(ErrorKind::NoConstantColumn, "no all-ones column among the regressors");
  if (ones > 1) throw Error(ErrorKind::InvalidArgument, "more than one all-ones column among the regressors");

  std::vector<std::pair<std::string, Inflation>> out;
  for (const auto& r : regressors) {
    std::vector<std::string> others;
    for (const auto& o : regressors)
      if (o != r) others.push_back(o);
    out.emplace_back(r, vifnc(data, r, others, options));
  }
  return out;
}

RowFlags classify(const CollinearityRow& row, const Thresholds& thresholds) {
  RowFlags f;
  f.essential_suspect = row.vif && row.vif->at_least(thresholds.vif);
  f.nonessential_suspect = row.vifnc.at_least(thresholds.vifnc) && !f.essential_suspect;
  return f;
}

CollinearityReport full_report(const DataMatrix& data, const ModelSpec& spec, const Thresholds& thresholds,
                               const DiagnosticOptions& options) {
  spec.validate(data);
  if (spec.regressors.size() < 2) throw Error(ErrorKind::InvalidArgument, "collinearity report needs at least 2 regressors");

  CollinearityReport report;
  report.model = spec;
  report.n = data.n();
  report.thresholds = thresholds;

  const double n = static_cast<double>(data.n());
  for (const auto& name : spec.regressors) {
    const auto others = other_regressors(spec, name);
    const auto x = data.column(name);

    CollinearityRow row;
    row.variable = name;
    row.mean = mean(x);
    double centered_ss = 0.0;
    for (double v : x) centered_ss += (v - row.mean) * (v - row.mean);
    row.coefficient_of_variation = row.mean == 0.0 ? std::numeric_limits<double>::infinity()
                                                   : std::sqrt(centered_ss / (n - 1.0)) / std::abs(row.mean);

    require_nonzero(data, name);
    const FitResult nc = auxiliary_regression(data, name, others, AuxiliaryMode::NonCentered, options);
    row.vifnc = noncentered_from_fit(nc, options);
    row.rss_aux_noncentered = nc.rss;

    if (!is_constant(x)) {
      const FitResult c = auxiliary_regression(data, name, others, AuxiliaryMode::Centered, options);
      row.vif = centered_from_fit(c, options);
      row.rss_aux_centered = c.rss;
      if (!row.vif->infinite) row.nonessential_term = n * row.mean * row.mean / c.rss;
    }

    try {
      row.stewart_k2 = stewart_index(data, name, others, spec.intercept, options);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::RankDeficient) throw;
    }

    row.flags = classify(row, thresholds);
    report.rows.push_back(std::move(row));
  }

  report.caveats = {
      "vif uses auxiliary regressions with an intercept; vifnc uses auxiliary regressions through the origin on the "
      "listed regressors only",
      std::string("stewart_k2 is computed over the model design") +
          (spec.intercept ? " including the ones column, so stewart_k2 = vif + nonessential_term"
                          : " without a ones column, so stewart_k2 = vifnc"),
      "no canonical VIFnc threshold is known; the vifnc threshold is provisional and flags are annotations, not "
      "verdicts",
      "the VIF threshold is a convention, not a derived bound",
  };
  return report;
}

}  // namespace ncvif
