#include "ncvif/ols.hpp"

#include <string>

#include "ncvif/errors.hpp"

namespace ncvif {

Matrix design_matrix(const DataMatrix& data, const ModelSpec& spec) {
  spec.validate(data);
  const std::size_t n = data.n();
  const std::size_t p = spec.regressors.size() + (spec.intercept ? 1 : 0);
  if (n < p) {
    throw Error(ErrorKind::TooFewObservations,
                std::to_string(n) + " observations for " + std::to_string(p) + " design columns");
  }
  Eigen::MatrixXd x(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(p));
  Eigen::Index c = 0;
  if (spec.intercept) x.col(c++).setOnes();
  for (const auto& name : spec.regressors) {
    auto col = data.column(name);
    for (std::size_t r = 0; r < n; ++r) x(static_cast<Eigen::Index>(r), c) = col[r];
    ++c;
  }
  return Matrix(std::move(x));
}

FitResult fit(const DataMatrix& data, const ModelSpec& spec, double rank_tolerance) {
  const Matrix x = design_matrix(data, spec);
  const auto y = data.column(spec.dependent);
  const auto solution = solve_least_squares(x, y, rank_tolerance);

  FitResult out;
  out.intercept = spec.intercept;
  if (spec.intercept) out.coefficient_names.emplace_back(kInterceptName);
  out.coefficient_names.insert(out.coefficient_names.end(), spec.regressors.begin(), spec.regressors.end());
  out.coefficients = solution.coefficients;
  out.rank = solution.rank;
  out.rank_deficient = solution.rank_deficient;
  out.fitted = x.multiply(solution.coefficients);
  out.dependent_mean = mean(y);
  out.dependent_constant = is_constant(y);

  const std::size_t n = y.size();
  out.residuals.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double yi = y[i];
    const double fi = out.fitted[i];
    const double ei = yi - fi;
    out.residuals[i] = ei;
    out.rss += ei * ei;
    out.tss_uncentered += yi * yi;
    out.ess_uncentered += fi * fi;
    out.tss_centered += (yi - out.dependent_mean) * (yi - out.dependent_mean);
    out.ess_centered += (fi - out.dependent_mean) * (fi - out.dependent_mean);
  }
  return out;
}

double r2_noncentered(const FitResult& fit) {
  if (fit.tss_uncentered == 0.0) throw Error(ErrorKind::ZeroTotalSumOfSquares, "dependent is identically zero");
  return 1.0 - fit.rss / fit.tss_uncentered;
}

double r2_centered(const FitResult& fit) {
  if (!fit.intercept) throw Error(ErrorKind::NotCenteredModel, "centered R² requested for a fit without intercept");
  if (fit.dependent_constant || fit.tss_centered == 0.0) throw Error(ErrorKind::ZeroTotalSumOfSquares, "dependent is constant");
  return 1.0 - fit.rss / fit.tss_centered;
}

SumOfSquares sum_of_squares_report(const FitResult& fit) {
  return {fit.tss_uncentered, fit.ess_uncentered, fit.rss, fit.tss_centered, fit.ess_centered};
}

double sigma2_estimate(const FitResult& fit) {
  if (fit.n() <= fit.rank) throw Error(ErrorKind::TooFewObservations, "no residual degrees of freedom");
  return fit.rss / static_cast<double>(fit.n() - fit.rank);
}

}  // namespace ncvif
