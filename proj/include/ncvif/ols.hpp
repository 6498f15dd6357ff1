#pragma once

#include <string>
#include <vector>

#include "ncvif/data.hpp"
#include "ncvif/matrix.hpp"

namespace ncvif {

inline constexpr const char* kInterceptName = "(intercept)";

struct FitResult {
  std::vector<std::string> coefficient_names;  // "(intercept)" first when present
  Vector coefficients;
  Vector fitted;
  Vector residuals;
  double rss = 0.0;             // Σ e²
  double tss_uncentered = 0.0;  // Σ y²
  double tss_centered = 0.0;    // Σ (y − ȳ)²
  double ess_uncentered = 0.0;  // Σ ŷ²
  double ess_centered = 0.0;    // Σ (ŷ − ȳ)²
  double dependent_mean = 0.0;
  bool intercept = false;
  bool dependent_constant = false;
  std::size_t rank = 0;
  bool rank_deficient = false;

  std::size_t n() const { return fitted.size(); }
};

// Design matrix of `spec` over `data`; a ones column is prepended when
// spec.intercept is set.
Matrix design_matrix(const DataMatrix& data, const ModelSpec& spec);

FitResult fit(const DataMatrix& data, const ModelSpec& spec, double rank_tolerance = kDefaultRankTolerance);

// Σŷ²/Σy², valid with or without intercept.
double r2_noncentered(const FitResult& fit);
// 1 − RSS/Σ(y − ȳ)²; only defined for fits that carried an intercept.
double r2_centered(const FitResult& fit);

struct SumOfSquares {
  double tss_uncentered;
  double ess_uncentered;
  double rss;
  double tss_centered;
  double ess_centered;
};

SumOfSquares sum_of_squares_report(const FitResult& fit);

// σ̂² = RSS / (n − p). Not needed by any diagnostic, which all work in
// units of σ².
double sigma2_estimate(const FitResult& fit);

}  // namespace ncvif
