#pragma once

#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncvif/data.hpp"
#include "ncvif/ols.hpp"

namespace ncvif {

enum class AuxiliaryMode { Centered, NonCentered };

struct DiagnosticOptions {
  // An auxiliary fit with R² >= 1 - perfect_fit_epsilon is reported as
  // perfectly collinear.
  double perfect_fit_epsilon = 1e-12;
  double rank_tolerance = kDefaultRankTolerance;
};

// A variance inflation value, or the perfect-collinearity sentinel.
struct Inflation {
  double value = 1.0;
  bool infinite = false;

  static Inflation from_ratio(double total, double rss, double epsilon);
  static Inflation perfect() { return {std::numeric_limits<double>::infinity(), true}; }
  bool at_least(double threshold) const { return infinite || value >= threshold; }
};

// Regression of column `target` on `regressors`, with an intercept iff
// mode is Centered.
FitResult auxiliary_regression(const DataMatrix& data, const std::string& target,
                               const std::vector<std::string>& regressors, AuxiliaryMode mode,
                               const DiagnosticOptions& options = {});

// All regressors of `spec` other than `target`.
std::vector<std::string> other_regressors(const ModelSpec& spec, const std::string& target);

// Centered VIF, 1/(1 − R²) of the auxiliary regression with intercept.
Inflation vif(const DataMatrix& data, const std::string& target, const std::vector<std::string>& regressors,
              const DiagnosticOptions& options = {});

// Non-centered VIF, 1/(1 − R²nc) of the auxiliary regression through the
// origin on exactly the listed regressors.
Inflation vifnc(const DataMatrix& data, const std::string& target, const std::vector<std::string>& regressors,
                const DiagnosticOptions& options = {});

// Stewart's k² = XⱼᵀXⱼ / (XⱼᵀXⱼ − XⱼᵀX₋ⱼ(X₋ⱼᵀX₋ⱼ)⁻¹X₋ⱼᵀXⱼ), evaluated from
// cross products and a Cholesky solve (no QR). X₋ⱼ is the listed
// regressors, plus a ones column when `with_constant` is set.
Inflation stewart_index(const DataMatrix& data, const std::string& target, const std::vector<std::string>& regressors,
                        bool with_constant = false, const DiagnosticOptions& options = {});

struct StewartParts {
  Inflation vif_part;
  double nonessential_part;  // n·X̄ⱼ²/RSSⱼ with RSSⱼ from the centered auxiliary fit
  double mean;
  double rss_centered;

  double total() const { return vif_part.value + nonessential_part; }
};

// k² = vif + n·X̄ⱼ²/RSSⱼ. The sum matches stewart_index over the regressors
// plus a constant column.
StewartParts stewart_decomposition(const DataMatrix& data, const std::string& target,
                                   const std::vector<std::string>& regressors, const DiagnosticOptions& options = {});

struct VarianceFactor {
  std::string variable;
  double var_over_sigma2;             // var(β̂ⱼ)/σ² = 1/RSSⱼ
  double var_orthogonal_over_sigma2;  // 1/(XⱼᵀXⱼ)
  double ratio;
  bool outside_decomposition = false;  // intercept position
};

// One entry per design column (intercept first when spec.intercept).
std::vector<VarianceFactor> variance_factors(const DataMatrix& data, const ModelSpec& spec,
                                             const DiagnosticOptions& options = {});

// VIFnc of every regressor in a no-intercept model that carries an explicit
// all-ones column among `regressors`.
std::vector<std::pair<std::string, Inflation>> intercept_trick(const DataMatrix& data,
                                                               const std::vector<std::string>& regressors,
                                                               const DiagnosticOptions& options = {});

struct Thresholds {
  double vif = 10.0;
  double vifnc = 10.0;
};

struct RowFlags {
  bool essential_suspect = false;
  bool nonessential_suspect = false;
};

struct CollinearityRow {
  std::string variable;
  double mean = 0.0;
  double coefficient_of_variation = 0.0;  // sd/|mean|; +inf when mean is 0
  std::optional<Inflation> vif;           // empty when the column is constant
  Inflation vifnc;
  std::optional<Inflation> stewart_k2;    // over the model design; empty if X₋ⱼ is singular
  std::optional<double> nonessential_term;
  std::optional<double> rss_aux_centered;
  double rss_aux_noncentered = 0.0;
  RowFlags flags;
};

struct CollinearityReport {
  ModelSpec model;
  std::size_t n = 0;
  Thresholds thresholds;
  std::vector<CollinearityRow> rows;
  std::vector<std::string> caveats;
};

RowFlags classify(const CollinearityRow& row, const Thresholds& thresholds);

CollinearityReport full_report(const DataMatrix& data, const ModelSpec& spec, const Thresholds& thresholds = {},
                               const DiagnosticOptions& options = {});

}  // namespace ncvif
