#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace inflanow {

enum class CovarianceType {
  classical,  // sigma^2 (X'X)^-1
  hc1,        // White sandwich with n / (n - k) small-sample scaling
};

struct OlsOptions {
  CovarianceType covariance = CovarianceType::classical;
  // A pivot |R_ii| <= rank_tolerance * |R_00| of the column-pivoted QR marks
  // the design as rank deficient.
  double rank_tolerance = 1e-10;
};

// Significance tiers: 3 for p < 0.01, 2 for p < 0.05, 1 for p < 0.1, else 0.
int significance_tier(double p_value);
// "***", "**", "*" or "".
std::string stars(int tier);
inline constexpr std::string_view kSignificanceNote = "*p<0.1; **p<0.05; ***p<0.01";

struct Coefficient {
  std::string name;
  double estimate = 0.0;
  double std_error = 0.0;
  double t_value = 0.0;
  double p_value = 0.0;  // two-sided, Student t with n - k degrees of freedom
  int tier = 0;
};

struct RegressionResult {
  std::vector<Coefficient> coefficients;
  std::size_t observations = 0;
  std::size_t df_residual = 0;
  double r_squared = 0.0;
  double adj_r_squared = 0.0;
  double residual_std_error = 0.0;
  // Joint test that every non-intercept slope is zero, always computed from
  // the classical variance. NaN for an intercept-only design.
  double f_statistic = 0.0;
  double f_p_value = 0.0;
  int f_tier = 0;
  CovarianceType covariance_type = CovarianceType::classical;
  Eigen::MatrixXd covariance;
  Eigen::VectorXd residuals;

  Eigen::VectorXd estimates() const;
  // Throws DataError for an unknown term.
  const Coefficient& coefficient(std::string_view name) const;
};

// Least squares fit of y on X. X must contain an all-ones intercept column;
// R^2 is centered. `names` labels the columns (defaults to x0, x1, ...).
//
// Throws DataError when rows(X) != len(y), rows <= cols, or there is no
// intercept column; SingularDesignError naming the dependent columns when X
// is rank deficient.
RegressionResult fit_ols(const Eigen::VectorXd& y, const Eigen::MatrixXd& X,
                         std::vector<std::string> names = {}, const OlsOptions& options = {});

}  // namespace inflanow
