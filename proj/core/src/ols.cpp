#include "inflanow/ols.hpp"

#include <cmath>
#include <limits>

#include <boost/math/distributions/fisher_f.hpp>
#include <boost/math/distributions/students_t.hpp>
#include <fmt/format.h>

#include "inflanow/errors.hpp"

namespace inflanow {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double two_sided_t_p(double t, double df) {
  if (std::isnan(t)) return kNaN;
  if (std::isinf(t)) return 0.0;
  boost::math::students_t dist(df);
  return 2.0 * boost::math::cdf(boost::math::complement(dist, std::abs(t)));
}

double f_upper_p(double f, double df1, double df2) {
  if (std::isnan(f)) return kNaN;
  if (std::isinf(f)) return 0.0;
  boost::math::fisher_f dist(df1, df2);
  return boost::math::cdf(boost::math::complement(dist, std::max(f, 0.0)));
}

bool is_intercept(const Eigen::MatrixXd& X, Eigen::Index col) {
  return (X.col(col).array() == 1.0).all();
}

}  // namespace

int significance_tier(double p_value) {
  if (!(p_value >= 0.0)) return 0;
  if (p_value < 0.01) return 3;
  if (p_value < 0.05) return 2;
  if (p_value < 0.1) return 1;
  return 0;
}

std::string stars(int tier) { return std::string(static_cast<std::size_t>(std::max(tier, 0)), '*'); }

Eigen::VectorXd RegressionResult::estimates() const {
  Eigen::VectorXd b(static_cast<Eigen::Index>(coefficients.size()));
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    b(static_cast<Eigen::Index>(i)) = coefficients[i].estimate;
  }
  return b;
}

const Coefficient& RegressionResult::coefficient(std::string_view name) const {
  for (const auto& c : coefficients) {
    if (c.name == name) return c;
  }
  throw DataError(fmt::format("no coefficient named '{}'", name));
}

RegressionResult fit_ols(const Eigen::VectorXd& y, const Eigen::MatrixXd& X,
                         std::vector<std::string> names, const OlsOptions& options) {
  const Eigen::Index n = X.rows();
  const Eigen::Index k = X.cols();
  if (y.size() != n) {
    throw DataError(fmt::format("design has {} rows but response has {} values", n, y.size()));
  }
  if (k == 0) throw DataError("design has no columns");
  if (n <= k) {
    throw DataError(fmt::format("{} observations are too few for {} coefficients", n, k));
  }
  if (names.empty()) {
    for (Eigen::Index j = 0; j < k; ++j) names.push_back(fmt::format("x{}", j));
  }
  if (static_cast<Eigen::Index>(names.size()) != k) {
    throw DataError(fmt::format("{} column names for {} columns", names.size(), k));
  }
  bool has_intercept = false;
  for (Eigen::Index j = 0; j < k && !has_intercept; ++j) has_intercept = is_intercept(X, j);
  if (!has_intercept) throw DataError("design has no all-ones intercept column");

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(X);
  const Eigen::MatrixXd R = qr.matrixR().topLeftCorner(k, k).triangularView<Eigen::Upper>();
  const double lead = std::abs(R(0, 0));
  Eigen::Index rank = 0;
  while (rank < k && std::abs(R(rank, rank)) > options.rank_tolerance * lead) ++rank;
  if (rank < k) {
    std::vector<std::string> dependent;
    for (Eigen::Index i = rank; i < k; ++i) {
      dependent.push_back(names[static_cast<std::size_t>(qr.colsPermutation().indices()(i))]);
    }
    throw SingularDesignError(std::move(dependent));
  }

  const Eigen::VectorXd beta = qr.solve(y);
  RegressionResult result;
  result.residuals = y - X * beta;
  result.observations = static_cast<std::size_t>(n);
  result.df_residual = static_cast<std::size_t>(n - k);
  const double df = static_cast<double>(n - k);

  // (X'X)^-1 = P R^-1 R^-T P'
  const Eigen::MatrixXd R_inv =
      R.triangularView<Eigen::Upper>().solve(Eigen::MatrixXd::Identity(k, k));
  const auto& perm = qr.colsPermutation();
  const Eigen::MatrixXd xtx_inv = perm * (R_inv * R_inv.transpose()) * perm.transpose();

  const double ssr = result.residuals.squaredNorm();
  const double sigma2 = ssr / df;
  if (options.covariance == CovarianceType::hc1) {
    const Eigen::MatrixXd meat =
        X.transpose() * result.residuals.array().square().matrix().asDiagonal() * X;
    result.covariance = xtx_inv * meat * xtx_inv * (static_cast<double>(n) / df);
  } else {
    result.covariance = sigma2 * xtx_inv;
  }
  result.covariance_type = options.covariance;

  for (Eigen::Index j = 0; j < k; ++j) {
    Coefficient c;
    c.name = names[static_cast<std::size_t>(j)];
    c.estimate = beta(j);
    c.std_error = std::sqrt(std::max(result.covariance(j, j), 0.0));
    c.t_value = c.estimate / c.std_error;
    c.p_value = two_sided_t_p(c.t_value, df);
    c.tier = significance_tier(c.p_value);
    result.coefficients.push_back(std::move(c));
  }

  const double sst = (y.array() - y.mean()).square().sum();
  result.r_squared = 1.0 - ssr / sst;
  result.adj_r_squared = 1.0 - (1.0 - result.r_squared) * static_cast<double>(n - 1) / df;
  result.residual_std_error = std::sqrt(sigma2);
  if (k > 1) {
    result.f_statistic = ((sst - ssr) / static_cast<double>(k - 1)) / sigma2;
    result.f_p_value = f_upper_p(result.f_statistic, static_cast<double>(k - 1), df);
  } else {
    result.f_statistic = kNaN;
    result.f_p_value = kNaN;
  }
  result.f_tier = significance_tier(result.f_p_value);
  return result;
}

}  // namespace inflanow
