#include "inflanow/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include <boost/math/distributions/chi_squared.hpp>
#include <Eigen/Dense>
#include <fmt/format.h>

#include "inflanow/errors.hpp"

namespace inflanow {
namespace {

double chi2_upper(double statistic, int df) {
  boost::math::chi_squared dist(df);
  return boost::math::cdf(boost::math::complement(dist, statistic));
}

double mean_of(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

GWResult unconditional(std::span<const double> d, int lag) {
  const std::size_t n = d.size();
  const double mean = mean_of(d);
  auto autocov = [&](std::size_t j) {
    double s = 0.0;
    for (std::size_t t = j; t < n; ++t) s += (d[t] - mean) * (d[t - j] - mean);
    return s / static_cast<double>(n);
  };
  double lrv = autocov(0);
  for (int j = 1; j <= lag; ++j) {
    lrv += 2.0 * (1.0 - j / (lag + 1.0)) * autocov(static_cast<std::size_t>(j));
  }

  GWResult r;
  r.variant = GWVariant::unconditional;
  r.df = 1;
  r.observations = n;
  r.mean_differential = mean;

  double scale = 0.0;
  for (double x : d) scale += x * x;
  scale /= static_cast<double>(n);
  if (scale == 0.0) return r;  // d identically zero
  if (lrv <= 1e-12 * scale) {
    throw DegenerateDifferentialError(fmt::format(
        "loss differential has zero variance but mean {}; are the forecasts duplicated?", mean));
  }
  r.statistic = static_cast<double>(n) * mean * mean / lrv;
  r.p_value = chi2_upper(r.statistic, r.df);
  return r;
}

GWResult conditional_lag1(std::span<const double> d) {
  const auto T = static_cast<Eigen::Index>(d.size() - 1);
  Eigen::MatrixXd Z(T, 2);
  for (Eigen::Index t = 0; t < T; ++t) {
    const double cur = d[static_cast<std::size_t>(t + 1)];
    const double lagged = d[static_cast<std::size_t>(t)];
    Z(t, 0) = cur;
    Z(t, 1) = lagged * cur;
  }

  GWResult r;
  r.variant = GWVariant::conditional_lag1;
  r.df = 2;
  r.observations = static_cast<std::size_t>(T);
  r.mean_differential = mean_of(d.subspan(1));
  if ((Z.array() == 0.0).all()) return r;

  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(T);
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(Z);
  const double lead = std::abs(qr.matrixR()(0, 0));
  if (std::abs(qr.matrixR()(1, 1)) <= 1e-10 * lead) {
    throw DegenerateDifferentialError(
        "conditional GW instruments are collinear; the loss differential is degenerate");
  }
  const Eigen::VectorXd fitted = Z * qr.solve(ones);
  // T * R^2 with R^2 = fitted'fitted / ones'ones = fitted'fitted / T.
  r.statistic = fitted.squaredNorm();
  r.p_value = chi2_upper(r.statistic, r.df);
  return r;
}

std::vector<double> errors_of(const ForecastSeries& f, const std::vector<MonthKey>& months,
                              const EvaluationOptions& options) {
  std::map<MonthKey, const ForecastRow*> by_month;
  for (const auto& row : f.rows) by_month[row.month] = &row;
  const double scale = options.unit == RmseUnit::fraction ? 0.01 : 1.0;
  std::vector<double> out;
  out.reserve(months.size());
  for (auto m : months) {
    const ForecastRow& row = *by_month.at(m);
    double e = options.target == EvalTarget::annualized
                   ? row.nowcast_annualized - row.realized_annualized
                   : row.nowcast - row.realized;
    out.push_back(e * scale);
  }
  return out;
}

std::vector<MonthKey> common_months(std::span<const ForecastSeries> forecasts) {
  std::vector<MonthKey> common;
  for (const auto& row : forecasts.front().rows) common.push_back(row.month);
  std::sort(common.begin(), common.end());
  common.erase(std::unique(common.begin(), common.end()), common.end());
  for (const auto& f : forecasts.subspan(1)) {
    std::set<MonthKey> have;
    for (const auto& row : f.rows) have.insert(row.month);
    std::erase_if(common, [&](MonthKey m) { return !have.contains(m); });
  }
  return common;
}

}  // namespace

double rmse(std::span<const double> errors) {
  if (errors.empty()) throw DataError("rmse of an empty sequence");
  double s = 0.0;
  for (double e : errors) s += e * e;
  return std::sqrt(s / static_cast<double>(errors.size()));
}

double rmse(std::span<const double> forecasts, std::span<const double> realized) {
  if (forecasts.size() != realized.size()) {
    throw DataError(fmt::format("rmse: {} forecasts for {} realized values", forecasts.size(),
                                realized.size()));
  }
  std::vector<double> errors(forecasts.size());
  for (std::size_t i = 0; i < errors.size(); ++i) errors[i] = forecasts[i] - realized[i];
  return rmse(errors);
}

GWVariant parse_gw_variant(std::string_view text) {
  if (text == "unconditional") return GWVariant::unconditional;
  if (text == "conditional-lag1") return GWVariant::conditional_lag1;
  throw ConfigError(
      fmt::format("unknown GW variant '{}' (expected unconditional|conditional-lag1)", text));
}

std::string to_string(GWVariant variant) {
  return variant == GWVariant::conditional_lag1 ? "conditional-lag1" : "unconditional";
}

GWResult giacomini_white_differential(std::span<const double> d, GWVariant variant,
                                      int truncation_lag) {
  if (truncation_lag < 0) {
    throw ConfigError(fmt::format("GW truncation lag must be >= 0, got {}", truncation_lag));
  }
  const std::size_t minimum = variant == GWVariant::unconditional ? 8 : 9;
  if (d.size() < minimum) {
    throw DataError(fmt::format("{} GW test needs at least {} observations, got {}",
                                to_string(variant), minimum, d.size()));
  }
  if (static_cast<std::size_t>(truncation_lag) >= d.size()) {
    throw ConfigError(fmt::format("GW truncation lag {} exceeds sample size {}", truncation_lag,
                                  d.size()));
  }
  return variant == GWVariant::unconditional ? unconditional(d, truncation_lag)
                                             : conditional_lag1(d);
}

GWResult giacomini_white(std::span<const double> errors_a, std::span<const double> errors_b,
                         GWVariant variant, int truncation_lag) {
  if (errors_a.size() != errors_b.size()) {
    throw DataError(fmt::format("GW test: {} errors for model A, {} for model B", errors_a.size(),
                                errors_b.size()));
  }
  std::vector<double> d(errors_a.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    d[i] = errors_a[i] * errors_a[i] - errors_b[i] * errors_b[i];
  }
  return giacomini_white_differential(d, variant, truncation_lag);
}

EvalTarget parse_eval_target(std::string_view text) {
  if (text == "annualized") return EvalTarget::annualized;
  if (text == "monthly") return EvalTarget::monthly;
  throw ConfigError(fmt::format("unknown evaluation target '{}' (expected annualized|monthly)", text));
}

RmseUnit parse_rmse_unit(std::string_view text) {
  if (text == "fraction") return RmseUnit::fraction;
  if (text == "percent") return RmseUnit::percent;
  throw ConfigError(fmt::format("unknown RMSE unit '{}' (expected fraction|percent)", text));
}

std::string to_string(EvalTarget target) {
  return target == EvalTarget::monthly ? "monthly" : "annualized";
}

std::string to_string(RmseUnit unit) { return unit == RmseUnit::percent ? "percent" : "fraction"; }

LossDifferential loss_differential(const ForecastSeries& a, const ForecastSeries& b,
                                   const EvaluationOptions& options) {
  const ForecastSeries pair[] = {a, b};
  LossDifferential out;
  out.months = common_months(pair);
  out.errors_a = errors_of(a, out.months, options);
  out.errors_b = errors_of(b, out.months, options);
  out.d.resize(out.months.size());
  for (std::size_t i = 0; i < out.d.size(); ++i) {
    out.d[i] = out.errors_a[i] * out.errors_a[i] - out.errors_b[i] * out.errors_b[i];
  }
  return out;
}

EvaluationReport evaluate(std::span<const ForecastSeries> forecasts,
                          const EvaluationOptions& options) {
  if (forecasts.empty()) throw DataError("nothing to evaluate");
  std::set<std::string> names;
  for (const auto& f : forecasts) {
    if (!names.insert(f.model).second) {
      throw DataError(fmt::format("model '{}' appears twice", f.model));
    }
  }

  EvaluationReport report;
  report.options = options;
  report.months = common_months(forecasts);
  if (report.months.empty()) throw DataError("forecast series share no month");

  std::vector<std::vector<double>> errors;
  for (const auto& f : forecasts) {
    errors.push_back(errors_of(f, report.months, options));
    report.models.push_back(ModelScore{f.model, rmse(errors.back()), std::nullopt});
  }
  for (std::size_t i = 0; i < forecasts.size(); ++i) {
    for (std::size_t j = i + 1; j < forecasts.size(); ++j) {
      auto gw = giacomini_white(errors[i], errors[j], options.variant, options.truncation_lag);
      report.pairs.push_back(PairwiseGW{forecasts[i].model, forecasts[j].model, gw});
      if (i == 0) report.models[j].vs_benchmark = gw;
    }
  }
  return report;
}

}  // namespace inflanow
