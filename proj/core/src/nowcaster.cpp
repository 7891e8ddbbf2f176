#include "inflanow/nowcaster.hpp"

#include <fmt/format.h>

#include "inflanow/errors.hpp"
#include "inflanow/transforms.hpp"

namespace inflanow {

RegressionResult fit_model(const ModelSpec& spec, const SeriesBundle& data, MonthWindow train,
                           const OlsOptions& options) {
  const auto n = static_cast<Eigen::Index>(train.size());
  const auto k = static_cast<Eigen::Index>(spec.columns());
  if (n < k + 2) {
    throw DataError(fmt::format("model {}: training window {} has {} months, needs at least {}",
                                spec.label(), train.to_string(), n, k + 2));
  }

  std::vector<const MonthlySeries*> columns;
  for (auto r : spec.regressors) columns.push_back(&data.regressor(r));

  Eigen::VectorXd y(n);
  Eigen::MatrixXd X(n, k);
  std::vector<MonthKey> missing;
  Eigen::Index row = 0;
  for (MonthKey m = train.first; m <= train.last; m = m.next(), ++row) {
    auto target = data.cpi.find(m);
    bool complete = target.has_value();
    X(row, 0) = 1.0;
    for (Eigen::Index j = 1; j < k; ++j) {
      auto v = columns[static_cast<std::size_t>(j - 1)]->find(m);
      complete = complete && v.has_value();
      X(row, j) = v.value_or(0.0);
    }
    if (!complete) {
      missing.push_back(m);
      continue;
    }
    y(row) = *target;
  }
  if (!missing.empty()) {
    throw MissingDataError(
        fmt::format("model {} training window {}", spec.label(), train.to_string()),
        std::move(missing));
  }
  return fit_ols(y, X, spec.term_names(), options);
}

double nowcast(const ModelSpec& spec, std::span<const double> coefficients,
               const SeriesBundle& data, MonthKey month, int lags) {
  if (coefficients.size() != spec.columns()) {
    throw DataError(fmt::format("model {} takes {} coefficients, got {}", spec.label(),
                                spec.columns(), coefficients.size()));
  }
  double value = coefficients[0];
  for (std::size_t j = 0; j < spec.regressors.size(); ++j) {
    Regressor r = spec.regressors[j];
    const MonthlySeries& series = data.regressor(r);
    double x = 0.0;
    if (r == Regressor::news) {
      auto v = series.find(month);
      if (!v) throw MissingDataError(fmt::format("model {}: NEWS for nowcast", spec.label()), {month});
      x = *v;
    } else {
      x = moving_average_predictor(series, month, lags);
    }
    value += coefficients[j + 1] * x;
  }
  return value;
}

double nowcast(const ModelSpec& spec, const RegressionResult& fitted, const SeriesBundle& data,
               MonthKey month, int lags) {
  Eigen::VectorXd beta = fitted.estimates();
  return nowcast(spec, std::span<const double>(beta.data(), static_cast<std::size_t>(beta.size())),
                 data, month, lags);
}

BacktestScheme parse_backtest_scheme(std::string_view text) {
  if (text == "fixed") return BacktestScheme::fixed;
  if (text == "rolling") return BacktestScheme::rolling;
  throw ConfigError(fmt::format("unknown backtest scheme '{}' (expected fixed|rolling)", text));
}

std::string to_string(BacktestScheme scheme) {
  return scheme == BacktestScheme::rolling ? "rolling" : "fixed";
}

ForecastSeries backtest(const ModelSpec& spec, const SeriesBundle& data, MonthWindow train,
                        MonthWindow eval, BacktestScheme scheme, const OlsOptions& options) {
  if (!(train.last < eval.first)) {
    throw DataError(fmt::format("training window {} must end before evaluation window {} starts",
                                train.to_string(), eval.to_string()));
  }

  ForecastSeries out{spec.label(), {}};
  out.rows.reserve(eval.size());
  const int length = static_cast<int>(train.size());
  RegressionResult fitted;
  if (scheme == BacktestScheme::fixed) fitted = fit_model(spec, data, train, options);

  for (MonthKey m = eval.first; m <= eval.last; m = m.next()) {
    if (scheme == BacktestScheme::rolling) {
      fitted = fit_model(spec, data, MonthWindow{m.plus(-length), m.prev()}, options);
    }
    ForecastRow row;
    row.month = m;
    row.nowcast = nowcast(spec, fitted, data, m);
    row.realized = data.cpi.at(m);
    row.nowcast_annualized = annualize(row.nowcast);
    row.realized_annualized = annualize(row.realized);
    out.rows.push_back(row);
  }
  return out;
}

}  // namespace inflanow
