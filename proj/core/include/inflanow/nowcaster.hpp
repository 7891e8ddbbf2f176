#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "inflanow/model.hpp"
#include "inflanow/month.hpp"
#include "inflanow/ols.hpp"

namespace inflanow {

// Regresses CPI inflation on the spec's regressors over every month of
// `train`. Throws MissingDataError listing months where the target or any
// regressor is absent, and DataError when the window has fewer than
// columns + 2 months.
RegressionResult fit_model(const ModelSpec& spec, const SeriesBundle& data, MonthWindow train,
                           const OlsOptions& options = {});

// Nowcast of CPI inflation for `month` as known mid-month: price regressors
// are replaced by the mean of their `lags` preceding values, while NEWS
// enters at its value for `month` itself. `coefficients` follow
// spec.term_names().
double nowcast(const ModelSpec& spec, std::span<const double> coefficients,
               const SeriesBundle& data, MonthKey month, int lags = 12);
double nowcast(const ModelSpec& spec, const RegressionResult& fitted, const SeriesBundle& data,
               MonthKey month, int lags = 12);

enum class BacktestScheme {
  fixed,    // fit once on the training window
  rolling,  // refit before each month on the trailing window of equal length
};

BacktestScheme parse_backtest_scheme(std::string_view text);
std::string to_string(BacktestScheme scheme);

struct ForecastRow {
  MonthKey month;
  double nowcast = 0.0;
  double nowcast_annualized = 0.0;
  double realized = 0.0;
  double realized_annualized = 0.0;
};

struct ForecastSeries {
  std::string model;
  std::vector<ForecastRow> rows;
};

// Nowcasts every month of `eval` and pairs each with realized CPI inflation.
// Throws DataError unless train ends before eval starts.
ForecastSeries backtest(const ModelSpec& spec, const SeriesBundle& data, MonthWindow train,
                        MonthWindow eval, BacktestScheme scheme = BacktestScheme::fixed,
                        const OlsOptions& options = {});

}  // namespace inflanow
