#pragma once

#include "inflanow/month.hpp"
#include "inflanow/series.hpp"

namespace inflanow {

// What pct_change does with months whose base value P(t - window) is zero.
enum class ZeroBasePolicy {
  report,  // throw DomainError listing every such month
  skip,    // leave those months out of the output
};

// 100 * (P(t) / P(t - window) - 1) for every month t where both levels exist.
// Output is named after the input and carries SeriesUnit::percent.
MonthlySeries pct_change(const MonthlySeries& levels, int window = 12,
                         ZeroBasePolicy policy = ZeroBasePolicy::report);

// Compounds a per-period percent rate over twelve periods:
// 100 * ((1 + pct / 100)^12 - 1). Throws DomainError when pct <= -100.
double annualize(double pct);

// Inverse of annualize. Throws DomainError when pct_annualized <= -100.
double deannualize(double pct_annualized);

// Mean of the `lags` values strictly preceding `month`; the value at `month`
// itself is never read. Throws MissingDataError naming any absent lag.
double moving_average_predictor(const MonthlySeries& series, MonthKey month, int lags = 12);

}  // namespace inflanow
