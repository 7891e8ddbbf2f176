#include "inflanow/transforms.hpp"

#include <cmath>

#include <fmt/format.h>

#include "inflanow/errors.hpp"

namespace inflanow {

MonthlySeries pct_change(const MonthlySeries& levels, int window, ZeroBasePolicy policy) {
  if (window <= 0) throw ConfigError(fmt::format("pct_change window must be positive, got {}", window));

  std::vector<MonthlySeries::Point> out;
  std::vector<MonthKey> zero_base;
  for (const auto& [month, level] : levels) {
    auto base = levels.find(month.plus(-window));
    if (!base) continue;
    if (*base == 0.0) {
      zero_base.push_back(month);
      continue;
    }
    out.emplace_back(month, 100.0 * (level / *base - 1.0));
  }
  if (!zero_base.empty() && policy == ZeroBasePolicy::report) {
    throw DomainError(fmt::format("series '{}': zero base level {} months earlier for [{}]",
                                  levels.name(), window, join_months(zero_base)),
                      zero_base);
  }
  return MonthlySeries(levels.name(), SeriesUnit::percent, std::move(out));
}

double annualize(double pct) {
  double growth = pct / 100.0 + 1.0;
  if (!(growth > 0.0)) {
    throw DomainError(fmt::format("cannot annualize {}%: rate must exceed -100%", pct));
  }
  // expm1/log1p keep precision for small rates; the extended intermediate
  // keeps the result close to correctly rounded near -100%.
  long double r = static_cast<long double>(pct) / 100.0L;
  return static_cast<double>(100.0L * std::expm1(12.0L * std::log1p(r)));
}

double deannualize(double pct_annualized) {
  double growth = pct_annualized / 100.0 + 1.0;
  if (!(growth > 0.0)) {
    throw DomainError(
        fmt::format("cannot deannualize {}%: rate must exceed -100%", pct_annualized));
  }
  long double r = static_cast<long double>(pct_annualized) / 100.0L;
  return static_cast<double>(100.0L * std::expm1(std::log1p(r) / 12.0L));
}

double moving_average_predictor(const MonthlySeries& series, MonthKey month, int lags) {
  if (lags <= 0) throw ConfigError(fmt::format("lag count must be positive, got {}", lags));

  std::vector<MonthKey> missing;
  double sum = 0.0;
  // Chronological order, oldest lag first.
  for (int k = lags; k >= 1; --k) {
    MonthKey lag = month.plus(-k);
    if (auto v = series.find(lag)) {
      sum += *v;
    } else {
      missing.push_back(lag);
    }
  }
  if (!missing.empty()) {
    throw MissingDataError(
        fmt::format("series '{}': {}-month average before {}", series.name(), lags,
                    month.to_string()),
        std::move(missing));
  }
  return sum / lags;
}

}  // namespace inflanow
