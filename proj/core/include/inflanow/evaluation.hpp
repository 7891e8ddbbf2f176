#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "inflanow/month.hpp"
#include "inflanow/nowcaster.hpp"

namespace inflanow {

// sqrt(mean((forecast - realized)^2)). Throws DataError on empty or
// mismatched input.
double rmse(std::span<const double> forecasts, std::span<const double> realized);
double rmse(std::span<const double> errors);

enum class GWVariant {
  unconditional,     // H0: E[d_t] = 0
  conditional_lag1,  // H0: E[d_t | 1, d_{t-1}] = 0
};

GWVariant parse_gw_variant(std::string_view text);
std::string to_string(GWVariant variant);

struct GWResult {
  double statistic = 0.0;
  int df = 1;
  double p_value = 1.0;  // upper tail of chi-square(df)
  GWVariant variant = GWVariant::unconditional;
  std::size_t observations = 0;
  double mean_differential = 0.0;
};

// Giacomini-White test of equal predictive ability under squared-error loss,
// d_t = e_A(t)^2 - e_B(t)^2.
//
// unconditional: n * mean(d)^2 / s2, with s2 the Bartlett-kernel long-run
//   variance of d truncated at `truncation_lag` (0 = sample variance); df 1.
//   Needs n >= 8.
// conditional_lag1: instruments h_{t-1} = (1, d_{t-1}) and Z_t = h_{t-1} d_t
//   for t = 2..n; the statistic is T * R^2 (uncentered) of regressing the
//   constant 1 on Z_t, i.e. T * Zbar' (Z'Z / T)^-1 Zbar with T = n - 1; df 2.
//   Needs n >= 9.
//
// A differential with zero variance gives statistic 0 and p = 1 when it is
// identically zero, and DegenerateDifferentialError otherwise.
GWResult giacomini_white(std::span<const double> errors_a, std::span<const double> errors_b,
                         GWVariant variant = GWVariant::unconditional, int truncation_lag = 0);
GWResult giacomini_white_differential(std::span<const double> d,
                                      GWVariant variant = GWVariant::unconditional,
                                      int truncation_lag = 0);

// Which forecast column the evaluation scores.
enum class EvalTarget { annualized, monthly };
// Fraction divides percent errors by 100.
enum class RmseUnit { fraction, percent };

EvalTarget parse_eval_target(std::string_view text);
RmseUnit parse_rmse_unit(std::string_view text);
std::string to_string(EvalTarget target);
std::string to_string(RmseUnit unit);

struct EvaluationOptions {
  EvalTarget target = EvalTarget::annualized;
  RmseUnit unit = RmseUnit::fraction;
  GWVariant variant = GWVariant::unconditional;
  int truncation_lag = 0;
};

// Forecast errors of two series on their common months.
struct LossDifferential {
  std::vector<MonthKey> months;
  std::vector<double> errors_a;
  std::vector<double> errors_b;
  std::vector<double> d;
};

LossDifferential loss_differential(const ForecastSeries& a, const ForecastSeries& b,
                                   const EvaluationOptions& options = {});

struct ModelScore {
  std::string model;
  double rmse = 0.0;
  std::optional<GWResult> vs_benchmark;  // absent for the benchmark itself
};

struct PairwiseGW {
  std::string model_a;
  std::string model_b;
  GWResult result;
};

struct EvaluationReport {
  EvaluationOptions options;
  std::vector<MonthKey> months;  // scored months, common to every model
  std::vector<ModelScore> models;
  std::vector<PairwiseGW> pairs;  // every (i < j) pair, in input order
};

// Scores each series on the months all of them share. The first series is
// the benchmark that every other model's GW p-value refers to. Throws
// DataError when the series share no month or names repeat.
EvaluationReport evaluate(std::span<const ForecastSeries> forecasts,
                          const EvaluationOptions& options = {});

}  // namespace inflanow
