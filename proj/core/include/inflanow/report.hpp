#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "inflanow/evaluation.hpp"
#include "inflanow/model.hpp"
#include "inflanow/nowcaster.hpp"
#include "inflanow/ols.hpp"

namespace inflanow {

struct FittedModel {
  ModelSpec spec;
  RegressionResult result;
};

// Side-by-side regression table: one column per model, estimates with stars
// and standard errors in parentheses beneath, then Observations, R2,
// Adjusted R2, Residual Std. Error and F Statistic, then the significance note.
std::string format_regression_table(std::span<const FittedModel> models, int decimals = 3);

// model,term,estimate,std_error,t_value,p_value,stars
void write_regression_csv(std::ostream& out, std::span<const FittedModel> models,
                          const std::string& comment = {});
// model,observations,r_squared,adj_r_squared,residual_std_error,f_statistic,f_p_value,f_stars
void write_regression_stats_csv(std::ostream& out, std::span<const FittedModel> models,
                                const std::string& comment = {});

// date,model,nowcast,nowcast_annualized,realized,realized_annualized
void write_forecasts_csv(std::ostream& out, std::span<const ForecastSeries> forecasts,
                         const std::string& comment = {});
// Groups rows by model in order of first appearance. Throws ParseError.
std::vector<ForecastSeries> read_forecasts_csv(std::istream& in);

// "0.0407 (0.19)", with stars after the RMSE when the p-value earns them;
// "(--)" marks the benchmark.
std::string format_rmse_cell(double rmse, const std::optional<GWResult>& gw);

// RMSE column with the GW p-value against the benchmark in parentheses.
// A single-model report shows RMSE only.
std::string format_evaluation_table(const EvaluationReport& report);

// model,rmse,benchmark,gw_statistic,gw_df,gw_p_value,stars,display
void write_evaluation_csv(std::ostream& out, const EvaluationReport& report,
                          const std::string& comment = {});
// model_a,model_b,variant,statistic,df,p_value,mean_differential,observations
void write_gw_pairs_csv(std::ostream& out, const EvaluationReport& report,
                        const std::string& comment = {});

}  // namespace inflanow
