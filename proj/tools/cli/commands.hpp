#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "config.hpp"
#include "inflanow/evaluation.hpp"
#include "inflanow/model.hpp"
#include "inflanow/nowcaster.hpp"

namespace inflanow::cli {

// Every command reads its inputs through `cfg`, writes files under cfg.out,
// prints a short summary to `log` and warnings to `warn`. Failures are
// reported as inflanow::Error subclasses.

// news text (lexicon filter + baseline classifier) or per-article
// probabilities -> probabilities.csv, scored.csv, rejections.csv
// [+ classification.csv when gold labels are configured]
void cmd_score(const RunConfig& cfg, std::ostream& log, std::ostream& warn);

// scored.csv -> news_index.csv + news_index_meta.csv
void cmd_build_index(const RunConfig& cfg, std::ostream& log, std::ostream& warn);

// -> regression.txt, regression.csv, regression_stats.csv
void cmd_fit(const RunConfig& cfg, const std::vector<ModelSpec>& specs, std::ostream& log);

// -> nowcast.csv for `month` (default: nowcast_month, else the last evaluation month)
void cmd_nowcast(const RunConfig& cfg, const std::vector<ModelSpec>& specs,
                 std::optional<MonthKey> month, std::ostream& log);

// -> forecasts.csv, then the same report files as cmd_evaluate
void cmd_backtest(const RunConfig& cfg, const std::vector<ModelSpec>& specs, std::ostream& log);

// forecasts.csv -> evaluation.txt, evaluation.csv, gw_pairs.csv. `models`
// selects and orders the series (first = benchmark); empty keeps file order.
void cmd_evaluate(const RunConfig& cfg, const std::vector<std::string>& models, std::ostream& log);

// Price and NEWS inflation rates for `specs`; NEWS is only loaded when a spec uses it.
SeriesBundle load_bundle(const RunConfig& cfg, const std::vector<ModelSpec>& specs);

}  // namespace inflanow::cli
