#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "inflanow/baseline.hpp"
#include "inflanow/evaluation.hpp"
#include "inflanow/index_builder.hpp"
#include "inflanow/lexicon.hpp"
#include "inflanow/model.hpp"
#include "inflanow/month.hpp"
#include "inflanow/nowcaster.hpp"
#include "inflanow/ols.hpp"
#include "inflanow/sentiment.hpp"

namespace inflanow::cli {

namespace fs = std::filesystem;

// Everything a command needs, resolved from a key = value file plus
// command-line overrides. Relative paths in the file are taken relative to
// the file's directory; paths given as overrides relative to the working
// directory.
struct RunConfig {
  // price levels; empty when not configured
  fs::path cpi, core_cpi, food_cpi, gasoline;

  // news inputs; exactly one of text / probabilities drives `score`
  std::optional<fs::path> news_text;
  std::optional<fs::path> news_probabilities;
  std::optional<fs::path> labels;
  LabelEncoding label_encoding = LabelEncoding::signed_unit;
  std::vector<std::string> lexicon;  // empty = built-in inflation lexicon
  BaselineParams baseline = BaselineParams::defaults();
  ScoreFunction score_function = ScoreFunction::polarity;
  double max_rejected_fraction = 0.10;

  // index
  std::optional<int> day_cutoff = 15;
  NewsPiMode news_pi = NewsPiMode::ratio;
  int pct_window = 12;

  // models
  std::vector<ModelSpec> models;
  MonthWindow train;
  MonthWindow eval;
  BacktestScheme scheme = BacktestScheme::fixed;
  int lags = 12;
  OlsOptions ols;
  std::optional<MonthKey> nowcast_month;

  // evaluation
  EvaluationOptions evaluation;

  fs::path out = "out";
  std::uint64_t seed = 0;

  // Intermediate files default to the output directory.
  std::optional<fs::path> scored_override, index_override, forecasts_override;
  fs::path scored_path() const { return scored_override.value_or(out / "scored.csv"); }
  fs::path index_path() const { return index_override.value_or(out / "news_index.csv"); }
  fs::path forecasts_path() const { return forecasts_override.value_or(out / "forecasts.csv"); }

  // FNV-1a 64 of the effective settings, excluding `out`.
  std::string digest;

  Lexicon make_lexicon() const;
  // "# inflanow <version> config=<digest>" without the leading "# ".
  std::string provenance() const;
};

// Raw settings in file order; later assignments of a key win.
using Settings = std::map<std::string, std::string>;

// Parses `key = value` lines; '#' starts a comment line. Throws ConfigError
// with the line number on malformed lines.
Settings parse_settings(const std::string& text, const std::string& origin = "config");

// Builds a RunConfig from the file at `path` (optional) and `overrides`
// ("key=value"). Throws ConfigError on unknown keys, bad values, invalid
// windows, or referenced files that do not exist.
RunConfig load_config(const std::optional<fs::path>& path,
                      const std::vector<std::string>& overrides = {},
                      const std::optional<fs::path>& out = std::nullopt);

// Keys accepted in a config file, in documentation order.
const std::vector<std::string>& config_keys();

}  // namespace inflanow::cli
