#include "config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include <fmt/format.h>

#include "inflanow/errors.hpp"
#include "inflanow/version.hpp"

namespace inflanow::cli {
namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::stringstream in(value);
  for (std::string item; std::getline(in, item, ';');) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int to_int(const std::string& key, const std::string& value) {
  int v = 0;
  auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc() || p != value.data() + value.size()) {
    throw ConfigError(fmt::format("{}: expected an integer, got '{}'", key, value));
  }
  return v;
}

double to_double(const std::string& key, const std::string& value) {
  double v = 0;
  auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc() || p != value.data() + value.size()) {
    throw ConfigError(fmt::format("{}: expected a number, got '{}'", key, value));
  }
  return v;
}

MonthWindow to_window(const std::string& key, const std::string& value) {
  try {
    return MonthWindow::parse(value);
  } catch (const Error& e) {
    throw ConfigError(fmt::format("{}: {}", key, e.what()));
  }
}

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

const std::set<std::string> kPathKeys = {"cpi", "core_cpi", "food_cpi", "gasoline",
                                         "news_text", "news_probabilities", "labels",
                                         "scored", "news_index", "forecasts", "out"};
// Inputs that must exist when the configuration is loaded.
const std::set<std::string> kInputKeys = {"cpi", "core_cpi", "food_cpi", "gasoline",
                                          "news_text", "news_probabilities", "labels"};

}  // namespace

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = {
      "cpi", "core_cpi", "food_cpi", "gasoline",
      "news_text", "news_probabilities", "labels", "label_encoding",
      "lexicon", "baseline_up_terms", "baseline_down_terms", "baseline_odds_scale",
      "baseline_smoothing", "score_function", "max_rejected_fraction",
      "day_cutoff", "news_pi", "pct_window",
      "models", "train", "eval", "scheme", "lags", "covariance", "nowcast_month",
      "eval_target", "rmse_unit", "gw_variant", "gw_lag",
      "scored", "news_index", "forecasts", "out", "seed"};
  return keys;
}

Settings parse_settings(const std::string& text, const std::string& origin) {
  Settings out;
  std::istringstream in(text);
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(fmt::format("{}:{}: expected key = value", origin, line_no));
    }
    std::string key = trim(std::string_view(t).substr(0, eq));
    if (key.empty()) throw ConfigError(fmt::format("{}:{}: empty key", origin, line_no));
    out[key] = trim(std::string_view(t).substr(eq + 1));
  }
  return out;
}

Lexicon RunConfig::make_lexicon() const {
  return lexicon.empty() ? Lexicon::inflation_default() : Lexicon(lexicon);
}

std::string RunConfig::provenance() const {
  return fmt::format("inflanow {} config={}", kVersion, digest);
}

RunConfig load_config(const std::optional<fs::path>& path,
                      const std::vector<std::string>& overrides,
                      const std::optional<fs::path>& out) {
  Settings file;
  fs::path base = fs::current_path();
  if (path) {
    std::ifstream in(*path, std::ios::binary);
    if (!in) throw ConfigError(fmt::format("cannot open config file {}", path->string()));
    std::stringstream buf;
    buf << in.rdbuf();
    file = parse_settings(buf.str(), path->string());
    base = fs::absolute(*path).parent_path();
  }

  // Resolve paths before merging so that overrides keep their own base.
  auto resolve = [](const fs::path& root, const std::string& value) {
    fs::path p(value);
    return (p.is_absolute() ? p : root / p).lexically_normal();
  };
  Settings merged;
  std::map<std::string, fs::path> paths;
  for (const auto& [k, v] : file) {
    merged[k] = v;
    if (kPathKeys.count(k)) paths[k] = resolve(base, v);
  }
  for (const auto& o : overrides) {
    auto eq = o.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(fmt::format("override '{}' is not key=value", o));
    }
    std::string k = trim(std::string_view(o).substr(0, eq));
    std::string v = trim(std::string_view(o).substr(eq + 1));
    merged[k] = v;
    if (kPathKeys.count(k)) paths[k] = resolve(fs::current_path(), v);
  }
  if (out) {
    merged["out"] = out->string();
    paths["out"] = resolve(fs::current_path(), out->string());
  }

  const auto& known = config_keys();
  for (const auto& [k, v] : merged) {
    if (std::find(known.begin(), known.end(), k) == known.end()) {
      throw ConfigError(fmt::format("unknown config key '{}'", k));
    }
  }
  for (const auto& [k, p] : paths) {
    if (kInputKeys.count(k) && !merged[k].empty() && !fs::exists(p)) {
      throw ConfigError(fmt::format("{}: file not found: {}", k, p.string()));
    }
  }

  RunConfig cfg;
  auto has = [&](const char* k) { return merged.count(k) && !merged.at(k).empty(); };
  auto get = [&](const char* k) { return merged.at(k); };
  auto path_of = [&](const char* k) { return paths.at(k); };

  if (has("cpi")) cfg.cpi = path_of("cpi");
  if (has("core_cpi")) cfg.core_cpi = path_of("core_cpi");
  if (has("food_cpi")) cfg.food_cpi = path_of("food_cpi");
  if (has("gasoline")) cfg.gasoline = path_of("gasoline");
  if (has("news_text")) cfg.news_text = path_of("news_text");
  if (has("news_probabilities")) cfg.news_probabilities = path_of("news_probabilities");
  if (cfg.news_text && cfg.news_probabilities) {
    throw ConfigError("set only one of news_text and news_probabilities");
  }
  if (has("labels")) cfg.labels = path_of("labels");
  if (has("label_encoding")) cfg.label_encoding = parse_label_encoding(get("label_encoding"));
  if (has("lexicon")) cfg.lexicon = split_list(get("lexicon"));
  if (has("baseline_up_terms")) cfg.baseline.up_terms = split_list(get("baseline_up_terms"));
  if (has("baseline_down_terms")) cfg.baseline.down_terms = split_list(get("baseline_down_terms"));
  if (has("baseline_odds_scale")) {
    cfg.baseline.odds_scale = to_double("baseline_odds_scale", get("baseline_odds_scale"));
    if (!(cfg.baseline.odds_scale > 0)) throw ConfigError("baseline_odds_scale must be positive");
  }
  if (has("baseline_smoothing")) {
    cfg.baseline.smoothing = to_double("baseline_smoothing", get("baseline_smoothing"));
    if (!(cfg.baseline.smoothing >= 0)) throw ConfigError("baseline_smoothing must be >= 0");
  }
  if (has("score_function")) cfg.score_function = parse_score_function(get("score_function"));
  if (has("max_rejected_fraction")) {
    cfg.max_rejected_fraction = to_double("max_rejected_fraction", get("max_rejected_fraction"));
    if (cfg.max_rejected_fraction < 0 || cfg.max_rejected_fraction > 1) {
      throw ConfigError("max_rejected_fraction must lie in [0, 1]");
    }
  }

  if (has("day_cutoff")) {
    if (get("day_cutoff") == "none") {
      cfg.day_cutoff.reset();
    } else {
      int d = to_int("day_cutoff", get("day_cutoff"));
      if (d < 1 || d > 31) throw ConfigError("day_cutoff must be 1..31 or none");
      cfg.day_cutoff = d;
    }
  }
  if (has("news_pi")) cfg.news_pi = parse_news_pi_mode(get("news_pi"));
  if (has("pct_window")) {
    cfg.pct_window = to_int("pct_window", get("pct_window"));
    if (cfg.pct_window < 1) throw ConfigError("pct_window must be positive");
  }

  cfg.models = parse_model_list(has("models") ? get("models") : "fed,fed+news");
  cfg.train = to_window("train", has("train") ? get("train") : "2015-01:2019-12");
  cfg.eval = to_window("eval", has("eval") ? get("eval") : "2020-01:2023-12");
  if (!(cfg.train.last < cfg.eval.first)) {
    throw ConfigError(fmt::format("training window {} must end before evaluation window {}",
                                  cfg.train.to_string(), cfg.eval.to_string()));
  }
  if (has("scheme")) cfg.scheme = parse_backtest_scheme(get("scheme"));
  if (has("lags")) {
    cfg.lags = to_int("lags", get("lags"));
    if (cfg.lags < 1) throw ConfigError("lags must be positive");
  }
  if (has("covariance")) {
    if (get("covariance") == "classical") {
      cfg.ols.covariance = CovarianceType::classical;
    } else if (get("covariance") == "hc1") {
      cfg.ols.covariance = CovarianceType::hc1;
    } else {
      throw ConfigError(fmt::format("unknown covariance '{}' (expected classical|hc1)",
                                    get("covariance")));
    }
  }
  if (has("nowcast_month")) {
    try {
      cfg.nowcast_month = MonthKey::parse(get("nowcast_month"));
    } catch (const Error& e) {
      throw ConfigError(fmt::format("nowcast_month: {}", e.what()));
    }
  }

  if (has("eval_target")) cfg.evaluation.target = parse_eval_target(get("eval_target"));
  if (has("rmse_unit")) cfg.evaluation.unit = parse_rmse_unit(get("rmse_unit"));
  if (has("gw_variant")) cfg.evaluation.variant = parse_gw_variant(get("gw_variant"));
  if (has("gw_lag")) {
    cfg.evaluation.truncation_lag = to_int("gw_lag", get("gw_lag"));
    if (cfg.evaluation.truncation_lag < 0) throw ConfigError("gw_lag must be >= 0");
  }

  if (has("out")) cfg.out = path_of("out");
  if (has("scored")) cfg.scored_override = path_of("scored");
  if (has("news_index")) cfg.index_override = path_of("news_index");
  if (has("forecasts")) cfg.forecasts_override = path_of("forecasts");
  if (has("seed")) cfg.seed = static_cast<std::uint64_t>(to_int("seed", get("seed")));

  std::string canonical;
  for (const auto& [k, v] : merged) {
    if (k == "out") continue;
    canonical += k + '=' + v + '\n';
  }
  cfg.digest = fmt::format("{:016x}", fnv1a(canonical));
  return cfg;
}

}  // namespace inflanow::cli
