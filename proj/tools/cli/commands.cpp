#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

#include "inflanow/csv.hpp"
#include "inflanow/errors.hpp"
#include "inflanow/index_builder.hpp"
#include "inflanow/metrics.hpp"
#include "inflanow/news_io.hpp"
#include "inflanow/report.hpp"
#include "inflanow/series_io.hpp"
#include "inflanow/transforms.hpp"

namespace inflanow::cli {
namespace {

std::ifstream open_input(const fs::path& path, const std::string& hint = {}) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw DataError(fmt::format("cannot open {}{}", path.string(), hint.empty() ? "" : "; " + hint));
  }
  return in;
}

template <typename Fn>
void write_file(const fs::path& path, Fn&& body) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ostringstream buf;
  body(buf);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError(fmt::format("cannot write {}", path.string()));
  out << buf.str();
  if (!out) throw DataError(fmt::format("error writing {}", path.string()));
}

template <typename Row>
void check_rejections(const Loaded<Row>& loaded, const RunConfig& cfg, const fs::path& source) {
  if (loaded.rejected_fraction() > cfg.max_rejected_fraction) {
    throw DataError(fmt::format("{}: {} of {} rows rejected, above the {:g}% limit (first: line {}: {})",
                                source.string(), loaded.rejected.size(), loaded.total(),
                                100 * cfg.max_rejected_fraction, loaded.rejected.front().line,
                                loaded.rejected.front().reason));
  }
}

const fs::path& require_path(const fs::path& p, const char* key) {
  if (p.empty()) throw ConfigError(fmt::format("config key '{}' is not set", key));
  return p;
}

void write_classification(const RunConfig& cfg, const std::vector<ScoredArticle>& scored,
                          std::ostream& log, std::ostream& warn) {
  auto in = open_input(*cfg.labels);
  auto gold = read_labels(in, cfg.label_encoding);
  check_rejections(gold, cfg, *cfg.labels);
  std::map<std::string, Label> by_id;
  for (const auto& g : gold.rows) by_id[g.id] = g.label;

  std::vector<Label> pred, truth;
  for (const auto& a : scored) {
    auto it = by_id.find(a.id);
    if (it == by_id.end()) continue;
    pred.push_back(argmax_score(a.probs));
    truth.push_back(it->second);
  }
  if (pred.empty()) {
    warn << "warning: no scored article has a gold label; classification.csv not written\n";
    return;
  }
  auto report = classification_report(pred, truth);
  write_file(cfg.out / "classification.csv", [&](std::ostream& out) {
    out << "# " << cfg.provenance() << '\n';
    out << "class,precision,recall,f1,support\n";
    const char* names[] = {"down", "neutral", "up"};
    for (std::size_t c = 0; c < 3; ++c) {
      out << names[c] << ',' << csv::format_double(report.precision[c]) << ','
          << csv::format_double(report.recall[c]) << ',' << csv::format_double(report.f1[c]) << ','
          << report.support[c] << '\n';
    }
    out << "weighted,,," << csv::format_double(report.weighted_f1) << ',' << pred.size() << '\n';
  });
  log << fmt::format("classification: {} labeled articles, weighted F1 {:.6f}\n", pred.size(),
                     report.weighted_f1);
}

std::vector<FittedModel> fit_all(const RunConfig& cfg, const std::vector<ModelSpec>& specs,
                                 const SeriesBundle& data) {
  std::vector<FittedModel> out;
  for (const auto& spec : specs) out.push_back({spec, fit_model(spec, data, cfg.train, cfg.ols)});
  return out;
}

void write_evaluation(const RunConfig& cfg, const std::vector<ForecastSeries>& forecasts,
                      std::ostream& log) {
  auto report = evaluate(forecasts, cfg.evaluation);
  auto table = format_evaluation_table(report);
  write_file(cfg.out / "evaluation.txt",
             [&](std::ostream& out) { out << "# " << cfg.provenance() << '\n' << table; });
  write_file(cfg.out / "evaluation.csv",
             [&](std::ostream& out) { write_evaluation_csv(out, report, cfg.provenance()); });
  write_file(cfg.out / "gw_pairs.csv",
             [&](std::ostream& out) { write_gw_pairs_csv(out, report, cfg.provenance()); });
  log << table;
}

}  // namespace

void cmd_score(const RunConfig& cfg, std::ostream& log, std::ostream& warn) {
  std::vector<ScoredArticle> scored;
  std::vector<Rejection> rejected;
  std::size_t total = 0;
  fs::path source;

  if (cfg.news_probabilities) {
    source = *cfg.news_probabilities;
    auto in = open_input(source);
    auto loaded = read_probabilities(in);
    rejected = loaded.rejected;
    total = loaded.total();
    for (auto& r : loaded.rows) {
      scored.push_back(ScoredArticle::make(std::move(r.id), r.date, r.probs, cfg.score_function));
    }
    write_file(cfg.out / "rejections.csv",
               [&](std::ostream& out) { write_rejections(out, rejected, cfg.provenance()); });
    check_rejections(loaded, cfg, source);
  } else if (cfg.news_text) {
    source = *cfg.news_text;
    auto in = open_input(source);
    auto loaded = read_news_text(in);
    rejected = loaded.rejected;
    total = loaded.total();
    write_file(cfg.out / "rejections.csv",
               [&](std::ostream& out) { write_rejections(out, rejected, cfg.provenance()); });
    check_rejections(loaded, cfg, source);
    auto lexicon = cfg.make_lexicon();
    for (auto& r : loaded.rows) {
      if (!lexicon_filter(r.text, lexicon)) continue;
      auto probs = baseline_classify(r.text, cfg.baseline);
      scored.push_back(ScoredArticle::make(std::move(r.id), r.date, probs, cfg.score_function));
    }
    if (scored.empty()) {
      warn << fmt::format("warning: no article in {} matched the lexicon; scored set is empty\n",
                          source.string());
    }
  } else {
    throw ConfigError("score needs news_text or news_probabilities in the config");
  }

  for (const auto& r : rejected) {
    warn << fmt::format("warning: {}:{}: {}\n", source.string(), r.line, r.reason);
  }
  write_file(cfg.out / "probabilities.csv",
             [&](std::ostream& out) { write_probabilities(out, scored, cfg.provenance()); });
  write_file(cfg.scored_path(),
             [&](std::ostream& out) { write_scored(out, scored, cfg.provenance()); });
  log << fmt::format("score: {} rows read, {} rejected, {} scored ({}) -> {}\n", total,
                     rejected.size(), scored.size(), to_string(cfg.score_function),
                     cfg.scored_path().string());
  if (cfg.labels) write_classification(cfg, scored, log, warn);
}

void cmd_build_index(const RunConfig& cfg, std::ostream& log, std::ostream& warn) {
  auto in = open_input(cfg.scored_path(), "run `inflanow score` first");
  auto loaded = read_scored(in);
  check_rejections(loaded, cfg, cfg.scored_path());
  if (loaded.rows.empty()) {
    throw DataError(fmt::format("{} contains no scored articles", cfg.scored_path().string()));
  }
  auto monthly = monthly_aggregate(loaded.rows, cfg.day_cutoff);
  auto index = build_news_index(monthly);
  if (!index.gap_months.empty()) {
    warn << fmt::format("warning: no articles in {} month(s): {}\n", index.gap_months.size(),
                        join_months(index.gap_months));
  }
  fs::path meta = cfg.index_path();
  meta.replace_filename(meta.stem().string() + "_meta.csv");
  write_file(cfg.index_path(),
             [&](std::ostream& out) { write_series(out, index.series, cfg.provenance()); });
  write_file(meta, [&](std::ostream& out) { write_index_metadata(out, index, cfg.provenance()); });
  log << fmt::format("build-index: {} articles over {} months ({} to {}) -> {}\n",
                     loaded.rows.size(), index.series.size(),
                     index.series.first_month().to_string(), index.series.last_month().to_string(),
                     cfg.index_path().string());
}

SeriesBundle load_bundle(const RunConfig& cfg, const std::vector<ModelSpec>& specs) {
  PriceLevels levels{
      read_series_file(require_path(cfg.cpi, "cpi"), "CPI", SeriesUnit::index_level),
      read_series_file(require_path(cfg.core_cpi, "core_cpi"), "CoreCPI", SeriesUnit::index_level),
      read_series_file(require_path(cfg.food_cpi, "food_cpi"), "FoodCPI", SeriesUnit::index_level),
      read_series_file(require_path(cfg.gasoline, "gasoline"), "Gasoline", SeriesUnit::index_level)};
  std::optional<NewsIndex> news;
  bool needs_news = std::any_of(specs.begin(), specs.end(),
                                [](const ModelSpec& s) { return s.uses(Regressor::news); });
  if (needs_news) {
    if (!fs::exists(cfg.index_path())) {
      throw DataError(fmt::format("NEWS index {} not found; run `inflanow build-index` first",
                                  cfg.index_path().string()));
    }
    news = news_index_from_series(
        read_series_file(cfg.index_path(), "NEWS", SeriesUnit::index_level));
  }
  return make_bundle(levels, news, cfg.pct_window, cfg.news_pi);
}

void cmd_fit(const RunConfig& cfg, const std::vector<ModelSpec>& specs, std::ostream& log) {
  auto data = load_bundle(cfg, specs);
  auto fitted = fit_all(cfg, specs, data);
  auto table = format_regression_table(fitted);
  write_file(cfg.out / "regression.txt",
             [&](std::ostream& out) { out << "# " << cfg.provenance() << '\n' << table; });
  write_file(cfg.out / "regression.csv",
             [&](std::ostream& out) { write_regression_csv(out, fitted, cfg.provenance()); });
  write_file(cfg.out / "regression_stats.csv",
             [&](std::ostream& out) { write_regression_stats_csv(out, fitted, cfg.provenance()); });
  log << table;
}

void cmd_nowcast(const RunConfig& cfg, const std::vector<ModelSpec>& specs,
                 std::optional<MonthKey> month, std::ostream& log) {
  MonthKey t = month.value_or(cfg.nowcast_month.value_or(cfg.eval.last));
  if (!(cfg.train.last < t)) {
    throw ConfigError(fmt::format("nowcast month {} must follow the training window {}",
                                  t.to_string(), cfg.train.to_string()));
  }
  auto data = load_bundle(cfg, specs);
  auto fitted = fit_all(cfg, specs, data);
  auto realized = data.cpi.find(t);
  write_file(cfg.out / "nowcast.csv", [&](std::ostream& out) {
    out << "# " << cfg.provenance() << '\n';
    out << "date,model,nowcast,nowcast_annualized,realized,realized_annualized\n";
    for (const auto& f : fitted) {
      double v = nowcast(f.spec, f.result, data, t, cfg.lags);
      out << t.to_string() << ',' << f.spec.label() << ',' << csv::format_double(v) << ','
          << csv::format_double(annualize(v)) << ',';
      if (realized) {
        out << csv::format_double(*realized) << ',' << csv::format_double(annualize(*realized));
      } else {
        out << ',';
      }
      out << '\n';
      log << fmt::format("{:<14}{}  {:9.4f}  (annualized {:.4f})\n", f.spec.label(), t.to_string(),
                         v, annualize(v));
    }
  });
  if (realized) log << fmt::format("{:<14}{}  {:9.4f}\n", "realized", t.to_string(), *realized);
}

void cmd_backtest(const RunConfig& cfg, const std::vector<ModelSpec>& specs, std::ostream& log) {
  auto data = load_bundle(cfg, specs);
  std::vector<ForecastSeries> forecasts;
  for (const auto& spec : specs) {
    forecasts.push_back(backtest(spec, data, cfg.train, cfg.eval, cfg.scheme, cfg.ols));
  }
  write_file(cfg.forecasts_path(),
             [&](std::ostream& out) { write_forecasts_csv(out, forecasts, cfg.provenance()); });
  log << fmt::format("backtest: {} model(s), {} scheme, {} months -> {}\n", forecasts.size(),
                     to_string(cfg.scheme), cfg.eval.size(), cfg.forecasts_path().string());
  write_evaluation(cfg, forecasts, log);
}

void cmd_evaluate(const RunConfig& cfg, const std::vector<std::string>& models, std::ostream& log) {
  auto in = open_input(cfg.forecasts_path(), "run `inflanow backtest` first");
  auto all = read_forecasts_csv(in);
  std::vector<ForecastSeries> chosen;
  if (models.empty()) {
    chosen = std::move(all);
  } else {
    for (const auto& name : models) {
      auto it = std::find_if(all.begin(), all.end(),
                             [&](const ForecastSeries& f) { return f.model == name; });
      if (it == all.end()) {
        throw DataError(fmt::format("model '{}' not found in {}", name, cfg.forecasts_path().string()));
      }
      chosen.push_back(*it);
    }
  }
  if (chosen.empty()) throw DataError(fmt::format("{} has no forecasts", cfg.forecasts_path().string()));
  write_evaluation(cfg, chosen, log);
}

}  // namespace inflanow::cli
