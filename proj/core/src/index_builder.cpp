#include "inflanow/index_builder.hpp"

#include <algorithm>
#include <map>
#include <ostream>

#include <fmt/format.h>

#include "inflanow/csv.hpp"
#include "inflanow/errors.hpp"
#include "inflanow/transforms.hpp"

namespace inflanow {

std::vector<MonthlySentiment> monthly_aggregate(std::span<const ScoredArticle> articles,
                                                std::optional<int> day_cutoff) {
  if (articles.empty()) throw DataError("no articles to aggregate");
  if (day_cutoff && (*day_cutoff < 1 || *day_cutoff > 31)) {
    throw ConfigError(fmt::format("day cutoff {} outside 1..31", *day_cutoff));
  }

  std::map<MonthKey, std::vector<double>> by_month;
  for (const auto& a : articles) {
    if (day_cutoff && a.date.day && *a.date.day > *day_cutoff) continue;
    by_month[a.date.month].push_back(a.score);
  }
  if (by_month.empty()) {
    throw DataError(fmt::format("all {} articles fall after day {} of their month",
                                articles.size(), *day_cutoff));
  }

  std::vector<MonthlySentiment> out;
  out.reserve(by_month.size());
  for (auto& [month, scores] : by_month) {
    std::sort(scores.begin(), scores.end());
    double sum = 0.0;
    for (double s : scores) sum += s;
    out.push_back({month, sum / static_cast<double>(scores.size()), scores.size()});
  }
  return out;
}

NewsIndex build_news_index(std::span<const MonthlySentiment> monthly) {
  if (monthly.empty()) throw DataError("cannot build an index from zero months");
  for (std::size_t i = 1; i < monthly.size(); ++i) {
    if (monthly[i].month <= monthly[i - 1].month) {
      throw DataError(fmt::format("monthly sentiment out of order: {} after {}",
                                  monthly[i].month.to_string(),
                                  monthly[i - 1].month.to_string()),
                      {monthly[i].month});
    }
  }

  NewsIndex index{MonthlySeries("NEWS", SeriesUnit::index_level), {}, {}};
  std::vector<MonthlySeries::Point> points;
  double level = 0.0;
  MonthKey month = monthly.front().month;
  for (const auto& entry : monthly) {
    for (; month < entry.month; month = month.next()) {
      index.gap_months.push_back(month);
      index.monthly.push_back({month, 0.0, 0});
      points.emplace_back(month, level);
    }
    level += entry.mean_score;
    index.monthly.push_back(entry);
    points.emplace_back(month, level);
    month = month.next();
  }
  index.series = MonthlySeries("NEWS", SeriesUnit::index_level, std::move(points));
  return index;
}

NewsPiMode parse_news_pi_mode(std::string_view text) {
  if (text == "ratio") return NewsPiMode::ratio;
  if (text == "level-difference") return NewsPiMode::level_difference;
  throw ConfigError(fmt::format("unknown news pi mode '{}' (expected ratio|level-difference)", text));
}

std::string to_string(NewsPiMode mode) {
  return mode == NewsPiMode::ratio ? "ratio" : "level-difference";
}

MonthlySeries news_pi(const NewsIndex& index, int window, NewsPiMode mode) {
  if (window <= 0) throw ConfigError(fmt::format("news pi window must be positive, got {}", window));
  const auto& levels = index.series;

  if (mode == NewsPiMode::level_difference) {
    std::vector<MonthlySeries::Point> out;
    for (const auto& [month, level] : levels) {
      if (auto base = levels.find(month.plus(-window))) out.emplace_back(month, level - *base);
    }
    return MonthlySeries(levels.name(), SeriesUnit::percent, std::move(out));
  }

  std::vector<MonthKey> bad;
  for (const auto& [month, level] : levels) {
    auto base = levels.find(month.plus(-window));
    if (!base) continue;
    bool crosses = (*base > 0.0 && level < 0.0) || (*base < 0.0 && level > 0.0);
    if (*base == 0.0 || crosses) bad.push_back(month);
  }
  if (!bad.empty()) {
    throw DomainError(fmt::format("NEWS index: zero or sign-crossing base level for [{}]; "
                                  "consider news_pi = level-difference",
                                  join_months(bad)),
                      bad);
  }
  return pct_change(levels, window, ZeroBasePolicy::report);
}

void write_index_metadata(std::ostream& out, const NewsIndex& index, const std::string& comment) {
  if (!comment.empty()) out << "# " << comment << '\n';
  out << "date,article_count,mean_score,gap\n";
  for (const auto& m : index.monthly) {
    out << m.month.to_string() << ',' << m.article_count << ','
        << csv::format_double(m.mean_score) << ',' << (m.article_count == 0 ? 1 : 0) << '\n';
  }
}

NewsIndex news_index_from_series(MonthlySeries series) {
  return NewsIndex{std::move(series), {}, {}};
}

}  // namespace inflanow
