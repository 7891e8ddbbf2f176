#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "inflanow/month.hpp"
#include "inflanow/sentiment.hpp"
#include "inflanow/series.hpp"

namespace inflanow {

struct MonthlySentiment {
  MonthKey month;
  double mean_score = 0.0;
  std::size_t article_count = 0;

  friend bool operator==(const MonthlySentiment&, const MonthlySentiment&) = default;
};

// Groups articles by month and averages their scores, oldest month first.
// Months without articles are absent. When `day_cutoff` is set, only articles
// published on or before that day of their month are counted; articles with
// no day are always kept.
//
// Scores within a month are summed in sorted order, so the result does not
// depend on the order of `articles`.
//
// Throws DataError when no article survives the cutoff.
std::vector<MonthlySentiment> monthly_aggregate(std::span<const ScoredArticle> articles,
                                                std::optional<int> day_cutoff = std::nullopt);

struct NewsIndex {
  MonthlySeries series;                   // NEWS, index level
  std::vector<MonthlySentiment> monthly;  // one entry per index month; gaps have count 0
  std::vector<MonthKey> gap_months;
};

// Running sum of monthly means starting at the first month. Months between
// entries with no articles carry the previous level (a zero mean) and are
// listed in gap_months. Throws DataError unless `monthly` is strictly
// chronological and non-empty.
NewsIndex build_news_index(std::span<const MonthlySentiment> monthly);

// How news_pi treats base months that make the ratio meaningless.
enum class NewsPiMode {
  ratio,             // 100 * (P(t)/P(t-w) - 1); throws on zero or sign-crossing bases
  level_difference,  // P(t) - P(t-w), defined everywhere
};

NewsPiMode parse_news_pi_mode(std::string_view text);
std::string to_string(NewsPiMode mode);

// Percent change of the NEWS level. In ratio mode every month whose base is
// zero, or whose base and current levels have opposite signs, is collected
// and reported in a single DomainError.
MonthlySeries news_pi(const NewsIndex& index, int window = 12,
                      NewsPiMode mode = NewsPiMode::ratio);

// Sidecar for the index file: `date,article_count,mean_score,gap`.
void write_index_metadata(std::ostream& out, const NewsIndex& index,
                          const std::string& comment = {});

// Wraps a NEWS level series read from disk. Per-month counts are not restored.
NewsIndex news_index_from_series(MonthlySeries series);

}  // namespace inflanow
