#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "inflanow/sentiment.hpp"

namespace inflanow {

// News file rows. Every reader validates rows individually: a malformed row is
// recorded as a Rejection and skipped, while a bad header throws ParseError.
//
//   probabilities: id,date,p_down,p_neutral,p_up   (date YYYY-MM-DD)
//   text:          id,date,text                    (text quoted as needed)
//   labels:        id,date,label
//   scored:        id,date,p_down,p_neutral,p_up,score

struct NewsText {
  std::string id;
  ArticleDate date;
  std::string text;
};

struct ProbabilityRow {
  std::string id;
  ArticleDate date;
  SentimentProbs probs;
};

struct LabeledRow {
  std::string id;
  ArticleDate date;
  Label label;
};

struct Rejection {
  std::size_t line = 0;
  std::string reason;
};

template <typename Row>
struct Loaded {
  std::vector<Row> rows;
  std::vector<Rejection> rejected;

  std::size_t total() const { return rows.size() + rejected.size(); }
  double rejected_fraction() const {
    return total() ? static_cast<double>(rejected.size()) / static_cast<double>(total()) : 0.0;
  }
};

Loaded<ProbabilityRow> read_probabilities(std::istream& in);
Loaded<NewsText> read_news_text(std::istream& in);
Loaded<LabeledRow> read_labels(std::istream& in, LabelEncoding encoding);
Loaded<ScoredArticle> read_scored(std::istream& in);

void write_probabilities(std::ostream& out, std::span<const ScoredArticle> articles,
                         const std::string& comment = {});
void write_scored(std::ostream& out, std::span<const ScoredArticle> articles,
                  const std::string& comment = {});
void write_rejections(std::ostream& out, std::span<const Rejection> rejected,
                      const std::string& comment = {});

}  // namespace inflanow
