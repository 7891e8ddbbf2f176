#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "inflanow/month.hpp"

namespace inflanow {

// Direction an article expects inflation to move.
enum class Label : int { down = -1, neutral = 0, up = 1 };

constexpr int to_int(Label l) { return static_cast<int>(l); }

// On-disk label encodings: {-1, 0, 1} directly, or the class-index form
// {0, 1, 2} meaning {down, neutral, up}.
enum class LabelEncoding { signed_unit, class_index };

// Throws ValidationError for a value outside the encoding.
Label decode_label(int value, LabelEncoding encoding);
LabelEncoding parse_label_encoding(std::string_view text);
std::string to_string(LabelEncoding encoding);

// Probabilities for labels down, neutral, up.
class SentimentProbs {
 public:
  static constexpr double kSumTolerance = 1e-6;

  // Throws ValidationError unless each value is in [0, 1] and they sum to 1
  // within kSumTolerance.
  SentimentProbs(double p_down, double p_neutral, double p_up);

  static SentimentProbs one_hot(Label label);

  double down() const { return down_; }
  double neutral() const { return neutral_; }
  double up() const { return up_; }
  double of(Label label) const;

  friend bool operator==(const SentimentProbs&, const SentimentProbs&) = default;

 private:
  double down_;
  double neutral_;
  double up_;
};

// Expected label under `probs`: p_up - p_down.
double polarity_score(const SentimentProbs& probs);

// Label with the strictly largest probability. Any tie at the maximum
// resolves to neutral:
//
//   down == neutral > up    -> neutral
//   up == neutral > down    -> neutral
//   down == up > neutral    -> neutral
//   down == neutral == up   -> neutral
Label argmax_score(const SentimentProbs& probs);

enum class ScoreFunction { polarity, argmax };

ScoreFunction parse_score_function(std::string_view text);
std::string to_string(ScoreFunction fn);

double score(const SentimentProbs& probs, ScoreFunction fn);

// Publication date. The day is optional for sources that only give a month.
struct ArticleDate {
  MonthKey month;
  std::optional<int> day;

  // "YYYY-MM-DD" (day validated against the month length) or "YYYY-MM".
  static ArticleDate parse(std::string_view text);
  std::string to_string() const;

  friend auto operator<=>(const ArticleDate&, const ArticleDate&) = default;
};

struct ScoredArticle {
  std::string id;
  ArticleDate date;
  SentimentProbs probs;
  double score = 0.0;

  static ScoredArticle make(std::string id, ArticleDate date, SentimentProbs probs,
                            ScoreFunction fn) {
    double s = inflanow::score(probs, fn);
    return ScoredArticle{std::move(id), date, probs, s};
  }
};

}  // namespace inflanow
