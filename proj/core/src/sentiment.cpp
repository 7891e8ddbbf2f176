#include "inflanow/sentiment.hpp"

#include <charconv>
#include <cmath>

#include <fmt/format.h>

#include "inflanow/errors.hpp"

namespace inflanow {

Label decode_label(int value, LabelEncoding encoding) {
  if (encoding == LabelEncoding::class_index) {
    if (value >= 0 && value <= 2) return static_cast<Label>(value - 1);
    throw ValidationError(fmt::format("label {} not in {{0, 1, 2}}", value));
  }
  if (value >= -1 && value <= 1) return static_cast<Label>(value);
  throw ValidationError(fmt::format("label {} not in {{-1, 0, 1}}", value));
}

LabelEncoding parse_label_encoding(std::string_view text) {
  if (text == "signed") return LabelEncoding::signed_unit;
  if (text == "index") return LabelEncoding::class_index;
  throw ConfigError(fmt::format("unknown label encoding '{}' (expected signed|index)", text));
}

std::string to_string(LabelEncoding encoding) {
  return encoding == LabelEncoding::class_index ? "index" : "signed";
}

SentimentProbs::SentimentProbs(double p_down, double p_neutral, double p_up)
    : down_(p_down), neutral_(p_neutral), up_(p_up) {
  for (double p : {p_down, p_neutral, p_up}) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw ValidationError(
          fmt::format("probability {} outside [0, 1] in ({}, {}, {})", p, p_down, p_neutral, p_up));
    }
  }
  double sum = p_down + p_neutral + p_up;
  if (std::abs(sum - 1.0) > kSumTolerance) {
    throw ValidationError(
        fmt::format("probabilities ({}, {}, {}) sum to {}, not 1", p_down, p_neutral, p_up, sum));
  }
}

SentimentProbs SentimentProbs::one_hot(Label label) {
  return SentimentProbs(label == Label::down ? 1.0 : 0.0, label == Label::neutral ? 1.0 : 0.0,
                        label == Label::up ? 1.0 : 0.0);
}

double SentimentProbs::of(Label label) const {
  switch (label) {
    case Label::down:
      return down_;
    case Label::neutral:
      return neutral_;
    case Label::up:
      return up_;
  }
  return 0.0;
}

double polarity_score(const SentimentProbs& probs) { return probs.up() - probs.down(); }

Label argmax_score(const SentimentProbs& probs) {
  if (probs.up() > probs.down() && probs.up() > probs.neutral()) return Label::up;
  if (probs.down() > probs.up() && probs.down() > probs.neutral()) return Label::down;
  return Label::neutral;
}

ScoreFunction parse_score_function(std::string_view text) {
  if (text == "polarity") return ScoreFunction::polarity;
  if (text == "argmax") return ScoreFunction::argmax;
  throw ConfigError(fmt::format("unknown score function '{}' (expected polarity|argmax)", text));
}

std::string to_string(ScoreFunction fn) {
  return fn == ScoreFunction::argmax ? "argmax" : "polarity";
}

double score(const SentimentProbs& probs, ScoreFunction fn) {
  return fn == ScoreFunction::argmax ? static_cast<double>(to_int(argmax_score(probs)))
                                     : polarity_score(probs);
}

namespace {

int days_in_month(MonthKey m) {
  static constexpr int kDays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (m.month() == 2) {
    int y = m.year();
    bool leap = (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
    return leap ? 29 : 28;
  }
  return kDays[m.month() - 1];
}

}  // namespace

ArticleDate ArticleDate::parse(std::string_view text) {
  if (text.size() == 7) return ArticleDate{MonthKey::parse(text), std::nullopt};
  if (text.size() != 10 || text[7] != '-') {
    throw ParseError(fmt::format("expected YYYY-MM-DD, got '{}'", text));
  }
  MonthKey month = MonthKey::parse(text.substr(0, 7));
  int day = 0;
  auto digits = text.substr(8, 2);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + 2, day);
  if (ec != std::errc() || ptr != digits.data() + 2 || day < 1 || day > days_in_month(month)) {
    throw ParseError(fmt::format("invalid day in '{}'", text));
  }
  return ArticleDate{month, day};
}

std::string ArticleDate::to_string() const {
  return day ? fmt::format("{}-{:02d}", month.to_string(), *day) : month.to_string();
}

}  // namespace inflanow
