#include "inflanow/baseline.hpp"

#include <cctype>

#include <fmt/format.h>

#include "inflanow/errors.hpp"

namespace inflanow {
namespace {

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (unsigned char c : text) {
    if (std::isalnum(c)) {
      current += static_cast<char>(std::tolower(c));
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

int count_hits(const std::vector<std::string>& tokens, const std::vector<std::string>& terms) {
  int hits = 0;
  for (const auto& token : tokens) {
    for (const auto& term : terms) {
      if (!term.empty() && token.starts_with(term)) {
        ++hits;
        break;
      }
    }
  }
  return hits;
}

}  // namespace

BaselineParams BaselineParams::defaults() {
  BaselineParams p;
  p.up_terms = {"rise",   "rising", "rose",     "surg",   "soar",   "jump",  "spike",
                "climb",  "higher", "increas",  "accelerat", "hike", "hotter", "sticky"};
  p.down_terms = {"fall",  "fell",   "drop",    "declin",    "easing",       "eased",
                  "cool",  "lower",  "slow",    "decreas",   "deflation",    "disinflation",
                  "subdued", "soften", "softer", "cut"};
  return p;
}

SentimentProbs baseline_classify(std::string_view text, const BaselineParams& params) {
  if (params.odds_scale <= 0.0 || params.smoothing < 0.0) {
    throw ConfigError(fmt::format("baseline constants must satisfy odds_scale > 0, smoothing >= 0 "
                                  "(got {}, {})",
                                  params.odds_scale, params.smoothing));
  }
  auto tokens = tokenize(text);
  double up = count_hits(tokens, params.up_terms);
  double down = count_hits(tokens, params.down_terms);
  double n = up + down;
  if (n == 0.0) return SentimentProbs(0.0, 1.0, 0.0);

  double odds = params.odds_scale * n;
  double mass = odds / (1.0 + odds);
  double denom = n + 2.0 * params.smoothing;
  double p_up = mass * (up + params.smoothing) / denom;
  double p_down = mass * (down + params.smoothing) / denom;
  return SentimentProbs(p_down, 1.0 - p_down - p_up, p_up);
}

}  // namespace inflanow
