#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "inflanow/sentiment.hpp"

namespace inflanow {

// Keyword-count stand-in for a trained classifier, so the pipeline can run
// without model output. Text is split into lower-case alphanumeric tokens;
// a term hits every token that starts with it.
//
// With u up hits and d down hits (n = u + d):
//   n == 0:  (0, 1, 0)
//   otherwise the directional mass m = k*n / (1 + k*n) (odds k*n) is split
//   with additive smoothing s:
//     p_up   = m * (u + s) / (n + 2s)
//     p_down = m * (d + s) / (n + 2s)
//     p_neutral = 1 - m
struct BaselineParams {
  std::vector<std::string> up_terms;
  std::vector<std::string> down_terms;
  double odds_scale = 2.0;  // k; one hit already outweighs neutral
  double smoothing = 0.5;   // s

  static BaselineParams defaults();
};

SentimentProbs baseline_classify(std::string_view text,
                                 const BaselineParams& params = BaselineParams::defaults());

}  // namespace inflanow
