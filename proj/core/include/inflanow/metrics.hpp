#pragma once

#include <array>
#include <cstddef>
#include <span>

#include "inflanow/sentiment.hpp"

namespace inflanow {

// Per-class scores are indexed by to_int(label) + 1: down, neutral, up.
struct ClassificationReport {
  std::array<double, 3> precision{};
  std::array<double, 3> recall{};
  std::array<double, 3> f1{};
  std::array<std::size_t, 3> support{};  // gold count per class
  double weighted_f1 = 0.0;
  double accuracy = 0.0;

  double f1_of(Label l) const { return f1[static_cast<std::size_t>(to_int(l) + 1)]; }
  std::size_t support_of(Label l) const { return support[static_cast<std::size_t>(to_int(l) + 1)]; }
};

// Precision, recall and F1 are 0 whenever their denominator is 0, so a class
// absent from both lists scores F1 = 0 with zero weight. Weighted F1 is the
// support-weighted mean of per-class F1.
//
// Throws DataError on empty input or a length mismatch.
ClassificationReport classification_report(std::span<const Label> predictions,
                                           std::span<const Label> gold);

}  // namespace inflanow
