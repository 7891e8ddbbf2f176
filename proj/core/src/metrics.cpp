#include "inflanow/metrics.hpp"

#include <fmt/format.h>

#include "inflanow/errors.hpp"

namespace inflanow {

ClassificationReport classification_report(std::span<const Label> predictions,
                                           std::span<const Label> gold) {
  if (predictions.size() != gold.size()) {
    throw DataError(fmt::format("{} predictions for {} gold labels", predictions.size(),
                                gold.size()));
  }
  if (gold.empty()) throw DataError("classification report needs at least one item");

  auto idx = [](Label l) { return static_cast<std::size_t>(to_int(l) + 1); };
  std::array<std::size_t, 3> tp{}, predicted{}, actual{};
  std::size_t correct = 0;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    ++predicted[idx(predictions[i])];
    ++actual[idx(gold[i])];
    if (predictions[i] == gold[i]) {
      ++tp[idx(gold[i])];
      ++correct;
    }
  }

  ClassificationReport r;
  double weighted = 0.0;
  for (std::size_t c = 0; c < 3; ++c) {
    r.support[c] = actual[c];
    r.precision[c] = predicted[c] ? static_cast<double>(tp[c]) / predicted[c] : 0.0;
    r.recall[c] = actual[c] ? static_cast<double>(tp[c]) / actual[c] : 0.0;
    double pr = r.precision[c] + r.recall[c];
    r.f1[c] = pr > 0.0 ? 2.0 * r.precision[c] * r.recall[c] / pr : 0.0;
    weighted += static_cast<double>(actual[c]) * r.f1[c];
  }
  r.weighted_f1 = weighted / static_cast<double>(gold.size());
  r.accuracy = static_cast<double>(correct) / static_cast<double>(gold.size());
  return r;
}

}  // namespace inflanow
