#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace inflanow {

// Lower-cases ASCII letters and collapses every run of whitespace into a
// single space, trimming both ends.
std::string normalize_text(std::string_view text);

// A set of phrases matched case-insensitively as substrings of normalized
// text. Phrases may span several words ("consumer price index").
class Lexicon {
 public:
  // Throws ConfigError if no non-blank phrase is given.
  explicit Lexicon(const std::vector<std::string>& phrases);

  // Article filter keywords for inflation news.
  static Lexicon inflation_default();

  bool matches(std::string_view text) const;
  const std::vector<std::string>& phrases() const { return phrases_; }

 private:
  std::vector<std::string> phrases_;  // normalized, deduplicated, sorted
};

// True iff at least one lexicon phrase occurs in `text`.
inline bool lexicon_filter(std::string_view text, const Lexicon& lexicon) {
  return lexicon.matches(text);
}

}  // namespace inflanow
