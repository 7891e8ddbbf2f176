#include "inflanow/lexicon.hpp"

#include <algorithm>
#include <cctype>

#include "inflanow/errors.hpp"

namespace inflanow {

std::string normalize_text(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (unsigned char c : text) {
    if (std::isspace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out += ' ';
      pending_space = false;
    }
    out += static_cast<char>(std::tolower(c));
  }
  return out;
}

Lexicon::Lexicon(const std::vector<std::string>& phrases) {
  for (const auto& p : phrases) {
    auto normalized = normalize_text(p);
    if (!normalized.empty()) phrases_.push_back(std::move(normalized));
  }
  if (phrases_.empty()) throw ConfigError("lexicon has no phrases");
  std::sort(phrases_.begin(), phrases_.end());
  phrases_.erase(std::unique(phrases_.begin(), phrases_.end()), phrases_.end());
}

Lexicon Lexicon::inflation_default() {
  return Lexicon({"Inflation", "Gasoline prices", "Food prices", "Deflation",
                  "Consumer price index", "CPI", "Core CPI"});
}

bool Lexicon::matches(std::string_view text) const {
  auto haystack = normalize_text(text);
  return std::any_of(phrases_.begin(), phrases_.end(), [&](const std::string& phrase) {
    return haystack.find(phrase) != std::string::npos;
  });
}

}  // namespace inflanow
