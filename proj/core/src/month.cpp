#include "inflanow/month.hpp"

#include <charconv>

#include <fmt/format.h>

#include "inflanow/errors.hpp"

namespace inflanow {
namespace {

bool parse_int(std::string_view text, int& out) {
  if (text.empty()) return false;
  for (char c : text) {
    if (c < '0' || c > '9') return false;
  }
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

}  // namespace

MonthKey::MonthKey(int year, int month) : year_(year), month_(month) {
  if (month < 1 || month > 12) {
    throw DataError(fmt::format("month {} out of range 1..12", month));
  }
}

MonthKey MonthKey::parse(std::string_view text) {
  int year = 0;
  int month = 0;
  if (text.size() != 7 || text[4] != '-' || !parse_int(text.substr(0, 4), year) ||
      !parse_int(text.substr(5, 2), month) || month < 1 || month > 12) {
    throw ParseError(fmt::format("expected YYYY-MM, got '{}'", text));
  }
  return MonthKey(year, month);
}

MonthKey MonthKey::from_ordinal(int ordinal) {
  int year = ordinal >= 0 ? ordinal / 12 : -((11 - ordinal) / 12);
  return MonthKey(year, ordinal - year * 12 + 1);
}

std::string MonthKey::to_string() const { return fmt::format("{:04d}-{:02d}", year_, month_); }

MonthWindow MonthWindow::make(MonthKey first, MonthKey last) {
  if (last < first) {
    throw DataError(fmt::format("window end {} precedes start {}", last.to_string(),
                                first.to_string()));
  }
  return MonthWindow{first, last};
}

MonthWindow MonthWindow::parse(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError(fmt::format("expected YYYY-MM:YYYY-MM, got '{}'", text));
  }
  return make(MonthKey::parse(text.substr(0, colon)), MonthKey::parse(text.substr(colon + 1)));
}

std::string MonthWindow::to_string() const {
  return first.to_string() + ":" + last.to_string();
}

}  // namespace inflanow
