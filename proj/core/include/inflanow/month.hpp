#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

namespace inflanow {

// A calendar month. Ordering is chronological.
class MonthKey {
 public:
  constexpr MonthKey() = default;
  // Throws DataError unless 1 <= month <= 12.
  MonthKey(int year, int month);

  // Parses "YYYY-MM". Throws ParseError on malformed input.
  static MonthKey parse(std::string_view text);
  static MonthKey from_ordinal(int ordinal);

  constexpr int year() const { return year_; }
  constexpr int month() const { return month_; }
  // Months elapsed since 0000-01.
  constexpr int ordinal() const { return year_ * 12 + (month_ - 1); }

  MonthKey next() const { return plus(1); }
  MonthKey prev() const { return plus(-1); }
  MonthKey plus(int months) const { return from_ordinal(ordinal() + months); }

  std::string to_string() const;

  friend constexpr auto operator<=>(const MonthKey&, const MonthKey&) = default;

 private:
  int year_ = 1970;
  int month_ = 1;
};

// Number of months from `from` to `to` (negative when `to` precedes `from`).
constexpr int months_between(MonthKey from, MonthKey to) {
  return to.ordinal() - from.ordinal();
}

// Closed interval of months [first, last].
struct MonthWindow {
  MonthKey first;
  MonthKey last;

  // Throws DataError when last < first.
  static MonthWindow make(MonthKey first, MonthKey last);
  // Parses "YYYY-MM:YYYY-MM".
  static MonthWindow parse(std::string_view text);

  constexpr bool contains(MonthKey m) const { return first <= m && m <= last; }
  constexpr std::size_t size() const {
    return static_cast<std::size_t>(months_between(first, last) + 1);
  }
  std::string to_string() const;

  friend constexpr bool operator==(const MonthWindow&, const MonthWindow&) = default;
};

}  // namespace inflanow
