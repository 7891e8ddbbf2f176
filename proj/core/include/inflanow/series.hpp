#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "inflanow/month.hpp"

namespace inflanow {

enum class SeriesUnit { index_level, percent };

std::string to_string(SeriesUnit unit);

// An immutable monthly series. Months are strictly increasing but need not be
// contiguous; transforms state their own contiguity requirements.
class MonthlySeries {
 public:
  using Point = std::pair<MonthKey, double>;
  using const_iterator = std::vector<Point>::const_iterator;

  MonthlySeries(std::string name, SeriesUnit unit);
  // Throws DataError on duplicate or out-of-order months.
  MonthlySeries(std::string name, SeriesUnit unit, std::vector<Point> points);

  const std::string& name() const { return name_; }
  SeriesUnit unit() const { return unit_; }

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const std::vector<Point>& points() const { return points_; }
  const_iterator begin() const { return points_.begin(); }
  const_iterator end() const { return points_.end(); }

  MonthKey first_month() const;
  MonthKey last_month() const;

  std::optional<double> find(MonthKey month) const;
  bool contains(MonthKey month) const { return find(month).has_value(); }
  // Throws MissingDataError when absent.
  double at(MonthKey month) const;

  // Points with first <= month <= last.
  MonthlySeries slice(MonthKey first, MonthKey last) const;
  MonthlySeries renamed(std::string name) const;

  friend bool operator==(const MonthlySeries&, const MonthlySeries&) = default;

 private:
  std::string name_;
  SeriesUnit unit_;
  std::vector<Point> points_;
};

}  // namespace inflanow
