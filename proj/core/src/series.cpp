#include "inflanow/series.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "inflanow/errors.hpp"

namespace inflanow {

std::string to_string(SeriesUnit unit) {
  return unit == SeriesUnit::percent ? "percent" : "index-level";
}

MonthlySeries::MonthlySeries(std::string name, SeriesUnit unit)
    : name_(std::move(name)), unit_(unit) {}

MonthlySeries::MonthlySeries(std::string name, SeriesUnit unit, std::vector<Point> points)
    : name_(std::move(name)), unit_(unit), points_(std::move(points)) {
  for (std::size_t i = 1; i < points_.size(); ++i) {
    if (points_[i].first <= points_[i - 1].first) {
      throw DataError(fmt::format("series '{}': month {} does not follow {}", name_,
                                  points_[i].first.to_string(),
                                  points_[i - 1].first.to_string()),
                      {points_[i].first});
    }
  }
}

MonthKey MonthlySeries::first_month() const {
  if (points_.empty()) throw DataError(fmt::format("series '{}' is empty", name_));
  return points_.front().first;
}

MonthKey MonthlySeries::last_month() const {
  if (points_.empty()) throw DataError(fmt::format("series '{}' is empty", name_));
  return points_.back().first;
}

std::optional<double> MonthlySeries::find(MonthKey month) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), month,
                             [](const Point& p, MonthKey m) { return p.first < m; });
  if (it == points_.end() || it->first != month) return std::nullopt;
  return it->second;
}

double MonthlySeries::at(MonthKey month) const {
  if (auto v = find(month)) return *v;
  throw MissingDataError(fmt::format("series '{}'", name_), {month});
}

MonthlySeries MonthlySeries::slice(MonthKey first, MonthKey last) const {
  std::vector<Point> out;
  for (const auto& p : points_) {
    if (first <= p.first && p.first <= last) out.push_back(p);
  }
  return MonthlySeries(name_, unit_, std::move(out));
}

MonthlySeries MonthlySeries::renamed(std::string name) const {
  MonthlySeries copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

}  // namespace inflanow
