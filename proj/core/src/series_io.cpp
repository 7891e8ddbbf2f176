#include "inflanow/series_io.hpp"

#include <fstream>
#include <ostream>

#include <fmt/format.h>

#include "inflanow/csv.hpp"
#include "inflanow/errors.hpp"

namespace inflanow {

MonthlySeries read_series(std::istream& in, std::string name, SeriesUnit unit) {
  auto records = csv::read(in);
  if (records.empty()) throw ParseError(fmt::format("series '{}': missing header", name));
  csv::expect_header(records.front(), {"date", "value"});

  std::vector<MonthlySeries::Point> points;
  points.reserve(records.size() - 1);
  for (std::size_t i = 1; i < records.size(); ++i) {
    const auto& r = records[i];
    if (r.fields.size() != 2) {
      throw ParseError(fmt::format("expected 2 fields, got {}", r.fields.size()), r.line);
    }
    MonthKey month;
    try {
      month = MonthKey::parse(r.fields[0]);
    } catch (const ParseError&) {
      throw ParseError(fmt::format("invalid date '{}'", r.fields[0]), r.line);
    }
    if (!points.empty()) {
      if (month == points.back().first) {
        throw ParseError(fmt::format("duplicate month {}", month.to_string()), r.line);
      }
      if (month < points.back().first) {
        throw ParseError(fmt::format("month {} is earlier than preceding {}", month.to_string(),
                                     points.back().first.to_string()),
                         r.line);
      }
    }
    points.emplace_back(month, csv::parse_double(r.fields[1], r.line, "value"));
  }
  return MonthlySeries(std::move(name), unit, std::move(points));
}

MonthlySeries read_series_file(const std::filesystem::path& path, std::string name,
                               SeriesUnit unit) {
  std::ifstream in(path);
  if (!in) throw DataError(fmt::format("cannot open series file '{}'", path.string()));
  try {
    return read_series(in, std::move(name), unit);
  } catch (const ParseError& e) {
    throw e.in_file(path.string());
  }
}

void write_series(std::ostream& out, const MonthlySeries& series, const std::string& comment) {
  if (!comment.empty()) out << "# " << comment << '\n';
  out << "date,value\n";
  for (const auto& [month, value] : series) {
    out << month.to_string() << ',' << csv::format_double(value) << '\n';
  }
}

}  // namespace inflanow
