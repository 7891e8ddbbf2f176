#include "inflanow/csv.hpp"

#include <cmath>
#include <cstdlib>
#include <istream>

#include <fmt/format.h>

#include "inflanow/errors.hpp"

namespace inflanow::csv {

std::vector<Record> read(std::istream& in) {
  std::vector<Record> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;

    Record record;
    record.line = line_no;
    std::string field;
    bool quoted = false;
    std::size_t i = 0;
    while (true) {
      if (i == line.size()) {
        if (!quoted) break;
        // Quoted field spans a line break.
        if (!std::getline(in, line)) {
          throw ParseError("unterminated quoted field", record.line);
        }
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        field += '\n';
        i = 0;
        continue;
      }
      char c = line[i++];
      if (quoted) {
        if (c == '"') {
          if (i < line.size() && line[i] == '"') {
            field += '"';
            ++i;
          } else {
            quoted = false;
          }
        } else {
          field += c;
        }
      } else if (c == '"' && field.empty()) {
        quoted = true;
      } else if (c == ',') {
        record.fields.push_back(std::move(field));
        field.clear();
      } else {
        field += c;
      }
    }
    record.fields.push_back(std::move(field));
    records.push_back(std::move(record));
  }
  return records;
}

std::string escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void expect_header(const Record& record, const std::vector<std::string>& expected) {
  if (record.fields != expected) {
    throw ParseError(fmt::format("expected header '{}', got '{}'", fmt::join(expected, ","),
                                 fmt::join(record.fields, ",")),
                     record.line);
  }
}

double parse_double(std::string_view field, std::size_t line, std::string_view what) {
  std::string text(field);
  if (text.empty()) throw ParseError(fmt::format("empty {}", what), line);
  char* end = nullptr;
  double value = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size() || !std::isfinite(value)) {
    throw ParseError(fmt::format("invalid {} '{}'", what, text), line);
  }
  return value;
}

std::string format_double(double value) { return fmt::format("{}", value); }

}  // namespace inflanow::csv
