#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace inflanow::csv {

struct Record {
  std::size_t line = 0;  // 1-based line where the record starts
  std::vector<std::string> fields;
};

// RFC 4180 reader: comma separated, double-quoted fields may contain commas,
// doubled quotes and newlines. Blank lines and lines starting with '#' are
// skipped. Throws ParseError on an unterminated quoted field.
std::vector<Record> read(std::istream& in);

// Quotes `field` only when it contains a comma, quote, or line break.
std::string escape(std::string_view field);

// Throws ParseError unless `record` matches `expected` exactly.
void expect_header(const Record& record, const std::vector<std::string>& expected);

// Strict double parse of the whole field. Throws ParseError with `line`.
double parse_double(std::string_view field, std::size_t line, std::string_view what);

// Shortest representation that round-trips exactly.
std::string format_double(double value);

}  // namespace inflanow::csv
