#include "inflanow/errors.hpp"

#include <fmt/format.h>

namespace inflanow {

Error::Error(ErrorKind kind, const std::string& what, std::vector<MonthKey> months)
    : std::runtime_error(what), kind_(kind), months_(std::move(months)) {}

ParseError::ParseError(const std::string& what, std::size_t line)
    : ParseError(line > 0 ? fmt::format("line {}: {}", line, what) : what, what, line) {}

ParseError::ParseError(std::string formatted, std::string detail, std::size_t line)
    : DataError(formatted), detail_(std::move(detail)), line_(line) {}

ParseError ParseError::in_file(const std::string& file) const {
  auto formatted = line_ > 0 ? fmt::format("{}:{}: {}", file, line_, detail_)
                             : fmt::format("{}: {}", file, detail_);
  return ParseError(std::move(formatted), detail_, line_);
}

MissingDataError::MissingDataError(const std::string& context, std::vector<MonthKey> missing)
    : DataError(fmt::format("{}: missing months [{}]", context, join_months(missing)),
                missing) {}

SingularDesignError::SingularDesignError(std::vector<std::string> dependent_columns)
    : NumericalError(fmt::format("singular design: columns [{}] are linearly dependent on "
                                 "the others",
                                 fmt::join(dependent_columns, ", "))),
      columns_(std::move(dependent_columns)) {}

std::string join_months(const std::vector<MonthKey>& months, std::size_t limit) {
  std::string out;
  for (std::size_t i = 0; i < months.size(); ++i) {
    if (i == limit) {
      out += fmt::format(", ... ({} more)", months.size() - limit);
      break;
    }
    if (i > 0) out += ", ";
    out += months[i].to_string();
  }
  return out;
}

}  // namespace inflanow
