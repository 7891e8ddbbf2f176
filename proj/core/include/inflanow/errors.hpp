#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "inflanow/month.hpp"

namespace inflanow {

// Broad failure classes; the CLI maps each to a distinct exit code.
enum class ErrorKind { config, data, numerical };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, std::vector<MonthKey> months = {});

  ErrorKind kind() const noexcept { return kind_; }
  // Months implicated in the failure, if any (missing lags, zero denominators...).
  const std::vector<MonthKey>& months() const noexcept { return months_; }

 private:
  ErrorKind kind_;
  std::vector<MonthKey> months_;
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(ErrorKind::config, what) {}
};

class DataError : public Error {
 public:
  explicit DataError(const std::string& what, std::vector<MonthKey> months = {})
      : Error(ErrorKind::data, what, std::move(months)) {}
};

// Malformed input text. `line` is 1-based, 0 when unknown.
class ParseError : public DataError {
 public:
  ParseError(const std::string& what, std::size_t line = 0);
  std::size_t line() const noexcept { return line_; }
  // Same error, reported as "<file>:<line>: <detail>".
  ParseError in_file(const std::string& file) const;

 private:
  ParseError(std::string formatted, std::string detail, std::size_t line);

  std::string detail_;
  std::size_t line_;
};

class MissingDataError : public DataError {
 public:
  MissingDataError(const std::string& context, std::vector<MonthKey> missing);
};

// Invalid probability vector or label.
class ValidationError : public DataError {
 public:
  using DataError::DataError;
};

class NumericalError : public Error {
 public:
  explicit NumericalError(const std::string& what, std::vector<MonthKey> months = {})
      : Error(ErrorKind::numerical, what, std::move(months)) {}
};

class DomainError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class SingularDesignError : public NumericalError {
 public:
  explicit SingularDesignError(std::vector<std::string> dependent_columns);
  const std::vector<std::string>& dependent_columns() const noexcept { return columns_; }

 private:
  std::vector<std::string> columns_;
};

class DegenerateDifferentialError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// "2020-01, 2020-02, ..." truncated after `limit` entries.
std::string join_months(const std::vector<MonthKey>& months, std::size_t limit = 24);

}  // namespace inflanow
