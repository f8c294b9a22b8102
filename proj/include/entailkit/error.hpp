#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace entailkit {

// Base for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad configuration: missing column, missing store, invalid hyperparameter.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Malformed input file. `row` is 1-based over data rows (0 when not row-specific).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t row = 0)
      : Error(what), row_(row) {}
  std::size_t row() const noexcept { return row_; }

 private:
  std::size_t row_;
};

// Binary payload ended early; `offset` is the byte position where reading stopped.
class TruncatedError : public ParseError {
 public:
  TruncatedError(const std::string& what, std::size_t offset)
      : ParseError(what), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

// Wraps an error raised inside one pipeline stage with the stage name.
class StageError : public Error {
 public:
  StageError(std::string stage, const std::string& what)
      : Error(stage + ": " + what), stage_(std::move(stage)) {}
  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

}  // namespace entailkit
