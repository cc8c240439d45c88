#pragma once

#include <stdexcept>
#include <string>

namespace dualnav {

// Base class for all library errors. Subclasses name the failure mode;
// messages carry the offending field or input.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A config or domain value is outside its documented range. The message
// starts with the first violating field name.
struct RangeError : Error {
  explicit RangeError(const std::string& field, const std::string& detail = "")
      : Error(detail.empty() ? field : field + ": " + detail), field_(field) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

struct ParseError : Error {
  using Error::Error;
};

struct ShapeMismatch : Error {
  using Error::Error;
};

struct OutOfWorld : Error {
  using Error::Error;
};

struct EmptyText : Error {
  using Error::Error;
};

struct EmptyValidation : Error {
  using Error::Error;
};

struct EmptyResults : Error {
  using Error::Error;
};

struct UnreachableGoal : Error {
  using Error::Error;
};

struct TableGenExhausted : Error {
  using Error::Error;
};

struct ReasonerUnavailable : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace dualnav
