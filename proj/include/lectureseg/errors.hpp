/*
 * lectureseg - error types
 *
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace lectureseg {

// Base for every error raised by the library. Input errors (bad manifest,
// unreadable image, bad config) map to CLI exit code 1; anything else is 2.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what, bool input_error = true)
      : std::runtime_error(what), input_error_(input_error) {}
  bool input_error() const noexcept { return input_error_; }

 private:
  bool input_error_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class OrderError : public Error {
 public:
  OrderError(const std::string& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct DecodeError : Error {
  using Error::Error;
};
struct DimensionError : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& what) : Error(what, false) {}
};
struct NoBoardFound : Error {
  using Error::Error;
};
struct NoSheetFound : Error {
  using Error::Error;
};
struct MediaTypeMismatch : Error {
  explicit MediaTypeMismatch(const std::string& what) : Error(what, false) {}
};
struct InvalidProbabilities : Error {
  using Error::Error;
};
struct DegenerateSystem : Error {
  using Error::Error;
};
struct IoError : Error {
  using Error::Error;
};
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace lectureseg
