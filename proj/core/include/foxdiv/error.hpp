#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace foxdiv {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed word, polynomial, presentation or family text.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line = 0,
             std::size_t column = 0)
      : Error(line == 0 ? message
                        : "line " + std::to_string(line) + ", column " +
                              std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A letter or generator that the alphabet does not declare.
class AlphabetError : public Error {
 public:
  using Error::Error;
};

/// Operation needs a nonzero polynomial (leading term of 0, etc.).
class ZeroPolynomialError : public Error {
 public:
  using Error::Error;
};

}  // namespace foxdiv
