#pragma once
#include <cstddef>
#include <stdexcept>
#include <string>

namespace gablade {

// Base class of everything thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Mixing values from algebras of different dimension, or asking for a
// dimension outside the supported range.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A value outside an operation's domain: non-finite coefficient, malformed
// truth table, grade out of range, bad JSON, ...
class ValueError : public Error {
 public:
  using Error::Error;
};

enum class ParseErrorKind { lexical, syntax, unknown_glyph };

namespace detail {
std::string positioned_message(int line, int col, const std::string& message);
}

// Expression parse failure. what() is formatted "line:col: message";
// offset is the byte offset into the source text.
class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, std::size_t offset, int line, int col,
             const std::string& message)
      : Error(detail::positioned_message(line, col, message)),
        kind_(kind),
        offset_(offset),
        line_(line),
        col_(col) {}

  ParseErrorKind kind() const noexcept { return kind_; }
  std::size_t offset() const noexcept { return offset_; }
  int line() const noexcept { return line_; }
  int col() const noexcept { return col_; }

 private:
  ParseErrorKind kind_;
  std::size_t offset_;
  int line_;
  int col_;
};

// Expression evaluation failure, positioned at the offending node.
class EvalError : public Error {
 public:
  EvalError(std::size_t offset, int line, int col, const std::string& message)
      : Error(detail::positioned_message(line, col, message)),
        offset_(offset),
        line_(line),
        col_(col) {}

  std::size_t offset() const noexcept { return offset_; }
  int line() const noexcept { return line_; }
  int col() const noexcept { return col_; }

 private:
  std::size_t offset_;
  int line_;
  int col_;
};

// Unsupported drawing request (dimension not 2 or 3, non-integer
// coefficients, oversized multiplicity).
class RenderError : public Error {
 public:
  using Error::Error;
};

// Failure to read or write a file.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace gablade
