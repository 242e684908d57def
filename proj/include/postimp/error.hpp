#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace postimp {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Wrong number of arguments to a connective or to a truth-table lookup.
class ArityError : public Error {
public:
  ArityError(const std::string& what, std::size_t expected, std::size_t actual)
      : Error(what + ": expected arity " + std::to_string(expected) + ", got " + std::to_string(actual)),
        expected_(expected), actual_(actual) {}

  std::size_t expected() const noexcept { return expected_; }
  std::size_t actual() const noexcept { return actual_; }

private:
  std::size_t expected_;
  std::size_t actual_;
};

/// Malformed text input. `line` is 1-based (0 when the input is a single
/// string), `column` is the 1-based character position within that line.
class ParseError : public Error {
public:
  ParseError(const std::string& message, std::string source, std::size_t line, std::size_t column,
             std::string token = {})
      : Error(format(message, source, line, column, token)), message_(message), source_(std::move(source)),
        line_(line), column_(column), token_(std::move(token)) {}

  const std::string& message() const noexcept { return message_; }
  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& token() const noexcept { return token_; }

private:
  static std::string format(const std::string& message, const std::string& source, std::size_t line,
                            std::size_t column, const std::string& token) {
    std::string out;
    if (!source.empty())
      out += source + ":";
    if (line > 0)
      out += std::to_string(line) + ":";
    if (column > 0)
      out += std::to_string(column) + ":";
    if (!out.empty())
      out += " ";
    out += message;
    if (!token.empty())
      out += " '" + token + "'";
    return out;
  }

  std::string message_;
  std::string source_;
  std::size_t line_;
  std::size_t column_;
  std::string token_;
};

/// A decider was handed a formula containing a connective outside its fragment.
class FragmentError : public Error {
public:
  using Error::Error;
};

/// The exhaustive oracle refuses instances with more variables than its cap.
class VariableCapError : public Error {
public:
  VariableCapError(std::size_t variables, std::size_t cap)
      : Error("instance has " + std::to_string(variables) + " variables, exceeding the oracle cap of " +
              std::to_string(cap) + " (raise it with --max-vars)"),
        variables_(variables), cap_(cap) {}

  std::size_t variables() const noexcept { return variables_; }
  std::size_t cap() const noexcept { return cap_; }

private:
  std::size_t variables_;
  std::size_t cap_;
};

} // namespace postimp
