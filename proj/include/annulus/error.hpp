#ifndef ANNULUS_ERROR_HPP
#define ANNULUS_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace annulus {

enum class ErrorKind {
  InvalidArgument,  // bad dimensions, radii out of range, malformed input values
  Parse,            // map-description syntax errors
  NotCertified,     // a sphere-pair certificate (or declared pair) failed
  Precondition,     // an operation's documented precondition does not hold
  Contradiction,    // an internal cross-check disagrees with a theorem-level invariant
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string token, const std::string& message)
      : Error(ErrorKind::Parse, format(line, column, token, message)),
        line_(line),
        column_(column),
        token_(std::move(token)) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& token() const noexcept { return token_; }

 private:
  static std::string format(std::size_t line, std::size_t column, const std::string& token,
                            const std::string& message) {
    return std::to_string(line) + ":" + std::to_string(column) + ": " + message +
           (token.empty() ? std::string() : " near '" + token + "'");
  }

  std::size_t line_;
  std::size_t column_;
  std::string token_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace annulus

#endif
