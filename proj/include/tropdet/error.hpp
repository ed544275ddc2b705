#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tropical {

enum class Errc {
  InvalidArgument,
  NonCoprime,
  WrongOrder,
  Overflow,
  Parse,
  TooLarge,
  UnequalRowSums,
  WrongOrientation,
  InfeasiblePair,
  PreconditionViolated,
  CapExceeded,
  PostconditionFailed,
};

const char* to_string(Errc code) noexcept;

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Raised by the matrix text reader; line numbers are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(Errc::Parse, "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace tropical
