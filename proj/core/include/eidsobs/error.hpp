#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace eidsobs {

/// Failure categories surfaced by the library. The CLI maps them onto exit
/// codes, tests assert on them.
enum class ErrorCode {
  SyntaxError,
  UnknownVariable,
  InvalidArgument,
  OutOfRange,
  ResourceLimit,
  IdealIsUnit,
  NonIsolated,
  NotAGerm,
  NonIntegerResult,
  NotICIS,
  GenericityExhausted,
  DimensionMismatch,
  NotSmoothable,
  RegimeMismatch,
  MissingInput,
  ZeroForm,
  Io,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failure with the zero-based byte offset into the source text.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& message)
      : Error(ErrorCode::SyntaxError,
              "syntax error at position " + std::to_string(position) + ": " +
                  message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Raised when an invariant cannot be computed and has to be supplied.
class MissingInput : public Error {
 public:
  MissingInput(std::string invariant, const std::string& message)
      : Error(ErrorCode::MissingInput, message),
        invariant_(std::move(invariant)) {}

  const std::string& invariant() const noexcept { return invariant_; }

 private:
  std::string invariant_;
};

}  // namespace eidsobs
