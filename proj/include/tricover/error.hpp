#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tricover {

enum class ErrorCode {
  NonPrimeModulus,
  SmallCharacteristic,
  FieldMismatch,
  DivisionByZero,
  VariableMismatch,
  MissingAssignment,
  SyntaxError,
  UnknownVariable,
  RationalInFiniteField,
  NotOnVariety,
  NotOnGamma,
  NotOnZ,
  NotOnFiber,
  FiberNotSplit,
  InfiniteFieldUnsupported,
  ParseError,
  InvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

/// Every failure raised by the library. `position()` is a byte offset for
/// SyntaxError and a 1-based line number for ParseError.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> position = std::nullopt)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code),
        position_(position) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> position_;
};

}  // namespace tricover
