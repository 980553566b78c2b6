#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace riordan {

enum class ErrorCode {
  DivByNonUnit,
  InnerNotDelta,
  NotInvertible,
  NonSquareConstantTerm,
  InsufficientOrder,
  InvalidSpec,
  NotGroupElement,
  SingularDiagonal,
  ZeroDenominator,
  BadIndexSets,
  ShapeMismatch,
  DegreeTooHigh,
  OutOfDomain,
  NotFoundWithinLimit,
  SyntaxError,
  UncanceledPole,
  ParseError,
  OutOfRange,
};

std::string_view error_code_name(ErrorCode code) noexcept;

// Every library failure is reported as an Error carrying a stable code.
// SyntaxError additionally carries the byte offset into the parsed text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> offset = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> offset() const noexcept { return offset_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> offset_;
};

}  // namespace riordan
