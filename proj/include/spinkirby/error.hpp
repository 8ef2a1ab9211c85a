#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace spinkirby {

enum class ErrorCode {
  ParseError,
  DimensionMismatch,
  NotSymmetric,
  NotCharacteristic,
  IndexOutOfRange,
  MissingCharacteristicVector,
  InvalidScheme,
  InvalidSeifertMatrix,
  UnknownKnot,
  InvalidArgument,
  NotIsolated,
  NotUnitFramed,
  SameIndex,
  DegeneratePresentation,
  AmbiguousExtension,
  NoExtension,
  NotNormalized,
  OddSecondDerivative,
  TooManySolutions,
  Overflow,
  InvariantViolated,
};

const char* to_string(ErrorCode code);

// Malformed or mathematically invalid input data (as opposed to a
// well-formed input that violates an operation's precondition).
bool is_input_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what,
        std::optional<std::size_t> position = std::nullopt,
        std::vector<std::size_t> subset = {})
      : std::runtime_error(what),
        code_(code),
        position_(position),
        subset_(std::move(subset)) {}

  ErrorCode code() const noexcept { return code_; }
  // Row index, move step or source line, depending on the code.
  const std::optional<std::size_t>& position() const noexcept { return position_; }
  // Offending component subset (extension errors).
  const std::vector<std::size_t>& subset() const noexcept { return subset_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> position_;
  std::vector<std::size_t> subset_;
};

}  // namespace spinkirby
