#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace recprs {

enum class ErrorKind {
  NonSquare,
  IndexOutOfRange,
  SingularMatrix,
  ZeroPolynomial,
  DivisionByZeroPoly,
  DegreeTooSmall,
  DegreeOrder,
  ZeroInput,
  JOutOfRange,
  IncompletePrs,
  SingularU,
  EmptySequence,
  ConstantInput,
  InvalidRule,
  InexactDivision,
};

std::string_view to_string(ErrorKind kind);

/// Domain error raised by every library operation. `level()` is set for
/// errors tied to a recursion level (SingularU).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what,
        std::optional<int> level = std::nullopt)
      : std::runtime_error(what), kind_(kind), level_(level) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<int> level() const noexcept { return level_; }

 private:
  ErrorKind kind_;
  std::optional<int> level_;
};

}  // namespace recprs
