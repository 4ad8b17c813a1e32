#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace starring {

enum class ErrorKind {
  kInvalidParameter,
  kSizeLimit,
  kRingMismatch,
  kNotAnIdeal,
  kMissingCover,
  kPreconditionViolated,
  kUnsupportedScalars,
  kUnknownTheorem,
  kSubjectKindMismatch,
  kBudgetExceeded,
  kLiteralParse,
  kEmptyFamily,
  kSyntax,
  kUnknownIdentifier,
  kDuplicateName,
};

std::string_view to_string(ErrorKind kind);

/// Base error type for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace starring
