#pragma once

#include <stdexcept>
#include <string>

namespace shiftlab {

enum class ErrorKind {
  InvalidSpec,
  NonPrimitiveSubstitution,
  EmptyLanguage,
  ResourceLimit,
  MalformedTable,
  TableTooShort,
  WordTooShort,
  InadmissibleWindow,
  SpecMismatch,
  RangeShrink,
  DepthTooSmall,
  SeedLengthMismatch,
  NoOverlap,
  InvalidCode,
  ConfigError,
  IoFailure,
};

const char* to_string(ErrorKind kind);

/// Library-wide exception. Every failure mode carries a kind so callers can
/// branch on it without parsing messages.
class ShiftError : public std::runtime_error {
 public:
  ShiftError(ErrorKind kind, const std::string& message);
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& message);

}  // namespace shiftlab
