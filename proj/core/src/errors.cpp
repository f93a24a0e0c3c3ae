#include "shiftlab/errors.hpp"

namespace shiftlab {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::NonPrimitiveSubstitution: return "NonPrimitiveSubstitution";
    case ErrorKind::EmptyLanguage: return "EmptyLanguage";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::MalformedTable: return "MalformedTable";
    case ErrorKind::TableTooShort: return "TableTooShort";
    case ErrorKind::WordTooShort: return "WordTooShort";
    case ErrorKind::InadmissibleWindow: return "InadmissibleWindow";
    case ErrorKind::SpecMismatch: return "SpecMismatch";
    case ErrorKind::RangeShrink: return "RangeShrink";
    case ErrorKind::DepthTooSmall: return "DepthTooSmall";
    case ErrorKind::SeedLengthMismatch: return "SeedLengthMismatch";
    case ErrorKind::NoOverlap: return "NoOverlap";
    case ErrorKind::InvalidCode: return "InvalidCode";
    case ErrorKind::ConfigError: return "ConfigError";
    case ErrorKind::IoFailure: return "IoFailure";
  }
  return "Unknown";
}

ShiftError::ShiftError(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

void raise(ErrorKind kind, const std::string& message) {
  throw ShiftError(kind, message);
}

}  // namespace shiftlab
