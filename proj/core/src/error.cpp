#include "tm32/error.hpp"

namespace tm32 {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidDigit: return "invalid-digit";
    case ErrorKind::GenerationStalled: return "generation-stalled";
    case ErrorKind::Inconsistent: return "inconsistency";
    case ErrorKind::MissingRule: return "missing-rule";
    case ErrorKind::UnsupportedAlphabet: return "unsupported-alphabet";
    case ErrorKind::InvalidParameter: return "invalid-parameter";
    case ErrorKind::InvalidPattern: return "invalid-pattern";
    case ErrorKind::DegeneratePattern: return "degenerate-pattern";
    case ErrorKind::EmptyWindow: return "empty-window";
    case ErrorKind::NotFound: return "not-found";
    case ErrorKind::InsufficientData: return "insufficient-data";
    case ErrorKind::Alignment: return "alignment";
    case ErrorKind::Level: return "level";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::UnknownWord: return "unknown-word";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace tm32
