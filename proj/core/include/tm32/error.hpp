#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tm32 {

enum class ErrorKind {
  InvalidDigit,
  GenerationStalled,
  Inconsistent,
  MissingRule,
  UnsupportedAlphabet,
  InvalidParameter,
  InvalidPattern,
  DegeneratePattern,
  EmptyWindow,
  NotFound,
  InsufficientData,
  Alignment,
  Level,
  Parse,
  UnknownWord,
  Io,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries one of the kinds above so
// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace tm32
