#pragma once

#include <stdexcept>
#include <string>

namespace loopcomm {

enum class ErrorKind {
  Malformed,
  NotLatin,
  NoNeutral,
  CapExceeded,
  NotAbelianGroup,
  ArityMismatch,
  NotNormal,
  CocycleInvalid,
  NotNeutralAt,
  NotAbelianIn,
  Io,
};

const char* to_string(ErrorKind kind) noexcept;

// Every failure reported by the library is an Error carrying a kind, so
// callers (the CLI in particular) can triage without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace loopcomm
