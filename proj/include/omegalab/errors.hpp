#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace omegalab {

enum class ErrorKind {
  InvalidSpec,
  NotProper,
  CapExceeded,
  RingMismatch,
  FamilyMismatch,
  NotInvariant,
  InternalBoundViolated,
  KernelNotContained,
  FactorizationTimeout,
  Usage,
};

std::string_view to_string(ErrorKind kind);

/// Every engine failure is reported through this type; `kind()` lets callers
/// (the CLI in particular) map failures onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::NotProper: return "NotProper";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::FamilyMismatch: return "FamilyMismatch";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::InternalBoundViolated: return "InternalBoundViolated";
    case ErrorKind::KernelNotContained: return "KernelNotContained";
    case ErrorKind::FactorizationTimeout: return "FactorizationTimeout";
    case ErrorKind::Usage: return "Usage";
  }
  return "Unknown";
}

}  // namespace omegalab
