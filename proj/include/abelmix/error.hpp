#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace abelmix {

enum class ErrorKind {
  invalid_group,
  invalid_argument,
  not_irreducible,
  type_violation,
  threshold_undefined,
  cap_exceeded,
  bound_not_applicable,
  config,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_group: return "invalid-group";
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::not_irreducible: return "not-irreducible";
    case ErrorKind::type_violation: return "type-violation";
    case ErrorKind::threshold_undefined: return "threshold-undefined";
    case ErrorKind::cap_exceeded: return "cap-exceeded";
    case ErrorKind::bound_not_applicable: return "bound-not-applicable";
    case ErrorKind::config: return "config";
  }
  return "unknown";
}

/// Every failure raised by the library carries a kind so callers (and the
/// CLI exit-status mapping) can branch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace abelmix
