#pragma once

#include <stdexcept>
#include <string>

namespace gmdual {

enum class ErrorKind {
  InvalidInput,
  NotStabilized,
  WindowInsufficient,
  TruncatedResolution,
  NotCohenMacaulay,
  ZeroModule,
};

const char* to_string(ErrorKind kind);

/// Failure raised by any computation in the library; the kind decides the CLI exit code.
class ComputationError : public std::runtime_error {
 public:
  ComputationError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gmdual
