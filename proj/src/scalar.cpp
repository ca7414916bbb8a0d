#include "gmdual/scalar.hpp"

#include "gmdual/error.hpp"

namespace gmdual {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::NotStabilized: return "not-stabilized";
    case ErrorKind::WindowInsufficient: return "window-insufficient";
    case ErrorKind::TruncatedResolution: return "truncated-resolution";
    case ErrorKind::NotCohenMacaulay: return "not-CM";
    case ErrorKind::ZeroModule: return "zero-module";
  }
  return "unknown";
}

Scalar parse_scalar(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ComputationError(ErrorKind::InvalidInput, "empty number");
  Scalar q;
  if (q.set_str(s, 10) != 0) throw ComputationError(ErrorKind::InvalidInput, "bad number '" + s + "'");
  if (q.get_den() == 0) throw ComputationError(ErrorKind::InvalidInput, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Scalar& s) { return s.get_str(); }

}  // namespace gmdual
