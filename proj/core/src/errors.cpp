#include "koiter/errors.hpp"

namespace koiter {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NoRoot: return "NoRoot";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::SingularSystem: return "SingularSystem";
    case ErrorKind::WindowTooSmall: return "WindowTooSmall";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::AssemblyDegenerate: return "AssemblyDegenerate";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::QuadratureUnderResolved: return "QuadratureUnderResolved";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace koiter
