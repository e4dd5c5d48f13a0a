#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace koiter {

/**
 * \brief Failure categories raised by the library.
 *
 * InvalidArgument marks inputs that violate a documented precondition; every
 * other kind is a numerical failure of an otherwise valid computation.
 */
enum class ErrorKind {
  InvalidArgument,
  NoRoot,
  NonConvergence,
  SingularSystem,
  WindowTooSmall,
  EmptySet,
  AssemblyDegenerate,
  ZeroDenominator,
  QuadratureUnderResolved,
};

/// \brief Stable name of an error kind, as printed by the command-line tool.
std::string_view to_string(ErrorKind kind) noexcept;

/// \brief Exception carrying an ErrorKind next to a human-readable message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }
  [[nodiscard]] std::string_view name() const noexcept { return to_string(kind_); }
  [[nodiscard]] bool is_numerical() const noexcept { return kind_ != ErrorKind::InvalidArgument; }

 private:
  ErrorKind kind_;
};

/// \brief Throws InvalidArgument with the given message unless the condition holds.
inline void require(bool condition, const std::string& message) {
  if (!condition) throw Error(ErrorKind::InvalidArgument, message);
}

}  // namespace koiter
