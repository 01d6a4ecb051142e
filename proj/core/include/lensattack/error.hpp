#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lensattack {

enum class ErrorKind {
  InvalidInput,
  DegenerateFocus,
  SingularDenominator,
  NoImage,
  Collimated,
  Unreachable,
  InvalidRegion,
  InvalidMagnification,
  TooSmall,
  Io,
};

std::string_view error_name(ErrorKind kind) noexcept;

// Every domain failure in the library is reported through this type. The
// kind is what callers branch on; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_name(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace lensattack
