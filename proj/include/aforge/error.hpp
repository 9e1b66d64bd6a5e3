#pragma once

#include <stdexcept>
#include <string>

namespace aforge {

enum class ErrorKind {
  Domain,
  InvalidArgument,
  Parse,
  NotRepresentable,
  Unsupported,
  Unconverged,
  MixedSign,
  NotPowerLaw,
  TailDivergent,
};

const char* to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries a kind so callers (the CLI in
// particular) can map it to an exit code without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& what);

}  // namespace aforge
