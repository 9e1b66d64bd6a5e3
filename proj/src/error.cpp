#include "aforge/error.hpp"

namespace aforge {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Domain: return "domain error";
    case ErrorKind::InvalidArgument: return "invalid argument";
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::NotRepresentable: return "not representable";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::Unconverged: return "unconverged";
    case ErrorKind::MixedSign: return "mixed sign";
    case ErrorKind::NotPowerLaw: return "not a power law";
    case ErrorKind::TailDivergent: return "tail divergent";
  }
  return "unknown";
}

void raise(ErrorKind kind, const std::string& what) {
  throw Error(kind, std::string(to_string(kind)) + ": " + what);
}

}  // namespace aforge
