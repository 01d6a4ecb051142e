#include "lensattack/error.hpp"

namespace lensattack {

std::string_view error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::DegenerateFocus: return "DegenerateFocus";
    case ErrorKind::SingularDenominator: return "SingularDenominator";
    case ErrorKind::NoImage: return "NoImage";
    case ErrorKind::Collimated: return "Collimated";
    case ErrorKind::Unreachable: return "Unreachable";
    case ErrorKind::InvalidRegion: return "InvalidRegion";
    case ErrorKind::InvalidMagnification: return "InvalidMagnification";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace lensattack
