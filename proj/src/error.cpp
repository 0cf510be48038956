#include "loopcomm/error.hpp"

namespace loopcomm {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Malformed: return "Malformed";
    case ErrorKind::NotLatin: return "NotLatin";
    case ErrorKind::NoNeutral: return "NoNeutral";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotAbelianGroup: return "NotAbelianGroup";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::CocycleInvalid: return "CocycleInvalid";
    case ErrorKind::NotNeutralAt: return "NotNeutralAt";
    case ErrorKind::NotAbelianIn: return "NotAbelianIn";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace loopcomm
