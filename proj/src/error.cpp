#include "zetaladder/error.hpp"

namespace zl {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::domain: return "domain_error";
    case ErrorCode::non_convergence: return "non_convergence";
    case ErrorCode::capability: return "capability_error";
    case ErrorCode::load: return "load_error";
    case ErrorCode::bracket: return "bracket_error";
    case ErrorCode::usage: return "usage_error";
    case ErrorCode::io: return "io_error";
  }
  return "unknown_error";
}

}  // namespace zl
