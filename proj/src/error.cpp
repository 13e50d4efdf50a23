#include "smashkit/error.hpp"

namespace smashkit {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::Parse: return "parse";
    case ErrorCode::CapExceeded: return "cap-exceeded";
    case ErrorCode::ContextMismatch: return "context-mismatch";
    case ErrorCode::DivisionByZero: return "division-by-zero";
    case ErrorCode::NotFactorized: return "not-factorized";
    case ErrorCode::NotNormal: return "not-normal";
    case ErrorCode::NotAbelian: return "not-abelian";
    case ErrorCode::NotNilpotent: return "not-nilpotent";
    case ErrorCode::NotFrobenius: return "not-frobenius";
    case ErrorCode::Decomposition: return "decomposition";
    case ErrorCode::Mismatch: return "mismatch";
    case ErrorCode::Internal: return "internal";
  }
  return "unknown";
}

}  // namespace smashkit
