#pragma once

#include <stdexcept>
#include <string>

namespace smashkit {

enum class ErrorCode {
  InvalidArgument,
  Parse,
  CapExceeded,
  ContextMismatch,
  DivisionByZero,
  NotFactorized,
  NotNormal,
  NotAbelian,
  NotNilpotent,
  NotFrobenius,
  Decomposition,
  Mismatch,
  Internal,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failure carrying the byte offset into the offending input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(ErrorCode::Parse, what + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace smashkit
