#pragma once

#include <stdexcept>
#include <string>

namespace toric {

enum class ErrorCode {
  IndexOutOfRange,
  LengthMismatch,
  InvalidKappa,
  Unbounded,
  NotSimple,
  NotABundle,
  ZeroVector,
  CapRequired,
  ParityError,
  IndexError,
  CertificateInvalid,
};

const char* error_name(ErrorCode code);

// Every recoverable failure of the library surfaces as a DomainError carrying
// one of the codes above; std::invalid_argument is reserved for malformed input
// text (numbers, JSON) and violated preconditions on plain integers.
class DomainError : public std::runtime_error {
 public:
  DomainError(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  const char* name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace toric
