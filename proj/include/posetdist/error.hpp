#pragma once

#include <stdexcept>
#include <string>

namespace posetdist {

enum class ErrorCode {
  ParseError,
  CycleDetected,
  DuplicateElement,
  EmptyName,
  InvalidName,
  EmptyPoset,
  UnknownElement,
  NotComparable,
  NoUpperBound,
  NoLeastUpperBound,
  NoLowerBound,
  NotAJoinSemilattice,
  Disconnected,
  DistanceUndefined,
  NotATreeOrder,
  InvalidParameter,
  SizeCapExceeded,
  IoError,
};

const char* error_code_name(ErrorCode code) noexcept;

// Every failure the library reports is a PosetError carrying one of the codes
// above; the C API maps the code one-to-one onto its status enum.
class PosetError : public std::runtime_error {
 public:
  PosetError(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace posetdist
