#pragma once

#include <stdexcept>
#include <string>

namespace fourdom {

enum class ErrorCode {
  NotSymmetric,
  NotUnimodular,
  NotHermitian,
  NotUnimodularAfterAugmentation,
  Degenerate,
  RankMismatch,
  RankTooLarge,
  InvalidDescriptor,
  UnsupportedPi1Combination,
  Pi1Mismatch,
  BoundTooLarge,
  ParseError,
  InvalidArgument,
  Internal,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fourdom
