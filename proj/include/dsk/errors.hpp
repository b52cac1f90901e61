#pragma once

#include <stdexcept>
#include <string>

namespace dsk {

enum class ErrorCode {
  NotSymmetric,
  NotPositiveDefinite,
  DimensionMismatch,
  UnsupportedKernel,
  NonPositiveCoefficient,
  SizeMismatch,
  ZeroKernel,
  DegenerateScatter,
  DegenerateCovariance,
  Infeasible,
  NotConverged,
  InsufficientClassSamples,
  EmptyTrainingSet,
  LengthMismatch,
  NonFinite,
  InvalidArgument,
  Io,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace dsk
