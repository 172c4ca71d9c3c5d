/* Copyright 2026 periodcalc contributors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
 */
#pragma once

#include <stdexcept>
#include <string>

namespace periodcalc {

enum class ErrorCode {
  InvalidInput,
  NotACMType,
  NotSelfDual,
  ParityMismatch,
  IncompatibleLift,
  NotCritical,
  NoCriticalValues,
  MidpointDegenerate,
  NotInTopInterval,
  MiddleTypePresent,
  ParityHypothesisFailed,
  MissingSigma,
  HypothesisFailed,
  OutOfAutomorphicRange,
  NotASubgroup,
  RangeError,
};

const char* error_code_name(ErrorCode code);

// Carries a machine-readable code and, for input errors, a JSON pointer.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string pointer = {})
      : std::runtime_error(message), code_(code), pointer_(std::move(pointer)) {}

  ErrorCode code() const { return code_; }
  const std::string& pointer() const { return pointer_; }

 private:
  ErrorCode code_;
  std::string pointer_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message,
                              std::string pointer = {}) {
  throw Error(code, message, std::move(pointer));
}

}  // namespace periodcalc
