// Copyright 2026 The qwalk authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace qwalk {

enum class ErrorCode {
  InvalidArgument,
  NonUnitDenominator,
  ZeroSubstitutionImage,
  NotInvertible,
  ResidueObstruction,
  SubstitutionNotVanishing,
  NonUnitBase,
  GroupOrderExceeded,
  ResidualNonzero,
  DimensionUnsupported,
  DepthInsufficient,
  InsufficientTerms,
  NoOperatorFound,
  SingularIndex,
  ValidationFailed,
  BadParameters,
  ArgumentOutOfRange,
  QuadratureNoConvergence,
  IdentityFailed,
  Io,
  NotFound,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode c, const std::string& msg) { throw Error(c, msg); }

}  // namespace qwalk
