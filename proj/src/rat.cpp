// Copyright 2026 The qwalk authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "qwalk/rat.hpp"

#include <cctype>

namespace qwalk {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NonUnitDenominator: return "NonUnitDenominator";
    case ErrorCode::ZeroSubstitutionImage: return "ZeroSubstitutionImage";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::ResidueObstruction: return "ResidueObstruction";
    case ErrorCode::SubstitutionNotVanishing: return "SubstitutionNotVanishing";
    case ErrorCode::NonUnitBase: return "NonUnitBase";
    case ErrorCode::GroupOrderExceeded: return "GroupOrderExceeded";
    case ErrorCode::ResidualNonzero: return "ResidualNonzero";
    case ErrorCode::DimensionUnsupported: return "DimensionUnsupported";
    case ErrorCode::DepthInsufficient: return "DepthInsufficient";
    case ErrorCode::InsufficientTerms: return "InsufficientTerms";
    case ErrorCode::NoOperatorFound: return "NoOperatorFound";
    case ErrorCode::SingularIndex: return "SingularIndex";
    case ErrorCode::ValidationFailed: return "ValidationFailed";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::ArgumentOutOfRange: return "ArgumentOutOfRange";
    case ErrorCode::QuadratureNoConvergence: return "QuadratureNoConvergence";
    case ErrorCode::IdentityFailed: return "IdentityFailed";
    case ErrorCode::Io: return "Io";
    case ErrorCode::NotFound: return "NotFound";
  }
  return "Unknown";
}

Rat parse_rat(std::string_view s) {
  auto bad = [&] { fail(ErrorCode::InvalidArgument, "malformed rational '" + std::string(s) + "'"); };
  if (s.empty()) bad();
  size_t slash = s.find('/');
  auto check_int = [&](std::string_view part, bool allow_sign) {
    size_t i = 0;
    if (allow_sign && i < part.size() && (part[i] == '-' || part[i] == '+')) ++i;
    if (i == part.size()) bad();
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) bad();
  };
  std::string num(s.substr(0, slash));
  check_int(num, true);
  if (num[0] == '+') num.erase(0, 1);
  Rat r;
  if (slash == std::string_view::npos) {
    r = Rat(Int(num, 10));
  } else {
    std::string den(s.substr(slash + 1));
    check_int(den, false);
    Int d(den, 10);
    if (d == 0) fail(ErrorCode::InvalidArgument, "zero denominator in '" + std::string(s) + "'");
    r = Rat(Int(num, 10), d);
    r.canonicalize();
  }
  return r;
}

std::string to_string(const Rat& r) { return r.get_str(10); }
std::string to_string(const Int& z) { return z.get_str(10); }

Rat pow_ui(const Rat& x, unsigned long n) {
  Rat r;
  mpz_pow_ui(r.get_num_mpz_t(), x.get_num_mpz_t(), n);
  mpz_pow_ui(r.get_den_mpz_t(), x.get_den_mpz_t(), n);
  return r;
}

}  // namespace qwalk
