// Copyright 2026 The qwalk authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <string>

#include "qwalk/series.hpp"

namespace qwalk {

struct HGParams {
  Rat a, b, c;
  void validate() const;  // BadParameters when c is 0 or a negative integer
};

Rat pochhammer(const Rat& x, unsigned n);
// 2F1(a, b; c; t) mod t^{N+1}
TSeries hg_series(const HGParams& p, int N);
// partial sums at working precision prec + 32; |w| <= 0.85
BigF hg_numeric(const HGParams& p, const BigF& w, mpfr_prec_t prec);
BigF elliptic_K(const BigF& k, mpfr_prec_t prec);
BigF elliptic_E(const BigF& k, mpfr_prec_t prec);

struct IdentityReport {
  bool ok = true;
  int order = 0;
  int first_mismatch = -1;
};
// "duplication", "goursat_quarter", "goursat_third"
IdentityReport verify_identity(const std::string& id, int order = 60);

}  // namespace qwalk
