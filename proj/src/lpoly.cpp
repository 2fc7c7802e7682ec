// Copyright 2026 The qwalk authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "qwalk/lpoly.hpp"

namespace qwalk {

RatFn to_ratfn(const LPoly1& p) {
  if (p.is_zero()) return RatFn();
  int lo = std::min(0, p.min_exp(0));
  std::vector<Rat> c(p.max_exp(0) - lo + 1);
  for (const auto& [e, v] : p.terms()) c[e[0] - lo] = v;
  return RatFn(Poly(std::move(c)), Poly::monomial(Rat(1), -lo));
}

LPoly1 to_lpoly1(const RatFn& f) {
  if (!f.is_laurent()) fail(ErrorCode::InvalidArgument, "not a Laurent polynomial: " + f.to_string("x"));
  int k = f.den().degree();
  LPoly1 r;
  for (int i = 0; i <= f.num().degree(); ++i) r.add_term({i - k}, f.num().coeff(i));
  return r;
}

}  // namespace qwalk
