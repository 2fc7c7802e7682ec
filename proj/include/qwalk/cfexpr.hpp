// Copyright 2026 The qwalk authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qwalk/hypergeom.hpp"
#include "qwalk/walks.hpp"

namespace qwalk {

enum class CFKind { Rational, Pow, HG, Int0t, Sum, Prod, Scale, InvT };

struct CFNode;
using CFExpr = std::shared_ptr<const CFNode>;

struct CFNode {
  CFKind kind;
  RatFn f;         // Rational payload, HG argument w
  Rat r;           // Pow exponent, Scale factor
  HGParams hg;     // HG parameters
  std::vector<CFExpr> kids;
};

CFExpr cf_rational(const RatFn& f);
CFExpr cf_pow(CFExpr base, const Rat& e);
CFExpr cf_hg(const HGParams& p, const RatFn& w);
CFExpr cf_int0t(CFExpr child);
CFExpr cf_sum(std::vector<CFExpr> kids);
CFExpr cf_prod(std::vector<CFExpr> kids);
CFExpr cf_scale(const Rat& s, CFExpr child);
CFExpr cf_invt(CFExpr child);

std::string cf_kind_name(CFKind k);
CFKind cf_kind_from_name(const std::string& s);
std::string cf_to_string(const CFExpr& e);

// exact expansion mod t^{N+1}
TSeries cf_eval_series(const CFExpr& e, int N);
// radius: a lower bound for the distance to the nearest singularity of any node,
// used to place the Taylor window of each integral
BigF cf_eval_numeric(const CFExpr& e, const BigF& t, mpfr_prec_t prec, const Rat& radius);

struct ClosedForm {
  std::string name;
  int model = 0;
  Spec spec = Spec::S11;
  CFExpr expr;
  Rat radius;  // convergence radius of the target series
};

std::vector<ClosedForm> builtin_closed_forms();
// innermost integrands of the case 7 and case 5 formulas
CFExpr integrand_case7();
CFExpr integrand_case5();
// s1 = 1/t, s2 = (4t^2-8t+1)/t^3, s3 = (12t^2-1)/t^3, s4 = (2t+1)^(1/2)(1-6t)^(3/2)/t^3
std::vector<CFExpr> case18_basis();

}  // namespace qwalk
