// Copyright 2026 The qwalk authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qwalk/cfexpr.hpp"
#include "qwalk/const_expr.hpp"
#include "qwalk/dfinite.hpp"
#include "qwalk/models.hpp"

namespace qwalk {

struct AsymSpec {
  int model = 0;
  Spec spec = Spec::S11;
  ConstExpr rho;
  Rat gamma;
  int period = 1;
  std::vector<ConstExpr> kappa;  // empty() entries: class is identically zero
  std::string oeis;
  bool algebraic = false;
};

AsymSpec asym_spec(const ModelRegistry& reg, int model, Spec s);

struct Annihilator {
  DiffOp op;
  std::string source;  // "builtin:<name>" or "guessed"
  int holdout = 0;
};

// builtin operator when one targets (model, spec), else guess from dp_terms DP coefficients
Annihilator annihilator_for(const ModelData& m, Spec s, int dp_terms = 200);

// a_0..a_N by unrolling the annihilator's recurrence from DP initial terms;
// throws ValidationFailed if the first 31 terms (at least) disagree with DP
std::vector<Int> terms_for(const ModelData& m, Spec s, int N, const Annihilator* ann = nullptr);

struct Extrapolation {
  BigF value;
  BigF spread;  // |top level - previous level|
  int points = 0;
};

// Richardson in 1/m on u_m = a_m m^gamma / rho^m, m = r mod p, m in [N/2, N];
// root = 2 extrapolates in m^(-1/2) instead, for half-integer gaps between exponents
Extrapolation extrapolate(const std::vector<Int>& a, const BigF& rho, const Rat& gamma, int r, int p, int levels = 8,
                          mpfr_prec_t prec = 256, int root = 1);
// same on an explicit sequence u(m), m = r mod p
Extrapolation extrapolate_sequence(const std::function<BigF(long)>& u, long N, int r, int p, int levels,
                                   mpfr_prec_t prec, int root = 1);

struct KappaRow {
  int model = 0;
  Spec spec = Spec::S11;
  int cls = 0;
  int period = 1;
  std::string rho;
  Rat gamma;
  std::string kappa_expected;  // "" = class expected identically zero
  double kappa_measured = 0;
  double relerr = 0;
  double spread = 0;
  int root = 1;  // expansion variable m^(-1/root)
  bool pass = false;
};

std::vector<KappaRow> check_kappa(const ModelRegistry& reg, int model, Spec s, int N = 4000, double tol = 1e-4,
                                  const std::vector<Int>* terms = nullptr);

struct IntegralSpec {
  int which = 7;
  Rat end;
  std::vector<std::pair<int, Rat>> polar_part;  // (exponent, coefficient), exponents < 0
  CFExpr integrand;
  Rat expected;
};

IntegralSpec integral_spec(int which);  // 7 or 5

struct IntegralResult {
  BigF value;
  int nodes = 0;
  int taylor_order = 0;
};

IntegralResult integral_I(const IntegralSpec& spec, mpfr_prec_t prec);

struct ConjectureLine {
  std::string name;
  std::string quantity;
  std::string target;
  double measured = 0;
  double error = 0;
  double tol = 0;
  bool match = false;
  std::string status;
};

std::vector<ConjectureLine> conjecture_report(const ModelRegistry& reg, mpfr_prec_t prec = 128, int N = 4000);

}  // namespace qwalk
