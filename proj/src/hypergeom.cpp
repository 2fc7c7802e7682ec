// Copyright 2026 The qwalk authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "qwalk/hypergeom.hpp"

namespace qwalk {

void HGParams::validate() const {
  if (c <= 0 && is_integer(c)) fail(ErrorCode::BadParameters, "lower parameter is zero or a negative integer");
}

Rat pochhammer(const Rat& x, unsigned n) {
  Rat r = 1;
  for (unsigned k = 0; k < n; ++k) r *= x + k;
  return r;
}

TSeries hg_series(const HGParams& p, int N) {
  p.validate();
  TSeries s(0, N);
  Rat term = 1;
  for (int n = 0; n <= N; ++n) {
    s.set_coeff(n, term);
    term *= (p.a + n) * (p.b + n) / ((p.c + n) * (n + 1));
  }
  return s;
}

BigF hg_numeric(const HGParams& p, const BigF& w, mpfr_prec_t prec) {
  p.validate();
  mpfr_prec_t wp = prec + 32;
  BigF x = w.with_precision(wp);
  if (abs(x) > BigF(Rat(17, 20), wp)) fail(ErrorCode::ArgumentOutOfRange, "|w| > 0.85 in hypergeometric evaluation");
  BigF sum(1L, wp), term(1L, wp);
  BigF eps = pow_si(BigF(2L, wp), -static_cast<long>(prec) - 8);
  for (long n = 0; n < 200000; ++n) {
    Rat f = (p.a + n) * (p.b + n) / ((p.c + n) * (n + 1));
    if (f == 0) break;
    term = term * BigF(f, wp) * x;
    sum += term;
    if (abs(term) < eps * abs(sum) && n > 4) break;
  }
  return sum.with_precision(prec);
}

BigF elliptic_K(const BigF& k, mpfr_prec_t prec) {
  mpfr_prec_t wp = prec + 16;
  BigF k2 = k.with_precision(wp) * k.with_precision(wp);
  BigF h = hg_numeric(HGParams{rat(1, 2), rat(1, 2), Rat(1)}, k2, wp);
  return (BigF::pi(wp) / BigF(2L, wp) * h).with_precision(prec);
}

BigF elliptic_E(const BigF& k, mpfr_prec_t prec) {
  mpfr_prec_t wp = prec + 16;
  BigF k2 = k.with_precision(wp) * k.with_precision(wp);
  BigF h = hg_numeric(HGParams{rat(-1, 2), rat(1, 2), Rat(1)}, k2, wp);
  return (BigF::pi(wp) / BigF(2L, wp) * h).with_precision(prec);
}

namespace {

TSeries hg_at(const Rat& a, const Rat& b, const Rat& c, const RatFn& w, int N) {
  return compose_rational(hg_series(HGParams{a, b, c}, N), w, N);
}

TSeries unit_pow(const Poly& base, const Rat& e, int N) { return pow_rational(TSeries::from_poly(base, N), e); }

}  // namespace

IdentityReport verify_identity(const std::string& id, int N) {
  TSeries lhs, rhs;
  Poly u = Poly::x();
  if (id == "duplication") {
    // (1 - u/2)^{1/2} 2F1(1/2,1/2;1;u) = 2F1(1/4,3/4;1;(u/(2-u))^2)
    lhs = unit_pow(Poly(1) - u * rat(1, 2), rat(1, 2), N) * hg_at(rat(1, 2), rat(1, 2), Rat(1), RatFn(u), N);
    RatFn q(u, Poly(2) - u);
    rhs = hg_at(rat(1, 4), rat(3, 4), Rat(1), q * q, N);
  } else if (id == "goursat_quarter") {
    // (1 + 3u)^{1/4} 2F1(1/4,3/4;1;u) = 2F1(1/12,5/12;1; 27u(1-u)^2/(1+3u)^3)
    lhs = unit_pow(Poly(1) + u * Rat(3), rat(1, 4), N) * hg_at(rat(1, 4), rat(3, 4), Rat(1), RatFn(u), N);
    Poly one_m = Poly(1) - u, one_p = Poly(1) + u * Rat(3);
    rhs = hg_at(rat(1, 12), rat(5, 12), Rat(1), RatFn(u * one_m * one_m * Rat(27), one_p.pow(3)), N);
  } else if (id == "goursat_third") {
    // (1 - 8v/9)^{1/4} 2F1(1/3,2/3;1;v) = 2F1(1/12,5/12;1; 64v^3(1-v)/(9-8v)^3)
    lhs = unit_pow(Poly(1) - u * rat(8, 9), rat(1, 4), N) * hg_at(rat(1, 3), rat(2, 3), Rat(1), RatFn(u), N);
    Poly nine = Poly(9) - u * Rat(8);
    rhs = hg_at(rat(1, 12), rat(5, 12), Rat(1), RatFn(u.pow(3) * (Poly(1) - u) * Rat(64), nine.pow(3)), N);
  } else {
    fail(ErrorCode::InvalidArgument, "unknown identity " + id);
  }
  IdentityReport rep;
  rep.order = std::min({lhs.order(), rhs.order(), N});
  int d = lhs.truncate(rep.order).first_difference(rhs.truncate(rep.order));
  if (d != INT_MIN) {
    rep.ok = false;
    rep.first_mismatch = d;
  }
  return rep;
}

}  // namespace qwalk
