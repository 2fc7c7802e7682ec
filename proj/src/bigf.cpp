// Copyright 2026 The qwalk authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "qwalk/bigf.hpp"

#include <algorithm>
#include <memory>

namespace qwalk {

namespace {
mpfr_prec_t checked(mpfr_prec_t p) {
  if (p < MPFR_PREC_MIN || p > (1L << 24)) fail(ErrorCode::InvalidArgument, "precision out of range");
  return p;
}
}  // namespace

BigF::BigF(mpfr_prec_t prec) {
  mpfr_init2(v_, checked(prec));
  mpfr_set_zero(v_, 1);
}
BigF::BigF(long v, mpfr_prec_t prec) {
  mpfr_init2(v_, checked(prec));
  mpfr_set_si(v_, v, MPFR_RNDN);
}
BigF::BigF(const Rat& v, mpfr_prec_t prec) {
  mpfr_init2(v_, checked(prec));
  mpfr_set_q(v_, v.get_mpq_t(), MPFR_RNDN);
}
BigF::BigF(const Int& v, mpfr_prec_t prec) {
  mpfr_init2(v_, checked(prec));
  mpfr_set_z(v_, v.get_mpz_t(), MPFR_RNDN);
}
BigF BigF::from_double(double v, mpfr_prec_t prec) {
  BigF r(prec);
  mpfr_set_d(r.v_, v, MPFR_RNDN);
  return r;
}
BigF BigF::from_string(const std::string& s, mpfr_prec_t prec) {
  BigF r(prec);
  if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0 && !r.is_finite())
    fail(ErrorCode::InvalidArgument, "bad float '" + s + "'");
  return r;
}
BigF BigF::pi(mpfr_prec_t prec) {
  BigF r(prec);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

BigF::BigF(const BigF& o) {
  mpfr_init2(v_, o.precision());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}
BigF::BigF(BigF&& o) noexcept {
  mpfr_init2(v_, o.precision());
  mpfr_swap(v_, o.v_);
}
BigF& BigF::operator=(const BigF& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.precision());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}
BigF& BigF::operator=(BigF&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}
BigF::~BigF() { mpfr_clear(v_); }

BigF BigF::with_precision(mpfr_prec_t prec) const {
  BigF r(prec);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

std::string BigF::to_string(int digits) const {
  if (digits <= 0) digits = static_cast<int>(precision() * 0.30103) + 1;
  std::unique_ptr<char[]> buf;
  int n = mpfr_snprintf(nullptr, 0, "%.*Rg", digits, v_);
  buf.reset(new char[n + 1]);
  mpfr_snprintf(buf.get(), n + 1, "%.*Rg", digits, v_);
  return std::string(buf.get());
}

namespace {
// grow lhs precision so the result is rounded at max(p_lhs, p_rhs)
void widen(mpfr_ptr lhs, mpfr_srcptr rhs) {
  if (mpfr_get_prec(rhs) > mpfr_get_prec(lhs)) mpfr_prec_round(lhs, mpfr_get_prec(rhs), MPFR_RNDN);
}
}  // namespace

BigF BigF::operator-() const {
  BigF r(*this);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}
BigF& BigF::operator+=(const BigF& o) {
  widen(v_, o.v_);
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigF& BigF::operator-=(const BigF& o) {
  widen(v_, o.v_);
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigF& BigF::operator*=(const BigF& o) {
  widen(v_, o.v_);
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigF& BigF::operator/=(const BigF& o) {
  widen(v_, o.v_);
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigF abs(const BigF& a) {
  BigF r(a);
  mpfr_abs(r.raw(), r.get(), MPFR_RNDN);
  return r;
}
BigF sqrt(const BigF& a) {
  BigF r(a);
  mpfr_sqrt(r.raw(), a.get(), MPFR_RNDN);
  return r;
}
BigF pow(const BigF& a, const BigF& b) {
  BigF r(std::max(a.precision(), b.precision()));
  mpfr_pow(r.raw(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
BigF pow(const BigF& a, const Rat& e) {
  if (e.get_den() == 1 && e.get_num().fits_slong_p()) return pow_si(a, e.get_num().get_si());
  BigF r(a.precision());
  if (e.get_num().fits_slong_p() && e.get_den().fits_ulong_p()) {
    // root first keeps the rounding error at one ulp per step
    mpfr_rootn_ui(r.raw(), a.get(), e.get_den().get_ui(), MPFR_RNDN);
    mpfr_pow_si(r.raw(), r.get(), e.get_num().get_si(), MPFR_RNDN);
    return r;
  }
  return pow(a, BigF(e, a.precision() + 32));
}
BigF pow_si(const BigF& a, long n) {
  BigF r(a.precision());
  mpfr_pow_si(r.raw(), a.get(), n, MPFR_RNDN);
  return r;
}
BigF log(const BigF& a) {
  BigF r(a.precision());
  mpfr_log(r.raw(), a.get(), MPFR_RNDN);
  return r;
}
BigF exp(const BigF& a) {
  BigF r(a.precision());
  mpfr_exp(r.raw(), a.get(), MPFR_RNDN);
  return r;
}
BigF cos(const BigF& a) {
  BigF r(a.precision());
  mpfr_cos(r.raw(), a.get(), MPFR_RNDN);
  return r;
}

bool close_rel(const BigF& a, const BigF& b, long bits) {
  mpfr_prec_t p = std::max(a.precision(), b.precision());
  BigF d = abs(a - b);
  BigF scale = abs(b);
  BigF one(1, p);
  if (scale < one) scale = one;
  BigF tol(p);
  mpfr_mul_2si(tol.raw(), scale.get(), -bits, MPFR_RNDN);
  return d <= tol;
}

}  // namespace qwalk
