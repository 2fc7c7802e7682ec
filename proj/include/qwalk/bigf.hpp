// Copyright 2026 The qwalk authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <mpfr.h>

#include <climits>

#include <string>

#include "qwalk/rat.hpp"

namespace qwalk {

// MPFR value that owns its precision. Binary operations round to the larger
// of the two operand precisions.
class BigF {
 public:
  explicit BigF(mpfr_prec_t prec = 64);
  BigF(long v, mpfr_prec_t prec);
  BigF(const Rat& v, mpfr_prec_t prec);
  BigF(const Int& v, mpfr_prec_t prec);
  static BigF from_double(double v, mpfr_prec_t prec);
  static BigF from_string(const std::string& s, mpfr_prec_t prec);
  static BigF pi(mpfr_prec_t prec);

  BigF(const BigF& o);
  BigF(BigF&& o) noexcept;
  BigF& operator=(const BigF& o);
  BigF& operator=(BigF&& o) noexcept;
  ~BigF();

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  BigF with_precision(mpfr_prec_t prec) const;

  mpfr_srcptr get() const { return v_; }
  mpfr_ptr raw() { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  std::string to_string(int digits = 0) const;
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  long exponent() const { return is_zero() ? LONG_MIN / 2 : mpfr_get_exp(v_); }

  BigF operator-() const;
  BigF& operator+=(const BigF& o);
  BigF& operator-=(const BigF& o);
  BigF& operator*=(const BigF& o);
  BigF& operator/=(const BigF& o);

  friend BigF operator+(BigF a, const BigF& b) { return a += b; }
  friend BigF operator-(BigF a, const BigF& b) { return a -= b; }
  friend BigF operator*(BigF a, const BigF& b) { return a *= b; }
  friend BigF operator/(BigF a, const BigF& b) { return a /= b; }
  friend bool operator<(const BigF& a, const BigF& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const BigF& a, const BigF& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const BigF& a, const BigF& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const BigF& a, const BigF& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator==(const BigF& a, const BigF& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

 private:
  mpfr_t v_;
};

BigF abs(const BigF& a);
BigF sqrt(const BigF& a);
BigF pow(const BigF& a, const BigF& b);
BigF pow(const BigF& a, const Rat& e);
BigF pow_si(const BigF& a, long n);
BigF log(const BigF& a);
BigF exp(const BigF& a);
BigF cos(const BigF& a);
// |a - b| <= 2^{-bits} * max(1, |b|)
bool close_rel(const BigF& a, const BigF& b, long bits);

}  // namespace qwalk
