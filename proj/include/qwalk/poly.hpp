// Copyright 2026 The qwalk authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qwalk/bigf.hpp"
#include "qwalk/rat.hpp"

namespace qwalk {

// Dense univariate polynomial over Q, ascending coefficients, no trailing zeros.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> c);
  Poly(const Rat& c);  // NOLINT: constants convert implicitly
  Poly(long c) : Poly(Rat(c)) {}  // NOLINT
  static Poly monomial(const Rat& c, int k);
  static Poly x() { return monomial(Rat(1), 1); }
  // from integer coefficient list, ascending
  static Poly from_ints(std::initializer_list<long> c);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(int k) const { return k >= 0 && k <= degree() ? c_[k] : Rat(0); }
  const Rat& lead() const { return c_.back(); }
  // smallest k with nonzero coefficient; 0 for the zero polynomial
  int valuation() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rat& s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rat& s) { return a *= s; }
  friend Poly operator*(const Rat& s, Poly a) { return a *= s; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // a = q*b + r, deg r < deg b
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  static Poly gcd(const Poly& a, const Poly& b);  // monic, gcd(0,0) = 0
  Poly monic() const;
  Poly derivative() const;
  Poly shift_down(int k) const;  // divide by x^k, requires valuation >= k
  Poly shift_up(int k) const;    // multiply by x^k
  Rat eval(const Rat& x) const;
  BigF eval(const BigF& x) const;
  Poly compose(const Poly& g) const;  // this(g(x))
  Poly pow(unsigned n) const;
  // x^deg * p(1/x)
  Poly reversed() const;

  // integer coefficients with gcd 1, sign chosen by the caller-visible rule:
  // positive leading coefficient. Returns the scale factor s with result = s*this.
  Rat primitive_scale() const;

  std::string to_string(const char* var = "t") const;

 private:
  void trim();
  std::vector<Rat> c_;
};

// Univariate rational function, gcd-reduced, monic denominator.
class RatFn {
 public:
  RatFn() : num_(), den_(Rat(1)) {}
  RatFn(const Poly& num);  // NOLINT
  RatFn(const Rat& c) : RatFn(Poly(c)) {}  // NOLINT
  RatFn(long c) : RatFn(Poly(c)) {}  // NOLINT
  RatFn(const Poly& num, const Poly& den);
  // c * x^k, k may be negative
  static RatFn laurent_monomial(const Rat& c, int k);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_poly() const { return den_.degree() == 0; }
  // den is a power of x
  bool is_laurent() const;

  RatFn operator-() const;
  RatFn inverse() const;
  friend RatFn operator+(const RatFn& a, const RatFn& b);
  friend RatFn operator-(const RatFn& a, const RatFn& b);
  friend RatFn operator*(const RatFn& a, const RatFn& b);
  friend RatFn operator/(const RatFn& a, const RatFn& b);
  RatFn& operator+=(const RatFn& o) { return *this = *this + o; }
  RatFn& operator-=(const RatFn& o) { return *this = *this - o; }
  RatFn& operator*=(const RatFn& o) { return *this = *this * o; }
  friend bool operator==(const RatFn& a, const RatFn& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatFn& a, const RatFn& b) { return !(a == b); }

  RatFn derivative() const;
  Rat eval(const Rat& x) const;
  BigF eval(const BigF& x) const;
  RatFn compose(const RatFn& g) const;  // this(g(x))
  RatFn pow(int n) const;

  std::string to_string(const char* var = "t") const;

 private:
  void normalize();
  Poly num_, den_;
};

}  // namespace qwalk
