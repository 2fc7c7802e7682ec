// Copyright 2026 The qwalk authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <map>
#include <vector>

#include "qwalk/lpoly.hpp"

namespace qwalk {

// Polynomial in y over the field Q(x).
class PolyY {
 public:
  PolyY() = default;
  explicit PolyY(std::vector<RatFn> c);
  PolyY(const RatFn& c);  // NOLINT
  static PolyY y_power(int k);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<RatFn>& coeffs() const { return c_; }
  RatFn coeff(int k) const { return k >= 0 && k <= degree() ? c_[k] : RatFn(); }
  const RatFn& lead() const { return c_.back(); }

  friend PolyY operator+(const PolyY& a, const PolyY& b);
  friend PolyY operator-(const PolyY& a, const PolyY& b);
  friend PolyY operator*(const PolyY& a, const PolyY& b);
  friend PolyY operator*(const PolyY& a, const RatFn& s);
  friend bool operator==(const PolyY& a, const PolyY& b) { return a.c_ == b.c_; }

  static std::pair<PolyY, PolyY> divmod(const PolyY& a, const PolyY& b);
  static PolyY gcd(const PolyY& a, const PolyY& b);
  PolyY monic() const;

 private:
  void trim();
  std::vector<RatFn> c_;
};

// Element of Q(x)(y) in canonical form: gcd(num, den) = 1 and den monic in y.
class RatFnXY {
 public:
  RatFnXY() : num_(), den_(RatFn(1)) {}
  RatFnXY(const RatFn& c) : num_(c), den_(RatFn(1)) {}  // NOLINT
  RatFnXY(const PolyY& num, const PolyY& den);
  static RatFnXY x();
  static RatFnXY y();
  static RatFnXY from_lpoly(const LPoly2& p);

  const PolyY& num() const { return num_; }
  const PolyY& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFnXY operator-() const;
  RatFnXY inverse() const;
  friend RatFnXY operator+(const RatFnXY& a, const RatFnXY& b);
  friend RatFnXY operator-(const RatFnXY& a, const RatFnXY& b);
  friend RatFnXY operator*(const RatFnXY& a, const RatFnXY& b);
  friend RatFnXY operator/(const RatFnXY& a, const RatFnXY& b);
  friend bool operator==(const RatFnXY& a, const RatFnXY& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatFnXY& a, const RatFnXY& b) { return !(a == b); }
  RatFnXY pow(int n) const;

  // F(X, Y)
  RatFnXY substitute(const RatFnXY& X, const RatFnXY& Y) const;

  // When den is y^k: coefficients of y^j as elements of Q(x). Empty optional
  // semantics via the bool.
  bool laurent_in_y(std::map<int, RatFn>& out) const;
  // When the value is a Laurent polynomial in x and y.
  bool to_lpoly2(LPoly2& out) const;

  std::string to_string() const;

 private:
  void normalize();
  PolyY num_, den_;
};

// substitute x -> X, y -> Y into a Laurent polynomial
RatFnXY lpoly2_substitute(const LPoly2& a, const RatFnXY& X, const RatFnXY& Y);

}  // namespace qwalk
