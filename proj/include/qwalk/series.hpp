// Copyright 2026 The qwalk authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <string>
#include <vector>

#include "qwalk/poly.hpp"

namespace qwalk {

// Truncated Laurent series: coefficients for exponents minExp..order are
// known exactly, everything above order is unknown.
class TSeries {
 public:
  TSeries() : TSeries(0, -1) {}
  // zero series known on [minExp, order]
  TSeries(int minExp, int order);
  TSeries(int minExp, std::vector<Rat> coeffs);
  static TSeries from_poly(const Poly& p, int order);
  static TSeries constant(const Rat& c, int order);
  static TSeries monomial(const Rat& c, int k, int order);

  int min_exp() const { return min_exp_; }
  int order() const { return min_exp_ + static_cast<int>(c_.size()) - 1; }
  const std::vector<Rat>& coeffs() const { return c_; }
  // coefficient of t^k; zero below minExp, throws above order
  Rat coeff(int k) const;
  void set_coeff(int k, const Rat& v);
  // first nonzero exponent, or order()+1 when everything known is zero
  int valuation() const;
  bool is_zero() const { return valuation() > order(); }

  TSeries truncate(int order) const;
  // re-base so that minExp = m (m <= valuation)
  TSeries with_min_exp(int m) const;
  TSeries shift(int k) const;  // multiply by t^k

  TSeries operator-() const;
  friend TSeries operator+(const TSeries& a, const TSeries& b);
  friend TSeries operator-(const TSeries& a, const TSeries& b);
  friend TSeries operator*(const TSeries& a, const TSeries& b);
  friend TSeries operator*(const TSeries& a, const Rat& s);
  friend TSeries operator*(const Rat& s, const TSeries& a) { return a * s; }
  // product with an exact polynomial
  friend TSeries operator*(const Poly& p, const TSeries& a);

  // equal on the common known window
  bool agrees_with(const TSeries& o) const;
  // first exponent in the common window where they differ, or INT_MIN
  int first_difference(const TSeries& o) const;

  std::string to_string(const char* var = "t") const;

 private:
  int min_exp_;
  std::vector<Rat> c_;
};

TSeries recip(const TSeries& s);
TSeries derive(const TSeries& s);
TSeries integrate(const TSeries& s);
TSeries polar_part(const TSeries& s);
// s(w(t)) mod t^{N+1}, N capped by what the inputs determine
TSeries compose_rational(const TSeries& s, const RatFn& w, int N);
TSeries pow_rational(const TSeries& s, const Rat& e);
TSeries pow_int(const TSeries& s, unsigned n);

TSeries ratfn_expand_at_zero(const RatFn& f, int N);
// series in u = 1/x: returns g(u) with f(x) = g(1/x), known on K+1 exponents
// starting at minExp = deg(den) - deg(num)
TSeries ratfn_expand_at_infinity(const RatFn& f, int K);

BigF eval_series(const TSeries& s, const BigF& t);

}  // namespace qwalk
