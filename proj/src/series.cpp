// Copyright 2026 The qwalk authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "qwalk/series.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

namespace qwalk {

TSeries::TSeries(int minExp, int order) : min_exp_(minExp) {
  if (order >= minExp) c_.resize(order - minExp + 1);
}
TSeries::TSeries(int minExp, std::vector<Rat> coeffs) : min_exp_(minExp), c_(std::move(coeffs)) {}

TSeries TSeries::from_poly(const Poly& p, int order) {
  TSeries r(0, order);
  for (int k = 0; k <= std::min(order, p.degree()); ++k) r.c_[k] = p.coeff(k);
  return r;
}
TSeries TSeries::constant(const Rat& c, int order) { return from_poly(Poly(c), order); }
TSeries TSeries::monomial(const Rat& c, int k, int order) {
  TSeries r(k, order);
  if (order >= k) r.c_[0] = c;
  return r;
}

Rat TSeries::coeff(int k) const {
  if (k < min_exp_) return Rat(0);
  if (k > order()) fail(ErrorCode::DepthInsufficient, "coefficient t^" + std::to_string(k) + " beyond truncation order " + std::to_string(order()));
  return c_[k - min_exp_];
}

void TSeries::set_coeff(int k, const Rat& v) {
  if (k < min_exp_ || k > order()) fail(ErrorCode::InvalidArgument, "set_coeff outside window");
  c_[k - min_exp_] = v;
}

int TSeries::valuation() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return min_exp_ + static_cast<int>(i);
  return order() + 1;
}

TSeries TSeries::truncate(int n) const {
  if (n > order()) fail(ErrorCode::DepthInsufficient, "truncate beyond known order");
  TSeries r(min_exp_, n);
  for (int k = min_exp_; k <= n; ++k) r.c_[k - min_exp_] = c_[k - min_exp_];
  return r;
}

TSeries TSeries::with_min_exp(int m) const {
  if (m > valuation() && m <= order()) fail(ErrorCode::InvalidArgument, "with_min_exp would drop nonzero terms");
  TSeries r(m, order());
  for (int k = std::max(m, min_exp_); k <= order(); ++k) r.c_[k - m] = c_[k - min_exp_];
  return r;
}

TSeries TSeries::shift(int k) const { return TSeries(min_exp_ + k, c_); }

TSeries TSeries::operator-() const {
  TSeries r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

TSeries operator+(const TSeries& a, const TSeries& b) {
  int lo = std::min(a.min_exp_, b.min_exp_), hi = std::min(a.order(), b.order());
  TSeries r(lo, hi);
  for (int k = lo; k <= hi; ++k) {
    Rat& c = r.c_[k - lo];
    if (k >= a.min_exp_) c += a.c_[k - a.min_exp_];
    if (k >= b.min_exp_) c += b.c_[k - b.min_exp_];
  }
  return r;
}

TSeries operator-(const TSeries& a, const TSeries& b) { return a + (-b); }

TSeries operator*(const TSeries& a, const TSeries& b) {
  int va = a.valuation(), vb = b.valuation();
  int hi = std::min(a.order() + vb, b.order() + va);
  int lo = a.min_exp_ + b.min_exp_;
  TSeries r(lo, hi);
  Rat tmp;
  for (int i = va; i <= a.order(); ++i) {
    const Rat& x = a.c_[i - a.min_exp_];
    if (x == 0) continue;
    for (int j = vb; j <= b.order() && i + j <= hi; ++j) {
      const Rat& y = b.c_[j - b.min_exp_];
      if (y == 0) continue;
      mpq_mul(tmp.get_mpq_t(), x.get_mpq_t(), y.get_mpq_t());
      r.c_[i + j - lo] += tmp;
    }
  }
  return r;
}

TSeries operator*(const TSeries& a, const Rat& s) {
  TSeries r(a);
  for (auto& x : r.c_) x *= s;
  return r;
}

TSeries operator*(const Poly& p, const TSeries& a) {
  if (p.is_zero()) return TSeries(a.min_exp_, a.order());
  int vp = p.valuation();
  int hi = a.order() + vp;
  int lo = a.min_exp_ + vp;
  TSeries r(lo, hi);
  Rat tmp;
  for (int i = vp; i <= p.degree(); ++i) {
    const Rat& x = p.coeffs()[i];
    if (x == 0) continue;
    for (int j = a.min_exp_; j <= a.order() && i + j <= hi; ++j) {
      const Rat& y = a.c_[j - a.min_exp_];
      if (y == 0) continue;
      mpq_mul(tmp.get_mpq_t(), x.get_mpq_t(), y.get_mpq_t());
      r.c_[i + j - lo] += tmp;
    }
  }
  return r;
}

int TSeries::first_difference(const TSeries& o) const {
  int lo = std::min(min_exp_, o.min_exp_), hi = std::min(order(), o.order());
  for (int k = lo; k <= hi; ++k)
    if (coeff(k) != o.coeff(k)) return k;
  return INT_MIN;
}

bool TSeries::agrees_with(const TSeries& o) const { return first_difference(o) == INT_MIN; }

std::string TSeries::to_string(const char* var) const {
  std::ostringstream os;
  bool first = true;
  for (int k = min_exp_; k <= order(); ++k) {
    const Rat& c = c_[k - min_exp_];
    if (c == 0) continue;
    if (!first) os << " + ";
    os << c.get_str();
    if (k != 0) os << "*" << var << "^" << k;
    first = false;
  }
  if (first) os << "0";
  os << " + O(" << var << "^" << order() + 1 << ")";
  return os.str();
}

TSeries recip(const TSeries& s) {
  int v = s.valuation();
  if (v > s.order()) fail(ErrorCode::NotInvertible, "reciprocal of a series with no known nonzero term");
  int n = s.order() - v;  // unit part known on 0..n
  std::vector<Rat> u(n + 1), r(n + 1);
  for (int k = 0; k <= n; ++k) u[k] = s.coeff(v + k);
  Rat inv = 1 / u[0];
  Rat acc, tmp;
  r[0] = inv;
  for (int k = 1; k <= n; ++k) {
    acc = 0;
    for (int j = 1; j <= k; ++j) {
      if (u[j] == 0) continue;
      mpq_mul(tmp.get_mpq_t(), u[j].get_mpq_t(), r[k - j].get_mpq_t());
      acc += tmp;
    }
    r[k] = -acc * inv;
  }
  return TSeries(-v, std::move(r));
}

TSeries derive(const TSeries& s) {
  TSeries r(s.min_exp() - 1, s.order() - 1);
  for (int k = s.min_exp(); k <= s.order(); ++k) r.set_coeff(k - 1, s.coeff(k) * k);
  return r;
}

TSeries integrate(const TSeries& s) {
  if (s.min_exp() <= -1 && s.order() >= -1 && s.coeff(-1) != 0)
    fail(ErrorCode::ResidueObstruction, "series has a nonzero t^-1 term");
  if (s.order() < -1) fail(ErrorCode::ResidueObstruction, "t^-1 coefficient unknown");
  TSeries r(s.min_exp() + 1, s.order() + 1);
  for (int k = s.min_exp(); k <= s.order(); ++k) {
    if (k == -1) continue;
    r.set_coeff(k + 1, s.coeff(k) / (k + 1));
  }
  return r;
}

TSeries polar_part(const TSeries& s) {
  TSeries r(s.min_exp(), s.order());
  for (int k = s.min_exp(); k <= std::min(-1, s.order()); ++k) r.set_coeff(k, s.coeff(k));
  return r;
}

TSeries compose_rational(const TSeries& s, const RatFn& w, int N) {
  int vs = s.valuation();
  if (vs < 0) fail(ErrorCode::InvalidArgument, "compose_rational needs a power series");
  if (w.is_zero()) {
    if (s.order() < 0) fail(ErrorCode::DepthInsufficient, "constant term unknown");
    return TSeries::constant(s.coeff(0), N);
  }
  int dv = w.den().valuation();
  int nv = w.num().valuation();
  int vw = nv - dv;
  if (vw < 1) fail(ErrorCode::SubstitutionNotVanishing, "w(0) != 0");
  int cap = (s.order() + 1) * vw - 1;
  int n = std::min(N, cap);
  TSeries W = ratfn_expand_at_zero(w, n);
  int kmax = std::min(s.order(), n / vw);
  TSeries r = TSeries::constant(Rat(0), n);
  for (int k = kmax; k >= 0; --k) {
    r = (r * W).with_min_exp(0);
    if (r.order() > n) r = r.truncate(n);
    // r*W keeps order >= n because W has positive valuation
    r.set_coeff(0, r.coeff(0) + s.coeff(k));
  }
  return r.truncate(n);
}

TSeries pow_rational(const TSeries& s, const Rat& e) {
  int n = s.order();
  if (s.valuation() < 0 || n < 0 || s.coeff(0) != 1)
    fail(ErrorCode::NonUnitBase, "pow_rational needs constant term 1");
  std::vector<Rat> u(n + 1), g(n + 1);
  for (int k = 0; k <= n; ++k) u[k] = s.coeff(k);
  g[0] = 1;
  Rat acc, tmp;
  for (int m = 1; m <= n; ++m) {
    acc = 0;
    for (int k = 1; k <= m; ++k) {
      if (u[k] == 0) continue;
      Rat f = e * k - (m - k);
      if (f == 0) continue;
      mpq_mul(tmp.get_mpq_t(), u[k].get_mpq_t(), g[m - k].get_mpq_t());
      acc += f * tmp;
    }
    g[m] = acc / m;
  }
  return TSeries(0, std::move(g));
}

TSeries pow_int(const TSeries& s, unsigned n) {
  if (n == 0) return TSeries::constant(Rat(1), s.order() - std::min(0, s.valuation()));
  TSeries r = s;
  for (unsigned i = 1; i < n; ++i) r = r * s;
  return r;
}

TSeries ratfn_expand_at_zero(const RatFn& f, int N) {
  int k = f.den().valuation();
  Poly D = f.den().shift_down(k);
  if (D.coeff(0) == 0) fail(ErrorCode::NonUnitDenominator, "denominator not of the form t^k * unit");
  int m = N + k;  // need num/D through t^m
  if (m < 0) return TSeries(-k, N);
  std::vector<Rat> q(m + 1);
  Rat inv = 1 / D.coeff(0), acc, tmp;
  for (int n = 0; n <= m; ++n) {
    acc = f.num().coeff(n);
    for (int j = 1; j <= std::min(n, D.degree()); ++j) {
      if (D.coeffs()[j] == 0) continue;
      mpq_mul(tmp.get_mpq_t(), D.coeffs()[j].get_mpq_t(), q[n - j].get_mpq_t());
      acc -= tmp;
    }
    q[n] = acc * inv;
  }
  return TSeries(-k, std::move(q));
}

TSeries ratfn_expand_at_infinity(const RatFn& f, int K) {
  if (f.is_zero()) return TSeries(0, K);
  int shift = f.den().degree() - f.num().degree();
  RatFn g(f.num().reversed(), f.den().reversed());
  TSeries s = ratfn_expand_at_zero(g, K);
  // reversed(den) has nonzero constant term, so s is a power series
  return s.shift(shift);
}

BigF eval_series(const TSeries& s, const BigF& t) {
  mpfr_prec_t p = t.precision();
  BigF acc(p);
  for (int k = s.order(); k >= std::max(0, s.min_exp()); --k) acc = acc * t + BigF(s.coeff(k), p);
  for (int k = s.min_exp(); k <= std::min(-1, s.order()); ++k) acc += BigF(s.coeff(k), p) * pow_si(t, k);
  return acc;
}

}  // namespace qwalk
