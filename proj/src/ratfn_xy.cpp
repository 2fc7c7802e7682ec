// Copyright 2026 The qwalk authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "qwalk/ratfn_xy.hpp"

namespace qwalk {

PolyY::PolyY(std::vector<RatFn> c) : c_(std::move(c)) { trim(); }
PolyY::PolyY(const RatFn& c) {
  if (!c.is_zero()) c_.push_back(c);
}
PolyY PolyY::y_power(int k) {
  std::vector<RatFn> c(k + 1);
  c[k] = RatFn(1);
  return PolyY(std::move(c));
}
void PolyY::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

PolyY operator+(const PolyY& a, const PolyY& b) {
  std::vector<RatFn> c(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < c.size(); ++i) {
    if (i < a.c_.size()) c[i] = a.c_[i];
    if (i < b.c_.size()) c[i] += b.c_[i];
  }
  return PolyY(std::move(c));
}
PolyY operator-(const PolyY& a, const PolyY& b) {
  std::vector<RatFn> c(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < c.size(); ++i) {
    if (i < a.c_.size()) c[i] = a.c_[i];
    if (i < b.c_.size()) c[i] -= b.c_[i];
  }
  return PolyY(std::move(c));
}
PolyY operator*(const PolyY& a, const PolyY& b) {
  if (a.is_zero() || b.is_zero()) return PolyY();
  std::vector<RatFn> c(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      c[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return PolyY(std::move(c));
}
PolyY operator*(const PolyY& a, const RatFn& s) {
  std::vector<RatFn> c = a.c_;
  for (auto& x : c) x = x * s;
  return PolyY(std::move(c));
}

std::pair<PolyY, PolyY> PolyY::divmod(const PolyY& a, const PolyY& b) {
  if (b.is_zero()) fail(ErrorCode::NotInvertible, "division by zero in Q(x)[y]");
  if (a.degree() < b.degree()) return {PolyY(), a};
  std::vector<RatFn> r = a.c_, q(a.degree() - b.degree() + 1);
  RatFn inv = b.lead().inverse();
  int db = b.degree();
  for (int k = a.degree(); k >= db; --k) {
    if (r[k].is_zero()) continue;
    RatFn f = r[k] * inv;
    q[k - db] = f;
    for (int j = 0; j <= db; ++j) r[k - db + j] -= f * b.c_[j];
  }
  r.resize(db);
  return {PolyY(std::move(q)), PolyY(std::move(r))};
}

PolyY PolyY::monic() const {
  if (is_zero()) return *this;
  return *this * lead().inverse();
}

PolyY PolyY::gcd(const PolyY& a, const PolyY& b) {
  PolyY x = a, y = b;
  while (!y.is_zero()) {
    PolyY r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

RatFnXY::RatFnXY(const PolyY& num, const PolyY& den) : num_(num), den_(den) {
  if (den_.is_zero()) fail(ErrorCode::NotInvertible, "zero denominator in Q(x)(y)");
  normalize();
}

void RatFnXY::normalize() {
  if (num_.is_zero()) {
    den_ = PolyY(RatFn(1));
    return;
  }
  if (den_.degree() > 0) {
    PolyY g = PolyY::gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = PolyY::divmod(num_, g).first;
      den_ = PolyY::divmod(den_, g).first;
    }
  }
  RatFn l = den_.lead();
  if (l != RatFn(1)) {
    RatFn inv = l.inverse();
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

RatFnXY RatFnXY::x() { return RatFnXY(RatFn(Poly::x())); }
RatFnXY RatFnXY::y() { return RatFnXY(PolyY::y_power(1), PolyY(RatFn(1))); }

RatFnXY RatFnXY::from_lpoly(const LPoly2& p) {
  if (p.is_zero()) return RatFnXY();
  int ylo = std::min(0, p.min_exp(1));
  std::map<int, LPoly1> rows;
  for (const auto& [e, c] : p.terms()) rows[e[1] - ylo].add_term({e[0]}, c);
  std::vector<RatFn> c(p.max_exp(1) - ylo + 1);
  for (const auto& [j, row] : rows) c[j] = to_ratfn(row);
  return RatFnXY(PolyY(std::move(c)), PolyY::y_power(-ylo));
}

RatFnXY RatFnXY::operator-() const {
  RatFnXY r(*this);
  r.num_ = PolyY() - r.num_;
  return r;
}
RatFnXY RatFnXY::inverse() const {
  if (is_zero()) fail(ErrorCode::NotInvertible, "inverse of zero in Q(x)(y)");
  return RatFnXY(den_, num_);
}
RatFnXY operator+(const RatFnXY& a, const RatFnXY& b) {
  if (a.den_ == b.den_) return RatFnXY(a.num_ + b.num_, a.den_);
  return RatFnXY(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
RatFnXY operator-(const RatFnXY& a, const RatFnXY& b) { return a + (-b); }
RatFnXY operator*(const RatFnXY& a, const RatFnXY& b) { return RatFnXY(a.num_ * b.num_, a.den_ * b.den_); }
RatFnXY operator/(const RatFnXY& a, const RatFnXY& b) { return a * b.inverse(); }

RatFnXY RatFnXY::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  RatFnXY r(RatFn(1));
  for (int i = 0; i < n; ++i) r = r * *this;
  return r;
}

namespace {
RatFnXY eval_poly(const Poly& p, const RatFnXY& X) {
  RatFnXY r;
  for (int k = p.degree(); k >= 0; --k) r = r * X + RatFnXY(RatFn(p.coeff(k)));
  return r;
}
RatFnXY eval_polyy(const PolyY& p, const RatFnXY& X, const RatFnXY& Y) {
  RatFnXY r;
  for (int k = p.degree(); k >= 0; --k) {
    const RatFn& c = p.coeff(k);
    RatFnXY cv = c.is_zero() ? RatFnXY() : eval_poly(c.num(), X) / eval_poly(c.den(), X);
    r = r * Y + cv;
  }
  return r;
}
}  // namespace

RatFnXY RatFnXY::substitute(const RatFnXY& X, const RatFnXY& Y) const {
  return eval_polyy(num_, X, Y) / eval_polyy(den_, X, Y);
}

bool RatFnXY::laurent_in_y(std::map<int, RatFn>& out) const {
  out.clear();
  int k = den_.degree();
  for (int i = 0; i < k; ++i)
    if (!den_.coeff(i).is_zero()) return false;
  for (int j = 0; j <= num_.degree(); ++j)
    if (!num_.coeff(j).is_zero()) out[j - k] = num_.coeff(j);
  return true;
}

bool RatFnXY::to_lpoly2(LPoly2& out) const {
  std::map<int, RatFn> rows;
  if (!laurent_in_y(rows)) return false;
  LPoly2 r;
  for (const auto& [j, c] : rows) {
    if (!c.is_laurent()) return false;
    for (const auto& [e, v] : to_lpoly1(c).terms()) r.add_term({e[0], j}, v);
  }
  out = r;
  return true;
}

std::string RatFnXY::to_string() const {
  auto show = [](const PolyY& p) {
    std::string s;
    for (int j = 0; j <= p.degree(); ++j) {
      if (p.coeff(j).is_zero()) continue;
      if (!s.empty()) s += " + ";
      s += "(" + p.coeff(j).to_string("x") + ")";
      if (j > 0) s += "*y^" + std::to_string(j);
    }
    return s.empty() ? std::string("0") : s;
  };
  return "[" + show(num_) + "] / [" + show(den_) + "]";
}

RatFnXY lpoly2_substitute(const LPoly2& a, const RatFnXY& X, const RatFnXY& Y) {
  bool needx = false, needy = false;
  for (const auto& [e, c] : a.terms()) {
    needx |= e[0] < 0;
    needy |= e[1] < 0;
  }
  if ((needx && X.is_zero()) || (needy && Y.is_zero()))
    fail(ErrorCode::ZeroSubstitutionImage, "substitution image is zero");
  RatFnXY r;
  for (const auto& [e, c] : a.terms()) r = r + RatFnXY(RatFn(c)) * X.pow(e[0]) * Y.pow(e[1]);
  return r;
}

}  // namespace qwalk
