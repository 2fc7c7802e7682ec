// Copyright 2026 The qwalk authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "qwalk/poly.hpp"

#include <sstream>

namespace qwalk {

Poly::Poly(std::vector<Rat> c) : c_(std::move(c)) { trim(); }
Poly::Poly(const Rat& c) {
  if (c != 0) c_.push_back(c);
}
Poly Poly::monomial(const Rat& c, int k) {
  if (k < 0) fail(ErrorCode::InvalidArgument, "negative monomial degree");
  std::vector<Rat> v(k + 1);
  v[k] = c;
  return Poly(std::move(v));
}
Poly Poly::from_ints(std::initializer_list<long> c) {
  std::vector<Rat> v;
  for (long x : c) v.emplace_back(x);
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int Poly::valuation() const {
  for (size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != 0) return static_cast<int>(k);
  return 0;
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}
Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}
Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}
Poly& Poly::operator*=(const Rat& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= s;
  return *this;
}
Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rat> r(a.c_.size() + b.c_.size() - 1);
  Rat tmp;
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      mpq_mul(tmp.get_mpq_t(), a.c_[i].get_mpq_t(), b.c_[j].get_mpq_t());
      r[i + j] += tmp;
    }
  }
  return Poly(std::move(r));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) fail(ErrorCode::NotInvertible, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Rat> r = a.c_;
  std::vector<Rat> q(a.degree() - b.degree() + 1);
  Rat inv = 1 / b.lead();
  int db = b.degree();
  for (int k = a.degree(); k >= db; --k) {
    if (r[k] == 0) continue;
    Rat f = r[k] * inv;
    q[k - db] = f;
    for (int j = 0; j <= db; ++j) r[k - db + j] -= f * b.c_[j];
  }
  r.resize(db);
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = r.is_zero() ? r : r.monic();
  }
  return x.is_zero() ? x : x.monic();
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * (1 / lead());
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rat> r(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k) r[k - 1] = c_[k] * static_cast<long>(k);
  return Poly(std::move(r));
}

Poly Poly::shift_down(int k) const {
  if (k <= 0) return shift_up(-k);
  for (int i = 0; i < k && i <= degree(); ++i)
    if (c_[i] != 0) fail(ErrorCode::InvalidArgument, "shift_down would drop nonzero terms");
  if (k > degree()) return Poly();
  return Poly(std::vector<Rat>(c_.begin() + k, c_.end()));
}

Poly Poly::shift_up(int k) const {
  if (k < 0) return shift_down(-k);
  if (is_zero() || k == 0) return *this;
  std::vector<Rat> r(k);
  r.insert(r.end(), c_.begin(), c_.end());
  return Poly(std::move(r));
}

Rat Poly::eval(const Rat& x) const {
  Rat r = 0;
  for (int k = degree(); k >= 0; --k) r = r * x + c_[k];
  return r;
}

BigF Poly::eval(const BigF& x) const {
  BigF r(x.precision());
  for (int k = degree(); k >= 0; --k) r = r * x + BigF(c_[k], x.precision());
  return r;
}

Poly Poly::compose(const Poly& g) const {
  Poly r;
  for (int k = degree(); k >= 0; --k) r = r * g + Poly(c_[k]);
  return r;
}

Poly Poly::pow(unsigned n) const {
  Poly r(Rat(1)), b = *this;
  while (n) {
    if (n & 1) r = r * b;
    n >>= 1;
    if (n) b = b * b;
  }
  return r;
}

Poly Poly::reversed() const {
  std::vector<Rat> r(c_.rbegin(), c_.rend());
  return Poly(std::move(r));
}

Rat Poly::primitive_scale() const {
  if (is_zero()) return Rat(1);
  Int l = 1, g = 0;
  for (const auto& x : c_) {
    if (x == 0) continue;
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
  }
  for (const auto& x : c_) {
    if (x == 0) continue;
    Int v = x.get_num() * (l / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  Rat s(l, g);
  s.canonicalize();
  if (lead() < 0) s = -s;
  return s;
}

std::string Poly::to_string(const char* var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    if (c_[k] == 0) continue;
    Rat c = c_[k];
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    Rat a = abs(c);
    if (k == 0 || a != 1) os << a.get_str();
    if (k > 0) {
      if (k == 0 || a != 1) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------- RatFn

RatFn::RatFn(const Poly& num) : num_(num), den_(Rat(1)) {}
RatFn::RatFn(const Poly& num, const Poly& den) : num_(num), den_(den) {
  if (den_.is_zero()) fail(ErrorCode::NotInvertible, "rational function with zero denominator");
  normalize();
}

RatFn RatFn::laurent_monomial(const Rat& c, int k) {
  if (k >= 0) return RatFn(Poly::monomial(c, k));
  return RatFn(Poly(c), Poly::monomial(Rat(1), -k));
}

void RatFn::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(Rat(1));
    return;
  }
  if (den_.degree() > 0) {
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = Poly::divmod(num_, g).first;
      den_ = Poly::divmod(den_, g).first;
    }
  }
  Rat l = den_.lead();
  if (l != 1) {
    Rat inv = 1 / l;
    num_ *= inv;
    den_ *= inv;
  }
}

bool RatFn::is_laurent() const {
  for (int k = 0; k < den_.degree(); ++k)
    if (den_.coeff(k) != 0) return false;
  return true;
}

RatFn RatFn::operator-() const {
  RatFn r(*this);
  r.num_ = -r.num_;
  return r;
}
RatFn RatFn::inverse() const {
  if (is_zero()) fail(ErrorCode::NotInvertible, "inverse of zero rational function");
  return RatFn(den_, num_);
}
RatFn operator+(const RatFn& a, const RatFn& b) {
  if (a.den_ == b.den_) return RatFn(a.num_ + b.num_, a.den_);
  return RatFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
RatFn operator-(const RatFn& a, const RatFn& b) {
  if (a.den_ == b.den_) return RatFn(a.num_ - b.num_, a.den_);
  return RatFn(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
RatFn operator*(const RatFn& a, const RatFn& b) { return RatFn(a.num_ * b.num_, a.den_ * b.den_); }
RatFn operator/(const RatFn& a, const RatFn& b) {
  if (b.is_zero()) fail(ErrorCode::NotInvertible, "division by zero rational function");
  return RatFn(a.num_ * b.den_, a.den_ * b.num_);
}

RatFn RatFn::derivative() const {
  return RatFn(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}
Rat RatFn::eval(const Rat& x) const {
  Rat d = den_.eval(x);
  if (d == 0) fail(ErrorCode::NotInvertible, "rational function evaluated at a pole");
  return num_.eval(x) / d;
}
BigF RatFn::eval(const BigF& x) const { return num_.eval(x) / den_.eval(x); }

RatFn RatFn::compose(const RatFn& g) const {
  RatFn n, d;
  for (int k = num_.degree(); k >= 0; --k) n = n * g + RatFn(num_.coeff(k));
  for (int k = den_.degree(); k >= 0; --k) d = d * g + RatFn(den_.coeff(k));
  return n / d;
}

RatFn RatFn::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  return RatFn(num_.pow(n), den_.pow(n));
}

std::string RatFn::to_string(const char* var) const {
  if (is_poly()) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

}  // namespace qwalk
