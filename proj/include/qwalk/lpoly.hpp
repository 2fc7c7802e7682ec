// Copyright 2026 The qwalk authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <array>
#include <climits>
#include <map>
#include <string>

#include "qwalk/poly.hpp"

namespace qwalk {

// Sparse Laurent polynomial in D variables; zero coefficients are never stored.
template <int D>
class LPoly {
 public:
  using Exp = std::array<int, D>;

  LPoly() = default;
  static LPoly monomial(const Rat& c, const Exp& e) {
    LPoly p;
    p.add_term(e, c);
    return p;
  }
  static LPoly constant(const Rat& c) { return monomial(c, Exp{}); }

  void add_term(const Exp& e, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  Rat coeff(const Exp& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
  }
  const std::map<Exp, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  int min_exp(int var) const {
    int m = INT_MAX;
    for (const auto& [e, c] : terms_) m = std::min(m, e[var]);
    return m;
  }
  int max_exp(int var) const {
    int m = INT_MIN;
    for (const auto& [e, c] : terms_) m = std::max(m, e[var]);
    return m;
  }

  LPoly operator-() const {
    LPoly r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  LPoly& operator+=(const LPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LPoly& operator-=(const LPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend LPoly operator+(LPoly a, const LPoly& b) { return a += b; }
  friend LPoly operator-(LPoly a, const LPoly& b) { return a -= b; }
  friend LPoly operator*(const LPoly& a, const LPoly& b) {
    LPoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exp e;
        for (int i = 0; i < D; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  friend LPoly operator*(LPoly a, const Rat& s) {
    if (s == 0) return LPoly();
    for (auto& [e, c] : a.terms_) c *= s;
    return a;
  }
  friend bool operator==(const LPoly& a, const LPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LPoly& a, const LPoly& b) { return !(a == b); }

  LPoly shift(const Exp& by) const {
    LPoly r;
    for (const auto& [e, c] : terms_) {
      Exp f;
      for (int i = 0; i < D; ++i) f[i] = e[i] + by[i];
      r.terms_.emplace(f, c);
    }
    return r;
  }
  LPoly derivative(int var) const {
    LPoly r;
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Exp f = e;
      f[var] -= 1;
      r.add_term(f, c * e[var]);
    }
    return r;
  }
  // x_var -> 1/x_var
  LPoly reflect(int var) const {
    LPoly r;
    for (const auto& [e, c] : terms_) {
      Exp f = e;
      f[var] = -f[var];
      r.terms_.emplace(f, c);
    }
    return r;
  }
  LPoly pow(unsigned n) const {
    LPoly r = constant(Rat(1));
    for (unsigned i = 0; i < n; ++i) r = r * *this;
    return r;
  }

  std::string to_string() const {
    static const char* names[] = {"x", "y", "z", "w"};
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (!first) s += " + ";
      first = false;
      s += c.get_str();
      for (int i = 0; i < D; ++i)
        if (e[i] != 0) s += std::string("*") + (D <= 4 ? names[i] : "v") + "^" + std::to_string(e[i]);
    }
    return s;
  }

 private:
  std::map<Exp, Rat> terms_;
};

using LPoly1 = LPoly<1>;
using LPoly2 = LPoly<2>;
using LPoly4 = LPoly<4>;

// x^min * poly -> RatFn
RatFn to_ratfn(const LPoly1& p);
// inverse of to_ratfn; throws unless den is a power of x
LPoly1 to_lpoly1(const RatFn& f);

}  // namespace qwalk
