// Copyright 2026 The qwalk authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qwalk/series.hpp"

namespace qwalk {

// L = sum_i p_i(t) d^i with polynomial coefficients
class DiffOp {
 public:
  DiffOp() = default;
  explicit DiffOp(std::vector<Poly> coeffs);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Poly>& coeffs() const { return c_; }
  const Poly& coeff(int i) const { return c_.at(i); }
  int degree() const;  // max degree over coefficients

  // integer coefficients, content 1, top coefficient of p_r positive
  DiffOp primitive() const;
  friend bool operator==(const DiffOp& a, const DiffOp& b) { return a.c_ == b.c_; }
  friend bool operator!=(const DiffOp& a, const DiffOp& b) { return !(a == b); }
  bool equal_up_to_scaling(const DiffOp& o) const { return primitive() == o.primitive(); }

  std::string to_string() const;

 private:
  std::vector<Poly> c_;
};

// sum_i r_i(t) d^i over Q(t)
class RatDiffOp {
 public:
  RatDiffOp() = default;
  explicit RatDiffOp(std::vector<RatFn> coeffs);
  RatDiffOp(const DiffOp& L);  // NOLINT
  static RatDiffOp identity() { return RatDiffOp(std::vector<RatFn>{RatFn(1)}); }
  static RatDiffOp d() { return RatDiffOp(std::vector<RatFn>{RatFn(0), RatFn(1)}); }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<RatFn>& coeffs() const { return c_; }
  RatFn coeff(int i) const { return i >= 0 && i <= order() ? c_[i] : RatFn(); }

  friend RatDiffOp operator+(const RatDiffOp& a, const RatDiffOp& b);
  friend RatDiffOp operator-(const RatDiffOp& a, const RatDiffOp& b);
  friend bool operator==(const RatDiffOp& a, const RatDiffOp& b) { return a.c_ == b.c_; }
  // left multiplication by a function
  RatDiffOp scaled(const RatFn& r) const;
  std::string to_string() const;

 private:
  void trim();
  std::vector<RatFn> c_;
};

TSeries apply(const DiffOp& L, const TSeries& f);
TSeries apply(const RatDiffOp& L, const TSeries& f);

// non-commutative product, d r = r d + r'
RatDiffOp mul(const RatDiffOp& A, const RatDiffOp& B);
DiffOp clear_denominators(const RatDiffOp& L);
// L = Q D + R with order(R) < order(D)
std::pair<RatDiffOp, RatDiffOp> right_divide(const RatDiffOp& L, const RatDiffOp& D);

// sum_s c_s(n) a_{n+s} = 0, valid for every integer n with a_m = 0 for m < 0
struct PRec {
  std::vector<Poly> coeffs;
  int order() const { return static_cast<int>(coeffs.size()) - 1; }
  // integer roots of the leading coefficient, ascending
  std::vector<long> leading_roots() const;
  std::string to_string() const;
};

PRec to_recurrence(const DiffOp& L);
// extend init (a_0, a_1, ...) to a_0..a_N
std::vector<Rat> unroll(const PRec& rec, const std::vector<Rat>& init, int N);
// number of initial terms unroll needs
int required_initial_terms(const PRec& rec);
// integer sequences only; nullopt as soon as a division is inexact
std::optional<std::vector<Int>> unroll_integer(const PRec& rec, const std::vector<Int>& init, int N);

struct GuessResult {
  DiffOp op;
  int r = 0, d = 0;
  int equations_used = 0;
  int holdout_checked = 0;  // equations the solver never saw, all verified zero
};

// one operator of order <= r and degree <= d annihilating f, or nullopt
std::optional<GuessResult> guess(const TSeries& f, int r, int d, int guard = 10);
// smallest (r, d) in lexicographic order within the bounds
std::optional<GuessResult> guess_minimal(const TSeries& f, int rmax, int dmax, int guard = 10);

// nullspace of an integer matrix over Q (fraction-free elimination)
std::vector<std::vector<Rat>> nullspace_bareiss(const std::vector<std::vector<Int>>& rows, int ncols);

struct BuiltinOperator {
  std::string name;
  DiffOp op;
  std::string target;  // description of the series it annihilates
};

DiffOp king_operator();     // third order, degree 6
RatDiffOp king_left_factor();  // second order
RatDiffOp king_right_factor();  // d + 1/t
DiffOp case18_operator();
std::map<std::string, DiffOp> builtin_operators();

}  // namespace qwalk
