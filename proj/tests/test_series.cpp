// Copyright 2026 The qwalk authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include <doctest.h>

#include <random>

#include "qwalk/series.hpp"

using namespace qwalk;

namespace {

TSeries random_series(std::mt19937& rng, int minExp, int order, bool unit = false) {
  std::uniform_int_distribution<long> d(-5, 5);
  std::vector<Rat> c(order - minExp + 1);
  for (auto& v : c) v = rat(d(rng), 1 + std::abs(d(rng)));
  if (unit) c[0] = 1;
  return TSeries(minExp, std::move(c));
}

bool same(const TSeries& a, const TSeries& b) { return a.agrees_with(b); }

}  // namespace

TEST_SUITE("series") {
TEST_CASE("ring axioms on truncated series") {
  std::mt19937 rng(11);
  for (int it = 0; it < 20; ++it) {
    TSeries a = random_series(rng, -2, 15), b = random_series(rng, 0, 12), c = random_series(rng, 1, 14);
    CHECK(same((a * b) * c, a * (b * c)));
    CHECK(same(a * (b + c), a * b + a * c));
    CHECK(same(a * b, b * a));
    CHECK((a * b).order() == std::min(a.order() + b.valuation(), b.order() + a.valuation()));
  }
}

TEST_CASE("reciprocal and powers") {
  std::mt19937 rng(12);
  for (int it = 0; it < 20; ++it) {
    TSeries u = random_series(rng, 0, 20, true);
    TSeries one = u * recip(u);
    CHECK(one.coeff(0) == 1);
    for (int k = 1; k <= one.order(); ++k) CHECK(one.coeff(k) == 0);
    TSeries h = pow_rational(u, rat(1, 2));
    CHECK(same(h * h, u));
    CHECK(same(pow_rational(u, rat(2, 3)) * pow_rational(u, rat(1, 3)), u));
    CHECK(same(pow_rational(u, Rat(3)), pow_int(u, 3)));
  }
  TSeries z(0, std::vector<Rat>{0, 1});
  CHECK_THROWS_AS(pow_rational(z, rat(1, 2)), Error);
  CHECK_THROWS_AS(recip(TSeries(0, 5)), Error);
}

TEST_CASE("derivative and integral") {
  std::mt19937 rng(13);
  TSeries a = random_series(rng, 0, 18);
  CHECK(same(derive(integrate(a)), a));
  TSeries b = random_series(rng, 0, 10), c = random_series(rng, 0, 10);
  CHECK(same(derive(b * c), derive(b) * c + b * derive(c)));
  TSeries bad(-1, std::vector<Rat>{1, 2});
  CHECK_THROWS_AS(integrate(bad), Error);
}

TEST_CASE("composition is a ring map") {
  std::mt19937 rng(14);
  RatFn w(Poly::from_ints({0, 1, -2}), Poly::from_ints({1, 3}));
  for (int it = 0; it < 10; ++it) {
    TSeries a = random_series(rng, 0, 16), b = random_series(rng, 0, 16);
    CHECK(same(compose_rational(a * b, w, 16), compose_rational(a, w, 16) * compose_rational(b, w, 16)));
    CHECK(same(compose_rational(a + b, w, 16), compose_rational(a, w, 16) + compose_rational(b, w, 16)));
  }
}

TEST_CASE("composition against a binomial oracle") {
  // 1/(1-u) at u = t/(1-t) is (1-t)/(1-2t): 1, 1, 2, 4, 8, ...
  TSeries geo(0, std::vector<Rat>(31, Rat(1)));
  TSeries r = compose_rational(geo, RatFn(Poly::from_ints({0, 1}), Poly::from_ints({1, -1})), 30);
  CHECK(r.coeff(0) == 1);
  Rat p = 1;
  for (int k = 1; k <= 30; ++k, p *= 2) CHECK(r.coeff(k) == p);
  CHECK_THROWS_AS(compose_rational(geo, RatFn(Poly::from_ints({1, 1})), 5), Error);
}

TEST_CASE("rational expansion at zero and infinity") {
  RatFn f(Poly(1), Poly::from_ints({0, 1, -1}));  // 1/(t - t^2)
  TSeries s = ratfn_expand_at_zero(f, 10);
  CHECK(s.min_exp() == -1);
  for (int k = -1; k <= 10; ++k) CHECK(s.coeff(k) == 1);
  TSeries inf = ratfn_expand_at_infinity(RatFn(Poly(1), Poly::from_ints({-1, 1})), 8);  // 1/(x-1)
  CHECK(inf.valuation() == 1);
  for (int k = 1; k <= inf.order(); ++k) CHECK(inf.coeff(k) == 1);
}

TEST_CASE("polar part and numeric evaluation") {
  TSeries s(-2, std::vector<Rat>{3, -1, 5, 2});
  TSeries pp = polar_part(s);
  CHECK(pp.coeff(-2) == 3);
  CHECK(pp.coeff(0) == 0);
  BigF t(rat(1, 4), 128);
  BigF v = eval_series(s, t);
  CHECK(close_rel(v, BigF(Rat(48 - 4 + 5) + rat(1, 2), 128), 120));
}
}
