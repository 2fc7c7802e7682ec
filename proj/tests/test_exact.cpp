// Copyright 2026 The qwalk authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include <doctest.h>

#include <random>

#include "qwalk/bigf.hpp"
#include "qwalk/poly.hpp"
#include "qwalk/rat.hpp"

using namespace qwalk;

TEST_SUITE("exact") {
TEST_CASE("rational parsing and printing") {
  CHECK(parse_rat("6/4") == rat(3, 2));
  CHECK(parse_rat("-7") == Rat(-7));
  CHECK(to_string(rat(-3, 9)) == "-1/3");
  CHECK(pow_ui(rat(2, 3), 5) == rat(32, 243));
  CHECK_THROWS_AS(parse_rat("1/0"), Error);
  CHECK_THROWS_AS(parse_rat("abc"), Error);
}

TEST_CASE("polynomial division and gcd") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> d(-9, 9);
  for (int it = 0; it < 50; ++it) {
    std::vector<Rat> a(6), b(4), g(3);
    for (auto& v : a) v = d(rng);
    for (auto& v : b) v = d(rng);
    for (auto& v : g) v = d(rng);
    g[2] = 1;
    Poly A(a), B(b), G(g);
    if (B.is_zero()) continue;
    auto [q, r] = Poly::divmod(A, B);
    CHECK(q * B + r == A);
    CHECK(r.degree() < B.degree());
    Poly gg = Poly::gcd(A * G, B * G);
    CHECK(Poly::divmod(gg, G.monic()).second.is_zero());
  }
  CHECK(Poly::gcd(Poly(), Poly()).is_zero());
}

TEST_CASE("polynomial composition and evaluation") {
  Poly p = Poly::from_ints({1, -2, 0, 3});
  Poly g = Poly::from_ints({0, 1, 1});
  Poly c = p.compose(g);
  for (int x = -3; x <= 3; ++x) CHECK(c.eval(Rat(x)) == p.eval(g.eval(Rat(x))));
  CHECK(p.derivative() == Poly::from_ints({-2, 0, 9}));
  CHECK(p.reversed() == Poly::from_ints({3, 0, -2, 1}));
}

TEST_CASE("rational function arithmetic normalizes") {
  RatFn f(Poly::from_ints({-1, 0, 1}), Poly::from_ints({-1, 1}));  // (x^2-1)/(x-1)
  CHECK(f.is_poly());
  CHECK(f == RatFn(Poly::from_ints({1, 1})));
  RatFn h = RatFn(1) / RatFn(Poly::from_ints({1, 1}));
  CHECK(h * RatFn(Poly::from_ints({1, 1})) == RatFn(1));
  CHECK(RatFn::laurent_monomial(rat(2), -3).is_laurent());
  CHECK_THROWS(RatFn(1) / RatFn(0));
}

TEST_CASE("BigF agrees with known constants") {
  BigF pi = BigF::pi(200);
  BigF ref = BigF::from_string("3.14159265358979323846264338327950288419716939937510582097494459", 200);
  CHECK(close_rel(pi, ref, 190));
  BigF two(2, 200);
  CHECK(close_rel(sqrt(two) * sqrt(two), two, 195));
  CHECK(close_rel(pow(two, rat(1, 2)), sqrt(two), 195));
  CHECK(close_rel(exp(log(BigF(rat(7, 3), 200))), BigF(rat(7, 3), 200), 190));
}
}
