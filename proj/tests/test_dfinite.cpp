// Copyright 2026 The qwalk authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include <doctest.h>

#include "qwalk/dfinite.hpp"
#include "qwalk/hypergeom.hpp"
#include "qwalk/models.hpp"
#include "qwalk/walks.hpp"

using namespace qwalk;

namespace {

// t(1-t) f'' + (c - (a+b+1) t) f' - a b f
DiffOp hg_operator(const HGParams& p) {
  return DiffOp({Poly(-p.a * p.b), Poly(std::vector<Rat>{p.c, -(p.a + p.b + 1)}),
                 Poly(std::vector<Rat>{0, 1, -1})});
}

std::vector<Rat> head(const TSeries& s, int n) {
  std::vector<Rat> v;
  for (int k = 0; k < n; ++k) v.push_back(s.coeff(k));
  return v;
}

}  // namespace

TEST_SUITE("dfinite") {
TEST_CASE("recurrence unrolling reproduces hypergeometric series") {
  const HGParams ps[] = {{rat(1, 2), rat(1, 2), Rat(1)}, {rat(-1, 2), rat(1, 2), Rat(1)}, {rat(1, 3), rat(2, 3), Rat(2)},
                         {rat(3, 4), rat(-5, 4), rat(1, 2)}};
  for (const auto& p : ps) {
    TSeries f = hg_series(p, 80);
    DiffOp L = hg_operator(p);
    CHECK(apply(L, f).is_zero());
    PRec rec = to_recurrence(L);
    int need = required_initial_terms(rec);
    auto a = unroll(rec, head(f, need), 80);
    for (int k = 0; k <= 80; ++k) CHECK(a[k] == f.coeff(k));
  }
}

TEST_CASE("king recurrence reproduces the walk counts") {
  const auto& m = ModelRegistry::bundled().get(4);
  TSeries q = count_series(m.steps, 120)[3];
  PRec rec = to_recurrence(king_operator());
  int need = required_initial_terms(rec);
  auto a = unroll(rec, head(q, need), 120);
  std::vector<Int> ia;
  for (int k = 0; k < need; ++k) ia.push_back(q.coeff(k).get_num());
  auto b = unroll_integer(rec, ia, 120);
  REQUIRE(b);
  for (int k = 0; k <= 120; ++k) {
    CHECK(a[k] == q.coeff(k));
    CHECK(Rat((*b)[k]) == q.coeff(k));
  }
}

TEST_CASE("integer unrolling detects non-integral sequences") {
  // (n+1) a_{n+1} = a_n gives 1/n!
  PRec rec{{Poly(-1), Poly::from_ints({1, 1})}};
  CHECK_FALSE(unroll_integer(rec, {Int(1)}, 5));
}

TEST_CASE("leading roots including large ones") {
  Poly p = Poly::from_ints({-3, 1}) * Poly::from_ints({-250, 1}) * Poly::from_ints({-100003, 1}) *
           Poly::from_ints({1, 2}) * Poly::from_ints({7, 1}) * Poly::from_ints({-3, 1});
  PRec rec{{Poly(1), p}};
  auto r = rec.leading_roots();
  CHECK(r == std::vector<long>{-7, 3, 250, 100003});
  PRec zero{{Poly(1), Poly::from_ints({0, 0, 5})}};
  CHECK(zero.leading_roots() == std::vector<long>{0});
  PRec none{{Poly(1), Poly::from_ints({1, 0, 1})}};
  CHECK(none.leading_roots().empty());
}

TEST_CASE("singular index is reported") {
  // (n - 2) a_{n+1} = a_n, leading term vanishes at n = 2
  PRec rec{{Poly(-1), Poly::from_ints({-2, 1})}};
  CHECK(required_initial_terms(rec) == 4);
  try {
    unroll(rec, {Rat(1)}, 6);
    FAIL("expected SingularIndex");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SingularIndex);
  }
}

TEST_CASE("operator factorization of the king operator") {
  RatDiffOp prod = mul(king_left_factor(), king_right_factor());
  CHECK(clear_denominators(prod) == king_operator().primitive());
  auto [q, r] = right_divide(RatDiffOp(king_operator()), king_right_factor());
  CHECK(r.is_zero());
  CHECK(clear_denominators(mul(q, king_right_factor())) == king_operator().primitive());
  // d * t = t d + 1
  RatDiffOp t(std::vector<RatFn>{RatFn(Poly::x())});
  RatDiffOp dt = mul(RatDiffOp::d(), t);
  CHECK(dt.coeff(0) == RatFn(1));
  CHECK(dt.coeff(1) == RatFn(Poly::x()));
}

TEST_CASE("guessing recovers a known operator") {
  // Catalan numbers
  std::vector<Rat> c(101);
  c[0] = 1;
  for (int n = 0; n < 100; ++n) c[n + 1] = c[n] * Rat(2 * (2 * n + 1)) / Rat(n + 2);
  TSeries f(0, c);
  auto g = guess_minimal(f, 3, 4, 10);
  REQUIRE(g);
  CHECK(g->holdout_checked >= 10);
  CHECK(apply(g->op, f).truncate(90).is_zero());
  CHECK_FALSE(guess(f, 1, 0, 10));
}
}
