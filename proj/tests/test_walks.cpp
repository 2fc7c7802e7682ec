// Copyright 2026 The qwalk authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include <doctest.h>

#include "oracles.hpp"
#include "qwalk/models.hpp"
#include "qwalk/walks.hpp"

using namespace qwalk;

TEST_SUITE("walks") {
TEST_CASE("Kreweras walks of length six") {
  WalkTable t = enumerate(StepSet::parse("1,1;-1,0;0,-1"), 6);
  CHECK(t.total(6) == 125);
  CHECK(t.q(6, 0, 0) == 16);
  CHECK(t.q(3, 0, 0) == 2);
}

TEST_CASE("king walk totals") {
  const long expect[] = {1, 3, 18, 105, 684, 4550, 31340, 219555, 1564080};
  WalkTable t = enumerate(ModelRegistry::bundled().get(4).steps, 8);
  for (int n = 0; n <= 8; ++n) CHECK(t.total(n) == expect[n]);
}

TEST_CASE("dynamic programming matches brute force for every model") {
  for (const auto& m : ModelRegistry::bundled().all()) {
    const int N = 7;
    WalkTable t = enumerate(m.steps, N);
    auto bf = oracle::brute_force_walks(m.steps.steps(), N);
    bool ok = true;
    for (int n = 0; n <= N; ++n)
      for (int i = 0; i <= N; ++i)
        for (int j = 0; j <= N; ++j) {
          Int dp = (i <= n && j <= n) ? t.q(n, i, j) : Int(0);
          ok = ok && dp == Int(static_cast<unsigned long>(bf.get(n, i, j)));
        }
    CHECK_MESSAGE(ok, "model " << m.id);
  }
}

TEST_CASE("specializations") {
  const auto& m = ModelRegistry::bundled().get(17);
  auto s = count_series(m.steps, 10);
  const long motz[] = {1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188};
  for (int n = 0; n <= 10; ++n) CHECK(s[3].coeff(n) == motz[n]);
  WalkTable t = enumerate(m.steps, 10);
  for (int n = 0; n <= 10; ++n) {
    Int sx = 0;
    for (int i = 0; i <= n; ++i) sx += t.q(n, i, 0);
    CHECK(s[1].coeff(n) == Rat(sx));
    CHECK(s[0].coeff(n) == Rat(t.q(n, 0, 0)));
  }
  CHECK(parse_spec("01") == Spec::S01);
  CHECK_THROWS_AS(parse_spec("2"), Error);
}

TEST_CASE("step set parsing") {
  StepSet s = StepSet::parse("1,0; -1,1 ;0,-1");
  CHECK(s.size() == 3);
  CHECK(s.contains(-1, 1));
  CHECK(s.transposed().contains(1, -1));
  CHECK(s.hash() == StepSet::parse("0,-1;1,0;-1,1").hash());
  CHECK_THROWS_AS(StepSet::parse("2,0"), Error);
  CHECK_THROWS_AS(StepSet::parse("0,0"), Error);
  CHECK(StepSet::parse("1,0;1,0").size() == 1);
  CHECK_THROWS_AS(StepSet::parse("1;0"), Error);
  CHECK(enumerate(s, 0).total(0) == 1);
  CHECK_THROWS_AS(enumerate(s, -1), Error);
}

TEST_CASE("kernel decomposition and residual") {
  for (const auto& m : ModelRegistry::bundled().all()) {
    const KernelData& k = m.kernel;
    LPoly2 S;
    for (const auto& [e, c] : k.A1.terms()) S.add_term({e[0], 1}, c);
    for (const auto& [e, c] : k.A0.terms()) S.add_term({e[0], 0}, c);
    for (const auto& [e, c] : k.Am1.terms()) S.add_term({e[0], -1}, c);
    CHECK(S == m.steps.polynomial());
    WalkTable t = enumerate(m.steps, 10);
    CHECK(kernel_check(k, t, 10).zero);
  }
}
}
