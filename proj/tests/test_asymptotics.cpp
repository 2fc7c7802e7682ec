// Copyright 2026 The qwalk authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include <doctest.h>

#include <cmath>

#include "qwalk/asymptotics.hpp"
#include "qwalk/models.hpp"

using namespace qwalk;

TEST_SUITE("asymptotics") {
TEST_CASE("extrapolation is exact on finite expansions") {
  const mpfr_prec_t P = 256;
  BigF kappa = BigF::pi(P);
  auto u = [&](long m) {
    BigF x(1, P), v = kappa, im = BigF(1, P) / BigF(m, P);
    const long c[] = {3, -7, 2, 5};
    for (long ci : c) {
      x *= im;
      v += BigF(ci, P) * x;
    }
    return v;
  };
  Extrapolation e = extrapolate_sequence(u, 2000, 0, 1, 8, P, 1);
  CHECK(abs(e.value - kappa).to_double() < 1e-60);
  auto simple = [&](long m) { return BigF(2, P) + BigF(3, P) / BigF(m, P); };
  CHECK(abs(extrapolate_sequence(simple, 400, 0, 1, 4, P, 1).value - BigF(2, P)).to_double() < 1e-60);
  // half-integer powers need the square-root variable
  auto half = [&](long m) { return BigF(5, P) + BigF(1, P) / sqrt(BigF(m, P)) + BigF(4, P) / BigF(m, P); };
  CHECK(abs(extrapolate_sequence(half, 4000, 0, 1, 8, P, 2).value - BigF(5, P)).to_double() < 1e-40);
  CHECK_THROWS_AS(extrapolate_sequence(simple, 400, 0, 1, 4, P, 3), Error);
}

TEST_CASE("Motzkin constant from an independent recurrence") {
  std::vector<Int> M{1, 1};
  for (int n = 1; n < 3000; ++n) M.push_back(((2 * n + 3) * M[n] + 3 * n * M[n - 1]) / (n + 3));
  const mpfr_prec_t P = 256;
  Extrapolation e = extrapolate(M, BigF(3, P), rat(3, 2), 0, 1, 8, P, 1);
  BigF want = BigF(rat(3, 2), P) * sqrt(BigF(3, P) / BigF::pi(P));
  CHECK(abs(e.value - want).to_double() / want.to_double() < 1e-12);
}

TEST_CASE("term generation") {
  const auto& m = ModelRegistry::bundled().get(4);
  auto t0 = terms_for(m, Spec::S11, 0);
  CHECK(t0 == std::vector<Int>{Int(1)});
  auto t = terms_for(m, Spec::S11, 300);
  TSeries dp = count_series(m.steps, 300)[3];
  for (int n = 0; n <= 300; ++n) CHECK(Rat(t[n]) == dp.coeff(n));
  CHECK_THROWS_AS(terms_for(m, Spec::S11, -1), Error);
}

TEST_CASE("king growth ratio is monotone towards 8") {
  auto t = terms_for(ModelRegistry::bundled().get(4), Spec::S11, 400);
  Rat prev = 0;
  for (int n = 10; n < 400; ++n) {
    Rat r(t[n + 1], t[n]);
    r.canonicalize();
    CHECK(r > prev);
    CHECK(r < 8);
    prev = r;
  }
}

TEST_CASE("periodic excursions have zero classes") {
  const auto& reg = ModelRegistry::bundled();
  auto rows = check_kappa(reg, 1, Spec::S00, 2000);
  REQUIRE(!rows.empty());
  int zero = 0;
  for (const auto& r : rows) {
    CHECK_MESSAGE(r.pass, "class " << r.cls);
    if (r.kappa_expected.empty()) {
      ++zero;
      CHECK(r.kappa_measured == 0);
    }
  }
  CHECK(zero >= 1);
}

TEST_CASE("headline constants") {
  const auto& reg = ModelRegistry::bundled();
  struct Want {
    int model;
    double kappa;
  };
  const double pi = 3.14159265358979323846;
  for (Want w : {Want{4, 8 / (3 * pi)}, Want{3, std::sqrt(6.0) / pi}, Want{17, 1.5 * std::sqrt(3 / pi)}}) {
    auto rows = check_kappa(reg, w.model, Spec::S11, 4000);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].pass);
    CHECK(std::abs(rows[0].kappa_measured - w.kappa) / w.kappa < 1e-6);
  }
}

TEST_CASE("integral constant is stable under precision changes") {
  IntegralSpec sp = integral_spec(7);
  IntegralResult a = integral_I(sp, 96), b = integral_I(sp, 192);
  CHECK(abs(a.value - b.value.with_precision(96)).to_double() < 1e-25);
  CHECK(abs(b.value - BigF(Rat(-2), 192)).to_double() < 1e-40);
}

TEST_CASE("integral of zero integrand") {
  IntegralSpec sp;
  sp.which = 0;
  sp.end = rat(1, 4);
  sp.integrand = cf_rational(RatFn(0));
  CHECK(integral_I(sp, 96).value.is_zero());
  sp.polar_part = {{-2, Rat(1)}};
  CHECK_THROWS_AS(integral_I(sp, 96), Error);
  CHECK_THROWS_AS(integral_spec(6), Error);
}
}
