// Copyright 2026 The qwalk authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include <doctest.h>

#include "qwalk/cfexpr.hpp"
#include "qwalk/hypergeom.hpp"
#include "qwalk/json_io.hpp"
#include "qwalk/models.hpp"

using namespace qwalk;

namespace {

// K(k) = pi / (2 AGM(1, k')), E(k) = K(k) (1 - sum 2^(n-1) c_n^2)
std::pair<BigF, BigF> agm_KE(const BigF& k, mpfr_prec_t prec) {
  BigF one(1, prec), a = one, b = sqrt(one - k * k), c = k;
  BigF sum = c * c * BigF(rat(1, 2), prec);
  BigF pw(rat(1, 2), prec);
  for (int i = 0; i < 200 && c.exponent() > -static_cast<long>(prec) - 8; ++i) {
    BigF an = (a + b) * BigF(rat(1, 2), prec);
    c = (a - b) * BigF(rat(1, 2), prec);
    b = sqrt(a * b);
    a = an;
    pw = pw * BigF(2, prec);
    sum += pw * c * c;
  }
  BigF K = BigF::pi(prec) / (BigF(2, prec) * a);
  return {K, K * (one - sum)};
}

}  // namespace

TEST_SUITE("closedform") {
TEST_CASE("closed forms reproduce walk counts") {
  const auto& reg = ModelRegistry::bundled();
  for (const auto& cf : builtin_closed_forms()) {
    const int N = 40;
    TSeries dp = count_series(reg.get(cf.model).steps, N)[static_cast<int>(cf.spec)];
    TSeries s = cf_eval_series(cf.expr, N);
    CHECK_MESSAGE(s.truncate(N).agrees_with(dp), cf.name);
    CHECK(s.order() >= N);
  }
}

TEST_CASE("Motzkin numbers by their own recurrence") {
  // (n+3) M_{n+1} = (2n+3) M_n + 3n M_{n-1}
  std::vector<Int> M{1, 1};
  for (int n = 1; n < 50; ++n) M.push_back(((2 * n + 3) * M[n] + 3 * n * M[n - 1]) / (n + 3));
  for (const auto& cf : builtin_closed_forms())
    if (cf.name == "case17_11") {
      TSeries s = cf_eval_series(cf.expr, 50);
      for (int n = 0; n <= 50; ++n) CHECK(s.coeff(n) == Rat(M[n]));
    }
}

TEST_CASE("json round trip") {
  for (const auto& cf : builtin_closed_forms()) {
    Json j = cfexpr_to_json(cf.expr);
    CFExpr back = cfexpr_from_json(Json::parse(j.dump()));
    CHECK(cf_to_string(back) == cf_to_string(cf.expr));
    CHECK(cf_eval_series(back, 20).agrees_with(cf_eval_series(cf.expr, 20)));
  }
  CHECK_THROWS(cfexpr_from_json(Json{{"kind", "Nope"}}));
  DiffOp L = king_operator();
  CHECK(diffop_from_json(Json::parse(diffop_to_json(L).dump())) == L);
  HGParams p{rat(1, 12), rat(5, 12), Rat(1)};
  HGParams q = hgparams_from_json(hgparams_to_json(p));
  CHECK((q.a == p.a && q.b == p.b && q.c == p.c));
  TSeries s(-2, std::vector<Rat>{1, rat(-3, 7), 0, 5});
  CHECK(series_from_json(series_to_json(s)).agrees_with(s));
}

TEST_CASE("numeric evaluation agrees with the series inside the disc") {
  for (const auto& cf : builtin_closed_forms()) {
    Rat t0 = cf.radius / 10;
    TSeries s = cf_eval_series(cf.expr, 120);
    BigF ref = eval_series(s, BigF(t0, 96));
    BigF v = cf_eval_numeric(cf.expr, BigF(t0, 96), 96, cf.radius);
    CHECK_MESSAGE(close_rel(v, ref, 60), cf.name);
  }
}

TEST_CASE("case 18 basis elements") {
  auto basis = case18_basis();
  REQUIRE(basis.size() == 4);
  DiffOp L = case18_operator();
  for (const auto& b : basis) CHECK(apply(L, cf_eval_series(b, 100)).truncate(90).is_zero());
}

TEST_CASE("hypergeometric identities") {
  for (const char* id : {"duplication", "goursat_quarter", "goursat_third"}) {
    auto r = verify_identity(id, 60);
    CHECK_MESSAGE(r.ok, id);
    CHECK(r.order == 60);
  }
  CHECK_THROWS_AS(verify_identity("nonsense"), Error);
  // numeric spot check of the duplication formula at u = 1/5
  const mpfr_prec_t P = 128;
  BigF u(rat(1, 5), P);
  BigF lhs = sqrt(BigF(rat(9, 10), P)) * hg_numeric({rat(1, 2), rat(1, 2), Rat(1)}, u, P);
  BigF rhs = hg_numeric({rat(1, 4), rat(3, 4), Rat(1)}, BigF(rat(1, 81), P), P);
  CHECK(close_rel(lhs, rhs, 110));
}

TEST_CASE("hypergeometric series satisfies its equation") {
  HGParams p{rat(2, 7), rat(-3, 5), rat(4, 3)};
  TSeries f = hg_series(p, 60);
  // t(1-t) f'' + (c - (a+b+1) t) f' - ab f
  TSeries d1 = derive(f), d2 = derive(d1);
  TSeries r = Poly(std::vector<Rat>{0, 1, -1}) * d2 + Poly(std::vector<Rat>{p.c, -(p.a + p.b + 1)}) * d1 - f * (p.a * p.b);
  CHECK(r.truncate(57).is_zero());
  CHECK(pochhammer(Rat(3), 4) == 360);
  CHECK_THROWS_AS(hg_series({Rat(1), Rat(1), Rat(-2)}, 5), Error);
}

TEST_CASE("complete elliptic integrals against the AGM") {
  const mpfr_prec_t P = 160;
  for (auto kk : {rat(1, 10), rat(1, 2), rat(9, 10)}) {
    BigF k(kk, P);
    auto [K, E] = agm_KE(k, P);
    CHECK(close_rel(elliptic_K(k, P), K, 140));
    CHECK(close_rel(elliptic_E(k, P), E, 140));
  }
}
}
