// Copyright 2026 The qwalk authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "qwalk/quadrature.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>

namespace qwalk {

namespace {

// P_n(x) and P_n'(x) by the three-term recurrence
void legendre(int n, const BigF& x, BigF& p, BigF& dp) {
  mpfr_prec_t pr = x.precision();
  BigF p0(1L, pr), p1 = x;
  for (int k = 2; k <= n; ++k) {
    BigF p2 = (BigF(2L * k - 1, pr) * x * p1 - BigF(static_cast<long>(k - 1), pr) * p0) / BigF(static_cast<long>(k), pr);
    p0 = std::move(p1);
    p1 = std::move(p2);
  }
  p = n == 0 ? BigF(1L, pr) : p1;
  // (x^2 - 1) P_n' = n (x P_n - P_{n-1})
  dp = BigF(static_cast<long>(n), pr) * (x * p - p0) / (x * x - BigF(1L, pr));
}

GLRule build(int n, mpfr_prec_t prec) {
  mpfr_prec_t wp = prec + 32;
  GLRule r;
  BigF eps = pow_si(BigF(2L, wp), -static_cast<long>(wp) + 8);
  for (int i = 1; i <= n; ++i) {
    BigF x = BigF::from_double(std::cos(M_PI * (i - 0.25) / (n + 0.5)), wp), p(wp), dp(wp);
    for (int it = 0; it < 100; ++it) {
      legendre(n, x, p, dp);
      BigF dx = p / dp;
      x -= dx;
      if (abs(dx) < eps) break;
    }
    legendre(n, x, p, dp);
    BigF w = BigF(2L, wp) / ((BigF(1L, wp) - x * x) * dp * dp);
    r.x.push_back(x.with_precision(prec));
    r.w.push_back(w.with_precision(prec));
  }
  return r;
}

}  // namespace

const GLRule& gauss_legendre(int n, mpfr_prec_t prec) {
  static std::mutex mu;
  static std::map<std::pair<int, mpfr_prec_t>, std::unique_ptr<GLRule>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{n, prec}];
  if (!slot) slot = std::make_unique<GLRule>(build(n, prec));
  return *slot;
}

QuadResult integrate_gl(const std::function<BigF(const BigF&)>& f, const BigF& a, const BigF& b, mpfr_prec_t prec,
                        int n0, int nmax) {
  mpfr_prec_t wp = prec + 16;
  BigF A = a.with_precision(wp), B = b.with_precision(wp);
  BigF half = (B - A) / BigF(2L, wp), mid = (B + A) / BigF(2L, wp);
  BigF tol = pow_si(BigF(2L, wp), -static_cast<long>(prec));
  auto rule = [&](int n) {
    const GLRule& g = gauss_legendre(n, wp);
    BigF s(wp);
    for (int i = 0; i < n; ++i) s += g.w[i] * f(mid + half * g.x[i]);
    return s * half;
  };
  BigF prev = rule(n0);
  for (int n = 2 * n0; n <= nmax; n *= 2) {
    BigF cur = rule(n);
    BigF diff = abs(cur - prev);
    BigF scale = abs(cur) > BigF(1L, wp) ? abs(cur) : BigF(1L, wp);
    if (diff <= tol * scale) return QuadResult{cur.with_precision(prec), n, diff.with_precision(prec)};
    prev = std::move(cur);
  }
  fail(ErrorCode::QuadratureNoConvergence, "Gauss-Legendre did not converge with " + std::to_string(nmax) + " nodes");
}

}  // namespace qwalk
