// Copyright 2026 The qwalk authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "qwalk/asymptotics.hpp"

#include <algorithm>
#include <cmath>

#include "qwalk/quadrature.hpp"

namespace qwalk {

AsymSpec asym_spec(const ModelRegistry& reg, int model, Spec s) {
  const AsymRow& row = reg.get(model).row(s);
  AsymSpec a;
  a.model = model;
  a.spec = s;
  a.rho = ConstExpr::parse(row.rho, reg.constants());
  a.gamma = row.gamma;
  a.period = row.period;
  for (const auto& k : row.kappa) a.kappa.push_back(k.empty() ? ConstExpr() : ConstExpr::parse(k, reg.constants()));
  if (static_cast<int>(a.kappa.size()) != a.period)
    fail(ErrorCode::ValidationFailed, "model " + std::to_string(model) + " spec " + spec_name(s) +
                                          ": kappa list length differs from the period");
  a.oeis = row.oeis;
  a.algebraic = row.algebraic;
  return a;
}

Annihilator annihilator_for(const ModelData& m, Spec s, int dp_terms) {
  if (m.id == 4 && s == Spec::S11) return {king_operator(), "builtin:king", 0};
  if (m.id == 18 && (s == Spec::S10 || s == Spec::S01)) return {case18_operator(), "builtin:case18", 0};
  TSeries f = count_series(m.steps, dp_terms)[static_cast<int>(s)];
  auto g = guess_minimal(f, 10, 60);
  if (!g)
    fail(ErrorCode::NoOperatorFound, "no operator for model " + std::to_string(m.id) + " spec " + spec_name(s) +
                                         " from " + std::to_string(dp_terms) + " terms");
  return {g->op, "guessed", g->holdout_checked};
}

std::vector<Int> terms_for(const ModelData& m, Spec s, int N, const Annihilator* ann) {
  if (N < 0) fail(ErrorCode::InvalidArgument, "N must be nonnegative");
  Annihilator local;
  if (!ann) {
    local = annihilator_for(m, s);
    ann = &local;
  }
  PRec rec = to_recurrence(ann->op);
  int need = required_initial_terms(rec);
  int check = std::max(30, need + 10);
  TSeries dp = count_series(m.steps, std::max(check, std::min(N, check)))[static_cast<int>(s)];
  std::vector<Int> init;
  for (int n = 0; n < need; ++n) init.push_back(dp.coeff(n).get_num());
  int M = std::max(N, check);
  auto a = unroll_integer(rec, init, M);
  if (!a) fail(ErrorCode::ValidationFailed, "recurrence produced a non-integer term");
  for (int n = 0; n <= check; ++n)
    if (Rat((*a)[n]) != dp.coeff(n))
      fail(ErrorCode::ValidationFailed, "recurrence disagrees with enumeration at n = " + std::to_string(n));
  a->resize(N + 1);
  return *a;
}

Extrapolation extrapolate_sequence(const std::function<BigF(long)>& u, long N, int r, int p, int levels,
                                   mpfr_prec_t prec, int root) {
  if (root < 1 || root > 2) fail(ErrorCode::InvalidArgument, "expansion root must be 1 or 2");
  if (p < 1 || r < 0 || r >= p || levels < 1) fail(ErrorCode::InvalidArgument, "bad extrapolation parameters");
  long top = N - ((N - r) % p + p) % p;
  long lo = (N + 1) / 2;
  long avail = top >= lo ? (top - lo) / p + 1 : 0;
  if (avail < levels + 2)
    fail(ErrorCode::InsufficientTerms, "need " + std::to_string(levels + 2) + " indices in class " + std::to_string(r) +
                                           " mod " + std::to_string(p) + " within [N/2, N]");
  // levels+1 nodes spread evenly over the class inside [N/2, N]; steps are kept
  // multiples of 12p when possible so period 2, 3, 4, 6 ripples stay in phase
  long step = (avail - 1) / levels * p;
  if (step >= 12L * p) step -= step % (12L * p);
  std::vector<long> m(levels + 1);
  for (int j = 0; j <= levels; ++j) m[j] = top - static_cast<long>(levels - j) * step;
  std::vector<BigF> h, T;
  for (long mj : m) {
    BigF hm = BigF(1L, prec) / BigF(mj, prec);
    h.push_back(root == 1 ? hm : sqrt(hm));
    T.push_back(u(mj).with_precision(prec));
  }
  // Neville at h = 0; after pass k, T[j] interpolates nodes j-k..j
  BigF prev(prec);
  for (int k = 1; k <= levels; ++k) {
    for (int j = levels; j >= k; --j) T[j] = (h[j - k] * T[j] - h[j] * T[j - 1]) / (h[j - k] - h[j]);
    if (k == levels - 1) prev = T[levels];
  }
  Extrapolation out{T[levels], abs(T[levels] - prev), levels + 1};
  return out;
}

Extrapolation extrapolate(const std::vector<Int>& a, const BigF& rho, const Rat& gamma, int r, int p, int levels,
                          mpfr_prec_t prec, int root) {
  if (a.empty()) fail(ErrorCode::InsufficientTerms, "no terms");
  mpfr_prec_t wp = prec + 32;
  BigF lr = log(rho.with_precision(wp));
  auto u = [&](long m) {
    BigF v(a[m], wp);
    v *= pow(BigF(m, wp), gamma);
    v *= exp(-(lr * BigF(m, wp)));
    return v;
  };
  Extrapolation e = extrapolate_sequence(u, static_cast<long>(a.size()) - 1, r, p, levels, wp, root);
  e.value = e.value.with_precision(prec);
  e.spread = e.spread.with_precision(prec);
  return e;
}

std::vector<KappaRow> check_kappa(const ModelRegistry& reg, int model, Spec s, int N, double tol,
                                  const std::vector<Int>* terms) {
  AsymSpec as = asym_spec(reg, model, s);
  std::vector<Int> local;
  if (!terms || static_cast<int>(terms->size()) < N + 1) {
    local = terms_for(reg.get(model), s, N);
    terms = &local;
  }
  const mpfr_prec_t prec = 256;
  BigF rho = as.rho.eval(prec);
  const ModelData& md = reg.get(model);
  std::vector<KappaRow> rows;
  for (int r = 0; r < as.period; ++r) {
    KappaRow row;
    row.model = model;
    row.spec = s;
    row.cls = r;
    row.period = as.period;
    row.rho = md.row(s).rho;
    row.gamma = as.gamma;
    row.kappa_expected = as.kappa[r].empty() ? "" : as.kappa[r].text();
    if (as.kappa[r].empty()) {
      bool zero = true;
      for (int n = r; n <= N; n += as.period)
        if ((*terms)[n] != 0) {
          zero = false;
          break;
        }
      row.pass = zero;
      row.relerr = zero ? 0.0 : 1.0;
    } else {
      std::vector<Int> head(terms->begin(), terms->begin() + N + 1);
      Extrapolation e = extrapolate(head, rho, as.gamma, r, as.period, 8, prec, 1);
      row.root = 1;
      // an unsettled 1/m table means exponents differ by half-integers; retry in m^(-1/2)
      if (e.value.is_zero() || (e.spread / abs(e.value)).to_double() > tol * 1e-2) {
        Extrapolation e2 = extrapolate(head, rho, as.gamma, r, as.period, 12, prec, 2);
        if (e2.spread < e.spread) {
          e = e2;
          row.root = 2;
        }
      }
      BigF want = as.kappa[r].eval(prec);
      row.kappa_measured = e.value.to_double();
      row.spread = e.spread.to_double();
      row.relerr = (abs(e.value - want) / abs(want)).to_double();
      row.pass = row.relerr <= tol;
    }
    rows.push_back(row);
  }
  return rows;
}

namespace {

constexpr int kIntegrandOrder = 80;

}  // namespace

IntegralSpec integral_spec(int which) {
  IntegralSpec s;
  s.which = which;
  if (which == 7) {
    s.end = rat(1, 4);
    s.polar_part = {{-2, Rat(1)}};
    s.integrand = integrand_case7();
    s.expected = Rat(-2);
  } else if (which == 5) {
    s.end = rat(1, 3);
    s.polar_part = {{-3, Rat(2)}, {-2, Rat(-4)}};
    s.integrand = integrand_case5();
    s.expected = Rat(1);
  } else {
    fail(ErrorCode::InvalidArgument, "integral case must be 7 or 5");
  }
  return s;
}

IntegralResult integral_I(const IntegralSpec& spec, mpfr_prec_t prec) {
  if (prec < 64) fail(ErrorCode::InvalidArgument, "precision must be at least 64 bits");
  if (spec.end <= 0) fail(ErrorCode::InvalidArgument, "domain end must be positive");
  mpfr_prec_t wp = prec + 32;
  Rat eps = spec.end / 8;
  // window [0, eps] sits at ratio 1/8 of the radius, so K terms give about 3K bits
  int K = std::max(kIntegrandOrder, static_cast<int>(wp / 3) + 8);
  TSeries f = cf_eval_series(spec.integrand, K);
  for (int k = f.min_exp(); k < 0; ++k) {
    Rat want = 0;
    for (const auto& [e, c] : spec.polar_part)
      if (e == k) want = c;
    if (f.coeff(k) != want)
      fail(ErrorCode::ValidationFailed, "integrand polar part differs at v^" + std::to_string(k));
  }
  for (const auto& [e, c] : spec.polar_part)
    if (e < f.min_exp() && c != 0) fail(ErrorCode::ValidationFailed, "integrand polar part differs");
  BigF head(wp);
  BigF be(eps, wp);
  for (int k = f.order(); k >= 0; --k) head = (head + BigF(f.coeff(k) / (k + 1), wp)) * be;

  BigF end(spec.end, wp);
  BigF smax = sqrt(BigF(Rat(1) - eps / spec.end, wp));
  mpfr_prec_t ip = wp + 32;
  auto g = [&](const BigF& s) {
    BigF ss = s.with_precision(ip);
    BigF v = BigF(spec.end, ip) * (BigF(1L, ip) - ss * ss);
    BigF val = cf_eval_numeric(spec.integrand, v, ip, spec.end);
    for (const auto& [e, c] : spec.polar_part) val -= BigF(c, ip) * pow_si(v, e);
    val *= BigF(spec.end * 2, ip) * ss;
    return val.with_precision(wp);
  };
  QuadResult q = integrate_gl(g, BigF(0L, wp), smax, wp);
  IntegralResult out;
  out.value = (head + q.value).with_precision(prec);
  out.nodes = q.nodes;
  out.taylor_order = K;
  return out;
}

std::vector<ConjectureLine> conjecture_report(const ModelRegistry& reg, mpfr_prec_t prec, int N) {
  const char* kStatus = "numerically confirmed, analytically conjectural";
  std::vector<ConjectureLine> out;
  for (int which : {7, 5}) {
    IntegralSpec sp = integral_spec(which);
    IntegralResult r = integral_I(sp, prec);
    ConjectureLine l;
    l.name = "integral identity, case " + std::to_string(which);
    l.quantity = "I(case " + std::to_string(which) + ")";
    l.target = sp.expected.get_str();
    l.measured = r.value.to_double();
    l.error = abs(r.value - BigF(sp.expected, prec)).to_double();
    l.tol = 1e-8;
    l.match = l.error <= l.tol;
    l.status = l.match ? kStatus : "not confirmed";
    out.push_back(l);
  }
  for (int model : {7, 5}) {
    ConstExpr target = ConstExpr::parse(model == 7 ? "4/(3*sqrt(pi))" : "(1/2)*sqrt(3/pi)");
    auto rows = check_kappa(reg, model, Spec::S11, N, 1e-3);
    ConjectureLine l;
    l.name = "kappa, case " + std::to_string(model);
    l.quantity = "kappa(case " + std::to_string(model) + ", 11)";
    l.target = target.text();
    l.measured = rows.at(0).kappa_measured;
    BigF t = target.eval(128);
    l.error = std::fabs(l.measured - t.to_double()) / t.to_double();
    l.tol = 1e-3;
    l.match = l.error <= l.tol;
    l.status = l.match ? kStatus : "not confirmed";
    out.push_back(l);
  }
  return out;
}

}  // namespace qwalk
