// Copyright 2026 The qwalk authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "qwalk/dfinite.hpp"

#include <algorithm>
#include <sstream>

namespace qwalk {

namespace {

Int lcm_den(const std::vector<Rat>& v) {
  Int l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
  return l;
}

// (x + s)(x + s - 1)...(x + s - i + 1)
Poly falling(int s, int i) {
  Poly p(Rat(1));
  for (int k = 0; k < i; ++k) p = p * Poly(std::vector<Rat>{Rat(s - k), Rat(1)});
  return p;
}

Rat binom(int n, int k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Rat(r);
}

}  // namespace

// ---- DiffOp ----

DiffOp::DiffOp(std::vector<Poly> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

int DiffOp::degree() const {
  int d = -1;
  for (const auto& p : c_) d = std::max(d, p.degree());
  return d;
}

DiffOp DiffOp::primitive() const {
  if (c_.empty()) return *this;
  std::vector<Rat> all;
  for (const auto& p : c_)
    for (const auto& x : p.coeffs()) all.push_back(x);
  Int l = lcm_den(all), g = 0;
  for (const auto& x : all) {
    Int v = x.get_num() * (l / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  Rat s(l, g);
  s.canonicalize();
  if (c_.back().lead() < 0) s = -s;
  std::vector<Poly> out;
  for (const auto& p : c_) out.push_back(p * s);
  return DiffOp(std::move(out));
}

std::string DiffOp::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = order(); i >= 0; --i) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c_[i].to_string("t") << ")";
    if (i > 0) os << "*D" << (i > 1 ? "^" + std::to_string(i) : "");
  }
  return os.str();
}

// ---- RatDiffOp ----

RatDiffOp::RatDiffOp(std::vector<RatFn> coeffs) : c_(std::move(coeffs)) { trim(); }

RatDiffOp::RatDiffOp(const DiffOp& L) {
  for (const auto& p : L.coeffs()) c_.emplace_back(p);
  trim();
}

void RatDiffOp::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

RatDiffOp operator+(const RatDiffOp& a, const RatDiffOp& b) {
  std::vector<RatFn> c(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return RatDiffOp(std::move(c));
}

RatDiffOp operator-(const RatDiffOp& a, const RatDiffOp& b) { return a + b.scaled(RatFn(-1)); }

RatDiffOp RatDiffOp::scaled(const RatFn& r) const {
  std::vector<RatFn> c;
  for (const auto& x : c_) c.push_back(r * x);
  return RatDiffOp(std::move(c));
}

std::string RatDiffOp::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = order(); i >= 0; --i) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c_[i].to_string("t") << ")";
    if (i > 0) os << "*D" << (i > 1 ? "^" + std::to_string(i) : "");
  }
  return os.str();
}

// ---- application ----

TSeries apply(const DiffOp& L, const TSeries& f) {
  if (L.is_zero()) return TSeries(f.min_exp(), f.order());
  TSeries acc;
  bool have = false;
  TSeries d = f;
  for (int i = 0; i <= L.order(); ++i) {
    if (i > 0) d = derive(d);
    if (L.coeff(i).is_zero()) continue;
    TSeries term = L.coeff(i) * d;
    acc = have ? acc + term : term;
    have = true;
  }
  return acc;
}

TSeries apply(const RatDiffOp& L, const TSeries& f) {
  if (L.is_zero()) return TSeries(f.min_exp(), f.order());
  TSeries acc;
  bool have = false;
  TSeries d = f;
  for (int i = 0; i <= L.order(); ++i) {
    if (i > 0) d = derive(d);
    const RatFn& r = L.coeffs()[i];
    if (r.is_zero()) continue;
    int depth = d.order() - d.min_exp() + r.den().valuation() + 2;
    TSeries term = ratfn_expand_at_zero(r, depth) * d;
    acc = have ? acc + term : term;
    have = true;
  }
  return acc;
}

RatDiffOp mul(const RatDiffOp& A, const RatDiffOp& B) {
  if (A.is_zero() || B.is_zero()) return RatDiffOp();
  std::vector<RatFn> c(A.order() + B.order() + 1);
  for (int j = 0; j <= B.order(); ++j) {
    RatFn bk = B.coeffs()[j];  // k-th derivative of b_j
    for (int k = 0; k <= A.order(); ++k) {
      if (k > 0) bk = bk.derivative();
      if (bk.is_zero()) break;
      for (int i = k; i <= A.order(); ++i) {
        const RatFn& a = A.coeffs()[i];
        if (a.is_zero()) continue;
        c[i - k + j] += a * bk * RatFn(binom(i, k));
      }
    }
  }
  return RatDiffOp(std::move(c));
}

DiffOp clear_denominators(const RatDiffOp& L) {
  Poly l(Rat(1));
  for (const auto& r : L.coeffs()) {
    if (r.is_zero()) continue;
    Poly g = Poly::gcd(l, r.den());
    l = Poly::divmod(l * r.den(), g).first;
  }
  std::vector<Poly> out;
  for (const auto& r : L.coeffs()) {
    if (r.is_zero()) {
      out.emplace_back();
      continue;
    }
    out.push_back(r.num() * Poly::divmod(l, r.den()).first);
  }
  return DiffOp(std::move(out)).primitive();
}

std::pair<RatDiffOp, RatDiffOp> right_divide(const RatDiffOp& L, const RatDiffOp& D) {
  if (D.is_zero()) fail(ErrorCode::InvalidArgument, "division by the zero operator");
  RatDiffOp Q, R = L;
  while (!R.is_zero() && R.order() >= D.order()) {
    int k = R.order() - D.order();
    std::vector<RatFn> m(k + 1);
    m[k] = R.coeffs().back() / D.coeffs().back();
    RatDiffOp q(std::move(m));
    Q = Q + q;
    RatDiffOp next = R - mul(q, D);
    if (!next.is_zero() && next.order() >= R.order()) fail(ErrorCode::InvalidArgument, "internal: division did not reduce order");
    R = next;
  }
  return {Q, R};
}

// ---- recurrences ----

std::vector<long> PRec::leading_roots() const {
  std::vector<long> roots;
  if (coeffs.empty()) return roots;
  Poly p = coeffs.back();
  if (p.is_zero()) return roots;
  int v = p.valuation();
  if (v > 0) {
    roots.push_back(0);
    p = p.shift_down(v);
  }
  // square-free part, then roots mod a small prime lifted past twice the Cauchy bound
  Poly sf = Poly::divmod(p, Poly::gcd(p, p.derivative())).first;
  Poly q = sf * sf.primitive_scale();
  if (q.degree() < 1) return roots;
  std::vector<Int> qi;
  for (const auto& c : q.coeffs()) qi.push_back(c.get_num());
  Int bound = 0;
  for (int k = 0; k < q.degree(); ++k) bound = std::max(bound, Int(abs(qi[k])));
  bound = bound / abs(qi.back()) + 2;
  auto ev_mod = [&](const std::vector<Int>& c, const Int& x, const Int& m) {
    Int r = 0;
    for (size_t i = c.size(); i-- > 0;) r = (r * x + c[i]) % m;
    return Int((r + m) % m);
  };
  std::vector<Int> dq;
  for (size_t i = 1; i < qi.size(); ++i) dq.push_back(qi[i] * static_cast<long>(i));
  std::vector<Int> cand;
  for (unsigned long pr = 101;; pr += 2) {
    if (!mpz_probab_prime_p(Int(pr).get_mpz_t(), 30) || qi.back() % pr == 0) continue;
    Int P(pr);
    std::vector<Int> r0;
    bool simple = true;
    for (unsigned long x = 0; x < pr && simple; ++x)
      if (ev_mod(qi, Int(x), P) == 0) {
        if (ev_mod(dq, Int(x), P) == 0) simple = false;
        r0.emplace_back(x);
      }
    if (!simple) continue;
    for (Int r : r0) {
      Int m = P;
      while (m <= 2 * bound) {
        Int m2 = m * m;
        Int fv = ev_mod(qi, r, m2), dv = ev_mod(dq, r, m2), inv;
        mpz_invert(inv.get_mpz_t(), dv.get_mpz_t(), m2.get_mpz_t());
        r = ((r - fv * inv) % m2 + m2) % m2;
        m = m2;
      }
      if (r > m / 2) r -= m;
      cand.push_back(r);
    }
    break;
  }
  for (const auto& d : cand) {
    if (d == 0 || !d.fits_slong_p()) continue;
    if (q.eval(Rat(d)) == 0) roots.push_back(d.get_si());
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::string PRec::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int s = 0; s <= order(); ++s) {
    if (coeffs[s].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << coeffs[s].to_string("n") << ")*a(n+" << s << ")";
  }
  os << " = 0";
  return os.str();
}

PRec to_recurrence(const DiffOp& L) {
  if (L.is_zero()) fail(ErrorCode::InvalidArgument, "zero operator has no recurrence");
  // t^j d^i sends a_m t^m to m^(i falling) a_m t^(m-i+j); read off t^N with m = N + i - j
  int kmin = INT_MAX, kmax = INT_MIN;
  for (int i = 0; i <= L.order(); ++i)
    for (int j = 0; j <= L.coeff(i).degree(); ++j)
      if (L.coeff(i).coeff(j) != 0) {
        kmin = std::min(kmin, i - j);
        kmax = std::max(kmax, i - j);
      }
  PRec rec;
  rec.coeffs.assign(kmax - kmin + 1, Poly());
  for (int i = 0; i <= L.order(); ++i)
    for (int j = 0; j <= L.coeff(i).degree(); ++j) {
      const Rat& c = L.coeff(i).coeff(j);
      if (c == 0) continue;
      int s = i - j - kmin;
      rec.coeffs[s] += falling(s, i) * c;
    }
  // trailing/leading zero polynomials can occur when falling factorials cancel
  while (!rec.coeffs.empty() && rec.coeffs.back().is_zero()) rec.coeffs.pop_back();
  if (rec.coeffs.empty()) fail(ErrorCode::InvalidArgument, "operator maps every series to zero");
  return rec;
}

int required_initial_terms(const PRec& rec) {
  int s = rec.order();
  int need = s;
  for (long r : rec.leading_roots())
    if (r + s >= 0) need = std::max<int>(need, static_cast<int>(r) + s + 1);
  return need;
}

std::vector<Rat> unroll(const PRec& rec, const std::vector<Rat>& init, int N) {
  int s = rec.order();
  if (s < 0) fail(ErrorCode::InvalidArgument, "empty recurrence");
  std::vector<Rat> a(std::max<int>(N + 1, static_cast<int>(init.size())));
  for (size_t i = 0; i < init.size(); ++i) a[i] = init[i];
  Rat acc, tmp;
  for (int m = static_cast<int>(init.size()); m <= N; ++m) {
    int n = m - s;
    Rat lead = rec.coeffs[s].eval(Rat(n));
    if (lead == 0)
      fail(ErrorCode::SingularIndex, "leading coefficient vanishes at n = " + std::to_string(n) + " (index " + std::to_string(m) + ")");
    acc = 0;
    for (int k = 0; k < s; ++k) {
      int idx = n + k;
      if (idx < 0) continue;
      const Rat& x = a[idx];
      if (x == 0) continue;
      tmp = rec.coeffs[k].eval(Rat(n));
      acc += tmp * x;
    }
    a[m] = -acc / lead;
  }
  a.resize(N + 1);
  return a;
}

std::optional<std::vector<Int>> unroll_integer(const PRec& rec, const std::vector<Int>& init, int N) {
  int s = rec.order();
  if (s < 0) fail(ErrorCode::InvalidArgument, "empty recurrence");
  // common denominator so every c_k(n) is an integer
  Int den = 1;
  for (const auto& p : rec.coeffs)
    for (const auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<std::vector<Int>> ic(s + 1);
  for (int k = 0; k <= s; ++k)
    for (const auto& c : rec.coeffs[k].coeffs()) ic[k].push_back(Int(c * den));
  auto ev = [&](const std::vector<Int>& p, long n, Int& out) {
    out = 0;
    for (size_t i = p.size(); i-- > 0;) out = out * n + p[i];
  };
  std::vector<Int> a(std::max<int>(N + 1, static_cast<int>(init.size())));
  for (size_t i = 0; i < init.size(); ++i) a[i] = init[i];
  Int acc, c, lead;
  for (int m = static_cast<int>(init.size()); m <= N; ++m) {
    int n = m - s;
    ev(ic[s], n, lead);
    if (lead == 0)
      fail(ErrorCode::SingularIndex, "leading coefficient vanishes at n = " + std::to_string(n) + " (index " + std::to_string(m) + ")");
    acc = 0;
    for (int k = 0; k < s; ++k) {
      int idx = n + k;
      if (idx < 0 || a[idx] == 0) continue;
      ev(ic[k], n, c);
      acc += c * a[idx];
    }
    if (!mpz_divisible_p(acc.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
    mpz_divexact(a[m].get_mpz_t(), acc.get_mpz_t(), lead.get_mpz_t());
    a[m] = -a[m];
  }
  a.resize(N + 1);
  return a;
}

// ---- transcribed operators ----

namespace {

Poly P(std::initializer_list<long> c) { return Poly::from_ints(c); }

}  // namespace

DiffOp king_operator() {
  Poly lead = P({0, 0, 1}) * P({1, 4}) * P({-1, 8}) * P({-1, 2}) * P({1, 1});
  return DiffOp({P({-12, -144, -72, 384}), P({4, -48, -468, 88, 1152}), P({0, 5, -33, -252, 200, 576}), lead});
}

RatDiffOp king_left_factor() {
  Poly lead = P({0, 0, 1}) * P({1, 4}) * P({1, -8}) * P({1, -2}) * P({1, 1});
  return RatDiffOp(DiffOp({P({2, -30, -306, 8, 768}), P({0, 4, -28, -222, 160, 512}), lead}));
}

RatDiffOp king_right_factor() {
  return RatDiffOp(std::vector<RatFn>{RatFn(Poly(Rat(1)), P({0, 1})), RatFn(1)});
}

DiffOp case18_operator() {
  return DiffOp({P({24, 288}), P({-24, 168, 1152}), P({0, 36}) * P({1, 3}) * P({-1, 8}),
                 P({0, 0, 4}) * P({-3, 13, 48}), P({0, 0, 0, 1}) * P({1, 2}) * P({-1, 6})});
}

std::map<std::string, DiffOp> builtin_operators() {
  return {{"king", king_operator()},
          {"king_left_factor", clear_denominators(king_left_factor())},
          {"case18", case18_operator()}};
}

}  // namespace qwalk
