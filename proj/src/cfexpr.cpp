// Copyright 2026 The qwalk authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "qwalk/cfexpr.hpp"

#include <map>
#include <sstream>

#include "qwalk/quadrature.hpp"

namespace qwalk {

namespace {

CFExpr make(CFKind k, RatFn f = RatFn(), Rat r = Rat(0), HGParams hg = HGParams{}, std::vector<CFExpr> kids = {}) {
  auto n = std::make_shared<CFNode>();
  n->kind = k;
  n->f = std::move(f);
  n->r = std::move(r);
  n->hg = std::move(hg);
  n->kids = std::move(kids);
  return n;
}

void need(const CFExpr& e) {
  if (!e) fail(ErrorCode::InvalidArgument, "null closed-form node");
}

}  // namespace

CFExpr cf_rational(const RatFn& f) { return make(CFKind::Rational, f); }
CFExpr cf_pow(CFExpr base, const Rat& e) {
  need(base);
  return make(CFKind::Pow, RatFn(), e, HGParams{}, {std::move(base)});
}
CFExpr cf_hg(const HGParams& p, const RatFn& w) {
  p.validate();
  return make(CFKind::HG, w, Rat(0), p);
}
CFExpr cf_int0t(CFExpr child) {
  need(child);
  return make(CFKind::Int0t, RatFn(), Rat(0), HGParams{}, {std::move(child)});
}
CFExpr cf_sum(std::vector<CFExpr> kids) {
  for (const auto& k : kids) need(k);
  return make(CFKind::Sum, RatFn(), Rat(0), HGParams{}, std::move(kids));
}
CFExpr cf_prod(std::vector<CFExpr> kids) {
  for (const auto& k : kids) need(k);
  return make(CFKind::Prod, RatFn(), Rat(0), HGParams{}, std::move(kids));
}
CFExpr cf_scale(const Rat& s, CFExpr child) {
  need(child);
  return make(CFKind::Scale, RatFn(), s, HGParams{}, {std::move(child)});
}
CFExpr cf_invt(CFExpr child) {
  need(child);
  return make(CFKind::InvT, RatFn(), Rat(0), HGParams{}, {std::move(child)});
}

std::string cf_kind_name(CFKind k) {
  switch (k) {
    case CFKind::Rational: return "Rational";
    case CFKind::Pow: return "Pow";
    case CFKind::HG: return "HG";
    case CFKind::Int0t: return "Int0t";
    case CFKind::Sum: return "Sum";
    case CFKind::Prod: return "Prod";
    case CFKind::Scale: return "Scale";
    case CFKind::InvT: return "InvT";
  }
  return "?";
}

CFKind cf_kind_from_name(const std::string& s) {
  for (CFKind k : {CFKind::Rational, CFKind::Pow, CFKind::HG, CFKind::Int0t, CFKind::Sum, CFKind::Prod, CFKind::Scale,
                   CFKind::InvT})
    if (cf_kind_name(k) == s) return k;
  fail(ErrorCode::InvalidArgument, "unknown closed-form node kind " + s);
}

std::string cf_to_string(const CFExpr& e) {
  std::ostringstream os;
  switch (e->kind) {
    case CFKind::Rational: os << "(" << e->f.to_string("t") << ")"; break;
    case CFKind::Pow: os << cf_to_string(e->kids[0]) << "^(" << e->r.get_str() << ")"; break;
    case CFKind::HG:
      os << "2F1(" << e->hg.a.get_str() << "," << e->hg.b.get_str() << ";" << e->hg.c.get_str() << ";"
         << e->f.to_string("t") << ")";
      break;
    case CFKind::Int0t: os << "int_0^t[" << cf_to_string(e->kids[0]) << "]"; break;
    case CFKind::Sum:
    case CFKind::Prod: {
      os << "(";
      for (size_t i = 0; i < e->kids.size(); ++i) {
        if (i) os << (e->kind == CFKind::Sum ? " + " : " * ");
        os << cf_to_string(e->kids[i]);
      }
      os << ")";
      break;
    }
    case CFKind::Scale: os << e->r.get_str() << "*" << cf_to_string(e->kids[0]); break;
    case CFKind::InvT: os << "(1/t)*" << cf_to_string(e->kids[0]); break;
  }
  return os.str();
}

// ---- series route ----

namespace {

bool rational_root(const Rat& c, unsigned long q, Rat& out) {
  if (c < 0 && q % 2 == 0) return false;
  Int n = abs(c.get_num()), d = c.get_den(), rn, rd;
  if (!mpz_root(rn.get_mpz_t(), n.get_mpz_t(), q)) return false;
  if (!mpz_root(rd.get_mpz_t(), d.get_mpz_t(), q)) return false;
  out = Rat(c < 0 ? Int(-rn) : rn, rd);
  out.canonicalize();
  return true;
}

// power of a Laurent series c t^v (1 + ...) for rational e
TSeries series_pow(const TSeries& s, const Rat& e) {
  int v = s.valuation();
  if (v > s.order()) fail(ErrorCode::NonUnitBase, "power of a series with no known nonzero term");
  Rat c = s.coeff(v);
  Rat ve = e * v;
  if (!is_integer(ve)) fail(ErrorCode::NonUnitBase, "fractional power of t in a series power");
  Rat ce;
  unsigned long q = e.get_den().get_ui();
  Rat croot;
  if (!rational_root(c, q, croot)) fail(ErrorCode::NonUnitBase, "leading coefficient has no rational root");
  Int p = e.get_num();
  ce = 1;
  Rat base = p >= 0 ? croot : Rat(1) / croot;
  for (Int k = 0; k < abs(p); ++k) ce *= base;
  TSeries unit = (s.shift(-v) * (Rat(1) / c)).with_min_exp(0);
  return pow_rational(unit, e).shift(static_cast<int>(ve.get_num().get_si())) * ce;
}

TSeries eval_at(const CFExpr& e, int K) {
  switch (e->kind) {
    case CFKind::Rational: return ratfn_expand_at_zero(e->f, K);
    case CFKind::Pow: return series_pow(eval_at(e->kids[0], K), e->r);
    case CFKind::HG: return compose_rational(hg_series(e->hg, K), e->f, K);
    case CFKind::Int0t: return integrate(eval_at(e->kids[0], K));
    case CFKind::Sum: {
      TSeries acc = eval_at(e->kids[0], K);
      for (size_t i = 1; i < e->kids.size(); ++i) acc = acc + eval_at(e->kids[i], K);
      return acc;
    }
    case CFKind::Prod: {
      TSeries acc = eval_at(e->kids[0], K);
      for (size_t i = 1; i < e->kids.size(); ++i) acc = acc * eval_at(e->kids[i], K);
      return acc;
    }
    case CFKind::Scale: return eval_at(e->kids[0], K) * e->r;
    case CFKind::InvT: return eval_at(e->kids[0], K).shift(-1);
  }
  fail(ErrorCode::InvalidArgument, "bad node");
}

}  // namespace

TSeries cf_eval_series(const CFExpr& e, int N) {
  need(e);
  for (int slack = 8; slack <= 512; slack *= 2) {
    TSeries s = eval_at(e, N + slack);
    if (s.order() >= N) {
      s = s.truncate(N);
      // drop structurally zero polar slots
      int v = s.valuation();
      if (v > s.min_exp() && v <= N) s = s.with_min_exp(std::min(v, 0));
      return s;
    }
  }
  fail(ErrorCode::DepthInsufficient, "closed form loses too much order");
}

// ---- numeric route ----

namespace {

constexpr int kTaylorOrder = 80;

struct NumCtx {
  Rat radius;
  std::map<const CFNode*, TSeries> series;
  const TSeries& series_of(const CFExpr& e) {
    auto it = series.find(e.get());
    if (it == series.end()) it = series.emplace(e.get(), cf_eval_series(e, kTaylorOrder)).first;
    return it->second;
  }
};

BigF num(const CFExpr& e, const BigF& t, mpfr_prec_t wp, NumCtx& ctx);

BigF int0t(const CFExpr& child, const BigF& t, mpfr_prec_t wp, NumCtx& ctx) {
  const TSeries& s = ctx.series_of(child);
  if (s.min_exp() <= -1 && s.coeff(-1) != 0) fail(ErrorCode::ResidueObstruction, "integrand has a t^-1 term");
  TSeries pp = polar_part(s);
  // primitive of the polar part, evaluated at t (the -int_t^infty pp contribution)
  BigF res(wp);
  for (int k = s.min_exp(); k < -1; ++k) {
    Rat a = s.coeff(k);
    if (a != 0) res += BigF(a / (k + 1), wp) * pow_si(t, k + 1);
  }
  BigF eps = BigF(ctx.radius / 64, wp);
  BigF at = abs(t);
  BigF e = at < eps ? at : eps;
  if (t.sign() < 0) e = -e;
  // Taylor part on [0, e]
  BigF tay(wp);
  for (int k = s.order(); k >= 0; --k) tay = (tay + BigF(s.coeff(k) / (k + 1), wp)) * e;
  res += tay;
  if (e == t) return res;
  mpfr_prec_t ip = wp + 48;  // absorbs cancellation against the polar part
  auto g = [&](const BigF& u) {
    BigF val = num(child, u.with_precision(ip), ip, ctx) - eval_series(pp, u.with_precision(ip));
    return val.with_precision(wp);
  };
  res += integrate_gl(g, e, t, wp).value;
  return res;
}

BigF num(const CFExpr& e, const BigF& t, mpfr_prec_t wp, NumCtx& ctx) {
  switch (e->kind) {
    case CFKind::Rational: return e->f.eval(t).with_precision(wp);
    case CFKind::Pow: {
      BigF b = num(e->kids[0], t, wp, ctx);
      if (is_integer(e->r)) return pow_si(b, e->r.get_num().get_si());
      if (b.sign() <= 0) fail(ErrorCode::ArgumentOutOfRange, "fractional power of a nonpositive value");
      return pow(b, e->r);
    }
    case CFKind::HG: return hg_numeric(e->hg, e->f.eval(t).with_precision(wp), wp);
    case CFKind::Int0t: return int0t(e->kids[0], t, wp, ctx);
    case CFKind::Sum: {
      BigF acc(wp);
      for (const auto& k : e->kids) acc += num(k, t, wp, ctx);
      return acc;
    }
    case CFKind::Prod: {
      BigF acc(1L, wp);
      for (const auto& k : e->kids) acc *= num(k, t, wp, ctx);
      return acc;
    }
    case CFKind::Scale: return BigF(e->r, wp) * num(e->kids[0], t, wp, ctx);
    case CFKind::InvT: return num(e->kids[0], t, wp, ctx) / t;
  }
  fail(ErrorCode::InvalidArgument, "bad node");
}

}  // namespace

BigF cf_eval_numeric(const CFExpr& e, const BigF& t, mpfr_prec_t prec, const Rat& radius) {
  need(e);
  if (radius <= 0) fail(ErrorCode::InvalidArgument, "radius must be positive");
  NumCtx ctx{radius, {}};
  mpfr_prec_t wp = prec + 32;
  return num(e, t.with_precision(wp), wp, ctx).with_precision(prec);
}

// ---- transcribed formulas ----

namespace {

Poly P(std::initializer_list<long> c) { return Poly::from_ints(c); }
RatFn R(const Poly& n, const Poly& d = Poly(1)) { return RatFn(n, d); }
CFExpr rat_node(const Poly& n, const Poly& d = Poly(1)) { return cf_rational(R(n, d)); }

}  // namespace

CFExpr integrand_case7() {
  RatFn w(P({0, 0, 16}), P({1, 0, 4}));
  CFExpr F1 = cf_hg(HGParams{rat(3, 2), rat(1, 2), Rat(1)}, w);
  CFExpr F2 = cf_hg(HGParams{rat(1, 2), rat(1, 2), Rat(1)}, w);
  CFExpr diff = cf_sum({cf_prod({rat_node(P({1, -1})), F1}),
                        cf_scale(Rat(-1), cf_prod({rat_node(P({1, 1}) * P({1, -4, 8})), F2}))});
  CFExpr bracket = cf_sum({rat_node(Poly(1)),
                           cf_prod({rat_node(Poly(1), P({0, 2}) * P({1, 2})), cf_pow(rat_node(P({1, 0, 4})), rat(-1, 2)), diff})});
  return cf_prod({cf_pow(rat_node(P({1, -4})), rat(1, 2)), cf_rational(RatFn(Poly(std::vector<Rat>{rat(1, 2), Rat(1)}), P({0, 0, 1}))),
                  bracket});
}

CFExpr integrand_case5() {
  RatFn w(P({0, 0, 0, 0, 64}));
  CFExpr F1 = cf_hg(HGParams{rat(3, 4), rat(5, 4), Rat(1)}, w);
  CFExpr F2 = cf_hg(HGParams{rat(5, 4), rat(7, 4), Rat(2)}, w);
  CFExpr bracket = cf_sum({rat_node(Poly(1)), cf_prod({rat_node(P({1, 0, 0, -10})), F1}),
                           cf_prod({rat_node(P({0, 0, 0, 6}) * P({3, -8, 14})), F2})});
  return cf_prod({cf_pow(rat_node(P({1, -3})), rat(1, 2)), cf_pow(rat_node(P({1, 1})), rat(-1, 2)),
                  rat_node(Poly(1), P({0, 0, 0, 1})), bracket});
}

std::vector<CFExpr> case18_basis() {
  Poly t3 = P({0, 0, 0, 1});
  return {rat_node(Poly(1), P({0, 1})), rat_node(P({1, -8, 4}), t3), rat_node(P({-1, 0, 12}), t3),
          cf_prod({cf_pow(rat_node(P({1, 2})), rat(1, 2)), cf_pow(rat_node(P({1, -6})), rat(3, 2)), rat_node(Poly(1), t3)})};
}

std::vector<ClosedForm> builtin_closed_forms() {
  std::vector<ClosedForm> out;
  {
    RatFn w(P({0, 16, 16}), P({1, 4}).pow(2));
    CFExpr inner = cf_prod({rat_node(Poly(1), P({1, 4}).pow(3)), cf_hg(HGParams{rat(3, 2), rat(3, 2), Rat(2)}, w)});
    out.push_back({"king", 4, Spec::S11, cf_invt(cf_int0t(inner)), rat(1, 8)});
  }
  {
    Poly q = P({1, 2}) * P({1, 6});
    RatFn w(P({0, 16}), q);
    CFExpr inner = cf_prod({rat_node(P({1, -2})), cf_pow(rat_node(q), rat(-3, 2)),
                            cf_hg(HGParams{rat(3, 2), rat(3, 2), Rat(2)}, w)});
    out.push_back({"case3", 3, Spec::S11, cf_invt(cf_int0t(inner)), rat(1, 6)});
  }
  {
    CFExpr body = cf_prod({rat_node(P({0, 1})), cf_pow(rat_node(P({1, -4})), rat(-3, 2)),
                           cf_sum({rat_node(Poly(4)), cf_int0t(integrand_case7())})});
    out.push_back({"case7", 7, Spec::S11, cf_prod({rat_node(Poly(1), P({0, -1, 1})), cf_int0t(body)}), rat(1, 4)});
  }
  {
    CFExpr body = cf_prod({rat_node(P({0, 0, 1})), cf_pow(rat_node(P({1, 1})), rat(-1, 2)),
                           cf_pow(rat_node(P({1, -3})), rat(-3, 2)),
                           cf_sum({rat_node(Poly(-7)), cf_int0t(integrand_case5())})});
    out.push_back({"case5", 5, Spec::S11, cf_prod({rat_node(Poly(1), P({0, -1, 1})), cf_int0t(body)}), rat(1, 3)});
  }
  {
    CFExpr e = cf_prod({rat_node(Poly(1), P({0, 0, 2})),
                        cf_sum({rat_node(P({1, -1})), cf_scale(Rat(-1), cf_pow(rat_node(P({1, 1}) * P({1, -3})), rat(1, 2)))})});
    out.push_back({"case17_11", 17, Spec::S11, e, rat(1, 3)});
  }
  {
    CFExpr e = cf_prod({rat_node(Poly(1), P({0, 0, 8})),
                        cf_sum({rat_node(P({1, -2})), cf_scale(Rat(-1), cf_pow(rat_node(P({1, 2}) * P({1, -6})), rat(1, 2)))})});
    out.push_back({"case18_11", 18, Spec::S11, e, rat(1, 6)});
  }
  for (Spec s : {Spec::S10, Spec::S01}) {
    CFExpr e = cf_prod({rat_node(Poly(1), P({0, 0, 0, 32})),
                        cf_sum({cf_prod({cf_pow(rat_node(P({1, -6})), rat(3, 2)), cf_pow(rat_node(P({1, 2})), rat(1, 2))}),
                                rat_node(P({-1, 8, -4}))})});
    out.push_back({"case18_" + spec_name(s), 18, s, e, rat(1, 6)});
  }
  return out;
}

}  // namespace qwalk
