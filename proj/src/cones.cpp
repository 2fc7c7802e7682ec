// Copyright 2026 The qwalk authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "qwalk/cones.hpp"

#include <algorithm>

#include "qwalk/models.hpp"

namespace qwalk {

namespace {

// b -> c - b on extended integers, infinities swap
int flip(int b, int c) {
  if (b == INT_MAX) return INT_MIN;
  if (b == INT_MIN) return INT_MAX;
  return c - b;
}

int add_bound(int b, int d) {
  if (b == INT_MAX || b == INT_MIN) return b;
  return b + d;
}

}  // namespace

// ---- cones ----

void ConeSpec::validate() const {
  if (dim < 1 || dim > 4) fail(ErrorCode::DimensionUnsupported, "cone dimension must be 1..4");
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != dim) fail(ErrorCode::InvalidArgument, "generator length differs from dim");
    if (std::all_of(g.begin(), g.end(), [](int v) { return v == 0; }))
      fail(ErrorCode::InvalidArgument, "zero generator");
  }
}

bool ConeSpec::contains(const std::vector<Rat>& v) const {
  validate();
  if (static_cast<int>(v.size()) != dim) fail(ErrorCode::InvalidArgument, "point dimension mismatch");
  int m = static_cast<int>(generators.size());
  std::vector<LinConstraint> cs;
  for (int d = 0; d < dim; ++d) {
    LinConstraint c{std::vector<Rat>(m), v[d], true};
    for (int i = 0; i < m; ++i) c.a[i] = generators[i][d];
    cs.push_back(c);
  }
  for (int i = 0; i < m; ++i) {
    LinConstraint c{std::vector<Rat>(m), Rat(0), false};
    c.a[i] = -1;
    cs.push_back(c);
  }
  return fm_feasible(cs, m);
}

namespace {

bool line_free_gens(const std::vector<std::vector<int>>& gens, int dim) {
  std::vector<std::vector<int>> g;
  for (const auto& v : gens)
    if (std::any_of(v.begin(), v.end(), [](int x) { return x != 0; })) g.push_back(v);
  if (g.empty() || dim == 0) return true;
  // a line exists iff some convex combination of generators vanishes
  int m = static_cast<int>(g.size());
  std::vector<LinConstraint> cs;
  for (int d = 0; d < dim; ++d) {
    LinConstraint c{std::vector<Rat>(m), Rat(0), true};
    for (int i = 0; i < m; ++i) c.a[i] = g[i][d];
    cs.push_back(c);
  }
  cs.push_back(LinConstraint{std::vector<Rat>(m, Rat(1)), Rat(1), true});
  for (int i = 0; i < m; ++i) {
    LinConstraint c{std::vector<Rat>(m), Rat(0), false};
    c.a[i] = -1;
    cs.push_back(c);
  }
  return !fm_feasible(cs, m);
}

}  // namespace

bool cone_is_line_free(const ConeSpec& c) {
  c.validate();
  return line_free_gens(c.generators, c.dim);
}

bool cones_in_opposition(const ConeSpec& c1, const ConeSpec& c2, int k) {
  c1.validate();
  c2.validate();
  if (c1.dim != c2.dim) fail(ErrorCode::InvalidArgument, "cones of different dimension");
  int n = c1.dim;
  if (k < 0 || k > n) fail(ErrorCode::InvalidArgument, "k out of range");
  auto project = [&](const ConeSpec& c) {
    std::vector<std::vector<int>> g;
    for (const auto& v : c.generators) g.emplace_back(v.begin() + k, v.end());
    return g;
  };
  if (!line_free_gens(project(c1), n - k) || !line_free_gens(project(c2), n - k)) return false;

  // nonzero p in C1 ∩ C2 ∩ (R^k x {0}): some coordinate can be scaled to +-1
  int m1 = static_cast<int>(c1.generators.size()), m2 = static_cast<int>(c2.generators.size());
  int nv = m1 + m2 + k;  // lambda, mu, p_0..p_{k-1}
  for (int i = 0; i < k; ++i)
    for (int s : {1, -1}) {
      std::vector<LinConstraint> cs;
      for (int d = 0; d < n; ++d) {
        LinConstraint a{std::vector<Rat>(nv), Rat(0), true}, b{std::vector<Rat>(nv), Rat(0), true};
        for (int g = 0; g < m1; ++g) a.a[g] = c1.generators[g][d];
        for (int g = 0; g < m2; ++g) b.a[m1 + g] = c2.generators[g][d];
        if (d < k) {
          a.a[m1 + m2 + d] = -1;
          b.a[m1 + m2 + d] = -1;
        }
        cs.push_back(a);
        cs.push_back(b);
      }
      for (int g = 0; g < m1 + m2; ++g) {
        LinConstraint c{std::vector<Rat>(nv), Rat(0), false};
        c.a[g] = -1;
        cs.push_back(c);
      }
      LinConstraint fix{std::vector<Rat>(nv), Rat(1), true};
      fix.a[m1 + m2 + i] = s;
      cs.push_back(fix);
      if (fm_feasible(cs, nv)) return false;
    }
  return true;
}

ConeSpec gamma_cone() { return ConeSpec{3, {{1, 1, 1}, {1, -1, 1}, {-1, 0, 0}}}; }

ConeSpec orthant(int d) {
  ConeSpec c{d, {}};
  for (int i = 0; i < d; ++i) {
    std::vector<int> e(d, 0);
    e[i] = 1;
    c.generators.push_back(e);
  }
  return c;
}

// ---- boxes ----

Box Box::intersect(const Box& o) const {
  return Box{std::max(xlo, o.xlo), std::min(xhi, o.xhi), std::max(ylo, o.ylo), std::min(yhi, o.yhi)};
}

Box Box::residue_partner() const { return Box{flip(xhi, -1), flip(xlo, -1), flip(yhi, -1), flip(ylo, -1)}; }

Box Box::reflected() const { return Box{flip(xhi, 0), flip(xlo, 0), flip(yhi, 0), flip(ylo, 0)}; }

// ---- ConeSeries3 ----

ConeSeries3::ConeSeries3(ConeSpec cone, int Nt, Box support, Box known)
    : cone_(std::move(cone)), support_(support), known_(known.intersect(support)) {
  if (Nt < 0) fail(ErrorCode::InvalidArgument, "negative truncation");
  layers_.resize(Nt + 1);
}

std::vector<Box> ConeSeries3::unknown_region() const {
  std::vector<Box> out;
  const Box& s = support_;
  if (s.empty()) return out;
  if (known_.empty()) {
    out.push_back(s);
    return out;
  }
  auto push = [&](Box b) {
    b = b.intersect(s);
    if (!b.empty()) out.push_back(b);
  };
  if (known_.xlo != INT_MIN) push(Box{INT_MIN, known_.xlo - 1, INT_MIN, INT_MAX});
  if (known_.xhi != INT_MAX) push(Box{known_.xhi + 1, INT_MAX, INT_MIN, INT_MAX});
  if (known_.ylo != INT_MIN) push(Box{known_.xlo, known_.xhi, INT_MIN, known_.ylo - 1});
  if (known_.yhi != INT_MAX) push(Box{known_.xlo, known_.xhi, known_.yhi + 1, INT_MAX});
  return out;
}

Rat ConeSeries3::coeff(int k, int m, int n) const {
  if (n < 0) return Rat(0);
  if (n > Nt()) fail(ErrorCode::DepthInsufficient, "t-exponent " + std::to_string(n) + " beyond truncation");
  if (!known(k, m))
    fail(ErrorCode::DepthInsufficient,
         "coefficient x^" + std::to_string(k) + " y^" + std::to_string(m) + " is outside the known window");
  const auto& L = layers_[n];
  auto it = L.find(Key{k, m});
  return it == L.end() ? Rat(0) : it->second;
}

void ConeSeries3::add(int k, int m, int n, const Rat& c) {
  if (c == 0) return;
  if (n < 0 || n > Nt()) fail(ErrorCode::InvalidArgument, "t-exponent out of range");
  if (!support_.contains(k, m) || !known_.contains(k, m))
    fail(ErrorCode::InvalidArgument, "term outside the declared known support");
  auto& L = layers_[n];
  auto [it, fresh] = L.emplace(Key{k, m}, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) L.erase(it);
  }
}

LPoly2 ConeSeries3::layer_poly(int n) const {
  LPoly2 p;
  for (const auto& [e, c] : layers_.at(n)) p.add_term(e, c);
  return p;
}

ConeSeries3 ConeSeries3::reflect() const {
  ConeSpec c = cone_;
  for (auto& g : c.generators) {
    g[0] = -g[0];
    g[1] = -g[1];
  }
  ConeSeries3 r(c, Nt(), support_.reflected(), known_.reflected());
  for (int n = 0; n <= Nt(); ++n)
    for (const auto& [e, v] : layers_[n]) r.layers_[n].emplace(Key{-e[0], -e[1]}, v);
  return r;
}

ConeSeries3 ConeSeries3::derive_x() const {
  Box s = support_, k = known_;
  s.xlo = add_bound(s.xlo, -1);
  s.xhi = add_bound(s.xhi, -1);
  k.xlo = add_bound(k.xlo, -1);
  k.xhi = add_bound(k.xhi, -1);
  ConeSeries3 r(cone_, Nt(), s, k);
  for (int n = 0; n <= Nt(); ++n)
    for (const auto& [e, v] : layers_[n])
      if (e[0] != 0) r.layers_[n].emplace(Key{e[0] - 1, e[1]}, v * e[0]);
  return r;
}

ConeSeries3 ConeSeries3::derive_y() const {
  Box s = support_, k = known_;
  s.ylo = add_bound(s.ylo, -1);
  s.yhi = add_bound(s.yhi, -1);
  k.ylo = add_bound(k.ylo, -1);
  k.yhi = add_bound(k.yhi, -1);
  ConeSeries3 r(cone_, Nt(), s, k);
  for (int n = 0; n <= Nt(); ++n)
    for (const auto& [e, v] : layers_[n])
      if (e[1] != 0) r.layers_[n].emplace(Key{e[0], e[1] - 1}, v * e[1]);
  return r;
}

ConeSeries3 ConeSeries3::positive_part_x() const {
  Box cut{1, INT_MAX, INT_MIN, INT_MAX};
  ConeSeries3 r(cone_, Nt(), support_.intersect(cut), known_.intersect(cut));
  for (int n = 0; n <= Nt(); ++n)
    for (const auto& [e, v] : layers_[n])
      if (e[0] > 0) r.layers_[n].emplace(e, v);
  return r;
}

ConeSeries3 ConeSeries3::positive_part_y() const {
  Box cut{INT_MIN, INT_MAX, 1, INT_MAX};
  ConeSeries3 r(cone_, Nt(), support_.intersect(cut), known_.intersect(cut));
  for (int n = 0; n <= Nt(); ++n)
    for (const auto& [e, v] : layers_[n])
      if (e[1] > 0) r.layers_[n].emplace(e, v);
  return r;
}

ConeSeries3 positive_part_xy(const ConeSeries3& f) { return f.positive_part_x().positive_part_y(); }

ConeSeries3 hadamard(const ConeSeries3& f, const ConeSeries3& g) {
  int Nt = std::min(f.Nt(), g.Nt());
  Box s = f.support().intersect(g.support());
  ConeSeries3 r(f.cone(), Nt, s, f.known_box().intersect(g.known_box()));
  for (int n = 0; n <= Nt; ++n)
    for (const auto& [e, v] : f.layer(n)) {
      if (!s.contains(e[0], e[1])) continue;
      Rat w = g.coeff(e[0], e[1], n) * v;  // raises if g is unknown here
      r.add(e[0], e[1], n, w);
    }
  // terms of g where f is unknown but g is nonzero
  for (int n = 0; n <= Nt; ++n)
    for (const auto& [e, v] : g.layer(n))
      if (s.contains(e[0], e[1])) (void)f.coeff(e[0], e[1], n);
  for (const Box& uf : f.unknown_region())
    for (const Box& ug : g.unknown_region())
      if (!uf.intersect(ug).empty())
        fail(ErrorCode::DepthInsufficient, "hadamard product reads a region unknown in both factors");
  return r;
}

TSeries residue_xy(const ConeSeries3& f) {
  TSeries r(0, f.Nt());
  for (int n = 0; n <= f.Nt(); ++n) r.set_coeff(n, f.coeff(-1, -1, n));
  return r;
}

TSeries residue_of_product(const ConeSeries3& f, const ConeSeries3& g) {
  int Nt = std::min(f.Nt(), g.Nt());
  // pairs where both sides are unknown cannot be bounded by stored data
  for (const Box& uf : f.unknown_region())
    for (const Box& ug : g.unknown_region())
      if (!uf.intersect(ug.residue_partner()).empty())
        fail(ErrorCode::DepthInsufficient, "residue of product touches a region unknown in both factors");
  TSeries r(0, Nt);
  for (int n1 = 0; n1 <= Nt; ++n1)
    for (const auto& [e, v] : f.layer(n1)) {
      int k = -1 - e[0], m = -1 - e[1];
      if (!g.known(k, m))
        fail(ErrorCode::DepthInsufficient, "residue partner of a stored term is unknown");
      for (int n2 = 0; n1 + n2 <= Nt; ++n2) {
        Rat w = g.coeff(k, m, n2);
        if (w != 0) r.set_coeff(n1 + n2, r.coeff(n1 + n2) + v * w);
      }
    }
  for (int n2 = 0; n2 <= Nt; ++n2)
    for (const auto& [e, v] : g.layer(n2))
      if (!f.known(-1 - e[0], -1 - e[1]))
        fail(ErrorCode::DepthInsufficient, "residue partner of a stored term is unknown");
  return r;
}

// ---- walk series ----

ConeSeries3 expand_R(const ModelData& m, int Nt, int Kneg) {
  if (Nt < 0 || Kneg < 0) fail(ErrorCode::InvalidArgument, "negative truncation");
  const int floor_x = -Kneg - Nt;  // N is needed this deep so that N S^j is exact down to -Kneg
  const bool exact = m.laurent_N();
  LPoly2 N;
  int ntop = INT_MIN, nbot = INT_MAX, ytop = INT_MIN, ybot = INT_MAX;
  for (const auto& [yj, f] : m.N_terms) {
    if (f.is_zero()) continue;
    ytop = std::max(ytop, yj);
    ybot = std::min(ybot, yj);
    int top = f.num().degree() - f.den().degree();
    ntop = std::max(ntop, top);
    if (f.is_laurent()) {
      LPoly1 p = to_lpoly1(f);
      nbot = std::min(nbot, p.min_exp(0));
      for (const auto& [e, c] : p.terms()) N.add_term({e[0], yj}, c);
    } else {
      int K = std::max(0, top - floor_x);
      TSeries g = ratfn_expand_at_infinity(f, K);
      for (int u = g.min_exp(); u <= g.order(); ++u)
        if (-u >= floor_x) N.add_term({-u, yj}, g.coeff(u));
    }
  }
  if (N.is_zero()) fail(ErrorCode::InvalidArgument, "model has zero orbit numerator");

  Box support{exact ? nbot - Nt : INT_MIN, ntop + Nt, ybot - Nt, ytop + Nt};
  Box known = exact ? support : Box{-Kneg, INT_MAX, INT_MIN, INT_MAX};
  ConeSeries3 phi(gamma_cone(), Nt, support, known);
  LPoly2 P = N;
  for (int j = 0; j <= Nt; ++j) {
    if (j > 0) {
      P = P * m.kernel.S;
      if (!exact) {
        LPoly2 cut;
        for (const auto& [e, c] : P.terms())
          if (e[0] >= floor_x) cut.add_term(e, c);
        P = cut;
      }
    }
    for (const auto& [e, c] : P.terms())
      if (phi.known(e[0], e[1])) phi.add(e[0], e[1], j, c);
  }
  return phi;
}

TSeries q_via_residue(const ModelData& m, const Rat& alpha, const Rat& beta, int Nt) {
  ConeSeries3 phi = expand_R(m, Nt, Nt + 2);
  ConeSeries3 ref = phi.reflect();
  // geometric factor sum alpha^a beta^b x^a y^b, needed up to the partners of phi's top exponents
  int B = std::max({phi.support().xhi, phi.support().yhi, Nt + 3}) - 1;
  ConeSeries3 geo(orthant(3), Nt, Box{0, INT_MAX, 0, INT_MAX}, Box{0, B, 0, B});
  for (int a = 0; a <= B; ++a) {
    Rat pa = pow_ui(alpha, a);
    if (pa == 0) break;
    for (int b = 0; b <= B; ++b) {
      Rat pb = pow_ui(beta, b);
      if (pb == 0) break;
      geo.add(a, b, 0, pa * pb);
    }
  }
  return residue_of_product(ref, geo);
}

Eq29Report check_eq29(const ModelData& m, int Nt) {
  Eq29Report rep;
  ConeSeries3 pp = positive_part_xy(expand_R(m, Nt, Nt + 2));
  if (!pp.unknown_region().empty()) fail(ErrorCode::DepthInsufficient, "positive part not fully known");
  WalkTable tab = enumerate(m.steps, Nt);
  for (int n = 0; n <= Nt; ++n)
    if (pp.layer_poly(n) != tab.layer(n, 1, 1)) {
      rep.ok = false;
      rep.n = n;
      return rep;
    }
  return rep;
}

bool verify_lemma9(const ModelData& m, int j) {
  if (j < 0) fail(ErrorCode::InvalidArgument, "negative j");
  // cone route
  ConeSeries3 phi = expand_R(m, j, j + 2);
  LPoly2 cone_side = positive_part_xy(phi).layer_poly(j);

  // rational route in Q(x)[y, 1/y]
  std::map<int, RatFn> cur = m.N_terms;
  std::map<int, RatFn> S;
  auto put = [&](int yj, const LPoly1& p) {
    if (!p.is_zero()) S[yj] = to_ratfn(p);
  };
  put(1, m.kernel.A1);
  put(0, m.kernel.A0);
  put(-1, m.kernel.Am1);
  for (int i = 0; i < j; ++i) {
    std::map<int, RatFn> nxt;
    for (const auto& [ya, fa] : cur)
      for (const auto& [yb, fb] : S) nxt[ya + yb] += fa * fb;
    cur = std::move(nxt);
  }
  LPoly2 rat_side;
  for (const auto& [yj, f] : cur) {
    if (yj <= 0 || f.is_zero()) continue;
    if (!f.is_laurent()) return false;
    LPoly1 p = to_lpoly1(f);
    for (const auto& [e, c] : p.terms())
      if (e[0] > 0) rat_side.add_term({e[0], yj}, c);
  }
  return cone_side == rat_side;
}

LPoly2 hadamard2(const LPoly2& f, const LPoly2& g) {
  LPoly2 r;
  for (const auto& [e, c] : f.terms()) r.add_term(e, c * g.coeff(e));
  return r;
}

bool hadamard_residue_check(const LPoly2& f, const LPoly2& g) {
  // variables (x1, x2, y1, y2)
  LPoly4 F, G;
  for (const auto& [e, c] : f.terms()) F.add_term({e[0], e[1], -e[0], -e[1]}, c);
  for (const auto& [e, c] : g.terms()) G.add_term({0, 0, e[0], e[1]}, c);
  LPoly4 prod = (F * G).shift({0, 0, -1, -1});
  LPoly2 res;
  for (const auto& [e, c] : prod.terms())
    if (e[2] == -1 && e[3] == -1) res.add_term({e[0], e[1]}, c);
  return res == hadamard2(f, g);
}

}  // namespace qwalk
