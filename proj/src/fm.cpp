// Copyright 2026 The qwalk authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include <map>

#include "qwalk/cones.hpp"

namespace qwalk {

namespace {

bool all_zero(const std::vector<Rat>& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

// scale by a positive factor so the first nonzero coefficient is +-1
void normalize(LinConstraint& c) {
  for (const auto& x : c.a) {
    if (x == 0) continue;
    Rat s = 1 / abs(x);
    for (auto& y : c.a) y *= s;
    c.b *= s;
    return;
  }
}

}  // namespace

bool fm_feasible(std::vector<LinConstraint> cs, int nvars) {
  for (auto& c : cs)
    if (static_cast<int>(c.a.size()) != nvars) fail(ErrorCode::InvalidArgument, "constraint width mismatch");

  // equalities: solve for one variable and substitute everywhere
  for (size_t e = 0; e < cs.size(); ++e) {
    if (!cs[e].equality) continue;
    int piv = -1;
    for (int v = 0; v < nvars; ++v)
      if (cs[e].a[v] != 0) {
        piv = v;
        break;
      }
    if (piv < 0) {
      if (cs[e].b != 0) return false;
      continue;
    }
    LinConstraint p = cs[e];
    for (size_t o = 0; o < cs.size(); ++o) {
      if (o == e || cs[o].a[piv] == 0) continue;
      Rat f = cs[o].a[piv] / p.a[piv];
      for (int v = 0; v < nvars; ++v) cs[o].a[v] -= f * p.a[v];
      cs[o].b -= f * p.b;
    }
    // the pivot row itself becomes a definition of piv; drop it
    cs[e].a.assign(nvars, Rat(0));
    cs[e].b = 0;
  }

  std::vector<LinConstraint> ineq;
  for (auto& c : cs) {
    if (all_zero(c.a)) {
      if (c.equality ? c.b != 0 : c.b < 0) return false;
      continue;
    }
    if (c.equality) {
      // cannot happen after substitution: any equality with a nonzero row was a pivot
      fail(ErrorCode::InvalidArgument, "internal: residual equality");
    }
    normalize(c);
    ineq.push_back(c);
  }

  for (int v = 0; v < nvars; ++v) {
    std::vector<LinConstraint> pos, neg;
    std::map<std::vector<Rat>, Rat> kept;  // direction -> tightest bound
    auto keep = [&](LinConstraint c) {
      if (all_zero(c.a)) return c.b >= 0;
      normalize(c);
      auto it = kept.find(c.a);
      if (it == kept.end()) kept.emplace(c.a, c.b);
      else if (c.b < it->second) it->second = c.b;
      return true;
    };
    for (auto& c : ineq) {
      if (c.a[v] > 0) pos.push_back(c);
      else if (c.a[v] < 0) neg.push_back(c);
      else if (!keep(c)) return false;
    }
    for (const auto& p : pos)
      for (const auto& n : neg) {
        LinConstraint c;
        Rat fp = 1 / p.a[v], fn = -1 / n.a[v];
        c.a.resize(nvars);
        for (int w = 0; w < nvars; ++w) c.a[w] = p.a[w] * fp + n.a[w] * fn;
        c.a[v] = 0;
        c.b = p.b * fp + n.b * fn;
        if (!keep(c)) return false;
      }
    ineq.clear();
    for (auto& [a, b] : kept) ineq.push_back(LinConstraint{a, b, false});
  }
  for (const auto& c : ineq)
    if (c.b < 0) return false;
  return true;
}

}  // namespace qwalk
