// Copyright 2026 The qwalk authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "qwalk/group.hpp"

#include <deque>

namespace qwalk {

namespace {
RatFnXY in_x(const LPoly1& p) { return RatFnXY(to_ratfn(p)); }
RatFnXY in_y(const LPoly1& p) {
  LPoly2 q;
  for (const auto& [e, c] : p.terms()) q.add_term({0, e[0]}, c);
  return RatFnXY::from_lpoly(q);
}

bool eval_lp(const LPoly1& p, const Rat& v, Rat& out) {
  if (v == 0 && !p.is_zero() && p.min_exp(0) < 0) return false;
  out = 0;
  for (const auto& [e, c] : p.terms()) out += c * (e[0] >= 0 ? pow_ui(v, e[0]) : 1 / pow_ui(v, -e[0]));
  return true;
}

// Orbit of a sample point under psi∘phi; returns its period, or -1 when it
// exceeds cap or a map is undefined on the orbit.
int point_period(const KernelData& k, Rat x, Rat y, int cap) {
  const Rat x0 = x, y0 = y;
  for (int n = 1; n <= cap; ++n) {
    Rat b1, bm1, a1, am1;
    if (!eval_lp(k.B1, y, b1) || !eval_lp(k.Bm1, y, bm1) || b1 == 0 || x == 0) return -1;
    x = bm1 / (b1 * x);
    if (!eval_lp(k.A1, x, a1) || !eval_lp(k.Am1, x, am1) || a1 == 0 || y == 0) return -1;
    y = am1 / (a1 * y);
    if (x == x0 && y == y0) return n;
  }
  return -1;
}

}  // namespace

GroupElement compose(const GroupElement& g, const GroupElement& h) {
  GroupElement r;
  r.X = g.X.substitute(h.X, h.Y);
  r.Y = g.Y.substitute(h.X, h.Y);
  r.length = g.length + h.length;
  return r;
}

GroupElement phi_generator(const KernelData& k) {
  if (k.B1.is_zero()) fail(ErrorCode::InvalidArgument, "B1 = 0");
  GroupElement g;
  g.X = RatFnXY::x().inverse() * in_y(k.Bm1) / in_y(k.B1);
  g.Y = RatFnXY::y();
  g.length = 1;
  return g;
}

GroupElement psi_generator(const KernelData& k) {
  if (k.A1.is_zero()) fail(ErrorCode::InvalidArgument, "A1 = 0");
  GroupElement g;
  g.X = RatFnXY::x();
  g.Y = RatFnXY::y().inverse() * in_x(k.Am1) / in_x(k.A1);
  g.length = 1;
  return g;
}

std::vector<GroupElement> walk_group(const KernelData& k, int maxOrder) {
  // cheap finiteness screen: symbolic composition of an infinite-order pair blows up in degree
  const Rat samples[][2] = {{rat(3, 7), rat(5, 11)}, {rat(13, 17), rat(19, 23)}, {rat(29, 31), rat(2, 37)}};
  bool periodic = false;
  for (const auto& pt : samples)
    if (point_period(k, pt[0], pt[1], maxOrder / 2) > 0) {
      periodic = true;
      break;
    }
  if (!periodic)
    fail(ErrorCode::GroupOrderExceeded, "group not closed within " + std::to_string(maxOrder) + " elements");
  GroupElement id{RatFnXY::x(), RatFnXY::y(), 0};
  std::vector<GroupElement> gens = {phi_generator(k), psi_generator(k)};
  std::vector<GroupElement> elems = {id};
  std::deque<size_t> todo = {0};
  auto known = [&](const GroupElement& e) {
    for (const auto& f : elems)
      if (f.X == e.X && f.Y == e.Y) return true;
    return false;
  };
  while (!todo.empty()) {
    size_t i = todo.front();
    todo.pop_front();
    for (const auto& s : gens) {
      GroupElement e = compose(s, elems[i]);
      if (known(e)) continue;
      if (static_cast<int>(elems.size()) >= maxOrder)
        fail(ErrorCode::GroupOrderExceeded, "group not closed within " + std::to_string(maxOrder) + " elements");
      elems.push_back(e);
      todo.push_back(elems.size() - 1);
    }
  }
  return elems;
}

RatFnXY orbit_sum(const std::vector<GroupElement>& group) {
  RatFnXY s;
  for (const auto& g : group) {
    RatFnXY term = g.X * g.Y;
    s = g.sign() > 0 ? s + term : s - term;
  }
  return s;
}

}  // namespace qwalk
