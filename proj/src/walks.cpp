// Copyright 2026 The qwalk authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "qwalk/walks.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace qwalk {

StepSet::StepSet(std::vector<std::pair<int, int>> steps) : steps_(std::move(steps)) {
  if (steps_.empty()) fail(ErrorCode::InvalidArgument, "empty step set");
  for (auto [dx, dy] : steps_) {
    if (dx < -1 || dx > 1 || dy < -1 || dy > 1 || (dx == 0 && dy == 0))
      fail(ErrorCode::InvalidArgument, "step (" + std::to_string(dx) + "," + std::to_string(dy) + ") is not small");
  }
  std::sort(steps_.begin(), steps_.end());
  steps_.erase(std::unique(steps_.begin(), steps_.end()), steps_.end());
}

StepSet StepSet::parse(const std::string& s) {
  std::vector<std::pair<int, int>> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    int dx, dy;
    char tail;
    if (std::sscanf(item.c_str(), " %d , %d %c", &dx, &dy, &tail) != 2)
      fail(ErrorCode::InvalidArgument, "bad step '" + item + "'");
    v.emplace_back(dx, dy);
  }
  return StepSet(std::move(v));
}

bool StepSet::contains(int dx, int dy) const {
  return std::binary_search(steps_.begin(), steps_.end(), std::make_pair(dx, dy));
}

LPoly2 StepSet::polynomial() const {
  LPoly2 p;
  for (auto [dx, dy] : steps_) p.add_term({dx, dy}, Rat(1));
  return p;
}

std::string StepSet::to_string() const {
  std::string s;
  for (auto [dx, dy] : steps_) {
    if (!s.empty()) s += ";";
    s += std::to_string(dx) + "," + std::to_string(dy);
  }
  return s;
}

std::string StepSet::hash() const {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : to_string()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

StepSet StepSet::transposed() const {
  std::vector<std::pair<int, int>> v;
  for (auto [dx, dy] : steps_) v.emplace_back(dy, dx);
  return StepSet(std::move(v));
}

KernelData decompose_kernel(const StepSet& s) {
  KernelData k;
  k.S = s.polynomial();
  for (auto [dx, dy] : s.steps()) {
    LPoly1& a = dy == 1 ? k.A1 : dy == 0 ? k.A0 : k.Am1;
    a.add_term({dx}, Rat(1));
    LPoly1& b = dx == 1 ? k.B1 : dx == 0 ? k.B0 : k.Bm1;
    b.add_term({dy}, Rat(1));
  }
  k.eps = s.contains(-1, -1) ? 1 : 0;
  return k;
}

WalkTable::WalkTable(int N) {
  layers_.resize(N + 1);
  for (int n = 0; n <= N; ++n) layers_[n].resize((n + 1) * (n + 1));
}

Int WalkTable::total(int n) const {
  Int s = 0;
  for (const auto& v : layers_[n]) s += v;
  return s;
}

LPoly2 WalkTable::layer(int n, int a, int b) const {
  LPoly2 p;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      const Int& v = q(n, i, j);
      if (v != 0) p.add_term({i + a, j + b}, Rat(v));
    }
  return p;
}

WalkTable enumerate(const StepSet& s, int N) {
  if (N < 0) fail(ErrorCode::InvalidArgument, "negative length");
  WalkTable t(N);
  t.q(0, 0, 0) = 1;
  for (int n = 1; n <= N; ++n) {
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) {
        Int& dst = t.q(n, i, j);
        for (auto [a, b] : s.steps()) {
          int pi = i - a, pj = j - b;
          if (pi < 0 || pj < 0 || pi > n - 1 || pj > n - 1) continue;
          mpz_add(dst.get_mpz_t(), dst.get_mpz_t(), t.q(n - 1, pi, pj).get_mpz_t());
        }
      }
  }
  return t;
}

Spec parse_spec(const std::string& s) {
  if (s == "00") return Spec::S00;
  if (s == "10") return Spec::S10;
  if (s == "01") return Spec::S01;
  if (s == "11") return Spec::S11;
  fail(ErrorCode::InvalidArgument, "spec must be one of 00, 10, 01, 11");
}

std::string spec_name(Spec s) {
  static const char* names[] = {"00", "10", "01", "11"};
  return names[static_cast<int>(s)];
}

TSeries specialize(const WalkTable& tab, const Rat& alpha, const Rat& beta) {
  TSeries r(0, tab.N());
  for (int n = 0; n <= tab.N(); ++n) {
    Rat acc = 0, ai = 1;
    for (int i = 0; i <= n; ++i) {
      Rat row = 0, bj = 1;
      for (int j = 0; j <= n; ++j) {
        const Int& v = tab.q(n, i, j);
        if (v != 0) row += bj * v;
        bj *= beta;
      }
      acc += ai * row;
      ai *= alpha;
    }
    r.set_coeff(n, acc);
  }
  return r;
}

std::array<TSeries, 4> count_series(const StepSet& s, int N) {
  if (N < 0) fail(ErrorCode::InvalidArgument, "negative length");
  const int W = N + 1;
  std::vector<Int> cur(W * W), nxt(W * W);
  std::array<std::vector<Rat>, 4> out;
  for (auto& v : out) v.resize(N + 1);
  cur[0] = 1;
  for (int n = 0;; ++n) {
    Int s00 = cur[0], s10 = 0, s01 = 0, s11 = 0;
    for (int i = 0; i <= n; ++i) {
      const Int* row = &cur[i * W];
      if (i == 0)
        for (int j = 0; j <= n; ++j) s01 += row[j];
      s10 += row[0];
      for (int j = 0; j <= n; ++j) s11 += row[j];
    }
    out[0][n] = s00;
    out[1][n] = s10;
    out[2][n] = s01;
    out[3][n] = s11;
    if (n == N) break;
    for (int i = 0; i <= n + 1; ++i)
      for (int j = 0; j <= n + 1; ++j) {
        mpz_ptr dst = nxt[i * W + j].get_mpz_t();
        mpz_set_ui(dst, 0);
        for (auto [a, b] : s.steps()) {
          int pi = i - a, pj = j - b;
          if (pi < 0 || pj < 0 || pi > n || pj > n) continue;
          mpz_add(dst, dst, cur[pi * W + pj].get_mpz_t());
        }
      }
    std::swap(cur, nxt);
  }
  std::array<TSeries, 4> r;
  for (int k = 0; k < 4; ++k) r[k] = TSeries(0, std::move(out[k]));
  return r;
}

KernelResidual kernel_check(const KernelData& k, const WalkTable& tab, int N) {
  if (N > tab.N()) fail(ErrorCode::InvalidArgument, "table shorter than requested order");
  KernelResidual res;
  auto lift_x = [](const LPoly1& p) {
    LPoly2 r;
    for (const auto& [e, c] : p.terms()) r.add_term({e[0], 0}, c);
    return r;
  };
  auto lift_y = [](const LPoly1& p) {
    LPoly2 r;
    for (const auto& [e, c] : p.terms()) r.add_term({0, e[0]}, c);
    return r;
  };
  LPoly2 xAm1 = lift_x(k.Am1).shift({1, 0});
  LPoly2 yBm1 = lift_y(k.Bm1).shift({0, 1});
  for (int n = 0; n <= N; ++n) {
    LPoly2 lhs = tab.layer(n, 1, 1), rhs;
    if (n == 0) {
      rhs = LPoly2::monomial(Rat(1), {1, 1});
    } else {
      LPoly2 prev = tab.layer(n - 1);
      lhs -= (k.S * prev).shift({1, 1});
      LPoly2 qx0, q0y;
      for (int i = 0; i <= n - 1; ++i) qx0.add_term({i, 0}, Rat(tab.q(n - 1, i, 0)));
      for (int j = 0; j <= n - 1; ++j) q0y.add_term({0, j}, Rat(tab.q(n - 1, 0, j)));
      rhs -= xAm1 * qx0;
      rhs -= yBm1 * q0y;
      if (k.eps) rhs.add_term({0, 0}, Rat(tab.q(n - 1, 0, 0)));
    }
    LPoly2 diff = lhs - rhs;
    if (!diff.is_zero()) {
      const auto& [e, c] = *diff.terms().begin();
      res.zero = false;
      res.n = n;
      res.i = e[0];
      res.j = e[1];
      res.value = c;
      return res;
    }
  }
  return res;
}

}  // namespace qwalk
