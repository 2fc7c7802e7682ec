// Copyright 2026 The qwalk authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "qwalk/lpoly.hpp"
#include "qwalk/series.hpp"

namespace qwalk {

class StepSet {
 public:
  StepSet() = default;
  explicit StepSet(std::vector<std::pair<int, int>> steps);
  // "dx,dy;dx,dy;..."
  static StepSet parse(const std::string& s);

  const std::vector<std::pair<int, int>>& steps() const { return steps_; }
  size_t size() const { return steps_.size(); }
  bool contains(int dx, int dy) const;
  LPoly2 polynomial() const;
  std::string to_string() const;
  // FNV-1a over the canonical string, hex
  std::string hash() const;
  StepSet transposed() const;

 private:
  std::vector<std::pair<int, int>> steps_;
};

struct KernelData {
  LPoly2 S;
  LPoly1 A1, A0, Am1;  // S = A1 y + A0 + Am1 ybar
  LPoly1 B1, B0, Bm1;  // S = B1 x + B0 + Bm1 xbar, stored as polynomials in y
  int eps = 0;
};

KernelData decompose_kernel(const StepSet& s);

// q[n][i][j] for 0 <= i, j <= n <= N, dense per layer
class WalkTable {
 public:
  WalkTable() = default;
  explicit WalkTable(int N);
  int N() const { return static_cast<int>(layers_.size()) - 1; }
  const Int& q(int n, int i, int j) const { return layers_[n][i * (n + 1) + j]; }
  Int& q(int n, int i, int j) { return layers_[n][i * (n + 1) + j]; }
  Int total(int n) const;
  // the layer as a Laurent polynomial, optionally shifted by x^a y^b
  LPoly2 layer(int n, int a = 0, int b = 0) const;

 private:
  std::vector<std::vector<Int>> layers_;
};

WalkTable enumerate(const StepSet& s, int N);

enum class Spec { S00 = 0, S10 = 1, S01 = 2, S11 = 3 };
constexpr std::array<Spec, 4> kAllSpecs = {Spec::S00, Spec::S10, Spec::S01, Spec::S11};
Spec parse_spec(const std::string& s);  // "00", "10", "01", "11"
std::string spec_name(Spec s);
inline int spec_alpha(Spec s) { return s == Spec::S10 || s == Spec::S11; }
inline int spec_beta(Spec s) { return s == Spec::S01 || s == Spec::S11; }

TSeries specialize(const WalkTable& tab, const Rat& alpha, const Rat& beta);

// Q(0,0), Q(1,0), Q(0,1), Q(1,1) through t^N without storing the full table.
std::array<TSeries, 4> count_series(const StepSet& s, int N);

struct KernelResidual {
  bool zero = true;
  int n = -1, i = 0, j = 0;  // first offending monomial x^i y^j t^n
  Rat value;
};

// xy(1 - tS)Q = xy - t x Am1 Q(x,0) - t y Bm1 Q(0,y) + eps t Q(0,0), through t^N
KernelResidual kernel_check(const KernelData& k, const WalkTable& tab, int N);

}  // namespace qwalk
