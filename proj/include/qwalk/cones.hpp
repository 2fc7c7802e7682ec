// Copyright 2026 The qwalk authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <array>
#include <climits>
#include <map>
#include <vector>

#include "qwalk/lpoly.hpp"
#include "qwalk/series.hpp"

namespace qwalk {

struct ModelData;

// a . x <= b  (inequality) or a . x = b (equation)
struct LinConstraint {
  std::vector<Rat> a;
  Rat b;
  bool equality = false;
};

// exact feasibility over Q by Gaussian substitution + Fourier-Motzkin
bool fm_feasible(std::vector<LinConstraint> cs, int nvars);

struct ConeSpec {
  int dim = 0;
  std::vector<std::vector<int>> generators;
  void validate() const;
  bool contains(const std::vector<Rat>& v) const;
};

bool cone_is_line_free(const ConeSpec& c);
bool cones_in_opposition(const ConeSpec& c1, const ConeSpec& c2, int k);

ConeSpec gamma_cone();   // cone{(1,1,1),(1,-1,1),(-1,0,0)}
ConeSpec orthant(int d);

// Integer box in the (x, y) exponent plane; INT_MIN/INT_MAX mean unbounded.
struct Box {
  int xlo = INT_MIN, xhi = INT_MAX, ylo = INT_MIN, yhi = INT_MAX;
  bool contains(int k, int m) const { return k >= xlo && k <= xhi && m >= ylo && m <= yhi; }
  bool empty() const { return xlo > xhi || ylo > yhi; }
  Box intersect(const Box& o) const;
  // image under (k, m) -> (-1-k, -1-m)
  Box residue_partner() const;
  // image under (k, m) -> (-k, -m)
  Box reflected() const;
};

// Truncated series in x, y, t with layers n = 0..Nt. Two boxes per series:
// outside `support` every coefficient is structurally zero; inside support,
// coefficients are known only within `known`. Reading anything else raises.
class ConeSeries3 {
 public:
  using Key = std::array<int, 2>;
  ConeSeries3() = default;
  ConeSeries3(ConeSpec cone, int Nt, Box support, Box known);

  const ConeSpec& cone() const { return cone_; }
  int Nt() const { return static_cast<int>(layers_.size()) - 1; }
  const Box& support() const { return support_; }
  const Box& known_box() const { return known_; }
  bool known(int k, int m) const { return !support_.contains(k, m) || known_.contains(k, m); }
  // support minus known, as up to four boxes
  std::vector<Box> unknown_region() const;

  // throws DepthInsufficient when (k, m) is not known
  Rat coeff(int k, int m, int n) const;
  void add(int k, int m, int n, const Rat& c);
  const std::map<Key, Rat>& layer(int n) const { return layers_.at(n); }
  LPoly2 layer_poly(int n) const;

  ConeSeries3 reflect() const;  // x -> 1/x, y -> 1/y
  ConeSeries3 derive_x() const;
  ConeSeries3 derive_y() const;
  ConeSeries3 positive_part_x() const;
  ConeSeries3 positive_part_y() const;

 private:
  ConeSpec cone_;
  Box support_, known_;
  std::vector<std::map<Key, Rat>> layers_;
};

ConeSeries3 hadamard(const ConeSeries3& f, const ConeSeries3& g);
TSeries residue_xy(const ConeSeries3& f);
ConeSeries3 positive_part_xy(const ConeSeries3& f);
// Res_{x,y} of f*g, reading only coefficient pairs that can be nonzero
TSeries residue_of_product(const ConeSeries3& f, const ConeSeries3& g);

// [N S^n]_{Gamma'} for n <= Nt, x/y exponents known down to -Kneg
ConeSeries3 expand_R(const ModelData& m, int Nt, int Kneg);
TSeries q_via_residue(const ModelData& m, const Rat& alpha, const Rat& beta, int Nt);

struct Eq29Report {
  bool ok = true;
  int n = -1;
};
// positive part of [R] equals xy Q(x,y) layer by layer
Eq29Report check_eq29(const ModelData& m, int Nt);

bool verify_lemma9(const ModelData& m, int j);

// f (.) g = Res_{y1,y2} f(x1/y1, x2/y2) g(y1, y2) / (y1 y2) for f,g in 2 variables,
// evaluated in a 4-variable ring (x1, x2, y1, y2)
bool hadamard_residue_check(const LPoly2& f, const LPoly2& g);
LPoly2 hadamard2(const LPoly2& f, const LPoly2& g);

}  // namespace qwalk
