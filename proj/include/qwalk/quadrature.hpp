// Copyright 2026 The qwalk authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <functional>
#include <vector>

#include "qwalk/bigf.hpp"

namespace qwalk {

// n-point Gauss-Legendre rule on [-1, 1]
struct GLRule {
  std::vector<BigF> x, w;
};
const GLRule& gauss_legendre(int n, mpfr_prec_t prec);

struct QuadResult {
  BigF value;
  int nodes = 0;
  BigF spread;  // |I_n - I_{n/2}| at acceptance
};

// node doubling from n0 until successive estimates agree to 2^-prec (relative to max(1,|I|))
QuadResult integrate_gl(const std::function<BigF(const BigF&)>& f, const BigF& a, const BigF& b, mpfr_prec_t prec,
                        int n0 = 16, int nmax = 1024);

}  // namespace qwalk
