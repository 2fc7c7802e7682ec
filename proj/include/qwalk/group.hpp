// Copyright 2026 The qwalk authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <vector>

#include "qwalk/ratfn_xy.hpp"
#include "qwalk/walks.hpp"

namespace qwalk {

// (x, y) -> (X(x,y), Y(x,y))
struct GroupElement {
  RatFnXY X, Y;
  int length = 0;  // word length in the two generators
  int sign() const { return length % 2 ? -1 : 1; }
};

// g after h: (g o h)(x,y) = g(h(x,y))
GroupElement compose(const GroupElement& g, const GroupElement& h);
GroupElement phi_generator(const KernelData& k);
GroupElement psi_generator(const KernelData& k);

std::vector<GroupElement> walk_group(const KernelData& k, int maxOrder = 16);
// sum over the group of sign(g) * X_g * Y_g
RatFnXY orbit_sum(const std::vector<GroupElement>& group);

}  // namespace qwalk
