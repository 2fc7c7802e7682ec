// Copyright 2026 The qwalk authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

// Independent reference computations used only by tests.

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace oracle {

// counts[n][i][j] for walks of length n ending at (i, j), 0 <= n <= N.
// Depth-first over step sequences, dropping a prefix the moment it leaves the
// quarter plane (every extension of it would be rejected as well).
struct Counts {
  int N = 0;
  std::vector<std::uint64_t> c;
  std::uint64_t& at(int n, int i, int j) { return c[(n * (N + 1) + i) * (N + 1) + j]; }
  std::uint64_t get(int n, int i, int j) const { return c[(n * (N + 1) + i) * (N + 1) + j]; }
};

inline Counts brute_force_walks(const std::vector<std::pair<int, int>>& steps, int N) {
  Counts out;
  out.N = N;
  out.c.assign(static_cast<size_t>(N + 1) * (N + 1) * (N + 1), 0);
  out.at(0, 0, 0) = 1;
  if (N == 0) return out;
  const int k = static_cast<int>(steps.size());
  std::vector<int> choice(N + 1, -1), xs(N + 1, 0), ys(N + 1, 0);
  int depth = 0;
  while (depth >= 0) {
    if (depth == N - 1) {
      // last step done inline
      for (const auto& [dx, dy] : steps) {
        int x = xs[depth] + dx, y = ys[depth] + dy;
        if (x >= 0 && y >= 0) ++out.at(N, x, y);
      }
      --depth;
      continue;
    }
    int& c = choice[depth];
    if (++c >= k) {
      c = -1;
      --depth;
      continue;
    }
    int x = xs[depth] + steps[c].first, y = ys[depth] + steps[c].second;
    if (x < 0 || y < 0) continue;
    xs[depth + 1] = x;
    ys[depth + 1] = y;
    ++out.at(depth + 1, x, y);
    ++depth;
  }
  return out;
}

// true when some nonzero combination with coefficients in 0..B sums to zero
inline bool lattice_has_line(const std::vector<std::vector<int>>& gens, int B) {
  const size_t k = gens.size();
  const size_t d = k ? gens[0].size() : 0;
  std::vector<int> lam(k, 0);
  for (;;) {
    size_t i = 0;
    while (i < k && ++lam[i] > B) lam[i++] = 0;
    if (i == k) return false;
    std::vector<long> s(d, 0);
    for (size_t g = 0; g < k; ++g)
      for (size_t t = 0; t < d; ++t) s[t] += static_cast<long>(lam[g]) * gens[g][t];
    bool zero = true;
    for (long v : s) zero = zero && v == 0;
    if (zero) return true;
  }
}

}  // namespace oracle
