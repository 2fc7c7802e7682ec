// Copyright 2026 The qwalk authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include <algorithm>
#include <cstdint>
#include <mutex>

#include "qwalk/dfinite.hpp"

namespace qwalk {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// extra equations beyond the unknown count before a guess is attempted
constexpr int kMargin = 5;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

// descending primes below 2^61
u64 nth_prime(int k) {
  static std::mutex mu;
  static std::vector<u64> cache;
  std::lock_guard<std::mutex> lock(mu);
  Int c = (Int(1) << 61) - 1;
  if (!cache.empty()) c = Int(static_cast<unsigned long>(cache.back())) - 2;
  while (static_cast<int>(cache.size()) <= k) {
    while (mpz_probab_prime_p(c.get_mpz_t(), 30) == 0) c -= 2;
    cache.push_back(c.get_ui());
    c -= 2;
  }
  return cache[k];
}

struct System {
  std::vector<std::vector<Int>> rows;  // integer equations
  int ncols = 0;
  std::vector<std::pair<int, int>> cols;  // (i, j) per column
};

// columns ordered by degree j, then order i; one row per coefficient of L(f)
System build_system(const TSeries& f, int r, int d, int firstN, int lastN) {
  System s;
  for (int j = 0; j <= d; ++j)
    for (int i = 0; i <= r; ++i) s.cols.emplace_back(i, j);
  s.ncols = static_cast<int>(s.cols.size());
  std::vector<Rat> row(s.ncols);
  for (int N = firstN; N <= lastN; ++N) {
    for (int c = 0; c < s.ncols; ++c) {
      auto [i, j] = s.cols[c];
      int m = N + i - j;
      Rat a = f.coeff(m);
      if (a != 0)
        for (int k = 0; k < i; ++k) a *= (m - k);
      row[c] = a;
    }
    Int l = 1;
    for (const auto& x : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    std::vector<Int> irow(s.ncols);
    for (int c = 0; c < s.ncols; ++c) irow[c] = row[c].get_num() * (l / row[c].get_den());
    s.rows.push_back(std::move(irow));
  }
  return s;
}

struct ModResult {
  std::vector<int> pivots;
  int free_col = -1;
  std::vector<u64> vec;  // nullspace vector with vec[free_col] = 1
};

ModResult mod_nullvector(const std::vector<std::vector<Int>>& rows, int ncols, u64 p) {
  size_t R = rows.size();
  std::vector<std::vector<u64>> M(R, std::vector<u64>(ncols));
  for (size_t r = 0; r < R; ++r)
    for (int c = 0; c < ncols; ++c) M[r][c] = mpz_fdiv_ui(rows[r][c].get_mpz_t(), p);
  ModResult res;
  size_t pr = 0;
  std::vector<int> pivrow(ncols, -1);
  for (int c = 0; c < ncols && pr < R; ++c) {
    size_t sel = pr;
    while (sel < R && M[sel][c] == 0) ++sel;
    if (sel == R) {
      if (res.free_col < 0) res.free_col = c;
      continue;
    }
    std::swap(M[sel], M[pr]);
    u64 inv = powmod(M[pr][c], p - 2, p);
    for (int k = c; k < ncols; ++k) M[pr][k] = mulmod(M[pr][k], inv, p);
    for (size_t r = 0; r < R; ++r) {
      if (r == pr || M[r][c] == 0) continue;
      u64 fct = M[r][c];
      for (int k = c; k < ncols; ++k) {
        if (M[pr][k] == 0) continue;
        u64 sub = mulmod(fct, M[pr][k], p);
        M[r][k] = M[r][k] >= sub ? M[r][k] - sub : M[r][k] + p - sub;
      }
    }
    res.pivots.push_back(c);
    pivrow[c] = static_cast<int>(pr);
    ++pr;
    if (res.free_col >= 0) break;  // only pivots left of the first free column matter
  }
  if (res.free_col < 0 && static_cast<int>(res.pivots.size()) < ncols) {
    // rows exhausted: the first non-pivot column is free
    for (int c = 0; c < ncols; ++c)
      if (pivrow[c] < 0) {
        res.free_col = c;
        break;
      }
  }
  if (res.free_col < 0) return res;
  res.vec.assign(ncols, 0);
  res.vec[res.free_col] = 1;
  for (int c = 0; c < res.free_col; ++c)
    if (pivrow[c] >= 0) {
      u64 v = M[pivrow[c]][res.free_col];
      res.vec[c] = v == 0 ? 0 : p - v;
    }
  return res;
}

bool rational_reconstruct(const Int& u, const Int& m, Rat& out) {
  Int bound;
  mpz_sqrt(bound.get_mpz_t(), Int(m / 2).get_mpz_t());
  Int r0 = m, r1 = u, s0 = 0, s1 = 1;
  while (r1 > bound) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1, s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  if (abs(s1) > bound || s1 == 0) return false;
  Int g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), s1.get_mpz_t());
  if (g != 1) return false;
  out = Rat(r1, s1);
  out.canonicalize();
  return true;
}

bool annihilates(const std::vector<std::vector<Int>>& rows, const std::vector<Int>& v, size_t from, size_t to) {
  Int acc;
  for (size_t r = from; r < to; ++r) {
    acc = 0;
    for (size_t c = 0; c < v.size(); ++c)
      if (v[c] != 0 && rows[r][c] != 0) acc += rows[r][c] * v[c];
    if (acc != 0) return false;
  }
  return true;
}

std::vector<Int> integer_vector(const std::vector<Rat>& v) {
  Int l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
  std::vector<Int> out;
  for (const auto& x : v) out.push_back(x.get_num() * (l / x.get_den()));
  return out;
}

// exact vector for the first free column: modular images, CRT, reconstruction
std::optional<std::vector<Rat>> solve_first_free(const std::vector<std::vector<Int>>& rows, size_t nsolve, int ncols) {
  std::vector<std::vector<Int>> sub(rows.begin(), rows.begin() + nsolve);
  if (ncols <= 16) {
    auto basis = nullspace_bareiss(sub, ncols);
    if (basis.empty()) return std::nullopt;
    return basis.front();
  }
  std::vector<int> ref_piv;
  int ref_free = -1;
  std::vector<Int> acc;
  Int modulus = 1;
  std::vector<Rat> last;
  bool have_last = false;
  for (int k = 0; k < 400; ++k) {
    u64 p = nth_prime(k);
    ModResult mr = mod_nullvector(sub, ncols, p);
    if (mr.free_col < 0) return std::nullopt;  // full column rank mod p implies over Q
    bool better = ref_free < 0 || mr.free_col > ref_free ||
                  (mr.free_col == ref_free && mr.pivots.size() > ref_piv.size());
    if (better && !(mr.free_col == ref_free && mr.pivots == ref_piv)) {
      ref_piv = mr.pivots;
      ref_free = mr.free_col;
      acc.assign(ncols, 0);
      for (int c = 0; c < ncols; ++c) acc[c] = static_cast<unsigned long>(mr.vec[c]);
      modulus = static_cast<unsigned long>(p);
      have_last = false;
      continue;
    }
    if (mr.free_col != ref_free || mr.pivots != ref_piv) continue;  // unlucky prime
    Int P = static_cast<unsigned long>(p);
    Int inv;
    Int mm = modulus % P;
    mpz_invert(inv.get_mpz_t(), mm.get_mpz_t(), P.get_mpz_t());
    for (int c = 0; c < ncols; ++c) {
      Int r = static_cast<unsigned long>(mr.vec[c]);
      Int a = acc[c] % P;
      Int t = ((r - a) % P + P) % P * inv % P;
      acc[c] += modulus * t;
    }
    modulus *= P;
    std::vector<Rat> cand(ncols);
    bool ok = true;
    for (int c = 0; c < ncols && ok; ++c) ok = rational_reconstruct(acc[c], modulus, cand[c]);
    if (!ok) continue;
    if (have_last && cand == last) {
      if (annihilates(sub, integer_vector(cand), 0, sub.size())) return cand;
    }
    last = cand;
    have_last = true;
  }
  auto basis = nullspace_bareiss(sub, ncols);
  if (basis.empty()) return std::nullopt;
  return basis.front();
}

}  // namespace

std::vector<std::vector<Rat>> nullspace_bareiss(const std::vector<std::vector<Int>>& rows, int ncols) {
  std::vector<std::vector<Int>> M = rows;
  size_t R = M.size();
  std::vector<int> pivcols;
  Int prev = 1;
  size_t pr = 0;
  for (int c = 0; c < ncols && pr < R; ++c) {
    size_t sel = pr;
    while (sel < R && M[sel][c] == 0) ++sel;
    if (sel == R) continue;
    std::swap(M[sel], M[pr]);
    for (size_t r = pr + 1; r < R; ++r) {
      for (int k = c + 1; k < ncols; ++k) {
        Int v = M[pr][c] * M[r][k] - M[r][c] * M[pr][k];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        M[r][k] = v;
      }
      M[r][c] = 0;
    }
    prev = M[pr][c];
    pivcols.push_back(c);
    ++pr;
  }
  std::vector<std::vector<Rat>> basis;
  std::vector<bool> is_piv(ncols, false);
  for (int c : pivcols) is_piv[c] = true;
  for (int f = 0; f < ncols; ++f) {
    if (is_piv[f]) continue;
    std::vector<Rat> v(ncols);
    v[f] = 1;
    for (int k = static_cast<int>(pivcols.size()) - 1; k >= 0; --k) {
      int c = pivcols[k];
      Rat s = 0;
      for (int j = c + 1; j < ncols; ++j)
        if (v[j] != 0 && M[k][j] != 0) s += Rat(M[k][j]) * v[j];
      v[c] = -s / Rat(M[k][c]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<GuessResult> guess(const TSeries& f, int r, int d, int guard) {
  if (r < 0 || d < 0 || guard < 0) fail(ErrorCode::InvalidArgument, "negative guessing parameter");
  int v = f.min_exp(), M = f.order();
  int known = M - v + 1;
  int unknowns = (r + 1) * (d + 1);
  if (known < unknowns + guard)
    fail(ErrorCode::InsufficientTerms, "need " + std::to_string(unknowns + guard) + " coefficients, have " + std::to_string(known));
  System sys = build_system(f, r, d, v - r, M - r);
  size_t nsolve = sys.rows.size() - guard;
  auto sol = solve_first_free(sys.rows, nsolve, sys.ncols);
  if (!sol) return std::nullopt;
  std::vector<Int> iv = integer_vector(*sol);
  if (!annihilates(sys.rows, iv, 0, nsolve)) fail(ErrorCode::InvalidArgument, "internal: nullspace vector fails");
  if (!annihilates(sys.rows, iv, nsolve, sys.rows.size())) return std::nullopt;
  std::vector<Poly> coeffs(r + 1);
  std::vector<std::vector<Rat>> pc(r + 1, std::vector<Rat>(d + 1));
  for (int c = 0; c < sys.ncols; ++c) pc[sys.cols[c].first][sys.cols[c].second] = Rat(iv[c]);
  for (int i = 0; i <= r; ++i) coeffs[i] = Poly(pc[i]);
  GuessResult g;
  g.op = DiffOp(std::move(coeffs)).primitive();
  g.r = g.op.order();
  g.d = g.op.degree();
  g.equations_used = static_cast<int>(nsolve);
  g.holdout_checked = guard;
  return g;
}

std::optional<GuessResult> guess_minimal(const TSeries& f, int rmax, int dmax, int guard) {
  int known = f.order() - f.min_exp() + 1;
  for (int r = 0; r <= rmax; ++r) {
    int dcap = std::min(dmax, (known - guard - kMargin) / (r + 1) - 1);
    if (dcap < 0) break;
    // existence is monotone in d; bisect on the modular rank test
    auto exists = [&](int d) {
      System sys = build_system(f, r, d, f.min_exp() - r, f.order() - r);
      std::vector<std::vector<Int>> sub(sys.rows.begin(), sys.rows.end() - guard);
      return mod_nullvector(sub, sys.ncols, nth_prime(0)).free_col >= 0;
    };
    if (!exists(dcap)) continue;
    int lo = 0, hi = dcap;
    while (lo < hi) {
      int mid = (lo + hi) / 2;
      if (exists(mid)) hi = mid;
      else lo = mid + 1;
    }
    for (int d = lo; d <= dcap; ++d) {
      auto g = guess(f, r, d, guard);
      if (g) return g;
    }
  }
  return std::nullopt;
}

}  // namespace qwalk
