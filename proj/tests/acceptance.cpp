// Copyright 2026 The qwalk authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "qwalk/asymptotics.hpp"
#include "qwalk/cones.hpp"
#include "qwalk/dfinite.hpp"
#include "qwalk/hypergeom.hpp"
#include "qwalk/models.hpp"
#include "qwalk/registry.hpp"
#include "qwalk/suites.hpp"

using namespace qwalk;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double budget_s, const std::function<Outcome()>& body) {
  auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double dt = std::chrono::duration<double>(Clock::now() - t0).count();
  if (budget_s > 0 && dt > budget_s) {
    o.pass = false;
    o.detail += " (over time budget " + std::to_string(budget_s) + " s)";
  }
  if (!o.pass) ++failures;
  std::printf("[%s] %2d %-34s %8.2f s  %s\n", o.pass ? "PASS" : "FAIL", id, title, dt, o.detail.c_str());
  std::fflush(stdout);
}

Outcome suite(const std::string& name, int order = -1) {
  SuiteOptions opt;
  opt.order = order;
  SuiteReport r = run_suite(name, ModelRegistry::bundled(), opt);
  int good = 0;
  std::string first;
  for (const auto& it : r.items) {
    if (it.pass)
      ++good;
    else if (first.empty())
      first = "model " + std::to_string(it.model) + " " + it.subject + ": " + it.detail;
  }
  std::ostringstream os;
  os << name << " order " << r.order << ": " << good << "/" << r.items.size();
  if (!first.empty()) os << "; first failure " << first;
  return {r.ok && !r.items.empty(), os.str()};
}

Outcome both(Outcome a, const Outcome& b) {
  a.pass = a.pass && b.pass;
  a.detail += "; " + b.detail;
  return a;
}

}  // namespace

int main() {
  const auto& reg = ModelRegistry::bundled();
  require_valid(reg);

  criterion(1, "enumeration ground truth", 1.0, [&] {
    bool ok = enumerate(StepSet::parse("1,1;-1,0;0,-1"), 6).total(6) == 125;
    const long king[] = {1, 3, 18, 105, 684, 4550, 31340, 219555, 1564080};
    WalkTable t = enumerate(reg.get(4).steps, 8);
    for (int n = 0; n <= 8; ++n) ok = ok && t.total(n) == king[n];
    return Outcome{ok, "Kreweras n=6 total 125; king totals n<=8"};
  });

  criterion(2, "brute-force oracle equivalence", 120.0, [&] {
    const int N = 12;
    std::uint64_t walks = 0;
    for (const auto& m : reg.all()) {
      WalkTable t = enumerate(m.steps, N);
      auto bf = oracle::brute_force_walks(m.steps.steps(), N);
      for (int n = 0; n <= N; ++n)
        for (int i = 0; i <= N; ++i)
          for (int j = 0; j <= N; ++j) {
            Int dp = (i <= n && j <= n) ? t.q(n, i, j) : Int(0);
            std::uint64_t b = bf.get(n, i, j);
            walks += b;
            if (dp != Int(static_cast<unsigned long>(b)))
              return Outcome{false, "model " + std::to_string(m.id) + " differs at n=" + std::to_string(n)};
          }
    }
    return Outcome{true, "19 models, n<=12, " + std::to_string(walks) + " walks enumerated"};
  });

  criterion(3, "kernel equation residual", 0, [] { return suite("kernel", 20); });
  criterion(4, "residue representation", 0, [] { return suite("residue", 12); });
  criterion(5, "positive part and two routes", 0, [] { return both(suite("eq29", 12), suite("lemma9", 5)); });
  criterion(6, "operator proofs at truncation", 60.0, [] { return suite("operators"); });
  criterion(7, "guess and verify", 0, [] { return suite("guess"); });
  criterion(8, "closed forms", 0, [] { return suite("closedforms"); });
  criterion(9, "hypergeometric identities", 0, [] { return suite("identities", 60); });

  criterion(10, "asymptotic constants", 0, [&] {
    int rows = 0, good = 0, zero = 0;
    double worst = 0;
    std::string first;
    for (const auto& m : reg.all())
      for (Spec s : kAllSpecs)
        for (const auto& r : check_kappa(reg, m.id, s, 4000, 1e-4)) {
          ++rows;
          if (r.kappa_expected.empty()) ++zero;
          else worst = std::max(worst, r.relerr);
          if (r.pass) ++good;
          else if (first.empty())
            first = "; first failure case " + std::to_string(m.id) + " (" + spec_name(s) + ") class " +
                    std::to_string(r.cls);
        }
    // named constants, independent of the data file
    const double pi = 3.14159265358979323846;
    const std::pair<int, double> named[] = {{4, 8 / (3 * pi)}, {3, std::sqrt(6.0) / pi}, {17, 1.5 * std::sqrt(3 / pi)}};
    bool named_ok = true;
    for (auto [id, want] : named) {
      auto r = check_kappa(reg, id, Spec::S11, 4000, 1e-4);
      named_ok = named_ok && r.size() == 1 && std::abs(r[0].kappa_measured - want) / want < 1e-4;
    }
    std::ostringstream os;
    os << good << "/" << rows << " residue classes (" << zero << " exactly zero), worst relerr " << worst
       << "; cases 4, 3, 17 at (1,1) " << (named_ok ? "match" : "DO NOT match") << " 8/(3pi), sqrt(6)/pi, (3/2)sqrt(3/pi)"
       << first;
    return Outcome{good == rows && rows > 0 && named_ok, os.str()};
  });

  for (int which : {7, 5})
    criterion(11, which == 7 ? "integral constant, case 7" : "integral constant, case 5", 120.0, [which] {
      IntegralSpec sp = integral_spec(which);
      IntegralResult r = integral_I(sp, 128);
      BigF err = abs(r.value - BigF(sp.expected, 128));
      std::ostringstream os;
      os << "I = " << r.value.to_string(25) << ", target " << sp.expected << ", |err| " << err.to_double()
         << "; numerically confirmed, analytically conjectural";
      return Outcome{err.to_double() < 1e-8, os.str()};
    });

  criterion(12, "property suites", 0, [&] {
    std::mt19937 rng(2026);
    std::uniform_int_distribution<int> e(-5, 5), c(-9, 9);
    int checks = 0;
    // residue of a derivative
    for (const auto& m : reg.all()) {
      ConeSeries3 phi = expand_R(m, 6, 8);
      if (!residue_xy(phi.derive_x()).is_zero() || !residue_xy(phi.derive_y()).is_zero())
        return Outcome{false, "residue of derivative, model " + std::to_string(m.id)};
      ++checks;
    }
    // Hadamard product as a residue
    for (int it = 0; it < 100; ++it) {
      LPoly2 f, g;
      for (int k = 0; k < 12; ++k) {
        f.add_term({e(rng), e(rng)}, Rat(c(rng)));
        g.add_term({e(rng), e(rng)}, Rat(c(rng)));
      }
      if (!hadamard_residue_check(f, g)) return Outcome{false, "hadamard residue, sample " + std::to_string(it)};
      ++checks;
    }
    // positive parts in either order
    for (const auto& m : reg.all()) {
      ConeSeries3 phi = expand_R(m, 8, 10);
      ConeSeries3 a = phi.positive_part_x().positive_part_y(), b = phi.positive_part_y().positive_part_x();
      for (int n = 0; n <= 8; ++n)
        if (a.layer_poly(n) != b.layer_poly(n) || a.layer_poly(n) != positive_part_xy(phi).layer_poly(n))
          return Outcome{false, "positive part composition, model " + std::to_string(m.id)};
      ++checks;
    }
    // hypergeometric equation and recurrence unrolling
    for (const auto& m : reg.all()) {
      HGParams p{m.table2.a, m.table2.b, m.table2.c};
      TSeries f = hg_series(p, 80);
      DiffOp L({Poly(-p.a * p.b), Poly(std::vector<Rat>{p.c, -(p.a + p.b + 1)}), Poly(std::vector<Rat>{0, 1, -1})});
      if (!apply(L, f).truncate(78).is_zero()) return Outcome{false, "hg equation, model " + std::to_string(m.id)};
      PRec rec = to_recurrence(L);
      std::vector<Rat> init;
      for (int k = 0; k < required_initial_terms(rec); ++k) init.push_back(f.coeff(k));
      auto a = unroll(rec, init, 80);
      for (int k = 0; k <= 80; ++k)
        if (a[k] != f.coeff(k)) return Outcome{false, "unroll vs hg series, model " + std::to_string(m.id)};
      checks += 2;
    }
    for (const std::string name : {"king", "case18"}) {
      const DiffOp op = builtin_operators().at(name);
      Spec s = name == "king" ? Spec::S11 : Spec::S10;
      int id = name == "king" ? 4 : 18;
      TSeries q = count_series(reg.get(id).steps, 150)[static_cast<int>(s)];
      PRec rec = to_recurrence(op);
      std::vector<Rat> init;
      for (int k = 0; k < required_initial_terms(rec); ++k) init.push_back(q.coeff(k));
      auto a = unroll(rec, init, 150);
      for (int k = 0; k <= 150; ++k)
        if (a[k] != q.coeff(k)) return Outcome{false, "unroll vs walk counts, operator " + name};
      ++checks;
    }
    return Outcome{true, std::to_string(checks) + " property checks"};
  });

  std::printf("%s: %d criterion line(s) failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
