// Copyright 2026 The qwalk authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qwalk/cones.hpp"
#include "qwalk/models.hpp"

using namespace qwalk;

namespace {

LPoly2 random_lpoly(std::mt19937& rng, int terms) {
  std::uniform_int_distribution<int> e(-4, 4), c(-6, 6);
  LPoly2 p;
  for (int i = 0; i < terms; ++i) p.add_term({e(rng), e(rng)}, Rat(c(rng)));
  return p;
}

}  // namespace

TEST_SUITE("cones") {
TEST_CASE("line-free test agrees with lattice search") {
  std::mt19937 rng(21);
  std::uniform_int_distribution<int> u(-1, 1);
  int free = 0, lines = 0;
  for (int it = 0; it < 300; ++it) {
    int dim = 2 + it % 2;
    int k = 2 + static_cast<int>(rng() % 3);
    ConeSpec c{dim, {}};
    while (static_cast<int>(c.generators.size()) < k) {
      std::vector<int> g(dim);
      for (auto& v : g) v = u(rng);
      if (std::any_of(g.begin(), g.end(), [](int v) { return v != 0; })) c.generators.push_back(g);
    }
    bool lf = cone_is_line_free(c);
    CHECK(lf == !oracle::lattice_has_line(c.generators, 4));
    (lf ? free : lines)++;
  }
  CHECK(free > 20);
  CHECK(lines > 20);
  CHECK(cone_is_line_free(gamma_cone()));
  CHECK(cone_is_line_free(orthant(4)));
  CHECK_THROWS_AS(cone_is_line_free(ConeSpec{5, {{1, 0, 0, 0, 0}}}), Error);
  CHECK_THROWS_AS(cone_is_line_free(ConeSpec{2, {{0, 0}}}), Error);
}

TEST_CASE("cones in opposition") {
  ConeSpec right{2, {{1, 0}, {0, 1}}}, left{2, {{-1, 0}, {0, 1}}};
  CHECK_FALSE(cones_in_opposition(right, right, 1));
  CHECK(cones_in_opposition(right, left, 1));
  CHECK(cones_in_opposition(right, left, 0));
  ConeSpec plane{2, {{1, 1}, {1, -1}}};
  CHECK_FALSE(cones_in_opposition(plane, left, 1));  // projection of plane onto the last axis is a line
  CHECK_THROWS_AS(cones_in_opposition(right, orthant(3), 1), Error);
  CHECK_THROWS_AS(cones_in_opposition(right, left, 3), Error);
}

TEST_CASE("reading outside the known window raises") {
  const auto& m = ModelRegistry::bundled().get(6);  // non-Laurent numerator
  ConeSeries3 phi = expand_R(m, 4, 3);
  CHECK_THROWS_AS(phi.coeff(-50, 0, 2), Error);
  CHECK_THROWS_AS(phi.coeff(0, 0, 5), Error);
  try {
    (void)phi.coeff(-50, 0, 2);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DepthInsufficient);
  }
  CHECK_NOTHROW((void)phi.coeff(-3, 0, 2));
}

TEST_CASE("residue of a derivative vanishes") {
  for (int id : {1, 4, 6, 11, 16, 19}) {
    ConeSeries3 phi = expand_R(ModelRegistry::bundled().get(id), 5, 6);
    CHECK(residue_xy(phi.derive_x()).is_zero());
    CHECK(residue_xy(phi.derive_y()).is_zero());
  }
  std::mt19937 rng(22);
  for (int it = 0; it < 50; ++it) {
    LPoly2 p = random_lpoly(rng, 12);
    CHECK(p.derivative(0).coeff({-1, -1}) == 0);
    CHECK(p.derivative(1).coeff({-1, -1}) == 0);
  }
}

TEST_CASE("Hadamard product as a residue on random Laurent polynomials") {
  std::mt19937 rng(23);
  for (int it = 0; it < 100; ++it) {
    LPoly2 f = random_lpoly(rng, 10), g = random_lpoly(rng, 10);
    CHECK(hadamard_residue_check(f, g));
    // direct definition
    LPoly2 h;
    for (const auto& [e, c] : f.terms())
      for (const auto& [e2, c2] : g.terms())
        if (e == e2) h.add_term(e, c * c2);
    CHECK(hadamard2(f, g) == h);
  }
}

TEST_CASE("positive parts compose in either order") {
  for (const auto& m : ModelRegistry::bundled().all()) {
    ConeSeries3 phi = expand_R(m, 6, 8);
    ConeSeries3 a = phi.positive_part_x().positive_part_y();
    ConeSeries3 b = phi.positive_part_y().positive_part_x();
    ConeSeries3 c = positive_part_xy(phi);
    for (int n = 0; n <= 6; ++n) {
      CHECK(a.layer_poly(n) == b.layer_poly(n));
      CHECK(a.layer_poly(n) == c.layer_poly(n));
    }
  }
}

TEST_CASE("residue representation and positive part on the walk tables") {
  for (int id : {1, 4, 17, 18}) {
    const auto& m = ModelRegistry::bundled().get(id);
    auto series = count_series(m.steps, 8);
    for (Spec s : kAllSpecs) {
      TSeries q = q_via_residue(m, Rat(spec_alpha(s)), Rat(spec_beta(s)), 8);
      CHECK(q.agrees_with(series[static_cast<int>(s)]));
    }
    CHECK(check_eq29(m, 8).ok);
  }
  CHECK(verify_lemma9(ModelRegistry::bundled().get(2), 4));
}
}
