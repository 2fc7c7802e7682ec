// Copyright 2026 The qwalk authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "qwalk/registry.hpp"

#include <set>

#include "qwalk/cones.hpp"
#include "qwalk/const_expr.hpp"
#include "qwalk/group.hpp"
#include "qwalk/hypergeom.hpp"

namespace qwalk {

namespace {

// the four algebraic specializations
const std::set<std::pair<int, Spec>> kAlgebraic = {
    {17, Spec::S11}, {18, Spec::S10}, {18, Spec::S01}, {18, Spec::S11}};

}  // namespace

RegistryReport validate_registry(const ModelRegistry& reg, int order) {
  RegistryReport rep;
  auto issue = [&](int id, const std::string& check, const std::string& detail) {
    rep.ok = false;
    rep.issues.push_back({id, check, detail});
  };
  for (const ModelData& m : reg.all()) {
    const int id = m.id;
    try {
      WalkTable tab = enumerate(m.steps, order);
      ++rep.checks;
      KernelResidual kr = kernel_check(m.kernel, tab, order);
      if (!kr.zero) issue(id, "kernel", "residual at t^" + std::to_string(kr.n));

      ++rep.checks;
      RatFnXY orb = orbit_sum(walk_group(m.kernel));
      RatFnXY N = m.N_orbit();
      if (!(orb == N) && !(orb == -N)) issue(id, "orbit", "orbit sum differs from the stored numerator");

      ++rep.checks;
      Eq29Report e = check_eq29(m, order);
      if (!e.ok) issue(id, "eq29", "positive part differs at layer " + std::to_string(e.n));

      auto cs = count_series(m.steps, order);
      for (const auto& [s, terms] : m.anchors) {
        ++rep.checks;
        int n = static_cast<int>(terms.size()) - 1;
        TSeries f = n <= order ? cs[static_cast<int>(s)] : count_series(m.steps, n)[static_cast<int>(s)];
        for (int k = 0; k <= n; ++k)
          if (f.coeff(k) != Rat(terms[k])) {
            issue(id, "anchors", "spec " + spec_name(s) + " differs at n = " + std::to_string(k));
            break;
          }
      }

      ++rep.checks;
      HGParams hp{m.table2.a, m.table2.b, m.table2.c};
      try {
        hp.validate();
      } catch (const Error& err) {
        issue(id, "table2", err.what());
      }
      if (m.table2.w.num().coeff(0) != 0 || m.table2.w.den().coeff(0) == 0) issue(id, "table2", "w(0) must be 0");

      for (Spec s : kAllSpecs) {
        ++rep.checks;
        const AsymRow& row = m.row(s);
        if (row.algebraic != (kAlgebraic.count({id, s}) > 0))
          issue(id, "asym", "algebraic flag wrong for spec " + spec_name(s));
        if (row.gamma <= 0) issue(id, "asym", "gamma must be positive for spec " + spec_name(s));
        try {
          if (ConstExpr::parse(row.rho, reg.constants()).eval(64).sign() <= 0)
            issue(id, "asym", "rho not positive for spec " + spec_name(s));
          bool any = false;
          for (const auto& k : row.kappa) {
            if (k.empty()) continue;
            any = true;
            if (ConstExpr::parse(k, reg.constants()).eval(64).sign() <= 0)
              issue(id, "asym", "kappa not positive for spec " + spec_name(s));
          }
          if (!any) issue(id, "asym", "all residue classes empty for spec " + spec_name(s));
        } catch (const Error& err) {
          issue(id, "asym", err.what());
        }
      }
    } catch (const Error& err) {
      issue(id, "exception", err.what());
    }
  }
  return rep;
}

void require_valid(const ModelRegistry& reg, int order) {
  RegistryReport r = validate_registry(reg, order);
  if (!r.ok) {
    const auto& i = r.issues.front();
    fail(ErrorCode::ValidationFailed, "model " + std::to_string(i.model) + " [" + i.check + "]: " + i.detail);
  }
}

}  // namespace qwalk
