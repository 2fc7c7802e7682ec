// Copyright 2026 The qwalk authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "qwalk/suites.hpp"

#include <sstream>

#include "qwalk/cfexpr.hpp"
#include "qwalk/cones.hpp"
#include "qwalk/dfinite.hpp"
#include "qwalk/hypergeom.hpp"

namespace qwalk {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> n = {"kernel",     "eq29",        "residue",   "lemma9",
                                             "identities", "closedforms", "operators", "guess"};
  return n;
}

namespace {

std::vector<int> pick(const ModelRegistry& reg, const SuiteOptions& opt, int lo = 1, int hi = 1000) {
  std::vector<int> out;
  for (const auto& m : reg.all())
    if (m.id >= lo && m.id <= hi &&
        (opt.models.empty() || std::find(opt.models.begin(), opt.models.end(), m.id) != opt.models.end()))
      out.push_back(m.id);
  return out;
}

// L(f) vanishes on [min_exp, N]
SuiteItem annihilates(const std::string& subject, int model, const DiffOp& L, const TSeries& f, int N) {
  SuiteItem it{model, subject, false, ""};
  TSeries r = apply(L, f);
  if (r.order() < N) {
    it.detail = "only known through t^" + std::to_string(r.order());
    return it;
  }
  int v = r.truncate(N).valuation();
  it.pass = v > N;
  it.detail = it.pass ? "zero through t^" + std::to_string(N) : "nonzero coefficient at t^" + std::to_string(v);
  return it;
}

SuiteItem series_match(const std::string& subject, int model, const TSeries& got, const TSeries& want, int N) {
  SuiteItem it{model, subject, false, ""};
  for (int n = std::min(got.min_exp(), 0); n <= N; ++n) {
    if (n > got.order() || n > want.order()) {
      it.detail = "series known only through t^" + std::to_string(std::min(got.order(), want.order()));
      return it;
    }
    if (got.coeff(n) != want.coeff(n)) {
      it.detail = "differs at t^" + std::to_string(n) + ": " + to_string(got.coeff(n)) + " vs " + to_string(want.coeff(n));
      return it;
    }
  }
  it.pass = true;
  it.detail = "equal through t^" + std::to_string(N);
  return it;
}

std::vector<Int> motzkin(int N) {
  std::vector<Int> m(N + 1);
  m[0] = 1;
  if (N >= 1) m[1] = 1;
  for (int n = 2; n <= N; ++n) m[n] = ((2 * n + 1) * m[n - 1] + (3 * n - 3) * m[n - 2]) / (n + 2);
  return m;
}

using Job = std::function<std::vector<SuiteItem>()>;

std::vector<SuiteItem> run_jobs(const std::vector<Job>& jobs, int nthreads) {
  auto parts = parallel_map<std::vector<SuiteItem>>(static_cast<int>(jobs.size()), nthreads,
                                                    [&](int i) { return jobs[i](); });
  std::vector<SuiteItem> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

// wraps a job so library errors become failing items instead of aborting the suite
Job guarded(int model, const std::string& subject, Job j) {
  return [=]() -> std::vector<SuiteItem> {
    try {
      return j();
    } catch (const Error& e) {
      return {SuiteItem{model, subject, false, e.what()}};
    }
  };
}

}  // namespace

SuiteReport run_suite(const std::string& name, const ModelRegistry& reg, const SuiteOptions& opt) {
  SuiteReport rep;
  rep.suite = name;
  std::vector<Job> jobs;
  auto ord = [&](int def) { return rep.order = opt.order >= 0 ? opt.order : def; };

  if (name == "kernel") {
    int N = ord(20);
    for (int id : pick(reg, opt))
      jobs.push_back(guarded(id, "kernel", [&reg, id, N]() -> std::vector<SuiteItem> {
        const ModelData& m = reg.get(id);
        KernelResidual k = kernel_check(m.kernel, enumerate(m.steps, N), N);
        return {{id, "kernel", k.zero,
                 k.zero ? "zero through t^" + std::to_string(N)
                        : "residual " + to_string(k.value) + " at x^" + std::to_string(k.i) + " y^" +
                              std::to_string(k.j) + " t^" + std::to_string(k.n)}};
      }));
  } else if (name == "eq29") {
    int N = ord(12);
    for (int id : pick(reg, opt))
      jobs.push_back(guarded(id, "eq29", [&reg, id, N]() -> std::vector<SuiteItem> {
        Eq29Report e = check_eq29(reg.get(id), N);
        return {{id, "eq29", e.ok, e.ok ? "equal through t^" + std::to_string(N) : "layer " + std::to_string(e.n)}};
      }));
  } else if (name == "residue") {
    int N = ord(12);
    for (int id : pick(reg, opt))
      jobs.push_back(guarded(id, "residue", [&reg, id, N]() -> std::vector<SuiteItem> {
        const ModelData& m = reg.get(id);
        auto cs = count_series(m.steps, N);
        std::vector<SuiteItem> out;
        for (Spec s : kAllSpecs) {
          TSeries q = q_via_residue(m, Rat(spec_alpha(s)), Rat(spec_beta(s)), N);
          out.push_back(series_match(spec_name(s), id, q, cs[static_cast<int>(s)], N));
        }
        return out;
      }));
  } else if (name == "lemma9") {
    int J = ord(5);
    for (int id : pick(reg, opt, 1, 16))
      jobs.push_back(guarded(id, "lemma9", [&reg, id, J]() -> std::vector<SuiteItem> {
        std::vector<SuiteItem> out;
        for (int j = 0; j <= J; ++j) {
          bool ok = verify_lemma9(reg.get(id), j);
          out.push_back({id, "j=" + std::to_string(j), ok, ok ? "two routes agree" : "routes differ"});
        }
        return out;
      }));
  } else if (name == "identities") {
    int N = ord(60);
    for (std::string id : {"duplication", "goursat_quarter", "goursat_third"})
      jobs.push_back(guarded(0, id, [id, N]() -> std::vector<SuiteItem> {
        IdentityReport r = verify_identity(id, N);
        return {{0, id, r.ok,
                 r.ok ? "exact through t^" + std::to_string(r.order)
                      : "first mismatch at t^" + std::to_string(r.first_mismatch)}};
      }));
  } else if (name == "closedforms") {
    rep.order = opt.order >= 0 ? opt.order : 30;  // algebraic forms default to 50
    for (const ClosedForm& cf : builtin_closed_forms()) {
      if (!opt.models.empty() && std::find(opt.models.begin(), opt.models.end(), cf.model) == opt.models.end())
        continue;
      bool algebraic = cf.model >= 17;
      int N = opt.order >= 0 ? opt.order : (algebraic ? 50 : 30);
      jobs.push_back(guarded(cf.model, cf.name, [&reg, cf, N]() -> std::vector<SuiteItem> {
        std::vector<SuiteItem> out;
        TSeries dp = count_series(reg.get(cf.model).steps, N)[static_cast<int>(cf.spec)];
        TSeries got = cf_eval_series(cf.expr, N);
        out.push_back(series_match(cf.name + " series", cf.model, got, dp, N));
        // the numeric evaluator agrees with a long truncation of the exact series
        Rat t0 = cf.radius / 10;
        const mpfr_prec_t prec = 64;
        BigF num = cf_eval_numeric(cf.expr, BigF(t0, prec), prec, cf.radius);
        BigF ref = eval_series(cf_eval_series(cf.expr, 120), BigF(t0, prec + 64));
        bool close = close_rel(num, ref, prec - 8);
        std::ostringstream os;
        os << "numeric " << num.to_string(20) << " vs series " << ref.to_string(20) << " at t = " << to_string(t0);
        out.push_back({cf.model, cf.name + " numeric", close, os.str()});
        if (cf.model == 17 && cf.spec == Spec::S11) {
          auto mz = motzkin(N);
          SuiteItem it{17, "motzkin", true, "Motzkin numbers through n = " + std::to_string(N)};
          for (int n = 0; n <= N; ++n)
            if (dp.coeff(n) != Rat(mz[n])) {
              it.pass = false;
              it.detail = "differs from Motzkin at n = " + std::to_string(n);
              break;
            }
          out.push_back(it);
        }
        return out;
      }));
    }
  } else if (name == "operators") {
    int N = ord(200);
    int N18 = opt.order >= 0 ? opt.order : 100;
    jobs.push_back(guarded(4, "king operator", [&reg, N]() -> std::vector<SuiteItem> {
      TSeries q = count_series(reg.get(4).steps, N + 3)[static_cast<int>(Spec::S11)];
      return {annihilates("king operator annihilates Q(1,1)", 4, king_operator(), q, N)};
    }));
    jobs.push_back(guarded(4, "factorization", []() -> std::vector<SuiteItem> {
      DiffOp prod = clear_denominators(mul(king_left_factor(), king_right_factor()));
      bool eq = prod == king_operator().primitive();
      auto [quo, rem] = right_divide(RatDiffOp(king_operator()), king_right_factor());
      bool div = rem.is_zero() && clear_denominators(quo) == clear_denominators(king_left_factor());
      return {{4, "L2*(D+1/t) = king operator", eq, eq ? "exact operator identity" : "operators differ"},
              {4, "king operator / (D+1/t)", div, div ? "remainder 0, quotient L2" : "division mismatch"}};
    }));
    jobs.push_back(guarded(18, "case18", [&reg, N18]() -> std::vector<SuiteItem> {
      std::vector<SuiteItem> out;
      DiffOp L = case18_operator();
      auto cs = count_series(reg.get(18).steps, N18 + L.order());
      out.push_back(annihilates("case18 annihilates Q(1,0)", 18, L, cs[static_cast<int>(Spec::S10)], N18));
      out.push_back(annihilates("case18 annihilates Q(0,1)", 18, L, cs[static_cast<int>(Spec::S01)], N18));
      auto basis = case18_basis();
      for (size_t i = 0; i < basis.size(); ++i)
        out.push_back(annihilates("case18 annihilates s" + std::to_string(i + 1), 18, L,
                                  cf_eval_series(basis[i], N18 + L.order()), N18));
      TSeries comb = cf_eval_series(basis[3], N18) - cf_eval_series(basis[1], N18);
      out.push_back(series_match("s4 - s2 = 32 Q(1,0)", 18, comb, cs[static_cast<int>(Spec::S10)] * Rat(32), N18));
      return out;
    }));
  } else if (name == "guess") {
    int T = ord(200);
    for (int id : pick(reg, opt))
      jobs.push_back(guarded(id, "guess", [&reg, id, T]() -> std::vector<SuiteItem> {
        auto cs = count_series(reg.get(id).steps, T);
        std::vector<SuiteItem> out;
        for (Spec s : kAllSpecs) {
          auto g = guess_minimal(cs[static_cast<int>(s)], 10, 60);
          SuiteItem it{id, spec_name(s), false, "no operator found"};
          if (g) {
            it.pass = g->holdout_checked >= 10;
            it.detail = "order " + std::to_string(g->r) + ", degree " + std::to_string(g->d) + ", " +
                        std::to_string(g->holdout_checked) + " held-out equations verified";
            if (id == 4 && s == Spec::S11) {
              bool same = g->op.equal_up_to_scaling(king_operator());
              it.pass = it.pass && same;
              it.detail += same ? ", equals the king operator" : ", differs from the king operator";
            }
          }
          out.push_back(it);
        }
        return out;
      }));
  } else {
    fail(ErrorCode::InvalidArgument, "unknown suite " + name);
  }
  rep.items = run_jobs(jobs, opt.jobs);
  for (const auto& it : rep.items) rep.ok = rep.ok && it.pass;
  if (rep.items.empty()) rep.ok = false;
  return rep;
}

Json suite_report_to_json(const SuiteReport& r) {
  Json items = Json::array();
  Json first;
  for (const auto& it : r.items) {
    Json j{{"model", it.model}, {"subject", it.subject}, {"pass", it.pass}, {"detail", it.detail}};
    if (!it.pass && first.is_null()) first = j;
    items.push_back(j);
  }
  Json out{{"suite", r.suite}, {"order", r.order}, {"pass", r.ok}, {"items", items}};
  if (!first.is_null()) out["first_failure"] = first;
  return out;
}

}  // namespace qwalk
