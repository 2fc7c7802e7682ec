// Copyright 2026 The qwalk authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "qwalk/qwalk.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "qwalk/asymptotics.hpp"
#include "qwalk/cache.hpp"
#include "qwalk/cfexpr.hpp"
#include "qwalk/registry.hpp"
#include "qwalk/suites.hpp"

struct qwalk_registry {
  qwalk::ModelRegistry reg;
  std::optional<qwalk::Cache> cache;
};

namespace {

using namespace qwalk;

thread_local std::string g_last_error;

template <class F>
qwalk_status guard(F&& f) {
  try {
    f();
    g_last_error.clear();
    return QWALK_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return static_cast<qwalk_status>(static_cast<int>(e.code()) + 1);
  } catch (const Json::exception& e) {
    g_last_error = std::string("json: ") + e.what();
    return QWALK_E_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return QWALK_E_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return QWALK_E_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (!p) fail(ErrorCode::InvalidArgument, std::string(what) + " must not be null");
}

char* emit(const Json& j, char** out) {
  need(out, "output pointer");
  std::string s = j.dump(2);
  char* buf = static_cast<char*>(std::malloc(s.size() + 1));
  if (!buf) throw std::bad_alloc();
  std::memcpy(buf, s.c_str(), s.size() + 1);
  *out = buf;
  return buf;
}

std::string istr(const Int& v) { return v.get_str(); }

// "0.0125", "1/80", "-3"
Rat parse_number(const std::string& s) {
  if (s.find('/') != std::string::npos || s.find('.') == std::string::npos) return parse_rat(s);
  size_t dot = s.find('.');
  std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
  bool neg = !whole.empty() && whole[0] == '-';
  if (neg || (!whole.empty() && whole[0] == '+')) whole = whole.substr(1);
  if (whole.empty()) whole = "0";
  for (char c : whole + frac)
    if (c < '0' || c > '9') fail(ErrorCode::InvalidArgument, "bad number " + s);
  Int den = 1;
  for (size_t i = 0; i < frac.size(); ++i) den *= 10;
  Rat r(Int(whole + frac), den);
  r.canonicalize();
  return neg ? Rat(-r) : r;
}

Json kappa_row_json(const KappaRow& r) {
  return Json{{"model", r.model},
              {"spec", spec_name(r.spec)},
              {"class", r.cls},
              {"period", r.period},
              {"rho", r.rho},
              {"gamma", to_string(r.gamma)},
              {"kappa_expected", r.kappa_expected.empty() ? Json("0 (identically zero class)") : Json(r.kappa_expected)},
              {"kappa_measured", r.kappa_measured},
              {"relerr", r.relerr},
              {"spread", r.spread},
              {"expansion", r.root == 1 ? "1/m" : "1/sqrt(m)"},
              {"pass", r.pass}};
}

Annihilator cached_annihilator(const qwalk_registry* h, const ModelData& m, Spec s) {
  std::string key = Cache::key("annihilator", std::to_string(m.id), spec_name(s), 200);
  if (h->cache) {
    if (auto j = h->cache->get(key)) {
      Annihilator a{diffop_from_json(j->at("op")), j->at("source").get<std::string>(), j->at("holdout").get<int>()};
      return a;
    }
  }
  Annihilator a = annihilator_for(m, s);
  if (h->cache) h->cache->put(key, Json{{"op", diffop_to_json(a.op)}, {"source", a.source}, {"holdout", a.holdout}});
  return a;
}

}  // namespace

extern "C" {

const char* qwalk_version(void) { return "0.1.0"; }

const char* qwalk_status_name(qwalk_status s) {
  if (s == QWALK_OK) return "Ok";
  if (s == QWALK_E_INTERNAL) return "Internal";
  int c = static_cast<int>(s) - 1;
  if (c < 0 || c > static_cast<int>(ErrorCode::NotFound)) return "Unknown";
  return error_code_name(static_cast<ErrorCode>(c));
}

const char* qwalk_last_error(void) { return g_last_error.c_str(); }

void qwalk_string_free(char* s) { std::free(s); }

qwalk_status qwalk_registry_open_bundled(qwalk_registry** out) {
  return guard([&] {
    need(out, "output pointer");
    *out = new qwalk_registry{ModelRegistry::bundled(), std::nullopt};
  });
}

qwalk_status qwalk_registry_open_file(const char* path, qwalk_registry** out) {
  return guard([&] {
    need(path, "path");
    need(out, "output pointer");
    *out = new qwalk_registry{ModelRegistry::from_file(path), std::nullopt};
  });
}

void qwalk_registry_free(qwalk_registry* reg) { delete reg; }

qwalk_status qwalk_registry_set_cache(qwalk_registry* reg, const char* dir, int enabled) {
  return guard([&] {
    need(reg, "registry");
    if (!enabled) reg->cache.reset();
    else reg->cache = dir ? Cache(dir) : Cache::from_env();
  });
}

qwalk_status qwalk_registry_validate(const qwalk_registry* reg, int order, char** json_out, int* ok) {
  return guard([&] {
    need(reg, "registry");
    if (order < 1) fail(ErrorCode::InvalidArgument, "order must be positive");
    RegistryReport r = validate_registry(reg->reg, order);
    Json issues = Json::array();
    for (const auto& i : r.issues) issues.push_back({{"model", i.model}, {"check", i.check}, {"detail", i.detail}});
    if (ok) *ok = r.ok;
    emit(Json{{"pass", r.ok}, {"checks", r.checks}, {"issues", issues}, {"version", reg->reg.version()}}, json_out);
  });
}

qwalk_status qwalk_registry_models(const qwalk_registry* reg, char** json_out) {
  return guard([&] {
    need(reg, "registry");
    Json arr = Json::array();
    for (const auto& m : reg->reg.all()) {
      Json asym;
      for (Spec s : kAllSpecs) {
        const AsymRow& r = m.row(s);
        asym[spec_name(s)] = {{"rho", r.rho},   {"gamma", to_string(r.gamma)}, {"period", r.period},
                              {"kappa", r.kappa}, {"oeis", r.oeis},          {"algebraic", r.algebraic}};
      }
      arr.push_back({{"id", m.id}, {"steps", m.steps.to_string()}, {"asym", asym}});
    }
    emit(arr, json_out);
  });
}

qwalk_status qwalk_enumerate(const qwalk_registry* reg, int model, const char* steps, int n, int endpoints,
                             char** json_out) {
  return guard([&] {
    if (n < 0) fail(ErrorCode::InvalidArgument, "n must be nonnegative");
    if ((model > 0) == (steps != nullptr)) fail(ErrorCode::InvalidArgument, "give exactly one of model and steps");
    StepSet st;
    std::string subject;
    if (model > 0) {
      need(reg, "registry");
      st = reg->reg.get(model).steps;
      subject = std::to_string(model);
    } else {
      st = StepSet::parse(steps);
      subject = st.hash();
    }
    std::string key = Cache::key(endpoints ? "enum-endpoints" : "enum", subject, "-", n);
    if (reg && reg->cache)
      if (auto j = reg->cache->get(key)) {
        emit(*j, json_out);
        return;
      }
    WalkTable tab = enumerate(st, n);
    Json totals = Json::array();
    for (int k = 0; k <= n; ++k) totals.push_back(istr(tab.total(k)));
    Json out{{"steps", st.to_string()}, {"n", n}, {"totals", totals}};
    if (model > 0) out["model"] = model;
    if (endpoints) {
      Json layers = Json::array();
      for (int k = 0; k <= n; ++k) {
        Json layer = Json::array();
        for (int i = 0; i <= k; ++i)
          for (int j = 0; j <= k; ++j)
            if (tab.q(k, i, j) != 0) layer.push_back(Json::array({i, j, istr(tab.q(k, i, j))}));
        layers.push_back(layer);
      }
      out["endpoints"] = layers;
    }
    if (reg && reg->cache) reg->cache->put(key, out);
    emit(out, json_out);
  });
}

qwalk_status qwalk_series(const qwalk_registry* reg, int model, const char* spec, int order, char** json_out) {
  return guard([&] {
    need(reg, "registry");
    need(spec, "spec");
    if (order < 0) fail(ErrorCode::InvalidArgument, "order must be nonnegative");
    Spec s = parse_spec(spec);
    TSeries f = count_series(reg->reg.get(model).steps, order)[static_cast<int>(s)];
    Json c = Json::array();
    for (int k = 0; k <= order; ++k) c.push_back(to_string(f.coeff(k)));
    emit(Json{{"model", model}, {"spec", spec_name(s)}, {"order", order}, {"coeffs", c}}, json_out);
  });
}

qwalk_status qwalk_verify(const qwalk_registry* reg, const char* suite, int order, const int* models, int nmodels,
                          int jobs, char** json_out, int* all_pass) {
  return guard([&] {
    need(reg, "registry");
    need(suite, "suite");
    if (jobs < 1) fail(ErrorCode::InvalidArgument, "jobs must be at least 1");
    SuiteOptions opt;
    opt.order = order;
    opt.jobs = jobs;
    if (models && nmodels > 0) {
      opt.models.assign(models, models + nmodels);
      for (int id : opt.models) reg->reg.get(id);
    }
    SuiteReport r = run_suite(suite, reg->reg, opt);
    if (all_pass) *all_pass = r.ok;
    emit(suite_report_to_json(r), json_out);
  });
}

qwalk_status qwalk_guess(const qwalk_registry* reg, int model, const char* spec, int r, int d, int terms, int guard_eqs,
                         char** json_out) {
  return guard([&] {
    need(reg, "registry");
    need(spec, "spec");
    if (terms < 1) fail(ErrorCode::InvalidArgument, "terms must be positive");
    if (guard_eqs < 0) fail(ErrorCode::InvalidArgument, "guard must be nonnegative");
    Spec s = parse_spec(spec);
    TSeries f = count_series(reg->reg.get(model).steps, terms - 1)[static_cast<int>(s)];
    std::optional<GuessResult> g = r < 0 ? guess_minimal(f, 10, 60, guard_eqs) : guess(f, r, d, guard_eqs);
    if (!g) fail(ErrorCode::NoOperatorFound, "no operator of the requested shape annihilates the terms");
    Json out{{"model", model},
             {"spec", spec_name(s)},
             {"terms", terms},
             {"order", g->r},
             {"degree", g->d},
             {"equations_used", g->equations_used},
             {"holdout_checked", g->holdout_checked},
             {"operator", diffop_to_json(g->op)},
             {"operator_text", g->op.to_string()},
             {"recurrence", prec_to_json(to_recurrence(g->op))}};
    for (const auto& [name, op] : builtin_operators())
      if (g->op.order() == op.order() && g->op.equal_up_to_scaling(op)) out["equals_builtin"] = name;
    emit(out, json_out);
  });
}

qwalk_status qwalk_asym(const qwalk_registry* reg, const int* models, int nmodels, const char* spec, int nmax, double tol,
                        int jobs, char** json_out, int* all_pass) {
  return guard([&] {
    need(reg, "registry");
    if (nmax < 40) fail(ErrorCode::InvalidArgument, "nmax must be at least 40");
    if (!(tol > 0)) fail(ErrorCode::InvalidArgument, "tolerance must be positive");
    if (jobs < 1) fail(ErrorCode::InvalidArgument, "jobs must be at least 1");
    std::vector<std::pair<int, Spec>> tasks;
    std::vector<int> ids;
    if (models && nmodels > 0) ids.assign(models, models + nmodels);
    else
      for (const auto& m : reg->reg.all()) ids.push_back(m.id);
    for (int id : ids) {
      reg->reg.get(id);
      if (spec) tasks.emplace_back(id, parse_spec(spec));
      else
        for (Spec s : kAllSpecs) tasks.emplace_back(id, s);
    }
    auto rows = parallel_map<std::vector<KappaRow>>(static_cast<int>(tasks.size()), jobs, [&](int i) {
      auto [id, s] = tasks[i];
      const ModelData& m = reg->reg.get(id);
      std::string key = Cache::key("kappa", std::to_string(id), spec_name(s), nmax);
      if (reg->cache)
        if (auto j = reg->cache->get(key)) {
          std::vector<KappaRow> out;
          for (const auto& e : *j) {
            KappaRow r;
            r.model = id;
            r.spec = s;
            r.cls = e.at("class");
            r.period = e.at("period");
            r.rho = e.at("rho");
            r.gamma = parse_rat(e.at("gamma").get<std::string>());
            r.kappa_expected = e.at("kappa_expected");
            r.kappa_measured = e.at("kappa_measured");
            r.relerr = e.at("relerr");
            r.spread = e.at("spread");
            r.root = e.at("root");
            r.pass = r.kappa_expected.empty() ? e.at("zero_ok").get<bool>() : r.relerr <= tol;
            out.push_back(r);
          }
          return out;
        }
      Annihilator a = cached_annihilator(reg, m, s);
      std::vector<Int> terms = terms_for(m, s, nmax, &a);
      std::vector<KappaRow> out = check_kappa(reg->reg, id, s, nmax, tol, &terms);
      if (reg->cache) {
        Json arr = Json::array();
        for (const auto& r : out)
          arr.push_back({{"class", r.cls},
                         {"period", r.period},
                         {"rho", r.rho},
                         {"gamma", to_string(r.gamma)},
                         {"kappa_expected", r.kappa_expected},
                         {"kappa_measured", r.kappa_measured},
                         {"relerr", r.relerr},
                         {"spread", r.spread},
                         {"root", r.root},
                         {"zero_ok", r.kappa_expected.empty() && r.pass}});
        reg->cache->put(key, arr);
      }
      return out;
    });
    Json arr = Json::array();
    bool ok = true;
    for (const auto& group : rows)
      for (const auto& r : group) {
        arr.push_back(kappa_row_json(r));
        ok = ok && r.pass;
      }
    if (all_pass) *all_pass = ok;
    emit(Json{{"nmax", nmax}, {"tol", tol}, {"pass", ok}, {"rows", arr}}, json_out);
  });
}

qwalk_status qwalk_integral(int which, int prec, char** json_out, int* matches) {
  return guard([&] {
    if (prec < 64) fail(ErrorCode::InvalidArgument, "precision must be at least 64 bits");
    IntegralSpec sp = integral_spec(which);
    IntegralResult r = integral_I(sp, prec);
    BigF err = abs(r.value - BigF(sp.expected, prec));
    bool ok = err.to_double() <= 1e-8;
    if (matches) *matches = ok;
    Json polar = Json::array();
    for (const auto& [e, c] : sp.polar_part) polar.push_back({{"exponent", e}, {"coeff", to_string(c)}});
    emit(Json{{"case", which},
              {"end", to_string(sp.end)},
              {"precision", prec},
              {"value", r.value.to_string(static_cast<int>(prec * 0.30103) - 2)},
              {"expected", to_string(sp.expected)},
              {"abs_error", err.to_double()},
              {"tolerance", 1e-8},
              {"match", ok},
              {"nodes", r.nodes},
              {"taylor_order", r.taylor_order},
              {"polar_part", polar},
              {"status", ok ? "numerically confirmed, analytically conjectural" : "not confirmed"}},
         json_out);
  });
}

qwalk_status qwalk_conjecture_report(const qwalk_registry* reg, int prec, int nmax, char** json_out) {
  return guard([&] {
    need(reg, "registry");
    auto lines = conjecture_report(reg->reg, prec, nmax);
    Json arr = Json::array();
    for (const auto& l : lines)
      arr.push_back({{"conjecture", l.name},
                     {"quantity", l.quantity},
                     {"target", l.target},
                     {"measured", l.measured},
                     {"error", l.error},
                     {"tolerance", l.tol},
                     {"match", l.match},
                     {"status", l.status}});
    emit(arr, json_out);
  });
}

qwalk_status qwalk_closed_form(const char* name, int order, const char* t_value, int prec, char** json_out) {
  return guard([&] {
    auto forms = builtin_closed_forms();
    if (!name) {
      Json arr = Json::array();
      for (const auto& cf : forms)
        arr.push_back({{"name", cf.name}, {"model", cf.model}, {"spec", spec_name(cf.spec)}, {"radius", to_string(cf.radius)}});
      emit(arr, json_out);
      return;
    }
    for (const auto& cf : forms) {
      if (cf.name != name) continue;
      if (order < 0) fail(ErrorCode::InvalidArgument, "order must be nonnegative");
      Json out{{"name", cf.name},
               {"model", cf.model},
               {"spec", spec_name(cf.spec)},
               {"radius", to_string(cf.radius)},
               {"text", cf_to_string(cf.expr)},
               {"expr", cfexpr_to_json(cf.expr)},
               {"series", series_to_json(cf_eval_series(cf.expr, order))}};
      if (t_value) {
        if (prec < 64) fail(ErrorCode::InvalidArgument, "precision must be at least 64 bits");
        Rat t = parse_number(t_value);
        BigF v = cf_eval_numeric(cf.expr, BigF(t, prec), prec, cf.radius);
        out["t"] = to_string(t);
        out["value"] = v.to_string(static_cast<int>(prec * 0.30103) - 2);
      }
      emit(out, json_out);
      return;
    }
    fail(ErrorCode::NotFound, std::string("no closed form named ") + name);
  });
}

}  // extern "C"
