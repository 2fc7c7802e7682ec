// Copyright 2026 The qwalk authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

// Command-line front end. Talks to the library only through the C API.

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <json.hpp>
#include <string>
#include <vector>

#include "qwalk/qwalk.h"

namespace {

using Json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

int status_exit(qwalk_status s) {
  if (s == QWALK_OK) return kExitOk;
  std::cerr << "qwalk: " << qwalk_last_error() << "\n";
  if (s == QWALK_E_INVALID_ARGUMENT || s == QWALK_E_NOT_FOUND || s == QWALK_E_BAD_PARAMETERS) return kExitUsage;
  return kExitFail;
}

// prints and frees a C API string
void print_json(char* s, const std::string& format) {
  if (!s) return;
  if (format == "table") {
    Json j = Json::parse(s);
    if (j.contains("items")) {
      std::printf("suite %s: %s\n", j["suite"].get<std::string>().c_str(), j["pass"].get<bool>() ? "PASS" : "FAIL");
      for (const auto& it : j["items"])
        std::printf("  %-4s %3d  %-32s %s\n", it["pass"].get<bool>() ? "ok" : "FAIL", it["model"].get<int>(),
                    it["subject"].get<std::string>().c_str(), it["detail"].get<std::string>().c_str());
    } else if (j.contains("rows")) {
      std::printf("%5s %4s %5s %-14s %6s %-36s %14s %10s %s\n", "model", "spec", "class", "rho", "gamma", "kappa expected",
                  "measured", "relerr", "");
      for (const auto& r : j["rows"])
        std::printf("%5d %4s %2d/%-2d %-14s %6s %-36s %14.10g %10.2e %s\n", r["model"].get<int>(),
                    r["spec"].get<std::string>().c_str(), r["class"].get<int>(), r["period"].get<int>(),
                    r["rho"].get<std::string>().c_str(), r["gamma"].get<std::string>().c_str(),
                    r["kappa_expected"].get<std::string>().c_str(), r["kappa_measured"].get<double>(),
                    r["relerr"].get<double>(), r["pass"].get<bool>() ? "ok" : "FAIL");
    } else if (j.is_array() && !j.empty() && j[0].contains("conjecture")) {
      for (const auto& c : j)
        std::printf("%-28s %-22s target %-20s measured %-22.17g err %.2e  %s\n",
                    c["conjecture"].get<std::string>().c_str(), c["quantity"].get<std::string>().c_str(),
                    c["target"].get<std::string>().c_str(), c["measured"].get<double>(), c["error"].get<double>(),
                    c["status"].get<std::string>().c_str());
    } else {
      std::printf("%s\n", j.dump(2).c_str());
    }
  } else {
    std::printf("%s\n", s);
  }
  qwalk_string_free(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qwalk: quarter-plane walk enumeration, operators, closed forms and asymptotics"};
  app.require_subcommand(1);
  std::string data_path, cache_dir, format = "json";
  bool no_cache = false;
  app.add_option("--data", data_path, "model data file (default: bundled)");
  app.add_option("--cache-dir", cache_dir, "cache directory (default: QWALK_CACHE or platform cache dir)");
  app.add_flag("--no-cache", no_cache, "disable the result cache");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "table"}));

  auto* c_enum = app.add_subcommand("enum", "count walks");
  int e_model = 0, e_n = 0;
  std::string e_steps;
  bool e_endpoints = false;
  auto* e_model_opt = c_enum->add_option("--model", e_model, "model id")->check(CLI::PositiveNumber);
  auto* e_steps_opt = c_enum->add_option("--steps", e_steps, "step set \"dx,dy;dx,dy;...\"");
  e_model_opt->excludes(e_steps_opt);
  c_enum->add_option("--n", e_n, "maximal length")->required()->check(CLI::NonNegativeNumber);
  c_enum->add_flag("--endpoints", e_endpoints, "emit the full endpoint table");

  auto* c_verify = app.add_subcommand("verify", "run a verification suite");
  std::string v_suite;
  int v_order = -1, v_jobs = 1;
  std::vector<int> v_models;
  c_verify->add_option("--suite", v_suite, "suite name")
      ->required()
      ->check(CLI::IsMember({"kernel", "eq29", "residue", "lemma9", "identities", "closedforms", "operators", "guess"}));
  c_verify->add_option("--order", v_order, "truncation order (suite default when omitted)")->check(CLI::NonNegativeNumber);
  c_verify->add_option("--models", v_models, "restrict to these model ids")->delimiter(',');
  c_verify->add_option("--jobs", v_jobs, "parallel jobs")->check(CLI::PositiveNumber);

  auto* c_guess = app.add_subcommand("guess", "guess an annihilating operator from enumeration");
  int g_model = 0, g_r = -1, g_d = -1, g_terms = 200, g_guard = 10;
  std::string g_spec;
  c_guess->add_option("--model", g_model, "model id")->required()->check(CLI::PositiveNumber);
  c_guess->add_option("--spec", g_spec, "00 | 10 | 01 | 11")->required()->check(CLI::IsMember({"00", "10", "01", "11"}));
  auto* g_r_opt = c_guess->add_option("--r", g_r, "operator order")->check(CLI::NonNegativeNumber);
  auto* g_d_opt = c_guess->add_option("--d", g_d, "coefficient degree")->check(CLI::NonNegativeNumber);
  g_r_opt->needs(g_d_opt);
  g_d_opt->needs(g_r_opt);
  c_guess->add_option("--terms", g_terms, "number of series terms")->check(CLI::PositiveNumber);
  c_guess->add_option("--guard", g_guard, "held-out equations")->check(CLI::NonNegativeNumber);

  auto* c_asym = app.add_subcommand("asym", "extrapolate asymptotic constants");
  int a_model = 0, a_nmax = 4000, a_jobs = 1;
  std::string a_spec;
  double a_tol = 1e-4;
  bool a_all = false;
  auto* a_model_opt = c_asym->add_option("--model", a_model, "model id")->check(CLI::PositiveNumber);
  auto* a_all_opt = c_asym->add_flag("--all", a_all, "all 19 models and 4 specs");
  a_model_opt->excludes(a_all_opt);
  c_asym->add_option("--spec", a_spec, "00 | 10 | 01 | 11 (default: all four)")->check(CLI::IsMember({"00", "10", "01", "11"}));
  c_asym->add_option("--nmax", a_nmax, "number of terms")->check(CLI::Range(40, 1000000));
  c_asym->add_option("--tol", a_tol, "relative tolerance")->check(CLI::PositiveNumber);
  c_asym->add_option("--jobs", a_jobs, "parallel jobs")->check(CLI::PositiveNumber);

  auto* c_int = app.add_subcommand("integral", "evaluate the integral constant I");
  int i_case = 7, i_prec = 128;
  c_int->add_option("--case", i_case, "7 or 5")->required()->check(CLI::IsMember({7, 5}));
  c_int->add_option("--prec", i_prec, "working precision in bits")->check(CLI::Range(64, 100000));

  auto* c_conj = app.add_subcommand("conjecture", "integral and kappa checks for the two conjectural constants");
  int cj_prec = 128, cj_nmax = 4000;
  c_conj->add_option("--prec", cj_prec, "precision in bits")->check(CLI::Range(64, 100000));
  c_conj->add_option("--nmax", cj_nmax, "number of terms")->check(CLI::Range(40, 1000000));

  auto* c_series = app.add_subcommand("series", "coefficients of Q(alpha, beta; t)");
  int s_model = 0, s_order = 20;
  std::string s_spec;
  c_series->add_option("--model", s_model, "model id")->required()->check(CLI::PositiveNumber);
  c_series->add_option("--spec", s_spec, "00 | 10 | 01 | 11")->required()->check(CLI::IsMember({"00", "10", "01", "11"}));
  c_series->add_option("--order", s_order, "truncation order")->check(CLI::NonNegativeNumber);

  auto* c_cf = app.add_subcommand("closed-form", "built-in closed forms");
  std::string cf_name, cf_t;
  int cf_order = 30, cf_prec = 64;
  c_cf->add_option("--name", cf_name, "closed form name (omit to list)");
  c_cf->add_option("--order", cf_order, "series order")->check(CLI::NonNegativeNumber);
  c_cf->add_option("--t", cf_t, "evaluate numerically at t (decimal or p/q)");
  c_cf->add_option("--prec", cf_prec, "precision in bits")->check(CLI::Range(64, 100000));

  auto* c_val = app.add_subcommand("validate", "validate the model data");
  int val_order = 8;
  c_val->add_option("--order", val_order, "truncation order")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  if (*c_enum && !*e_model_opt && !*e_steps_opt) {
    std::cerr << "qwalk enum: one of --model and --steps is required\n";
    return kExitUsage;
  }
  if (*c_asym && !a_all && !*a_model_opt) {
    std::cerr << "qwalk asym: one of --model and --all is required\n";
    return kExitUsage;
  }

  qwalk_registry* reg = nullptr;
  qwalk_status st = data_path.empty() ? qwalk_registry_open_bundled(&reg) : qwalk_registry_open_file(data_path.c_str(), &reg);
  if (st != QWALK_OK) return status_exit(st);
  struct Closer {
    qwalk_registry* r;
    ~Closer() { qwalk_registry_free(r); }
  } closer{reg};

  char* out = nullptr;
  int ok = 1;
  // data is checked on every load; a bad file stops here
  if (!*c_val) {
    st = qwalk_registry_validate(reg, 6, &out, &ok);
    if (st != QWALK_OK) return status_exit(st);
    if (!ok) {
      std::cerr << "qwalk: model data failed validation\n" << out << "\n";
      qwalk_string_free(out);
      return kExitFail;
    }
    qwalk_string_free(out);
    out = nullptr;
  }
  st = qwalk_registry_set_cache(reg, cache_dir.empty() ? nullptr : cache_dir.c_str(), no_cache ? 0 : 1);
  if (st != QWALK_OK) return status_exit(st);

  if (*c_enum) {
    st = qwalk_enumerate(reg, *e_model_opt ? e_model : 0, *e_steps_opt ? e_steps.c_str() : nullptr, e_n, e_endpoints, &out);
  } else if (*c_verify) {
    st = qwalk_verify(reg, v_suite.c_str(), v_order, v_models.data(), static_cast<int>(v_models.size()), v_jobs, &out, &ok);
  } else if (*c_guess) {
    st = qwalk_guess(reg, g_model, g_spec.c_str(), g_r, g_d, g_terms, g_guard, &out);
  } else if (*c_asym) {
    int one = a_model;
    st = qwalk_asym(reg, a_all ? nullptr : &one, a_all ? 0 : 1, a_spec.empty() ? nullptr : a_spec.c_str(), a_nmax, a_tol,
                    a_jobs, &out, &ok);
  } else if (*c_int) {
    st = qwalk_integral(i_case, i_prec, &out, &ok);
  } else if (*c_conj) {
    st = qwalk_conjecture_report(reg, cj_prec, cj_nmax, &out);
    if (st == QWALK_OK) {
      for (const auto& l : Json::parse(out)) ok = ok && l["match"].get<bool>();
    }
  } else if (*c_series) {
    st = qwalk_series(reg, s_model, s_spec.c_str(), s_order, &out);
  } else if (*c_cf) {
    st = qwalk_closed_form(cf_name.empty() ? nullptr : cf_name.c_str(), cf_order, cf_t.empty() ? nullptr : cf_t.c_str(),
                           cf_prec, &out);
  } else if (*c_val) {
    st = qwalk_registry_validate(reg, val_order, &out, &ok);
  }
  if (st != QWALK_OK) return status_exit(st);
  print_json(out, format);
  return ok ? kExitOk : kExitFail;
}
