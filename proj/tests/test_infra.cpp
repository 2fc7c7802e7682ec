// Copyright 2026 The qwalk authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <unistd.h>

#include "qwalk/cache.hpp"
#include "qwalk/const_expr.hpp"
#include "qwalk/registry.hpp"
#include "qwalk/suites.hpp"

using namespace qwalk;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path p;
  TempDir() {
    p = fs::temp_directory_path() / ("qwalk-test-" + std::to_string(::getpid()) + "-" + std::to_string(std::rand()));
    fs::create_directories(p);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(p, ec);
  }
};

bool registry_ok(const Json& j) {
  try {
    return validate_registry(ModelRegistry::from_json_text(j.dump()), 6).ok;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace

TEST_SUITE("infra") {
TEST_CASE("cache round trip and key versioning") {
  TempDir d;
  Cache c(d.p);
  std::string k = Cache::key("guess", "4", "11", 200);
  CHECK(k.find(code_data_version()) != std::string::npos);
  CHECK_FALSE(c.get(k));
  Json v{{"coeffs", {"1", "-2/3"}}, {"n", 5}};
  c.put(k, v);
  auto back = c.get(k);
  REQUIRE(back);
  CHECK(*back == v);
  c.put(k, Json{{"n", 6}});
  CHECK((*c.get(k))["n"] == 6);
  for (const auto& e : fs::directory_iterator(d.p)) CHECK(e.path().string().find(".tmp.") == std::string::npos);
}

TEST_CASE("corrupted cache entries are discarded") {
  TempDir d;
  Cache c(d.p);
  std::string k = Cache::key("asym", "3", "11", 4000);
  c.put(k, Json{{"kappa", 0.78}});
  fs::path p = c.path_for(k);
  {
    std::fstream f(p, std::ios::in | std::ios::out | std::ios::binary);
    f.seekp(-3, std::ios::end);
    f << "9";
  }
  CHECK_FALSE(c.get(k));
  CHECK_FALSE(fs::exists(p));
  {
    std::ofstream f(p);
    f << "garbage";
  }
  CHECK_FALSE(c.get(k));
}

TEST_CASE("concurrent writers leave one valid entry") {
  TempDir d;
  Cache c(d.p);
  std::string k = Cache::key("kernel", "all", "-", 20);
  parallel_map<int>(32, 8, [&](int i) {
    c.put(k, Json{{"writer", i}, {"pad", std::string(2000, 'x')}});
    return i;
  });
  auto v = c.get(k);
  REQUIRE(v);
  CHECK((*v)["pad"].get<std::string>().size() == 2000);
  int files = 0;
  for (const auto& e : fs::directory_iterator(d.p)) {
    ++files;
    CHECK(e.path().string().find(".tmp.") == std::string::npos);
  }
  CHECK(files == 1);
}

TEST_CASE("cache location from the environment") {
  ::setenv("QWALK_CACHE", "/tmp/qwalk-env-probe", 1);
  CHECK(Cache::from_env().dir() == fs::path("/tmp/qwalk-env-probe"));
  ::unsetenv("QWALK_CACHE");
  ::setenv("XDG_CACHE_HOME", "/tmp/xdg", 1);
  CHECK(Cache::from_env().dir() == fs::path("/tmp/xdg/qwalk"));
  ::unsetenv("XDG_CACHE_HOME");
}

TEST_CASE("constant expressions") {
  const mpfr_prec_t P = 128;
  std::map<std::string, std::string> named{{"B", "1+sqrt(3)"}, {"BB", "B^2"}};
  BigF v = ConstExpr::parse("2*B^(3/2)*sqrt(3)/(3*pi)", named).eval(P);
  BigF B = BigF(1, P) + sqrt(BigF(3, P));
  BigF want = BigF(2, P) * pow(B, rat(3, 2)) * sqrt(BigF(3, P)) / (BigF(3, P) * BigF::pi(P));
  CHECK(close_rel(v, want, 120));
  CHECK(close_rel(ConstExpr::parse("BB", named).eval(P), B * B, 120));
  Rat r;
  CHECK(ConstExpr::parse("-(3/4)^2 + 1").is_rational(&r));
  CHECK(r == rat(7, 16));
  CHECK_FALSE(ConstExpr::parse("sqrt(2)").is_rational());
  CHECK(ConstExpr::parse("sqrt(4)").is_rational(&r));
  CHECK(r == 2);
  CHECK_THROWS_AS(ConstExpr::parse("1+"), Error);
  CHECK_THROWS_AS(ConstExpr::parse("foo"), Error);
  CHECK_THROWS_AS(ConstExpr::parse("X", {{"X", "Y"}, {"Y", "X"}}), Error);
  CHECK_THROWS_AS(ConstExpr::parse("(1"), Error);
}

TEST_CASE("parallel map is deterministic and propagates errors") {
  auto f = [](int i) { return i * i + 1; };
  auto a = parallel_map<int>(200, 1, f), b = parallel_map<int>(200, 6, f);
  CHECK(a == b);
  CHECK(a[13] == 170);
  CHECK_THROWS_AS(parallel_map<int>(50, 4,
                                    [](int i) -> int {
                                      if (i == 17) fail(ErrorCode::InvalidArgument, "boom");
                                      return i;
                                    }),
                  Error);
  CHECK(parallel_map<int>(0, 4, f).empty());
}

TEST_CASE("registry validation catches mutated data") {
  Json base = Json::parse(bundled_models_json());
  CHECK(registry_ok(base));
  auto mutated = [&](const std::function<void(Json&)>& f) {
    Json j = base;
    f(j);
    return registry_ok(j);
  };
  CHECK_FALSE(mutated([](Json& j) { j["models"][3]["anchors"]["11"][5] = 4551; }));
  CHECK_FALSE(mutated([](Json& j) { j["models"][0]["N_orbit"][0]["num"][0] = "2"; }));
  CHECK_FALSE(mutated([](Json& j) { j["models"][3]["steps"].erase(0); }));
  CHECK_FALSE(mutated([](Json& j) { j["models"][2]["asym"]["11"]["kappa_expr"][0] = "sqrt(6)/"; }));
  CHECK_FALSE(mutated([](Json& j) { j["models"][2]["asym"]["11"]["algebraic"] = true; }));
  CHECK_FALSE(mutated([](Json& j) { j["models"][2]["asym"]["11"]["gamma"] = "-1"; }));
  CHECK_FALSE(mutated([](Json& j) { j["models"][0]["table2"]["c"] = "-2"; }));
  CHECK_FALSE(mutated([](Json& j) { j["constants"]["B"] = "1+"; }));
  CHECK_THROWS(ModelRegistry::from_json_text("{\"version\": 1"));
  CHECK_THROWS_AS(ModelRegistry::bundled().get(20), Error);
}

TEST_CASE("suites run on a subset") {
  const auto& reg = ModelRegistry::bundled();
  SuiteOptions o;
  o.models = {1, 4};
  o.jobs = 2;
  for (const char* s : {"kernel", "eq29", "residue"}) {
    SuiteReport r = run_suite(s, reg, o);
    CHECK_MESSAGE(r.ok, s);
    CHECK(!r.items.empty());
    Json j = suite_report_to_json(r);
    CHECK(j["pass"] == true);
  }
  CHECK_THROWS_AS(run_suite("nope", reg), Error);
}
}
