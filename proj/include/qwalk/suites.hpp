// Copyright 2026 The qwalk authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "qwalk/json_io.hpp"
#include "qwalk/models.hpp"

namespace qwalk {

// Runs fn(0..n-1) on up to `jobs` threads. Results land by index, so output
// order never depends on scheduling. The first exception is rethrown.
template <class T>
std::vector<T> parallel_map(int n, int jobs, const std::function<T(int)>& fn) {
  std::vector<T> out(n);
  std::atomic<int> next{0};
  std::exception_ptr err;
  std::atomic<bool> failed{false};
  auto worker = [&]() {
    for (int i; (i = next++) < n && !failed;) {
      try {
        out[i] = fn(i);
      } catch (...) {
        if (!failed.exchange(true)) err = std::current_exception();
      }
    }
  };
  jobs = std::max(1, std::min(jobs, n));
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
  return out;
}

struct SuiteItem {
  int model = 0;  // 0 when not tied to a model
  std::string subject;  // spec, identity name, closed-form name, ...
  bool pass = false;
  std::string detail;
};

struct SuiteOptions {
  int order = -1;           // -1: suite default
  std::vector<int> models;  // empty: all
  int jobs = 1;
};

struct SuiteReport {
  std::string suite;
  int order = 0;
  bool ok = true;
  std::vector<SuiteItem> items;
};

const std::vector<std::string>& suite_names();
// kernel | eq29 | residue | lemma9 | identities | closedforms | operators
SuiteReport run_suite(const std::string& name, const ModelRegistry& reg, const SuiteOptions& opt = {});
Json suite_report_to_json(const SuiteReport& r);

}  // namespace qwalk
