// Copyright 2026 The qwalk authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "qwalk/models.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "qwalk/json_io.hpp"

namespace qwalk {

RatFnXY ModelData::N_orbit() const {
  RatFnXY s;
  for (const auto& [j, c] : N_terms) s = s + RatFnXY(c) * RatFnXY::y().pow(j);
  return s;
}

bool ModelData::laurent_N() const {
  for (const auto& [j, c] : N_terms)
    if (!c.is_laurent()) return false;
  return true;
}

namespace {

ModelData parse_model(const nlohmann::json& j) {
  ModelData m;
  m.id = j.at("id").get<int>();
  std::vector<std::pair<int, int>> st;
  for (const auto& s : j.at("steps")) st.emplace_back(s.at(0).get<int>(), s.at(1).get<int>());
  m.steps = StepSet(std::move(st));
  m.kernel = decompose_kernel(m.steps);
  for (const auto& t : j.at("N_orbit")) {
    int y = t.at("y").get<int>();
    m.N_terms[y] = m.N_terms[y] + ratfn_from_json(t);
  }
  const auto& t2 = j.at("table2");
  m.table2.a = parse_rat(t2.at("a").get<std::string>());
  m.table2.b = parse_rat(t2.at("b").get<std::string>());
  m.table2.c = parse_rat(t2.at("c").get<std::string>());
  m.table2.w = ratfn_from_json(t2.at("w"));
  for (Spec s : kAllSpecs) {
    const auto& a = j.at("asym").at(spec_name(s));
    AsymRow& r = m.asym[static_cast<int>(s)];
    r.rho = a.at("rho").get<std::string>();
    r.gamma = parse_rat(a.at("gamma").get<std::string>());
    r.period = a.at("period").get<int>();
    r.kappa = a.at("kappa_expr").get<std::vector<std::string>>();
    r.oeis = a.at("oeis").get<std::string>();
    r.algebraic = a.at("algebraic").get<bool>();
    if (a.contains("note")) r.note = a.at("note").get<std::string>();
    if (r.period < 1 || static_cast<int>(r.kappa.size()) != r.period)
      fail(ErrorCode::ValidationFailed, "model " + std::to_string(m.id) + " spec " + spec_name(s) + ": period/kappa mismatch");
  }
  if (j.contains("anchors")) {
    for (const auto& [k, v] : j.at("anchors").items()) {
      std::vector<Int> terms;
      for (const auto& x : v) terms.emplace_back(x.get<long>());
      m.anchors[parse_spec(k)] = terms;
    }
  }
  return m;
}

}  // namespace

ModelRegistry ModelRegistry::from_json_text(const std::string& text) {
  ModelRegistry r;
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
    r.version_ = doc.at("version").get<int>();
    for (const auto& [k, v] : doc.at("constants").items()) r.constants_[k] = v.get<std::string>();
    for (const auto& m : doc.at("models")) r.models_.push_back(parse_model(m));
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ValidationFailed, std::string("models data: ") + e.what());
  }
  for (size_t i = 0; i < r.models_.size(); ++i)
    if (r.models_[i].id != static_cast<int>(i) + 1) fail(ErrorCode::ValidationFailed, "model ids must be 1..n in order");
  return r;
}

ModelRegistry ModelRegistry::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Io, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str());
}

const ModelRegistry& ModelRegistry::bundled() {
  static const ModelRegistry reg = from_json_text(bundled_models_json());
  return reg;
}

const ModelData& ModelRegistry::get(int id) const {
  if (id < 1 || id > static_cast<int>(models_.size())) fail(ErrorCode::NotFound, "no model " + std::to_string(id));
  return models_[id - 1];
}

}  // namespace qwalk
