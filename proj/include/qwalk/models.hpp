// Copyright 2026 The qwalk authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "qwalk/ratfn_xy.hpp"
#include "qwalk/walks.hpp"

namespace qwalk {

struct HGEntry {
  Rat a, b, c;
  RatFn w;
};

struct AsymRow {
  std::string rho;
  Rat gamma;
  int period = 1;
  std::vector<std::string> kappa;  // per residue class; "" = identically zero
  std::string oeis;
  bool algebraic = false;
  std::string note;
};

struct ModelData {
  int id = 0;
  StepSet steps;
  KernelData kernel;
  std::map<int, RatFn> N_terms;  // N(x,y) = sum_j N_terms[j](x) y^j
  HGEntry table2;
  std::array<AsymRow, 4> asym;   // indexed by Spec
  std::map<Spec, std::vector<Int>> anchors;

  RatFnXY N_orbit() const;
  // N is a Laurent polynomial in x and y
  bool laurent_N() const;
  const AsymRow& row(Spec s) const { return asym[static_cast<int>(s)]; }
};

class ModelRegistry {
 public:
  // bundled data compiled into the library
  static const ModelRegistry& bundled();
  static ModelRegistry from_json_text(const std::string& text);
  static ModelRegistry from_file(const std::string& path);

  const ModelData& get(int id) const;
  const std::vector<ModelData>& all() const { return models_; }
  const std::map<std::string, std::string>& constants() const { return constants_; }
  int version() const { return version_; }

 private:
  std::vector<ModelData> models_;
  std::map<std::string, std::string> constants_;
  int version_ = 0;
};

// raw text of the bundled models.json
const std::string& bundled_models_json();

}  // namespace qwalk
