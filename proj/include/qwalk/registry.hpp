// Copyright 2026 The qwalk authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <string>
#include <vector>

#include "qwalk/models.hpp"

namespace qwalk {

struct ValidationIssue {
  int model = 0;
  std::string check;
  std::string detail;
};

struct RegistryReport {
  bool ok = true;
  int checks = 0;
  std::vector<ValidationIssue> issues;
};

// structural checks on every model row: kernel equation, orbit sum against the
// stored numerator (up to sign), positive-part identity, anchors, hypergeometric parameters,
// asymptotic constants parse and evaluate
RegistryReport validate_registry(const ModelRegistry& reg, int order = 8);

// throws ValidationFailed with the first issue
void require_valid(const ModelRegistry& reg, int order = 8);

}  // namespace qwalk
