// Copyright 2026 The qwalk authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "qwalk/errors.hpp"

namespace qwalk {

// gmpxx keeps mpq_class canonical after every operator, which is the
// reduced/positive-denominator invariant we rely on everywhere.
using Int = mpz_class;
using Rat = mpq_class;

Rat parse_rat(std::string_view s);
std::string to_string(const Rat& r);
std::string to_string(const Int& z);

inline Rat rat(long p, long q = 1) {
  Rat r(p, q);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// x^n for n >= 0
Rat pow_ui(const Rat& x, unsigned long n);

}  // namespace qwalk
