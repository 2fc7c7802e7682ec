// Copyright 2026 The qwalk authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <map>
#include <memory>
#include <string>

#include "qwalk/bigf.hpp"

namespace qwalk {

// Real constant built from rationals, pi, sqrt, + - * / and ^.
// Grammar: expr := term (('+'|'-') term)*; term := unary (('*'|'/') unary)*;
// unary := '-' unary | power; power := atom ('^' unary)?;
// atom := integer | name | 'sqrt' '(' expr ')' | '(' expr ')'
class ConstExpr {
 public:
  struct Node;
  ConstExpr() = default;
  // names other than pi resolve through `named`, each itself a ConstExpr text
  static ConstExpr parse(const std::string& text, const std::map<std::string, std::string>& named = {});

  BigF eval(mpfr_prec_t prec) const;
  // exact value when the tree has no pi and no irrational sqrt
  bool is_rational(Rat* out = nullptr) const;
  const std::string& text() const { return text_; }
  bool empty() const { return !root_; }

 private:
  std::shared_ptr<const Node> root_;
  std::string text_;
};

}  // namespace qwalk
