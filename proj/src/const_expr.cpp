// Copyright 2026 The qwalk authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "qwalk/const_expr.hpp"

#include <cctype>
#include <optional>
#include <set>
#include <vector>

#include "qwalk/errors.hpp"

namespace qwalk {

struct ConstExpr::Node {
  char op = 'n';  // n number, p pi, s sqrt, + - * / ^, u negate
  Rat value;
  std::vector<std::shared_ptr<const Node>> kids;
};

namespace {

using NodeP = std::shared_ptr<const ConstExpr::Node>;

NodeP leaf(const Rat& v) {
  auto n = std::make_shared<ConstExpr::Node>();
  n->value = v;
  return n;
}
NodeP node(char op, std::vector<NodeP> kids) {
  auto n = std::make_shared<ConstExpr::Node>();
  n->op = op;
  n->kids = std::move(kids);
  return n;
}

class Parser {
 public:
  Parser(const std::string& s, const std::map<std::string, std::string>& named, std::set<std::string>& active)
      : s_(s), named_(named), active_(active) {}

  NodeP run() {
    NodeP e = expr();
    skip();
    if (i_ != s_.size()) bad("trailing input");
    return e;
  }

 private:
  [[noreturn]] void bad(const std::string& why) {
    fail(ErrorCode::InvalidArgument, "constant '" + s_ + "': " + why + " at offset " + std::to_string(i_));
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  NodeP expr() {
    NodeP a = term();
    for (;;) {
      if (eat('+')) a = node('+', {a, term()});
      else if (eat('-')) a = node('-', {a, term()});
      else return a;
    }
  }
  NodeP term() {
    NodeP a = unary();
    for (;;) {
      if (eat('*')) a = node('*', {a, unary()});
      else if (eat('/')) a = node('/', {a, unary()});
      else return a;
    }
  }
  NodeP unary() {
    if (eat('-')) return node('u', {unary()});
    if (eat('+')) return unary();
    NodeP a = atom();
    if (eat('^')) return node('^', {a, unary()});
    return a;
  }
  NodeP atom() {
    skip();
    if (i_ >= s_.size()) bad("unexpected end");
    char c = s_[i_];
    if (c == '(') {
      ++i_;
      NodeP e = expr();
      if (!eat(')')) bad("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i_;
      while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
      Rat v(Int(s_.substr(i_, j - i_)));
      i_ = j;
      return leaf(v);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i_;
      while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_')) ++j;
      std::string name = s_.substr(i_, j - i_);
      i_ = j;
      if (name == "pi") return node('p', {});
      if (name == "sqrt") {
        if (!eat('(')) bad("expected '(' after sqrt");
        NodeP e = expr();
        if (!eat(')')) bad("expected ')'");
        return node('s', {e});
      }
      auto it = named_.find(name);
      if (it == named_.end()) bad("unknown name " + name);
      if (active_.count(name)) bad("cyclic definition of " + name);
      active_.insert(name);
      NodeP e = Parser(it->second, named_, active_).run();
      active_.erase(name);
      return e;
    }
    bad(std::string("unexpected character '") + c + "'");
  }

  const std::string& s_;
  const std::map<std::string, std::string>& named_;
  std::set<std::string>& active_;
  size_t i_ = 0;
};

std::optional<Rat> exact(const NodeP& n) {
  switch (n->op) {
    case 'n': return n->value;
    case 'p': return std::nullopt;
    case 'u': {
      auto a = exact(n->kids[0]);
      if (!a) return std::nullopt;
      return Rat(-*a);
    }
    case 's': {
      auto a = exact(n->kids[0]);
      if (!a || *a < 0) return std::nullopt;
      Int p = a->get_num(), q = a->get_den();
      if (!mpz_perfect_square_p(p.get_mpz_t()) || !mpz_perfect_square_p(q.get_mpz_t())) return std::nullopt;
      Int rp = sqrt(p), rq = sqrt(q);
      return Rat(rp, rq);
    }
    case '^': {
      auto a = exact(n->kids[0]), b = exact(n->kids[1]);
      if (!a || !b || b->get_den() != 1 || !b->get_num().fits_slong_p()) return std::nullopt;
      long e = b->get_num().get_si();
      if (e < 0 && *a == 0) return std::nullopt;
      Rat r = 1, base = e >= 0 ? *a : Rat(1) / *a;
      for (long k = 0; k < std::labs(e); ++k) r *= base;
      return r;
    }
    default: {
      auto a = exact(n->kids[0]), b = exact(n->kids[1]);
      if (!a || !b) return std::nullopt;
      switch (n->op) {
        case '+': return Rat(*a + *b);
        case '-': return Rat(*a - *b);
        case '*': return Rat(*a * *b);
        case '/':
          if (*b == 0) fail(ErrorCode::InvalidArgument, "division by zero in constant");
          return Rat(*a / *b);
      }
    }
  }
  return std::nullopt;
}

BigF ev(const NodeP& n, mpfr_prec_t p) {
  switch (n->op) {
    case 'n': return BigF(n->value, p);
    case 'p': return BigF::pi(p);
    case 'u': return -ev(n->kids[0], p);
    case 's': {
      BigF a = ev(n->kids[0], p);
      if (a.sign() < 0) fail(ErrorCode::ArgumentOutOfRange, "sqrt of a negative constant");
      return sqrt(a);
    }
    case '^': {
      BigF a = ev(n->kids[0], p);
      if (auto e = exact(n->kids[1])) {
        if (e->get_den() == 1 && e->get_num().fits_slong_p()) return pow_si(a, e->get_num().get_si());
        if (a.sign() < 0) fail(ErrorCode::ArgumentOutOfRange, "fractional power of a negative constant");
        return pow(a, *e);
      }
      if (a.sign() < 0) fail(ErrorCode::ArgumentOutOfRange, "real power of a negative constant");
      return pow(a, ev(n->kids[1], p));
    }
    case '+': return ev(n->kids[0], p) + ev(n->kids[1], p);
    case '-': return ev(n->kids[0], p) - ev(n->kids[1], p);
    case '*': return ev(n->kids[0], p) * ev(n->kids[1], p);
    case '/': {
      BigF d = ev(n->kids[1], p);
      if (d.is_zero()) fail(ErrorCode::InvalidArgument, "division by zero in constant");
      return ev(n->kids[0], p) / d;
    }
  }
  fail(ErrorCode::InvalidArgument, "bad constant node");
}

}  // namespace

ConstExpr ConstExpr::parse(const std::string& text, const std::map<std::string, std::string>& named) {
  std::set<std::string> active;
  ConstExpr c;
  c.root_ = Parser(text, named, active).run();
  c.text_ = text;
  return c;
}

BigF ConstExpr::eval(mpfr_prec_t prec) const {
  if (!root_) fail(ErrorCode::InvalidArgument, "empty constant");
  return ev(root_, prec + 16).with_precision(prec);
}

bool ConstExpr::is_rational(Rat* out) const {
  if (!root_) return false;
  auto r = exact(root_);
  if (r && out) *out = *r;
  return r.has_value();
}

}  // namespace qwalk
