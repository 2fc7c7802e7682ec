// Copyright 2026 The qwalk authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "qwalk/json_io.hpp"

namespace qwalk {

namespace {
Rat rat_from(const Json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long>());
  fail(ErrorCode::InvalidArgument, "rational must be a string \"p/q\"");
}
}  // namespace

Json poly_to_json(const Poly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_string(c));
  return a;
}

Poly poly_from_json(const Json& j) {
  if (!j.is_array()) fail(ErrorCode::InvalidArgument, "polynomial must be an array");
  std::vector<Rat> c;
  for (const auto& x : j) c.push_back(rat_from(x));
  return Poly(std::move(c));
}

Json ratfn_to_json(const RatFn& f) { return Json{{"num", poly_to_json(f.num())}, {"den", poly_to_json(f.den())}}; }

RatFn ratfn_from_json(const Json& j) {
  Poly num = poly_from_json(j.at("num"));
  Poly den = j.contains("den") ? poly_from_json(j.at("den")) : Poly(Rat(1));
  return RatFn(num, den);
}

Json series_to_json(const TSeries& s) {
  Json c = Json::array();
  for (const auto& x : s.coeffs()) c.push_back(to_string(x));
  return Json{{"minExp", s.min_exp()}, {"order", s.order()}, {"coeffs", c}};
}

TSeries series_from_json(const Json& j) {
  int m = j.at("minExp").get<int>();
  int n = j.at("order").get<int>();
  const Json& c = j.at("coeffs");
  if (!c.is_array() || static_cast<int>(c.size()) != n - m + 1)
    fail(ErrorCode::InvalidArgument, "series coeffs length must be order - minExp + 1");
  std::vector<Rat> v;
  for (const auto& x : c) v.push_back(rat_from(x));
  return TSeries(m, std::move(v));
}

Json cone_to_json(const ConeSpec& c) { return Json{{"dim", c.dim}, {"generators", c.generators}}; }

ConeSpec cone_from_json(const Json& j) {
  ConeSpec c;
  c.dim = j.at("dim").get<int>();
  c.generators = j.at("generators").get<std::vector<std::vector<int>>>();
  c.validate();
  return c;
}

Json diffop_to_json(const DiffOp& L) {
  Json c = Json::array();
  for (const auto& p : L.coeffs()) c.push_back(poly_to_json(p));
  return Json{{"coeffs", c}, {"order", L.order()}};
}

DiffOp diffop_from_json(const Json& j) {
  std::vector<Poly> c;
  for (const auto& p : j.at("coeffs")) c.push_back(poly_from_json(p));
  return DiffOp(std::move(c));
}

Json prec_to_json(const PRec& r) {
  Json c = Json::array();
  for (const auto& p : r.coeffs) c.push_back(poly_to_json(p));
  return Json{{"coeffs", c}, {"order", r.order()}};
}

PRec prec_from_json(const Json& j) {
  PRec r;
  for (const auto& p : j.at("coeffs")) r.coeffs.push_back(poly_from_json(p));
  return r;
}

Json hgparams_to_json(const HGParams& p) {
  return Json{{"a", to_string(p.a)}, {"b", to_string(p.b)}, {"c", to_string(p.c)}};
}

HGParams hgparams_from_json(const Json& j) {
  HGParams p{rat_from(j.at("a")), rat_from(j.at("b")), rat_from(j.at("c"))};
  p.validate();
  return p;
}

Json cfexpr_to_json(const CFExpr& e) {
  if (!e) fail(ErrorCode::InvalidArgument, "null closed-form node");
  Json j{{"kind", cf_kind_name(e->kind)}};
  switch (e->kind) {
    case CFKind::Rational: j["f"] = ratfn_to_json(e->f); break;
    case CFKind::HG:
      j["params"] = hgparams_to_json(e->hg);
      j["w"] = ratfn_to_json(e->f);
      break;
    case CFKind::Pow: j["exponent"] = to_string(e->r); break;
    case CFKind::Scale: j["factor"] = to_string(e->r); break;
    default: break;
  }
  if (!e->kids.empty()) {
    Json k = Json::array();
    for (const auto& c : e->kids) k.push_back(cfexpr_to_json(c));
    j["kids"] = k;
  }
  return j;
}

CFExpr cfexpr_from_json(const Json& j) {
  CFKind k = cf_kind_from_name(j.at("kind").get<std::string>());
  std::vector<CFExpr> kids;
  if (j.contains("kids"))
    for (const auto& c : j.at("kids")) kids.push_back(cfexpr_from_json(c));
  auto one = [&]() {
    if (kids.size() != 1) fail(ErrorCode::InvalidArgument, cf_kind_name(k) + " takes exactly one child");
    return kids[0];
  };
  switch (k) {
    case CFKind::Rational: return cf_rational(ratfn_from_json(j.at("f")));
    case CFKind::HG: return cf_hg(hgparams_from_json(j.at("params")), ratfn_from_json(j.at("w")));
    case CFKind::Pow: return cf_pow(one(), rat_from(j.at("exponent")));
    case CFKind::Scale: return cf_scale(rat_from(j.at("factor")), one());
    case CFKind::Int0t: return cf_int0t(one());
    case CFKind::InvT: return cf_invt(one());
    case CFKind::Sum:
    case CFKind::Prod:
      if (kids.empty()) fail(ErrorCode::InvalidArgument, "empty sum or product");
      return k == CFKind::Sum ? cf_sum(kids) : cf_prod(kids);
  }
  fail(ErrorCode::InvalidArgument, "bad closed-form kind");
}

}  // namespace qwalk
