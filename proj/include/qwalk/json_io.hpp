// Copyright 2026 The qwalk authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <json.hpp>

#include "qwalk/cfexpr.hpp"
#include "qwalk/cones.hpp"
#include "qwalk/dfinite.hpp"
#include "qwalk/series.hpp"

namespace qwalk {

using Json = nlohmann::json;

Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j);
// {"num": [...], "den": [...]}
Json ratfn_to_json(const RatFn& f);
RatFn ratfn_from_json(const Json& j);
Json series_to_json(const TSeries& s);
TSeries series_from_json(const Json& j);
Json cone_to_json(const ConeSpec& c);
ConeSpec cone_from_json(const Json& j);
Json diffop_to_json(const DiffOp& L);  // {"coeffs": [p_0, ..., p_r]}
DiffOp diffop_from_json(const Json& j);
Json prec_to_json(const PRec& r);
PRec prec_from_json(const Json& j);
Json hgparams_to_json(const HGParams& p);
HGParams hgparams_from_json(const Json& j);
Json cfexpr_to_json(const CFExpr& e);  // {"kind": ..., fields, "kids": [...]}
CFExpr cfexpr_from_json(const Json& j);

}  // namespace qwalk
