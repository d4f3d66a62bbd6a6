// Copyright (c) 2026 The qpoly authors
// Use of this source code is governed by the MIT license that can be found in the LICENSE file.

#pragma once

#include "qpoly/polynomials.hpp"

#include <json.hpp>

#include <map>
#include <string>

namespace qpoly {

using Json = nlohmann::ordered_json;

// {"n":2,"weight":[2,1],"basis":"monomial","half_lattice":false,"group":"BC",
//  "vars":"half","coeffs":[{"weight":[1,1],"value":"<ParamRat>"},...]}
// Weights are in stored units (doubled on the half lattice). Coefficients are
// listed in lexicographic order of their weights.
Json to_json(const OrthoPoly& p);
OrthoPoly ortho_from_json(const Json& j);

// Numeric coefficients as exact "p/q" strings, together with the point.
Json numeric_to_json(int n, const Weight& lambda, const std::map<Weight, Rat>& coeffs, const std::string& point);

// A polynomial given by its monomial expansion. "weight" is omitted.
Json expansion_to_json(const Expansion& e, int n, Group g, bool half_lattice, VarSet vars = VarSet::Half);
// Reads either layout above; throws ParseError on malformed input.
LaurentPoly poly_from_json(const Json& j);

// Weight string -> rendered value.
Json eigenvalue_table(const std::map<Weight, ParamRat>& values, VarSet vars = VarSet::Half);

// Exact binary rational of a finite long double.
Rat exact_rational(long double x);

std::string rat_to_string(const Rat& r);

} // namespace qpoly
