// Copyright (c) 2026 The qpoly authors
// Use of this source code is governed by the MIT license that can be found in the LICENSE file.

#pragma once

#include "qpoly/laurent.hpp"
#include "qpoly/param_rat.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace qpoly {

// Numeric point in the ordinary parameters. The half parameters are
// qh = q^{1/2}, th = t^{1/2}, ga = a^{1/2}, gb = (-b)^{1/2}, gc = (c/qh)^{1/2}, gd = (-d/qh)^{1/2}.
struct NumericPoint {
    Rat q = Rat(1, 4);
    Rat t = Rat(1, 2);
    Rat a = Rat(1, 2);
    Rat b = Rat(-1, 3);
    Rat c = Rat(1, 5);
    Rat d = Rat(-1, 7);

    // Throws ContractViolation unless 0 < q < 1 and t, a, -b, c, -d are positive.
    void validate() const;
    std::array<long double, kParamVars> half_values() const;
    std::string to_string() const;
};

// Parses "q=1/4,t=1/2,a=1/2,b=-1/3,c=1/5,d=-1/7"; omitted names keep their defaults.
NumericPoint parse_numeric_point(const std::string& text);

long double eval_ld(const ParamPoly& p, const std::array<long double, kParamVars>& half);
long double eval_ld(const ParamRat& f, const std::array<long double, kParamVars>& half);

// Exact value of f at the point, for f that is a rational function of the
// ordinary parameters. The half parameters are evaluated in the formal ring
// Q[w, s_t, s_a, s_b, s_c, s_d] with w^120 = q, s_t^2 = t, s_a^2 = a,
// s_b^2 = -b, s_c^2 = c, s_d^2 = -d (qh = w^60, gc = s_c w^-30, gd = s_d w^-30).
// Throws DenominatorVanishes when the denominator maps to zero and
// ContractViolation when the value is not rational.
Rat eval_rational(const ParamRat& f, const NumericPoint& pt);

// True when the polynomial maps to zero in the formal ring above.
bool vanishes_at(const ParamPoly& p, const NumericPoint& pt);

// Numeric polynomial in the torus variables with real coefficients.
using NumPoly = std::map<Weight, long double>;

NumPoly to_numeric(const LaurentPoly& f, const std::array<long double, kParamVars>& half);

} // namespace qpoly
