// Copyright (c) 2026 The qpoly authors
// Use of this source code is governed by the MIT license that can be found in the LICENSE file.

#pragma once

#include "qpoly/param_rat.hpp"

#include <map>
#include <string>
#include <vector>

namespace qpoly {

// Exponent vector on the torus. When a polynomial is on the half lattice the
// stored entries are twice the true exponents.
using Weight = std::vector<int>;

// Sparse Laurent polynomial in z_1..z_n with coefficients in the parameter
// field. Terms are ordered lexicographically by stored exponent.
class LaurentPoly {
public:
    using TermMap = std::map<Weight, ParamRat>;

    explicit LaurentPoly(int n = 1, bool half_lattice = false) : n_(n), half_(half_lattice) {}

    static LaurentPoly constant(int n, const ParamRat& c, bool half_lattice = false);
    // Monomial with stored exponents (doubled when half_lattice is set).
    static LaurentPoly monomial(const Weight& stored, const ParamRat& c = ParamRat(1),
                                bool half_lattice = false);

    int n() const { return n_; }
    bool half_lattice() const { return half_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(const Weight& stored, const ParamRat& c);
    ParamRat coeff(const Weight& stored) const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const ParamRat& c);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(LaurentPoly a, const ParamRat& c) { return a *= c; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    // Same polynomial with doubled stored exponents.
    LaurentPoly to_half_lattice() const;
    // Back to integer storage; throws ContractViolation on odd exponents.
    LaurentPoly to_integer_lattice() const;

    // z_j -> qh^k z_j, i.e. every term is multiplied by qh^(k*a) where a is the
    // true exponent of z_j. k = 2 is the full step z_j -> q z_j.
    LaurentPoly shift_var(int j, int k) const;

    // z -> z^{-1} in every variable.
    LaurentPoly inverted() const;

    LaurentPoly map_coefficients(const ParamSubst& sigma) const;

    std::string to_string(VarSet vars = VarSet::Half) const;

private:
    int n_;
    bool half_;
    TermMap terms_;
};

// Rational function of the torus variables; only used to present operator
// coefficients in closed form.
struct LaurentRat {
    LaurentPoly num;
    LaurentPoly den;
};

// Exact quotient numer/denom with q*denom == numer, by lexicographic division.
// Throws NotDivisible when a remainder is left.
LaurentPoly exact_divide(const LaurentPoly& numer, const LaurentPoly& denom);

} // namespace qpoly
