// Copyright (c) 2026 The qpoly authors
// Use of this source code is governed by the MIT license that can be found in the LICENSE file.

#pragma once

#include "qpoly/param_poly.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qpoly {

// Element of the rational function field in the six parameter slots.
//
// The denominator is stored as a product of canonical atoms: integer
// polynomials with coprime coefficients, positive leading coefficient and
// minimal exponent zero in every slot. Monomial and rational units are moved
// into the numerator. After every operation the numerator is trial-divided by
// each atom, and elements living in a single slot are fully reduced by a
// Euclidean gcd. Equality is decided by cross multiplication.
class ParamRat {
public:
    using Atom = std::pair<ParamPoly, int>;

    ParamRat() = default;
    ParamRat(long c) : num_(c) {}
    ParamRat(const Rat& c) : num_(c) {}
    ParamRat(const ParamPoly& p) : num_(p) {}

    static ParamRat fraction(const ParamPoly& num, const ParamPoly& den);
    // Builds num/den without any cancellation (the denominator becomes one
    // atom after unit extraction). Used to exercise pole handling.
    static ParamRat unreduced(const ParamPoly& num, const ParamPoly& den);

    const ParamPoly& num() const { return num_; }
    const std::vector<Atom>& atoms() const { return den_; }
    ParamPoly den() const;

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.empty(); }
    // True when the element is a rational constant.
    bool is_constant() const { return den_.empty() && num_.is_constant(); }
    Rat constant_value() const;

    ParamRat operator-() const;
    ParamRat& operator+=(const ParamRat& o);
    ParamRat& operator-=(const ParamRat& o);
    ParamRat& operator*=(const ParamRat& o);
    ParamRat& operator/=(const ParamRat& o);
    friend ParamRat operator+(ParamRat a, const ParamRat& b) { return a += b; }
    friend ParamRat operator-(ParamRat a, const ParamRat& b) { return a -= b; }
    friend ParamRat operator*(ParamRat a, const ParamRat& b) { return a *= b; }
    friend ParamRat operator/(ParamRat a, const ParamRat& b) { return a /= b; }
    friend bool operator==(const ParamRat& a, const ParamRat& b);
    friend bool operator!=(const ParamRat& a, const ParamRat& b) { return !(a == b); }

    ParamRat pow(int e) const;

    // Throws DenominatorVanishes if the denominator evaluates to zero.
    Rat evaluate(const std::array<Rat, kParamVars>& values) const;

    // "num" or "(num)/(den)" with deterministic term order.
    std::string to_string(VarSet vars = VarSet::Half) const;

private:
    ParamPoly num_;
    std::vector<Atom> den_;

    void add_factor(const ParamPoly& p, int mult);
    void cancel();
};

// Substitution map: slot -> image; unset slots are left alone.
using ParamSubst = std::array<std::optional<ParamRat>, kParamVars>;

// Ring homomorphism applied to f. Poles that are removable are cancelled by
// dividing out the kernel generator (den(s)*x_s - num(s)) slot by slot.
// Throws DenominatorVanishes when the substitution hits a genuine pole.
ParamRat substitute_params(const ParamRat& f, const ParamSubst& sigma);
ParamPoly substitute_monomial_map(const ParamPoly& p, const ParamSubst& sigma);

// Monic gcd of two polynomials that only involve the given slot.
ParamPoly univariate_gcd(const ParamPoly& a, const ParamPoly& b, int slot);

} // namespace qpoly

namespace qpoly {

// Parses the canonical rendering and ordinary arithmetic over the slot names
// (qh th ga gb gc gd, or g tg0 tg1 for the Jacobi set). The derived names
// q t a b c d are accepted in the half set and expand to their encodings.
// Exponents are integers or parenthesized fractions; fractional powers are
// only allowed on monomials. Throws ParseError.
ParamRat parse_param_rat(const std::string& text, VarSet vars = VarSet::Half);

} // namespace qpoly
