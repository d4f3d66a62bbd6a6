// Copyright (c) 2026 The qpoly authors
// Use of this source code is governed by the MIT license that can be found in the LICENSE file.

#pragma once

#include "qpoly/rat.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qpoly {

// Indeterminate slots of the parameter field. The half-parameter set uses all
// six slots; the Jacobi set (g, tg0, tg1) reuses the first three.
enum Slot : int { kQh = 0, kTh = 1, kGa = 2, kGb = 3, kGc = 4, kGd = 5 };
enum JacobiSlot : int { kG = 0, kTg0 = 1, kTg1 = 2 };

enum class VarSet { Half, Jacobi };

constexpr int kParamVars = 6;

// Exponents of qh are stored in units of qh^(1/60). This keeps the centered
// A-type prefactor q^(-r|lambda|/n) (n <= 6) and the half steps qh^(1/2)
// integral. Every other slot uses plain integer exponents.
constexpr int kQhScale = 60;

using ParamExp = std::array<int, kParamVars>;

// Sparse Laurent polynomial in six indeterminates with rational coefficients.
// Terms are kept sorted by packed exponent key with no zero coefficients.
class ParamPoly {
public:
    using Key = unsigned __int128;
    using Term = std::pair<Key, Rat>;

    static constexpr int kBits = 21;
    static constexpr int kBias = 1 << (kBits - 1);

    ParamPoly() = default;
    ParamPoly(long c);
    ParamPoly(const Rat& c);

    static ParamPoly monomial(const ParamExp& e, const Rat& c = Rat(1));
    // slot^power; for the qh slot the power is in whole qh units.
    static ParamPoly var(int slot, int power = 1);
    // qh^(num/den), exact as long as 60*num/den is integral.
    static ParamPoly qh_pow(int num, int den = 1);

    static Key pack(const ParamExp& e);
    static ParamExp unpack(Key k);
    static Key one_key();

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Coefficient of the empty monomial.
    Rat constant_term() const;
    // Single term with coefficient +-1 and any exponent.
    bool is_monomial() const { return terms_.size() == 1; }

    ParamPoly operator-() const;
    ParamPoly& operator+=(const ParamPoly& o);
    ParamPoly& operator-=(const ParamPoly& o);
    ParamPoly& operator*=(const ParamPoly& o);
    ParamPoly& operator*=(const Rat& c);
    friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
    friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
    friend ParamPoly operator*(ParamPoly a, const Rat& c) { return a *= c; }
    friend bool operator==(const ParamPoly& a, const ParamPoly& b);
    friend bool operator!=(const ParamPoly& a, const ParamPoly& b) { return !(a == b); }

    ParamPoly pow(unsigned e) const;
    // Multiply by a monomial given as an exponent vector (Laurent shift).
    ParamPoly shifted(const ParamExp& e) const;

    // Exact quotient a / b, or nullopt if b does not divide a.
    std::optional<ParamPoly> divide_exact(const ParamPoly& b) const;

    // Bitmask of slots that occur with a nonzero exponent.
    unsigned used_slots() const;
    ParamExp min_exponents() const;
    ParamExp max_exponents() const;

    // Rational content: the returned c makes (*this / c) an integer polynomial
    // with coprime coefficients and positive leading coefficient.
    Rat content() const;
    const Term& leading() const { return terms_.back(); }

    // Evaluate with slot values; the qh slot is evaluated at qh (so exponents
    // must be whole qh powers). Throws ContractViolation on fractional powers
    // and DenominatorVanishes on 0^(-k).
    Rat evaluate(const std::array<Rat, kParamVars>& values) const;

    std::string to_string(VarSet vars = VarSet::Half) const;

    // Internal: adopt an unsorted term list.
    static ParamPoly from_terms(std::vector<Term> terms);

private:
    std::vector<Term> terms_;
    void normalize();
};

} // namespace qpoly
