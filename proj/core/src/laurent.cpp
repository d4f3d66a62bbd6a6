// Copyright (c) 2026 The qpoly authors
// Use of this source code is governed by the MIT license that can be found in the LICENSE file.

#include "qpoly/laurent.hpp"

#include "qpoly/errors.hpp"

namespace qpoly {

namespace {

void check_compatible(const LaurentPoly& a, const LaurentPoly& b)
{
    if (a.n() != b.n() || a.half_lattice() != b.half_lattice()) {
        throw ContractViolation("Laurent polynomials live on different lattices");
    }
}

Weight add(const Weight& a, const Weight& b)
{
    Weight c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        c[i] = a[i] + b[i];
    }
    return c;
}

Weight sub(const Weight& a, const Weight& b)
{
    Weight c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        c[i] = a[i] - b[i];
    }
    return c;
}

} // namespace

LaurentPoly LaurentPoly::constant(int n, const ParamRat& c, bool half_lattice)
{
    return monomial(Weight(static_cast<std::size_t>(n), 0), c, half_lattice);
}

LaurentPoly LaurentPoly::monomial(const Weight& stored, const ParamRat& c, bool half_lattice)
{
    LaurentPoly p(static_cast<int>(stored.size()), half_lattice);
    p.add_term(stored, c);
    return p;
}

void LaurentPoly::add_term(const Weight& stored, const ParamRat& c)
{
    if (static_cast<int>(stored.size()) != n_) {
        throw ContractViolation("exponent vector has the wrong length");
    }
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(stored, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

ParamRat LaurentPoly::coeff(const Weight& stored) const
{
    auto it = terms_.find(stored);
    return it == terms_.end() ? ParamRat(0) : it->second;
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly r = *this;
    for (auto& [w, c] : r.terms_) {
        c = -c;
    }
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o)
{
    check_compatible(*this, o);
    for (const auto& [w, c] : o.terms_) {
        add_term(w, c);
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o)
{
    check_compatible(*this, o);
    for (const auto& [w, c] : o.terms_) {
        add_term(w, -c);
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const ParamRat& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, x] : terms_) {
        x *= c;
    }
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
    check_compatible(a, b);
    LaurentPoly r(a.n(), a.half_lattice());
    for (const auto& [wa, ca] : a.terms()) {
        for (const auto& [wb, cb] : b.terms()) {
            r.add_term(add(wa, wb), ca * cb);
        }
    }
    return r;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b)
{
    if (a.n() != b.n() || a.size() != b.size()) {
        return false;
    }
    LaurentPoly x = a.half_lattice() ? a : a.to_half_lattice();
    LaurentPoly y = b.half_lattice() ? b : b.to_half_lattice();
    auto it = y.terms().begin();
    for (const auto& [w, c] : x.terms()) {
        if (w != it->first || c != it->second) {
            return false;
        }
        ++it;
    }
    return true;
}

LaurentPoly LaurentPoly::to_half_lattice() const
{
    if (half_) {
        return *this;
    }
    LaurentPoly r(n_, true);
    for (const auto& [w, c] : terms_) {
        Weight d = w;
        for (auto& x : d) {
            x *= 2;
        }
        r.terms_.emplace(std::move(d), c);
    }
    return r;
}

LaurentPoly LaurentPoly::to_integer_lattice() const
{
    if (!half_) {
        return *this;
    }
    LaurentPoly r(n_, false);
    for (const auto& [w, c] : terms_) {
        Weight d = w;
        for (auto& x : d) {
            if (x % 2 != 0) {
                throw ContractViolation("polynomial has half-integer exponents");
            }
            x /= 2;
        }
        r.terms_.emplace(std::move(d), c);
    }
    return r;
}

LaurentPoly LaurentPoly::shift_var(int j, int k) const
{
    if (j < 0 || j >= n_) {
        throw ContractViolation("shift_var index out of range");
    }
    LaurentPoly r(n_, half_);
    for (const auto& [w, c] : terms_) {
        // qh exponent k*a in units of qh^(1/60)
        int units = half_ ? k * w[static_cast<std::size_t>(j)] * (kQhScale / 2)
                          : k * w[static_cast<std::size_t>(j)] * kQhScale;
        ParamExp e{};
        e[kQh] = units;
        r.terms_.emplace(w, c * ParamRat(ParamPoly::monomial(e)));
    }
    return r;
}

LaurentPoly LaurentPoly::inverted() const
{
    LaurentPoly r(n_, half_);
    for (const auto& [w, c] : terms_) {
        Weight d = w;
        for (auto& x : d) {
            x = -x;
        }
        r.terms_.emplace(std::move(d), c);
    }
    return r;
}

LaurentPoly LaurentPoly::map_coefficients(const ParamSubst& sigma) const
{
    LaurentPoly r(n_, half_);
    for (const auto& [w, c] : terms_) {
        r.add_term(w, substitute_params(c, sigma));
    }
    return r;
}

std::string LaurentPoly::to_string(VarSet vars) const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!out.empty()) {
            out += " + ";
        }
        out += "(" + it->second.to_string(vars) + ")";
        for (int j = 0; j < n_; ++j) {
            int e = it->first[static_cast<std::size_t>(j)];
            if (e == 0) {
                continue;
            }
            out += "*z" + std::to_string(j + 1);
            if (half_ && e % 2 != 0) {
                out += "^(" + std::to_string(e) + "/2)";
            } else {
                int t = half_ ? e / 2 : e;
                if (t != 1) {
                    out += "^" + std::to_string(t);
                }
            }
        }
    }
    return out;
}

LaurentPoly exact_divide(const LaurentPoly& numer, const LaurentPoly& denom)
{
    check_compatible(numer, denom);
    if (denom.is_zero()) {
        throw ContractViolation("exact_divide by zero");
    }
    LaurentPoly quotient(numer.n(), numer.half_lattice());
    if (numer.is_zero()) {
        return quotient;
    }
    const auto& [dlead, dlc] = *denom.terms().rbegin();
    const Weight& dtrail = denom.terms().begin()->first;
    const Weight bound = sub(numer.terms().begin()->first, dtrail);
    LaurentPoly rem = numer;
    while (!rem.is_zero()) {
        const auto& [rlead, rlc] = *rem.terms().rbegin();
        Weight qexp = sub(rlead, dlead);
        if (qexp < bound) {
            throw NotDivisible("exact division leaves a remainder");
        }
        ParamRat qc = rlc / dlc;
        quotient.add_term(qexp, qc);
        for (const auto& [w, c] : denom.terms()) {
            rem.add_term(add(w, qexp), -(qc * c));
        }
    }
    return quotient;
}

} // namespace qpoly
