// Copyright (c) 2026 The qpoly authors
// Use of this source code is governed by the MIT license that can be found in the LICENSE file.

#pragma once

#include "qpoly/laurent.hpp"
#include "qpoly/weights.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

namespace qpoly {

enum class OpKind {
    Dr,            // Koornwinder operator, chain-sum form grouped by translator
    Dr1,           // Koornwinder operator, (T - 1) form
    AType,         // sum over |J| = r of prod v_a(x_j - x_k) T_J
    ATypeCentered, // AType with the center-of-mass translation removed
    JacobiD10,     // second order differential operator of the q -> 1 limit
    CSpin,         // half-step operator built from v_b' (C-type families)
    DnMinus,       // half-step operator with prod eps = -1 (D-type)
    DnPlus,        // half-step operator with prod eps = +1 (D-type)
};

std::string to_string(OpKind k);
OpKind parse_op_kind(const std::string& s);

// A named operator together with a parameter substitution that is applied to
// every coefficient of its image.
struct OperatorSpec {
    OpKind kind = OpKind::Dr;
    int n = 1;
    int r = 1;
    ParamSubst params{};

    Group group() const;
    VarSet vars() const { return kind == OpKind::JacobiD10 ? VarSet::Jacobi : VarSet::Half; }
    bool half_steps() const { return kind == OpKind::CSpin || kind == OpKind::DnMinus || kind == OpKind::DnPlus; }
    // Throws ContractViolation when r or n is out of range for the kind.
    void validate() const;
};

// Building blocks of coefficient functions. Each is a ratio of binomials in a
// composite torus monomial W = q^qpow * z^w (w in true exponents).
enum class FactorKind {
    Va,     // (th^2 W - 1) / (th (W - 1))
    VbA,    // (ga^2 W - 1) / (ga (W - 1))
    VbB,    // (gb^2 W + 1) / (gb (W + 1))
    VbC,    // (gc^2 qh W - 1) / (gc (qh W - 1))
    VbD,    // (gd^2 qh W + 1) / (gd (qh W + 1))
    Cot,    // (W + 1) / (W - 1)
    Tan,    // (W - 1) / (W + 1)
};

struct Factor {
    FactorKind kind;
    Weight w;
    int qpow = 0;
};

// How the term acts on the input before multiplication by its coefficient.
enum class InputMap {
    Shift,     // z_j -> qh^{shift_j} z_j (shift in half steps)
    Linear,    // z^a -> (linear . a) z^a
    Quadratic, // z^a -> (sum_j a_j^2) z^a
};

struct OpTerm {
    long coef = 1;
    ParamExp param{};              // monomial prefactor
    std::vector<Factor> factors;   // product of ratios
    InputMap input = InputMap::Shift;
    Weight shift;                  // half steps per variable, or the linear form
};

// Ordered set partitions of J realized as chains J_1 < ... < J_s = J, each
// subset a bitmask over {0..n-1}.
std::vector<std::vector<unsigned>> enumerate_chains(unsigned J);

// v_b(eps_j x_j) for j in J, v_a pairs inside J (plain and q-shifted), and the
// v_a pairs coupling J to K.
std::vector<Factor> v_factors(int n, unsigned J, const std::vector<int>& eps, unsigned K);

// Expanded sum of products representing W_{I,p} (eps summed over I_q only).
std::vector<std::pair<long, std::vector<Factor>>> w_terms(int n, unsigned I, int p);

std::vector<OpTerm> operator_terms(const OperatorSpec& spec);

// Closed forms as rational functions in a single variable w.
LaurentRat coeff_va(int gamma_shift);
LaurentRat coeff_vb();

// Numeric or exact evaluation of a factor at torus values z (true exponents)
// and parameter values (qh, th, ga, gb, gc, gd). T is Rat or std::complex.
template <class T>
T pow_int(T base, long e)
{
    T r(1);
    bool inv = e < 0;
    unsigned long m = static_cast<unsigned long>(inv ? -e : e);
    while (m) {
        if (m & 1UL) {
            r *= base;
        }
        base *= base;
        m >>= 1;
    }
    return inv ? T(1) / r : r;
}

template <class T>
T eval_factor(const Factor& f, const std::vector<T>& z, const std::array<T, kParamVars>& p)
{
    T W = pow_int(p[kQh], 2L * f.qpow);
    for (std::size_t j = 0; j < f.w.size(); ++j) {
        W *= pow_int(z[j], f.w[j]);
    }
    const T one(1);
    switch (f.kind) {
    case FactorKind::Va:
        return (p[kTh] * p[kTh] * W - one) / (p[kTh] * (W - one));
    case FactorKind::VbA:
        return (p[kGa] * p[kGa] * W - one) / (p[kGa] * (W - one));
    case FactorKind::VbB:
        return (p[kGb] * p[kGb] * W + one) / (p[kGb] * (W + one));
    case FactorKind::VbC:
        return (p[kGc] * p[kGc] * p[kQh] * W - one) / (p[kGc] * (p[kQh] * W - one));
    case FactorKind::VbD:
        return (p[kGd] * p[kGd] * p[kQh] * W + one) / (p[kGd] * (p[kQh] * W + one));
    case FactorKind::Cot:
        return (W + one) / (W - one);
    case FactorKind::Tan:
        return (W - one) / (W + one);
    }
    return one;
}

template <class T>
T eval_product(const std::vector<Factor>& fs, const std::vector<T>& z, const std::array<T, kParamVars>& p)
{
    T r(1);
    for (const Factor& f : fs) {
        r *= eval_factor(f, z, p);
    }
    return r;
}

} // namespace qpoly
