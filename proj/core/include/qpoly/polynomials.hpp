// Copyright (c) 2026 The qpoly authors
// Use of this source code is governed by the MIT license that can be found in the LICENSE file.

#pragma once

#include "qpoly/numeric.hpp"
#include "qpoly/operator_apply.hpp"
#include "qpoly/operators.hpp"

#include <map>
#include <optional>
#include <vector>

namespace qpoly {

// Unitriangular expansion sum_{nu <= lambda} c_nu m_nu with c_lambda = 1.
struct OrthoPoly {
    int n = 1;
    Weight lambda;
    Group group = Group::Hyperoctahedral;
    VarSet vars = VarSet::Half;
    bool half_lattice = false;
    std::map<Weight, ParamRat> coeffs;

    LaurentPoly to_laurent() const;
};

// Solves (M - E) c = 0 with c_lambda = 1 by back-substitution along the
// basis order. The basis must be sorted by a linear refinement of dominance
// and contain lambda. Throws ZeroDenominator naming the colliding weights.
std::map<Weight, ParamRat> back_substitute(const OperatorMatrix& m, const Weight& lambda, const ParamRat& eigenvalue);

// Koornwinder polynomial from the triangular eigenproblem of D_1 with the
// given parameter substitution. When check_all is set, the eigen-equations
// of D_1..D_n with the closed-form eigenvalues are asserted (NotEigenfunction).
OrthoPoly koornwinder_triangular(int n, const Weight& lambda, const ParamSubst& params = {}, bool check_all = true);

// Jacobi polynomial from the triangular eigenproblem of the differential operator.
OrthoPoly jacobi_triangular(int n, const Weight& lambda);

// Checks D p = E p exactly through the operator matrix; returns the first
// weight where the two sides differ.
std::optional<Weight> eigen_defect(const OperatorSpec& spec, const OrthoPoly& p, const ParamRat& eigenvalue);

// Coefficients specialized to a numeric point. Throws ZeroDenominator when an
// eigenvalue collision makes the back-substitution singular there.
std::map<Weight, Rat> specialize_numeric(const OrthoPoly& p, const NumericPoint& pt);

// Specializes th = qh^g, ga = qh^g0, gb = qh^g1, gc = qh^g0p, gd = qh^g1p, cancels and
// evaluates at qh = 1.
std::map<Weight, Rat> qh1_limit(const OrthoPoly& p, int g, int g0, int g1, int g0p, int g1p);

// Jacobi coefficients at numeric (g, tg0, tg1).
std::map<Weight, Rat> specialize_jacobi(const OrthoPoly& p, const Rat& g, const Rat& tg0, const Rat& tg1);

// Keeps the coefficients with |nu| = |lambda| and switches to orbit sums under
// permutations only.
OrthoPoly macdonald_An_extract(const OrthoPoly& p);

} // namespace qpoly
