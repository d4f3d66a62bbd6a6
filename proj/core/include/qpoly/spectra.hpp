// Copyright (c) 2026 The qpoly authors
// Use of this source code is governed by the MIT license that can be found in the LICENSE file.

#pragma once

#include "qpoly/param_rat.hpp"
#include "qpoly/weights.hpp"

#include <array>
#include <map>
#include <vector>

namespace qpoly {

// Multiplicative encodings u_j = th^{2(n-j)} ga gb gc gd of the rho vector.
std::vector<ParamRat> rho_units(int n);

// (u + u^{-1}) / 2.
ParamRat ch(const ParamRat& u);

// E_{r,n}(t; p_r..p_n) by the double sum. p holds p_r..p_n (length n - r + 1).
ParamRat ern_direct(int r, const std::vector<ParamRat>& t, const std::vector<ParamRat>& p);

// Same value from the recursion in n with E_{0,n} = 1 and E_{r,n} = 0 for n < r.
ParamRat ern_recursive(int r, const std::vector<ParamRat>& t, const std::vector<ParamRat>& p);

// Diagonal entry 2^r E_{r,n}(ch(lambda + rho); ch(rho_r), ..., ch(rho_n)).
ParamRat eigenvalue_Ern(int r, int n, const Weight& lambda);
ParamRat eigenvalue_Ern_recursive(int r, int n, const Weight& lambda);

// F_{m,p} = (-1)^p sum over 1 <= i_1 <= ... <= i_p <= m - p + 1 of t_{i_1}...t_{i_p}.
ParamRat F_solve(int m, int p, const std::vector<ParamRat>& t);

// Left-hand side of the linear system for F at the given r, n; zero when F solves it.
ParamRat linsyst_residual(int r, int n, const std::vector<ParamRat>& t);

// c_p from the surjection counts N_{p,s}.
Int surjection_count(int p, int s);
Int cp_check(int p);

// Polynomials in n commuting variables with ParamRat coefficients.
using MPoly = std::map<std::vector<int>, ParamRat>;

MPoly mpoly_add(const MPoly& a, const MPoly& b);
MPoly mpoly_mul(const MPoly& a, const MPoly& b);
MPoly mpoly_scale(const MPoly& a, const ParamRat& c);
MPoly mpoly_constant(int nvars, const ParamRat& c);
MPoly mpoly_var(int nvars, int i);
ParamRat mpoly_eval(const MPoly& a, const std::vector<ParamRat>& x);

// Elementary symmetric polynomial e_r in the given values.
ParamRat elementary(int r, const std::vector<ParamRat>& x);
// Complete homogeneous symmetric polynomial h_r in the given values.
ParamRat complete(int r, const std::vector<ParamRat>& x);

// Expresses a symmetric polynomial S in the ch-variables as a polynomial in
// the generators E_1..E_n, where E_r is the eigenvalue function
// 2^r E_{r,n}(ch(theta); ch(rho_r), ..., ch(rho_n)). Throws NotInvariant when S is
// not symmetric. The parameter substitution, if any, is applied to the
// generators (family spectra).
MPoly hc_lift(const MPoly& S, int n, const ParamSubst& params = {});

// Generator values (E_1(lambda), ..., E_n(lambda)).
std::vector<ParamRat> generator_values(int n, const Weight& lambda);
// ch(q^{lambda_j} u_j), j = 1..n.
std::vector<ParamRat> ch_values(int n, const Weight& lambda);

// Eigenvalue of the centered A-type operator: qh^{-2r|lambda|/n} e_r(q^{lambda_j} th^{n+1-2j}).
ParamRat eigenvalue_An(int r, int n, const Weight& lambda);

// E_{r,n}((lambda + rho)^2; rho_r^2, ..., rho_n^2) with rho_j = (n-j) g + (tg0 + tg1)/2,
// in the Jacobi slots.
ParamRat eigenvalue_jacobi(int r, int n, const Weight& lambda);

// Numeric parameters of the exponential encoding.
struct PhysicalParams {
    double beta = 1;
    double g = 1;
    double g0 = 0.5;
    double g1 = 0.5;
    double g0p = 0.5;
    double g1p = 0.5;
};

// F_beta(lambda + rho) = sum_j cosh(beta (lambda_j + rho_j)).
double spectral_function(const Weight& lambda, const PhysicalParams& p);

// True iff F_beta(lambda + rho) > F_beta(mu + rho).
bool monotonicity_check(const Weight& lambda, const Weight& mu, const PhysicalParams& p);

} // namespace qpoly
