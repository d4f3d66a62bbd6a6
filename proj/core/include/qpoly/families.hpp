// Copyright (c) 2026 The qpoly authors
// Use of this source code is governed by the MIT license that can be found in the LICENSE file.

#pragma once

#include "qpoly/polynomials.hpp"

#include <string>
#include <vector>

namespace qpoly {

// Admissible pairs (R, S) of root systems. The parameter slots are reused
// after the reparametrization ga = e^{-beta nu_1/2}, gb = e^{-beta nu_2/2},
// gc = e^{-beta nu_1'/2}, gd = e^{-beta nu_2'/2}, with mu_0 = nu_1 + nu_2,
// mu_1 = nu_2, mu_0' = nu_1' + nu_2', mu_1' = nu_2'.
enum class FamilyPair { BnBn, BnCn, CnBn, CnCn, BCnBn, BCnCn, Dn, An };

// "Bn:Bn", "Bn:Cn", "Cn:Bn", "Cn:Cn", "BCn:Bn", "BCn:Cn", "Dn", "An".
std::string to_string(FamilyPair f);
FamilyPair parse_family(const std::string& s);
std::vector<FamilyPair> all_families();

// Substitution on (ga, gb, gc, gd). The A-type pair leaves the parameters
// generic; its polynomials are obtained by extraction.
ParamSubst family_specialize(FamilyPair f);

bool family_short_is_C(FamilyPair f);

// Family polynomial with all eigen-equations asserted: D_1..D_n at the
// specialized parameters, or the centered A-type operators for An.
OrthoPoly family_polynomial(FamilyPair f, int n, const Weight& lambda);

enum class ShortRoot { B, C };

// Parameters under which m_{omega_n} p_lambda is anti-periodic for (B_n, S):
// gb = qh, gc = 1 (S = B) or ga (S = C), gd = 1.
ParamSubst antiperiodic_params(ShortRoot s);

// Additive constant 2 sum_j (ch(U_j qh) - ch(U_j)) with U_j = th^{2(n-j)} ga
// (S = B) or th^{2(n-j)} ga^2 (S = C).
ParamRat relm_constant(int n, ShortRoot s);

// m_{omega_n} = prod_j (z_j^{1/2} + z_j^{-1/2}) on the half lattice.
LaurentPoly spin_monomial(int n);

// m_{omega_n} p_lambda with p_lambda at the anti-periodic parameters. Asserts
// that it is an eigenfunction of D_1 at the (B_n, S) parameters with eigenvalue
// E_1 (anti-periodic parameters) plus the additive constant; NotEigenfunction
// otherwise. When dn is set, ga = 1 in addition (the D_n parameters).
LaurentPoly bn_antiperiodic(int n, const Weight& lambda, ShortRoot s, bool dn = false);

// Both sides of D_1^{(B,S)}(m_omega m_lambda) = m_omega (D_1^{pc} + const) m_lambda.
bool relm_identity(int n, const Weight& lambda, ShortRoot s);

// The even combinations at D_n parameters: p_lambda for delta = 0, and
// m_{omega_n} p_lambda at gb = qh for delta = 1 (half lattice).
LaurentPoly dn_combine(int n, const Weight& lambda, int delta);

// Separation of an even combination into the two D_n polynomials by the
// half-spin operators. plus carries z^{lambda + delta omega_n}; minus is its
// image under the sign flip of the last variable.
struct DnSplit {
    LaurentPoly plus;
    LaurentPoly minus;
    ParamRat alpha; // eigenvalue of D_n^+ on plus (and of D_n^- on minus)
    ParamRat beta;  // eigenvalue of D_n^- on plus (and of D_n^+ on minus)
};

// Throws NotEigenfunction if a separated polynomial fails its eigen-equations.
DnSplit dn_split(int n, const Weight& lambda, int delta);

enum class HalfSpin { CSpin, DnMinus, DnPlus };

std::string to_string(HalfSpin h);
HalfSpin parse_half_spin(const std::string& s);

// Asserts that the half-spin operator has the family polynomial as an
// eigenfunction and returns the eigenvalue mu. C_spin uses the C-type pair
// (default Cn:Cn); the D_n operators act on the separated polynomial carrying
// z^lambda. Also asserts that mu^2 (C_spin) or (mu_+ + mu_-)^2 (D_n) lies in
// the algebra generated by the eigenvalues of D_1..D_n.
ParamRat halfspin_eigencheck(HalfSpin which, int n, const Weight& lambda, FamilyPair pair = FamilyPair::CnCn);

// Fits mu^2 as sum_k c_k e_k(x) in the ch-values x of the family spectrum,
// checks the fit on further weights and the round trip through hc_lift.
bool square_in_e_algebra(const OperatorSpec& sum_op, int n, FamilyPair pair);

} // namespace qpoly
