// Copyright (c) 2026 The qpoly authors
// Use of this source code is governed by the MIT license that can be found in the LICENSE file.

#pragma once

#include "qpoly/operators.hpp"

#include <map>
#include <vector>

namespace qpoly {

using Expansion = std::map<Weight, ParamRat>;

// Images of the monomial symmetric functions m_mu (mu dominant for the group
// of the operator, stored units on the requested lattice), expanded in the
// monomial basis. The coefficients are exact Laurent polynomials in the
// parameters; spec.params is applied afterwards.
//
// Each coefficient function is expanded as a formal Laurent series in the
// Weyl chamber of y = (n, ..., 1) and truncated to the window of degrees that
// can reach a dominant weight. Every monomial in the window is checked against
// the coefficient of its dominant representative, which certifies invariance
// and the absence of uncancelled poles. Throws NotInvariant otherwise.
std::vector<Expansion> apply_to_monomials(const OperatorSpec& spec, const std::vector<Weight>& mus,
                                          bool half_lattice = false);

// Image of an invariant Laurent polynomial. Throws NotInvariant.
LaurentPoly apply_operator(const OperatorSpec& spec, const LaurentPoly& f);

// Same image computed over one common denominator assembled from the binomial
// factors of every term, followed by binomial-by-binomial exact division.
// Works for any input (invariance is not required). Throws NotDivisible.
LaurentPoly apply_operator_exact(const OperatorSpec& spec, const LaurentPoly& f);

struct OperatorMatrix {
    std::vector<Weight> basis;                 // weights_below(lambda), sorted
    std::vector<std::vector<ParamRat>> entry;  // entry[row][col]: coefficient of m_row in D m_col
};

// Matrix of the operator on the span of m_mu, mu <= lambda. Throws
// ContractViolation if an image leaves the span (triangularity failure).
OperatorMatrix operator_matrix(const OperatorSpec& spec, const Weight& lambda, bool half_lattice = false);

// A(B m_lambda) - B(A m_lambda).
LaurentPoly commutator_on_basis(const OperatorSpec& a, const OperatorSpec& b, const Weight& lambda);

// Expansion -> Laurent polynomial in the orbit basis of the group.
LaurentPoly from_expansion(const Expansion& e, int n, Group g, bool half_lattice);

// Number of worker threads (QPOLY_THREADS, default 1).
int worker_threads();

} // namespace qpoly
