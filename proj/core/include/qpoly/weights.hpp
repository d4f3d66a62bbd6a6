// Copyright (c) 2026 The qpoly authors
// Use of this source code is governed by the MIT license that can be found in the LICENSE file.

#pragma once

#include "qpoly/laurent.hpp"

#include <map>
#include <string>
#include <vector>

namespace qpoly {

// Symmetry group acting on the torus variables.
//  Hyperoctahedral: permutations and arbitrary sign flips (type BC).
//  Permutations: the symmetric group only (type A).
//  EvenSigned: permutations and an even number of sign flips (type D).
enum class Group { Hyperoctahedral, Permutations, EvenSigned };

std::string to_string(Group g);
Group parse_group(const std::string& s);

// Canonical representative of the orbit of w. For the hyperoctahedral group:
// absolute values sorted decreasingly. For permutations: sorted decreasingly.
// For the even signed group: as hyperoctahedral, with the last entry negated
// when the number of negative entries is odd and no entry vanishes.
Weight dominant_rep(const Weight& w, Group g);
bool is_dominant(const Weight& w, Group g);

// Partial sums of a are bounded by those of b (k = 1..n).
bool dominance_leq(const Weight& a, const Weight& b);

// All dominant weights below lambda in dominance order, sorted lexicographically.
// For the permutation group the total degree is kept fixed (the operators are
// homogeneous), otherwise the dominant cone of the hyperoctahedral group is used.
std::vector<Weight> weights_below(const Weight& lambda, Group g = Group::Hyperoctahedral);

// Deduplicated orbit in lexicographic order.
std::vector<Weight> worbit(const Weight& w, Group g);

// Orbit sum with unit coefficients. With half_lattice the weight is given in
// doubled units.
LaurentPoly monomial_symmetric(const Weight& lambda, Group g, bool half_lattice = false);

// f = sum c_mu m_mu. Throws NotInvariant when f is not an orbit combination.
std::map<Weight, ParamRat> expand_in_monomials(const LaurentPoly& f, Group g);

// Sorts lexicographically increasing, which refines dominance.
std::vector<Weight> linear_refinement(std::vector<Weight> weights);

// Parse "2,1,0" into a weight; throws ParseError.
Weight parse_weight(const std::string& text);
std::string weight_to_string(const Weight& w);

int weight_size(const Weight& w);

} // namespace qpoly
