// Copyright (c) 2026 The qpoly authors
// Use of this source code is governed by the MIT license that can be found in the LICENSE file.

#pragma once

#include "qpoly/numeric.hpp"
#include "qpoly/weights.hpp"

#include <complex>
#include <map>
#include <vector>

namespace qpoly {

enum class WeightFamily { Koornwinder, Jacobi, AType };

struct JacobiPoint {
    long double g = 1;
    long double tg0 = 1;
    long double tg1 = 2;
};

struct WeightFunctionSpec {
    WeightFamily family = WeightFamily::Koornwinder;
    int M = 16;              // number of factors kept in every q-shifted factorial
    NumericPoint point;      // Koornwinder and A-type families
    JacobiPoint jacobi;      // Jacobi family
    int grid = 128;          // quadrature nodes per variable
};

// Binomial factor (1 - coef z^w)^power.
struct DeltaFactor {
    Rat coef;
    Weight w;
    int power = 1;
};

// Truncated weight function as an exact product of binomials: every
// q-shifted factorial (x;q) is replaced by prod_{m=0}^{M-1} (1 - x q^m).
// Throws ContractViolation for the Jacobi family, whose weight is not a
// product of binomials.
std::vector<DeltaFactor> delta_truncate(int n, const WeightFunctionSpec& spec);

std::complex<long double> eval_factors(const std::vector<DeltaFactor>& f, const std::vector<std::complex<long double>>& z);

// Trapezoid rule on the torus with a cached weight. The inner product is the
// torus average of f(z) g(1/z) Delta(z), so <1,1> = 1 for Delta = 1.
class Quadrature {
public:
    Quadrature(int n, const WeightFunctionSpec& spec);

    long double inner(const NumPoly& f, const NumPoly& g) const;
    int n() const { return n_; }

private:
    int n_;
    int N_;
    std::vector<std::vector<std::complex<long double>>> nodes_; // per point, z_1..z_n
    std::vector<long double> weight_;                          // Delta at each point over N^n

    std::vector<long double> values(const NumPoly& f) const;
};

long double inner_product(const NumPoly& f, const NumPoly& g, int n, const WeightFunctionSpec& spec);

// Gram-Schmidt along the given order (a linear refinement of dominance ending
// at lambda) against all previous elements. Returns the coefficients of p_lambda
// in the monomial basis. Throws DegenerateNorm on a vanishing norm.
std::map<Weight, long double> gram_schmidt_oracle(const Weight& lambda, const std::vector<Weight>& order,
                                                  const Quadrature& quad, Group g = Group::Hyperoctahedral);
std::map<Weight, long double> gram_schmidt_oracle(const Weight& lambda, const Quadrature& quad,
                                                  Group g = Group::Hyperoctahedral);

// A second refinement of dominance: by size, then lexicographic.
std::vector<Weight> size_then_lex(std::vector<Weight> weights);

// |d_a^+(q w) / (d_a^+(w) th v_a(w)) - 1| for the truncated product at a point w.
long double difference_equation_defect(const WeightFunctionSpec& spec, std::complex<long double> w);

NumPoly monomial_numeric(const Weight& lambda, Group g);

} // namespace qpoly
