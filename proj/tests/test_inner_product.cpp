// Copyright (c) 2026 The qpoly authors
// Use of this source code is governed by the MIT license that can be found in the LICENSE file.

#include "qpoly/errors.hpp"
#include "qpoly/inner_product.hpp"
#include "qpoly/polynomials.hpp"
#include "qpoly/verify.hpp"

#include <doctest.h>

#include <cmath>

using namespace qpoly;

namespace {

using Cx = std::complex<long double>;

// Point at which the weight collapses to 1: t = 1, a = 1, b = -1, c = q^{1/2}, d = -q^{1/2}.
NumericPoint trivial_point()
{
    NumericPoint p;
    p.q = Rat(1, 4);
    p.t = Rat(1);
    p.a = Rat(1);
    p.b = Rat(-1);
    p.c = Rat(1, 2);
    p.d = Rat(-1, 2);
    return p;
}

long double ld(const Rat& r)
{
    return static_cast<long double>(r.get_d());
}

// (x; q)_M
Cx qfac(Cx x, long double q, int M)
{
    Cx p = 1;
    for (int m = 0; m < M; ++m) {
        p *= 1.0L - x * std::pow(q, static_cast<long double>(m));
    }
    return p;
}

// One-variable weight written from the q-shifted factorials directly:
// (z^2, z^-2; q) / prod_{e in a,b,c,d} (e z, e / z; q).
Cx askey_wilson_weight(Cx z, const NumericPoint& p, int M)
{
    const long double q = ld(p.q);
    Cx num = qfac(z * z, q, M) * qfac(1.0L / (z * z), q, M);
    Cx den = 1;
    for (const Rat& e : {p.a, p.b, p.c, p.d}) {
        den *= qfac(ld(e) * z, q, M) * qfac(ld(e) / z, q, M);
    }
    return num / den;
}

} // namespace

TEST_CASE("empty truncation is the constant weight")
{
    WeightFunctionSpec spec;
    spec.M = 0;
    const Quadrature quad(2, spec);
    const NumPoly one{{{0, 0}, 1.0L}};
    CHECK(quad.inner(one, one) == doctest::Approx(1.0));
    for (const Weight& l : weights_below({2, 1})) {
        for (const Weight& m : weights_below({2, 1})) {
            const long double v = quad.inner(monomial_numeric(l, Group::Hyperoctahedral), monomial_numeric(m, Group::Hyperoctahedral));
            const long double expected = l == m ? static_cast<long double>(worbit(l, Group::Hyperoctahedral).size()) : 0.0L;
            CHECK(std::fabs(v - expected) < 1e-12L);
        }
    }
}

TEST_CASE("trivial parameters give orbit sizes up to truncation")
{
    WeightFunctionSpec spec;
    spec.point = trivial_point();
    const Quadrature quad(2, spec);
    for (const Weight& l : weights_below({2, 0})) {
        for (const Weight& m : weights_below({2, 0})) {
            const long double v = quad.inner(monomial_numeric(l, Group::Hyperoctahedral), monomial_numeric(m, Group::Hyperoctahedral));
            const long double expected = l == m ? static_cast<long double>(worbit(l, Group::Hyperoctahedral).size()) : 0.0L;
            CHECK(std::fabs(v - expected) <= truncation_tolerance(spec.point, spec.M, weight_size(l), weight_size(m)));
        }
    }
}

TEST_CASE("coinciding binomials cancel exactly")
{
    WeightFunctionSpec spec;
    spec.point = trivial_point();
    for (const DeltaFactor& f : delta_truncate(2, spec)) {
        int nonzero = 0;
        for (int e : f.w) {
            nonzero += e != 0 ? 1 : 0;
        }
        CHECK(nonzero == 1);
    }
    // Products z_1 z_2 = -1 occur on the midpoint grid; the weight stays finite there.
    spec.grid = 8;
    const Quadrature quad(2, spec);
    const NumPoly one{{{0, 0}, 1.0L}};
    CHECK(std::isfinite(quad.inner(one, one)));
}

TEST_CASE("the truncated product matches the q-shifted factorial formula")
{
    WeightFunctionSpec spec;
    for (int M : {1, 4, 16}) {
        spec.M = M;
        const auto factors = delta_truncate(1, spec);
        for (long double x : {0.3L, 1.7L, 2.9L}) {
            const Cx z = std::polar(1.0L, x);
            const Cx a = eval_factors(factors, {z});
            const Cx b = askey_wilson_weight(z, spec.point, M);
            CHECK(std::abs(a - b) < 1e-12L * (1 + std::abs(b)));
        }
    }
}

TEST_CASE("the weight satisfies the q-difference relation up to truncation")
{
    WeightFunctionSpec spec;
    for (long double x : {0.4L, 1.3L}) {
        const Cx w = std::polar(1.0L, x);
        CHECK(difference_equation_defect(spec, w) < 1e-6L);
    }
}

TEST_CASE("Gram-Schmidt agrees with the eigenproblem")
{
    WeightFunctionSpec spec;
    const Quadrature quad(2, spec);
    for (const Weight& lam : {Weight{1, 0}, Weight{1, 1}, Weight{2, 0}}) {
        const auto gs = gram_schmidt_oracle(lam, quad);
        const auto ex = specialize_numeric(koornwinder_triangular(2, lam), spec.point);
        for (const auto& [w, c] : ex) {
            const long double g = gs.count(w) ? gs.at(w) : 0.0L;
            CHECK_MESSAGE(std::fabs(g - ld(c)) <= truncation_tolerance(spec.point, spec.M, weight_size(lam), weight_size(w)),
                          weight_to_string(lam) << " at " << weight_to_string(w));
        }
    }
    const auto one = gram_schmidt_oracle({0, 0}, quad);
    REQUIRE(one.size() == 1);
    CHECK(one.begin()->second == 1.0L);
}

TEST_CASE("alternative refinement gives the same polynomial")
{
    WeightFunctionSpec spec;
    const Quadrature quad(2, spec);
    const Weight lam{2, 1};
    const auto below = weights_below(lam);
    const auto a = gram_schmidt_oracle(lam, linear_refinement(below), quad);
    const auto b = gram_schmidt_oracle(lam, size_then_lex(below), quad);
    for (const auto& [w, c] : a) {
        CHECK(std::fabs(c - b.at(w)) <= truncation_tolerance(spec.point, spec.M, 3, weight_size(w)));
    }
}

TEST_CASE("Jacobi weight is not a binomial product")
{
    WeightFunctionSpec spec;
    spec.family = WeightFamily::Jacobi;
    CHECK_THROWS_AS(delta_truncate(1, spec), ContractViolation);
}
