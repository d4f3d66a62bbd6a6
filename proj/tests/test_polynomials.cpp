// Copyright (c) 2026 The qpoly authors
// Use of this source code is governed by the MIT license that can be found in the LICENSE file.

#include "qpoly/errors.hpp"
#include "qpoly/inner_product.hpp"
#include "qpoly/operator_apply.hpp"
#include "qpoly/polynomials.hpp"
#include "qpoly/spectra.hpp"

#include <doctest.h>

#include <cmath>

using namespace qpoly;

namespace {

OperatorSpec op(OpKind k, int n, int r, ParamSubst params = {})
{
    OperatorSpec s;
    s.kind = k;
    s.n = n;
    s.r = r;
    s.params = std::move(params);
    return s;
}

// One-variable Laurent polynomials with rational coefficients, keyed by exponent.
using RPoly = std::map<int, Rat>;

RPoly rmul(const RPoly& a, const RPoly& b)
{
    RPoly out;
    for (const auto& [i, x] : a) {
        for (const auto& [j, y] : b) {
            out[i + j] += x * y;
        }
    }
    return out;
}

// sin^2(x/2) = (2 - z - 1/z)/4 and cos^2(x/2) = (2 + z + 1/z)/4, so for
// integer exponents the Jacobi weight is a Laurent polynomial and the torus
// average is its constant term.
RPoly jacobi_weight(int a, int b)
{
    RPoly w{{0, Rat(1)}};
    const RPoly s{{-1, Rat(-1, 4)}, {0, Rat(1, 2)}, {1, Rat(-1, 4)}};
    const RPoly c{{-1, Rat(1, 4)}, {0, Rat(1, 2)}, {1, Rat(1, 4)}};
    for (int i = 0; i < a; ++i) {
        w = rmul(w, s);
    }
    for (int i = 0; i < b; ++i) {
        w = rmul(w, c);
    }
    return w;
}

RPoly one_var(const std::map<Weight, Rat>& coeffs)
{
    RPoly p;
    for (const auto& [w, c] : coeffs) {
        p[w[0]] += c;
        if (w[0] != 0) {
            p[-w[0]] += c;
        }
    }
    return p;
}

Rat constant_term(const RPoly& p)
{
    auto it = p.find(0);
    return it == p.end() ? Rat(0) : it->second;
}

} // namespace

TEST_CASE("trivial polynomial")
{
    const OrthoPoly p = koornwinder_triangular(2, {0, 0});
    REQUIRE(p.coeffs.size() == 1);
    CHECK(p.coeffs.at({0, 0}) == ParamRat(1));
}

TEST_CASE("one variable: single back-substitution step")
{
    const OrthoPoly p = koornwinder_triangular(1, {1});
    const auto m = operator_matrix(op(OpKind::Dr, 1, 1), {1});
    REQUIRE(p.coeffs.size() == 2);
    CHECK(p.coeffs.at({1}) == ParamRat(1));
    CHECK(p.coeffs.at({0}) == m.entry[0][1] / eigenvalue_Ern(1, 1, {1}));
}

TEST_CASE("joint eigenfunctions")
{
    for (const Weight& lam : {Weight{2}, Weight{1, 0}, Weight{1, 1}, Weight{2, 0}, Weight{1, 1, 0}}) {
        const int n = static_cast<int>(lam.size());
        const OrthoPoly p = koornwinder_triangular(n, lam, {}, true);
        CHECK(p.coeffs.at(lam) == ParamRat(1));
        const LaurentPoly f = p.to_laurent();
        for (int r = 1; r <= n; ++r) {
            CHECK(apply_operator(op(OpKind::Dr, n, r), f) == f * eigenvalue_Ern(r, n, lam));
        }
        for (const auto& [w, c] : p.coeffs) {
            CHECK(dominance_leq(w, lam));
        }
    }
}

TEST_CASE("decoupling at g = 0: two variables factor")
{
    ParamSubst s{};
    s[kTh] = ParamRat(1);
    const OrthoPoly p2 = koornwinder_triangular(2, {1, 1}, s);
    const OrthoPoly p1 = koornwinder_triangular(1, {1}, s);
    const ParamRat c0 = p1.coeffs.at({0});
    // (m_1(x_1) + c0)(m_1(x_2) + c0) = m_(1,1) + c0 m_(1,0) + c0^2.
    CHECK(p2.coeffs.at({1, 1}) == ParamRat(1));
    CHECK(p2.coeffs.at({1, 0}) == c0);
    CHECK(p2.coeffs.at({0, 0}) == c0 * c0);
}

TEST_CASE("numeric specialization and eigenvalue collisions")
{
    const OrthoPoly p = koornwinder_triangular(1, {1});
    const auto v = specialize_numeric(p, NumericPoint{});
    CHECK(v.at({1}) == Rat(1));
    // a b c d = 1 makes the two one-variable eigenvalues coincide.
    NumericPoint bad;
    bad.a = Rat(2);
    bad.b = Rat(-1);
    bad.c = Rat(1);
    bad.d = Rat(-1, 2);
    CHECK_THROWS_AS(specialize_numeric(p, bad), ZeroDenominator);
}

TEST_CASE("Jacobi polynomials in one variable are orthogonal for the exact moments")
{
    for (int a : {0, 1, 2}) {
        for (int b : {0, 1, 3}) {
            const RPoly w = jacobi_weight(a, b);
            std::vector<RPoly> ps;
            for (int k = 0; k <= 3; ++k) {
                const OrthoPoly p = jacobi_triangular(1, {k});
                ps.push_back(one_var(specialize_jacobi(p, Rat(1), Rat(a), Rat(b))));
            }
            for (std::size_t i = 0; i < ps.size(); ++i) {
                for (std::size_t j = 0; j < i; ++j) {
                    CHECK_MESSAGE(constant_term(rmul(rmul(ps[i], ps[j]), w)) == 0, "a=" << a << " b=" << b);
                }
            }
        }
    }
}

TEST_CASE("Jacobi polynomials in two variables are orthogonal under quadrature")
{
    WeightFunctionSpec spec;
    spec.family = WeightFamily::Jacobi;
    spec.jacobi = JacobiPoint{1, 1, 2};
    spec.grid = 64;
    const Quadrature quad(2, spec);
    std::vector<NumPoly> ps;
    for (const Weight& lam : weights_below({2, 0})) {
        NumPoly f;
        for (const auto& [w, c] : specialize_jacobi(jacobi_triangular(2, lam), Rat(1), Rat(1), Rat(2))) {
            for (const Weight& o : worbit(w, Group::Hyperoctahedral)) {
                f[o] += c.get_d();
            }
        }
        ps.push_back(f);
    }
    for (std::size_t i = 0; i < ps.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            CHECK(std::fabs(quad.inner(ps[i], ps[j])) < 1e-8);
        }
    }
}

TEST_CASE("q -> 1 limit in one variable")
{
    const OrthoPoly k = koornwinder_triangular(1, {2});
    const OrthoPoly j = jacobi_triangular(1, {2});
    CHECK(qh1_limit(k, 0, 1, 0, 1, 1) == specialize_jacobi(j, 0, 2, 1));
    CHECK(qh1_limit(k, 1, 0, 0, 0, 0) == specialize_jacobi(j, 1, 0, 0));
}

TEST_CASE("A-type extraction keeps the top-size component")
{
    const OrthoPoly p = koornwinder_triangular(2, {2, 1});
    const OrthoPoly a = macdonald_An_extract(p);
    CHECK(a.group == Group::Permutations);
    for (const auto& [w, c] : a.coeffs) {
        CHECK(weight_size(w) == 3);
    }
    CHECK(a.coeffs.at({2, 1}) == ParamRat(1));
}

TEST_CASE("contract violations")
{
    CHECK_THROWS_AS(koornwinder_triangular(2, {1, 2}), ContractViolation);
    CHECK_THROWS_AS(koornwinder_triangular(2, {1}), ContractViolation);
}
