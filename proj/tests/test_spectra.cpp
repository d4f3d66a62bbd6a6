// Copyright (c) 2026 The qpoly authors
// Use of this source code is governed by the MIT license that can be found in the LICENSE file.

#include "qpoly/errors.hpp"
#include "qpoly/spectra.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace qpoly;

namespace {

// Stirling numbers of the second kind by the triangle recurrence.
Int stirling2(int p, int s)
{
    std::vector<std::vector<Int>> S(static_cast<std::size_t>(p + 1), std::vector<Int>(static_cast<std::size_t>(p + 1), 0));
    S[0][0] = 1;
    for (int i = 1; i <= p; ++i) {
        for (int k = 1; k <= i; ++k) {
            S[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
                Int(k) * S[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k)] +
                S[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k - 1)];
        }
    }
    return S[static_cast<std::size_t>(p)][static_cast<std::size_t>(s)];
}

Int factorial(int k)
{
    Int f = 1;
    for (int i = 2; i <= k; ++i) {
        f *= i;
    }
    return f;
}

std::vector<ParamRat> symbols(int count, int offset)
{
    // Distinct generic values built from the parameter slots.
    std::vector<ParamRat> out;
    for (int i = 0; i < count; ++i) {
        out.push_back(ParamRat(ParamPoly::var(1 + (i + offset) % (kParamVars - 1))) + ParamRat(i + 1));
    }
    return out;
}

} // namespace

TEST_CASE("surjection counts and c_p")
{
    for (int p = 1; p <= 8; ++p) {
        for (int s = 1; s <= p; ++s) {
            CHECK(surjection_count(p, s) == factorial(s) * stirling2(p, s));
        }
        CHECK(cp_check(p) == (p % 2 == 0 ? 1 : -1));
    }
}

TEST_CASE("E_{r,n}: double sum and recursion agree")
{
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> d(-9, 9);
    for (int n = 1; n <= 5; ++n) {
        std::vector<ParamRat> t;
        for (int j = 0; j < n; ++j) {
            t.push_back(ParamRat(Rat(d(rng), 7)));
        }
        for (int r = 0; r <= n; ++r) {
            std::vector<ParamRat> p;
            for (int j = r; j <= n; ++j) {
                p.push_back(ParamRat(Rat(d(rng), 5)));
            }
            CHECK(ern_direct(r, t, p) == ern_recursive(r, t, p));
        }
    }
    // Symbolic arguments.
    const auto t = symbols(3, 0);
    const auto p = symbols(3, 2);
    CHECK(ern_direct(1, t, p) == ern_recursive(1, t, p));
}

TEST_CASE("E_{n,n} is a product")
{
    for (int n = 1; n <= 4; ++n) {
        const auto t = symbols(n, 0);
        const std::vector<ParamRat> p{parse_param_rat("gd") + ParamRat(3)};
        ParamRat prod(1);
        for (const auto& x : t) {
            prod *= x - p[0];
        }
        CHECK(ern_direct(n, t, p) == prod);
    }
}

TEST_CASE("the F coefficients solve the linear system")
{
    for (int n = 1; n <= 6; ++n) {
        const auto t = symbols(n, 1);
        for (int r = 1; r <= n; ++r) {
            CHECK(linsyst_residual(r, n, t).is_zero());
        }
    }
}

TEST_CASE("eigenvalues")
{
    for (int n = 1; n <= 3; ++n) {
        for (int r = 1; r <= n; ++r) {
            CHECK(eigenvalue_Ern(r, n, Weight(static_cast<std::size_t>(n), 0)).is_zero());
            const Weight ones(static_cast<std::size_t>(n), 1);
            CHECK(eigenvalue_Ern(r, n, ones) == eigenvalue_Ern_recursive(r, n, ones));
        }
    }
    // r = 1 is the plain sum of 2 (ch(q^lambda_j u_j) - ch(u_j)).
    const Weight lam{2, 1};
    const auto u = rho_units(2);
    const ParamRat q = parse_param_rat("q");
    ParamRat expected(0);
    for (std::size_t j = 0; j < 2; ++j) {
        expected += (ch(q.pow(lam[j]) * u[j]) - ch(u[j])) * ParamRat(2);
    }
    CHECK(eigenvalue_Ern(1, 2, lam) == expected);
    CHECK(eigenvalue_jacobi(1, 1, {0}).is_zero());
}

TEST_CASE("A-type eigenvalues")
{
    // e_n of q^{lambda_j} th^{n+1-2j} times qh^{-2|lambda|} is 1.
    CHECK(eigenvalue_An(2, 2, {2, 1}) == ParamRat(1));
    CHECK(eigenvalue_An(1, 1, {3}) == ParamRat(1));
}

TEST_CASE("lifting symmetric functions to the generators")
{
    for (int n = 1; n <= 3; ++n) {
        MPoly s;
        for (int j = 0; j < n; ++j) {
            s = mpoly_add(s, mpoly_mul(mpoly_var(n, j), mpoly_var(n, j)));
        }
        const MPoly lifted = hc_lift(s, n);
        for (const Weight& lam : {Weight(static_cast<std::size_t>(n), 0), Weight(static_cast<std::size_t>(n), 1)}) {
            const auto x = ch_values(n, lam);
            ParamRat direct(0);
            for (const auto& v : x) {
                direct += v * v;
            }
            CHECK(mpoly_eval(lifted, generator_values(n, lam)) == direct);
        }
    }
    CHECK_THROWS_AS(hc_lift(mpoly_var(2, 0), 2), NotInvariant);
}

TEST_CASE("spectral function and monotonicity")
{
    PhysicalParams p;
    const Weight lam{2, 1};
    const double rho0 = p.g + (p.g0 + p.g1 + p.g0p + p.g1p) / 2;
    const double rho1 = (p.g0 + p.g1 + p.g0p + p.g1p) / 2;
    const double direct = std::cosh(p.beta * (2 + rho0)) + std::cosh(p.beta * (1 + rho1));
    CHECK(spectral_function(lam, p) == doctest::Approx(direct));
    CHECK(monotonicity_check({2, 1}, {1, 1}, p));
    CHECK_FALSE(monotonicity_check({1, 1}, {2, 1}, p));
}
