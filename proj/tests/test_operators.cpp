// Copyright (c) 2026 The qpoly authors
// Use of this source code is governed by the MIT license that can be found in the LICENSE file.

#include "qpoly/errors.hpp"
#include "qpoly/numeric.hpp"
#include "qpoly/operator_apply.hpp"
#include "qpoly/operators.hpp"
#include "qpoly/spectra.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

using namespace qpoly;

namespace {

using Cx = std::complex<long double>;

OperatorSpec op(OpKind k, int n, int r, ParamSubst params = {})
{
    OperatorSpec s;
    s.kind = k;
    s.n = n;
    s.r = r;
    s.params = std::move(params);
    return s;
}

// Ordered set partitions of a k-set: a(k) = sum_i C(k, i) a(k - i).
long fubini(int k)
{
    std::vector<long> a(static_cast<std::size_t>(k + 1), 0);
    a[0] = 1;
    for (int m = 1; m <= k; ++m) {
        long binom = 1;
        for (int i = 1; i <= m; ++i) {
            binom = binom * (m - i + 1) / i;
            a[static_cast<std::size_t>(m)] += binom * a[static_cast<std::size_t>(m - i)];
        }
    }
    return a[static_cast<std::size_t>(k)];
}

Cx eval_laurent(const NumPoly& f, const std::vector<Cx>& z)
{
    Cx s = 0;
    for (const auto& [w, c] : f) {
        Cx t = c;
        for (std::size_t j = 0; j < z.size(); ++j) {
            t *= std::pow(z[j], w[j]);
        }
        s += t;
    }
    return s;
}

// Closed forms of the coefficient functions in the composite variable w.
Cx va(Cx w, long double th)
{
    return (th * th * w - 1.0L) / (th * (w - 1.0L));
}

Cx vb(Cx w, const std::array<long double, kParamVars>& h)
{
    const long double qh = h[kQh];
    return (h[kGa] * h[kGa] * w - 1.0L) / (h[kGa] * (w - 1.0L)) * (h[kGb] * h[kGb] * w + 1.0L) / (h[kGb] * (w + 1.0L)) *
           (h[kGc] * h[kGc] * qh * w - 1.0L) / (h[kGc] * (qh * w - 1.0L)) *
           (h[kGd] * h[kGd] * qh * w + 1.0L) / (h[kGd] * (qh * w + 1.0L));
}

// The first operator written out term by term: a sum over j and a sign of
// v_b(eps x_j) prod_{k != j} v_a(eps x_j + x_k) v_a(eps x_j - x_k) (T_j^eps - 1).
Cx d1_direct(const NumPoly& f, const std::vector<Cx>& z, const std::array<long double, kParamVars>& h)
{
    const long double q = h[kQh] * h[kQh];
    const std::size_t n = z.size();
    Cx total = 0;
    const Cx base = eval_laurent(f, z);
    for (std::size_t j = 0; j < n; ++j) {
        for (int eps : {1, -1}) {
            const Cx zj = eps > 0 ? z[j] : 1.0L / z[j];
            Cx coef = vb(zj, h);
            for (std::size_t k = 0; k < n; ++k) {
                if (k != j) {
                    coef *= va(zj * z[k], h[kTh]) * va(zj / z[k], h[kTh]);
                }
            }
            std::vector<Cx> shifted = z;
            shifted[j] *= eps > 0 ? q : 1.0L / q;
            total += coef * (eval_laurent(f, shifted) - base);
        }
    }
    return total;
}

} // namespace

TEST_CASE("chains are ordered set partitions")
{
    for (int k = 1; k <= 5; ++k) {
        const unsigned J = (1U << k) - 1;
        const auto chains = enumerate_chains(J);
        CHECK(static_cast<long>(chains.size()) == fubini(k));
        for (const auto& c : chains) {
            REQUIRE_FALSE(c.empty());
            CHECK(c.back() == J);
            for (std::size_t i = 1; i < c.size(); ++i) {
                CHECK((c[i - 1] & ~c[i]) == 0U);
                CHECK(c[i - 1] != c[i]);
            }
        }
    }
    CHECK(fubini(2) == 3);
    CHECK(fubini(3) == 13);
}

TEST_CASE("v_a closed form matches the trigonometric definition")
{
    std::mt19937 rng(11);
    std::uniform_real_distribution<long double> u(0.1L, 2.0L);
    for (int k = 0; k < 20; ++k) {
        const long double beta = u(rng);
        const long double g = u(rng);
        const Cx z(u(rng), 0.3L * u(rng));
        const Cx w = std::exp(Cx(0, 1) * z);
        const Cx trig = std::sin((Cx(0, beta * g) + z) / 2.0L) / std::sin(z / 2.0L);
        const long double th = std::exp(-beta * g / 2);
        std::array<Cx, kParamVars> p{};
        p.fill(1.0L);
        p[kTh] = th;
        const Cx closed = eval_factor(Factor{FactorKind::Va, {1}, 0}, std::vector<Cx>{w}, p);
        CHECK(std::abs(closed - trig) < 1e-12L * (1 + std::abs(trig)));
    }
}

TEST_CASE("v_b is covariant under translation by half the period")
{
    std::array<long double, kParamVars> h{0.5L, 0.7L, 0.6L, 0.9L, 0.4L, 1.3L};
    std::array<long double, kParamVars> swapped = h;
    std::swap(swapped[kGa], swapped[kGb]);
    std::swap(swapped[kGc], swapped[kGd]);
    for (long double x : {0.3L, 1.1L, 2.5L}) {
        const Cx w = std::polar(1.0L, x);
        CHECK(std::abs(vb(-w, h) - vb(w, swapped)) < 1e-12L);
    }
    std::array<long double, kParamVars> trivial{0.5L, 1, 1, 1, 1, 1};
    CHECK(std::abs(vb(Cx(0.3L, 0.8L), trivial) - 1.0L) < 1e-15L);
}

TEST_CASE("the first operator agrees with its term-by-term definition")
{
    const NumericPoint pt;
    const auto h = pt.half_values();
    std::mt19937 rng(3);
    std::uniform_real_distribution<long double> ang(0.2L, 3.0L);
    for (const Weight& lam : {Weight{1}, Weight{3}, Weight{1, 0}, Weight{1, 1}, Weight{2, 1}}) {
        const int n = static_cast<int>(lam.size());
        const LaurentPoly m = monomial_symmetric(lam, Group::Hyperoctahedral);
        const NumPoly image = to_numeric(apply_operator(op(OpKind::Dr, n, 1), m), h);
        const NumPoly f = to_numeric(m, h);
        for (int k = 0; k < 5; ++k) {
            std::vector<Cx> z;
            for (int j = 0; j < n; ++j) {
                z.push_back(std::polar(1.05L, ang(rng)));
            }
            const Cx a = eval_laurent(image, z);
            const Cx b = d1_direct(f, z, h);
            CHECK_MESSAGE(std::abs(a - b) < 1e-9L * (1 + std::abs(b)), weight_to_string(lam));
        }
    }
}

TEST_CASE("constants are annihilated")
{
    for (int n = 1; n <= 3; ++n) {
        for (int r = 1; r <= n; ++r) {
            CHECK(apply_operator(op(OpKind::Dr, n, r), LaurentPoly::constant(n, ParamRat(1))).is_zero());
        }
        const auto m = operator_matrix(op(OpKind::Dr, n, 1), Weight(static_cast<std::size_t>(n), 0));
        REQUIRE(m.basis.size() == 1);
        CHECK(m.entry[0][0].is_zero());
    }
}

TEST_CASE("one variable: diagonal entry and single off-diagonal entry")
{
    const auto m = operator_matrix(op(OpKind::Dr, 1, 1), {1});
    REQUIRE(m.basis.size() == 2);
    CHECK(m.entry[1][1] == eigenvalue_Ern(1, 1, {1}));
    // 2 (ch(q u) - ch(u)) with u the product of the four half parameters.
    const ParamRat u = parse_param_rat("ga*gb*gc*gd");
    const ParamRat q = parse_param_rat("q");
    CHECK(m.entry[1][1] == ch(q * u) * ParamRat(2) - ch(u) * ParamRat(2));
    CHECK_FALSE(m.entry[0][1].is_zero());
    CHECK(m.entry[1][0].is_zero());
}

TEST_CASE("both operator forms agree and the operators commute")
{
    for (int r = 1; r <= 2; ++r) {
        const auto a = operator_matrix(op(OpKind::Dr, 2, r), {2, 1});
        const auto b = operator_matrix(op(OpKind::Dr1, 2, r), {2, 1});
        for (std::size_t i = 0; i < a.basis.size(); ++i) {
            for (std::size_t j = 0; j < a.basis.size(); ++j) {
                CHECK(a.entry[i][j] == b.entry[i][j]);
            }
        }
    }
    CHECK(commutator_on_basis(op(OpKind::Dr, 2, 1), op(OpKind::Dr, 2, 2), {1, 1}).is_zero());
    CHECK(commutator_on_basis(op(OpKind::AType, 3, 1), op(OpKind::AType, 3, 2), {1, 1, 0}).is_zero());
    CHECK(commutator_on_basis(op(OpKind::Dr, 2, 1), op(OpKind::Dr, 2, 1), {2, 0}).is_zero());
}

TEST_CASE("decoupling at g = 0 for two variables")
{
    ParamSubst s{};
    s[kTh] = ParamRat(1);
    const LaurentPoly m = monomial_symmetric({1, 1}, Group::Hyperoctahedral);
    const LaurentPoly d1 = apply_operator(op(OpKind::Dr, 2, 1, s), m);
    const LaurentPoly d2 = apply_operator(op(OpKind::Dr, 2, 2, s), m);
    // m_(1,1) = f(z_1) f(z_2) with f = z + 1/z, and at g = 0 D_2 = D_1(x_1) D_1(x_2).
    OperatorSpec one = op(OpKind::Dr, 1, 1, s);
    LaurentPoly f(1);
    f.add_term({1}, ParamRat(1));
    f.add_term({-1}, ParamRat(1));
    const LaurentPoly df = apply_operator(one, f);
    auto lift = [](const LaurentPoly& g, int j) {
        LaurentPoly out(2);
        for (const auto& [w, c] : g.terms()) {
            Weight v{0, 0};
            v[static_cast<std::size_t>(j)] = w[0];
            out.add_term(v, c);
        }
        return out;
    };
    CHECK(d2 == lift(df, 0) * lift(df, 1));
    CHECK(d1 == lift(df, 0) * lift(f, 1) + lift(f, 0) * lift(df, 1));
}

TEST_CASE("the differential operator is triangular with the Jacobi spectrum")
{
    const auto m = operator_matrix(op(OpKind::JacobiD10, 2, 1), {2, 1});
    for (std::size_t i = 0; i < m.basis.size(); ++i) {
        CHECK(m.entry[i][i] == eigenvalue_jacobi(1, 2, m.basis[i]));
        for (std::size_t j = 0; j < m.basis.size(); ++j) {
            if (!m.entry[i][j].is_zero()) {
                CHECK(dominance_leq(m.basis[i], m.basis[j]));
            }
        }
    }
}

TEST_CASE("operator specifications are validated")
{
    CHECK_THROWS_AS(op(OpKind::Dr, 2, 3).validate(), ContractViolation);
    CHECK(parse_op_kind("Dn_plus") == OpKind::DnPlus);
    CHECK_THROWS_AS(parse_op_kind("Dx"), ParseError);
    LaurentPoly g(2);
    g.add_term({1, 0}, ParamRat(1));
    CHECK_THROWS_AS(apply_operator(op(OpKind::Dr, 2, 1), g), NotInvariant);
}
