// Copyright (c) 2026 The qpoly authors
// Use of this source code is governed by the MIT license that can be found in the LICENSE file.

#include "qpoly/errors.hpp"
#include "qpoly/families.hpp"
#include "qpoly/operator_apply.hpp"
#include "qpoly/spectra.hpp"

#include <doctest.h>

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

ParamRat P(const std::string& s)
{
    return parse_param_rat(s);
}

} // namespace

TEST_CASE("family names round trip")
{
    for (FamilyPair f : all_families()) {
        CHECK(parse_family(to_string(f)) == f);
    }
    CHECK(all_families().size() == 8);
    CHECK(parse_family("Bn:Cn") == FamilyPair::BnCn);
    CHECK_THROWS_AS(parse_family("En:En"), ParseError);
    for (HalfSpin h : {HalfSpin::CSpin, HalfSpin::DnMinus, HalfSpin::DnPlus}) {
        CHECK(parse_half_spin(to_string(h)) == h);
    }
}

TEST_CASE("substitutions")
{
    const ParamSubst bb = family_specialize(FamilyPair::BnBn);
    CHECK(bb[kGb] == ParamRat(1));
    CHECK_FALSE(bb[kGa].has_value());
    const ParamSubst dn = family_specialize(FamilyPair::Dn);
    for (int s : {kGa, kGb, kGc, kGd}) {
        CHECK(dn[s] == ParamRat(1));
    }
    CHECK(family_specialize(FamilyPair::BCnCn)[kGa] == P("ga*gb"));
    CHECK(family_short_is_C(FamilyPair::CnCn));
    CHECK_FALSE(family_short_is_C(FamilyPair::BnBn));
    // At the D_n point v_b collapses to 1, so D_1 on one variable has no constant drift.
    const auto m = operator_matrix(op(OpKind::Dr, 1, 1, dn), {1});
    CHECK(m.entry[0][1].is_zero());
}

TEST_CASE("specialized polynomials stay joint eigenfunctions")
{
    for (FamilyPair f : all_families()) {
        for (const Weight& lam : {Weight{1}, Weight{2}, Weight{1, 1}}) {
            const int n = static_cast<int>(lam.size());
            const OrthoPoly p = family_polynomial(f, n, lam);
            CHECK(p.coeffs.at(lam) == ParamRat(1));
        }
    }
}

TEST_CASE("conjugation by the spin monomial")
{
    CHECK(spin_monomial(2).size() == 4);
    CHECK(spin_monomial(2).half_lattice());
    for (ShortRoot s : {ShortRoot::B, ShortRoot::C}) {
        for (const Weight& lam : {Weight{0, 0}, Weight{1, 0}, Weight{1, 1}}) {
            CHECK(relm_identity(2, lam, s));
        }
        CHECK_FALSE(relm_constant(2, s).is_zero());
    }
}

TEST_CASE("D_n split")
{
    const DnSplit a = dn_split(2, {1, 1}, 1);
    CHECK(a.plus != a.minus);
    const DnSplit b = dn_split(2, {0, 0}, 0);
    CHECK(b.plus == b.minus);
    CHECK(dn_combine(2, {1, 0}, 0) == dn_combine(2, {1, 0}, 0));
}

TEST_CASE("half-spin eigenvalues")
{
    const ParamRat mu = halfspin_eigencheck(HalfSpin::CSpin, 1, {1}, FamilyPair::CnCn);
    CHECK_FALSE(mu.is_zero());
    const ParamRat plus = halfspin_eigencheck(HalfSpin::DnPlus, 2, {1, 0});
    const ParamRat minus = halfspin_eigencheck(HalfSpin::DnMinus, 2, {1, 0});
    CHECK_FALSE(plus.is_zero());
    CHECK_FALSE(minus.is_zero());
    CHECK(square_in_e_algebra(op(OpKind::CSpin, 2, 2, family_specialize(FamilyPair::CnCn)), 2, FamilyPair::CnCn));
}
