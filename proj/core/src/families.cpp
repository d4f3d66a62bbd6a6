// Copyright (c) 2026 The qpoly authors
// Use of this source code is governed by the MIT license that can be found in the LICENSE file.

#include "qpoly/families.hpp"

#include "qpoly/errors.hpp"
#include "qpoly/spectra.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace qpoly {

namespace {

const std::array<std::pair<FamilyPair, const char*>, 8> kFamilyNames{{
    {FamilyPair::BnBn, "Bn:Bn"},
    {FamilyPair::BnCn, "Bn:Cn"},
    {FamilyPair::CnBn, "Cn:Bn"},
    {FamilyPair::CnCn, "Cn:Cn"},
    {FamilyPair::BCnBn, "BCn:Bn"},
    {FamilyPair::BCnCn, "BCn:Cn"},
    {FamilyPair::Dn, "Dn"},
    {FamilyPair::An, "An"},
}};

ParamRat var(int slot)
{
    return ParamRat(ParamPoly::var(slot));
}

bool has_params(const ParamSubst& s)
{
    return std::any_of(s.begin(), s.end(), [](const auto& x) { return x.has_value(); });
}

ParamRat specialize(const ParamRat& v, const ParamSubst& s)
{
    return has_params(s) ? substitute_params(v, s) : v;
}

OperatorSpec d1_spec(int n, const ParamSubst& params)
{
    OperatorSpec spec;
    spec.kind = OpKind::Dr;
    spec.n = n;
    spec.r = 1;
    spec.params = params;
    return spec;
}

ParamSubst target_params(ShortRoot s, bool dn)
{
    return family_specialize(dn ? FamilyPair::Dn : (s == ShortRoot::B ? FamilyPair::BnBn : FamilyPair::BnCn));
}

ParamSubst antiperiodic_params(ShortRoot s, bool dn)
{
    ParamSubst p = antiperiodic_params(s);
    if (dn) {
        p[kGa] = ParamRat(1);
        p[kGc] = ParamRat(1);
    }
    return p;
}

ParamRat relm_constant(int n, ShortRoot s, bool dn)
{
    const ParamRat qh = var(kQh);
    const ParamRat th = var(kTh);
    const ParamRat ga = dn ? ParamRat(1) : var(kGa);
    const ParamRat gpow = s == ShortRoot::B ? ga : ga * ga;
    ParamRat sum(0);
    for (int j = 1; j <= n; ++j) {
        const ParamRat u = th.pow(2 * (n - j)) * gpow;
        sum += ch(u * qh) - ch(u);
    }
    return ParamRat(2) * sum;
}

LaurentPoly flip_last(const LaurentPoly& f)
{
    LaurentPoly out(f.n(), f.half_lattice());
    for (const auto& [w, c] : f.terms()) {
        Weight v = w;
        v.back() = -v.back();
        out.add_term(v, c);
    }
    return out;
}

// Row reduction of rows [a_0 .. a_k | b]; returns the solution when the
// system is consistent and has full column rank, std::nullopt otherwise.
std::optional<std::vector<ParamRat>> solve_overdetermined(std::vector<std::vector<ParamRat>> rows)
{
    if (rows.empty()) {
        return std::nullopt;
    }
    const std::size_t cols = rows.front().size() - 1;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols; ++c) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][c].is_zero()) {
            ++piv;
        }
        if (piv == rows.size()) {
            return std::nullopt;
        }
        std::swap(rows[rank], rows[piv]);
        const ParamRat inv = ParamRat(1) / rows[rank][c];
        for (auto& v : rows[rank]) {
            v *= inv;
        }
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][c].is_zero()) {
                continue;
            }
            const ParamRat f = rows[i][c];
            for (std::size_t k = c; k <= cols; ++k) {
                rows[i][k] -= f * rows[rank][k];
            }
        }
        ++rank;
    }
    for (std::size_t i = rank; i < rows.size(); ++i) {
        if (!rows[i][cols].is_zero()) {
            return std::nullopt;
        }
    }
    std::vector<ParamRat> x;
    for (std::size_t c = 0; c < cols; ++c) {
        x.push_back(rows[c][cols]);
    }
    return x;
}

} // namespace

std::string to_string(FamilyPair f)
{
    for (const auto& [k, name] : kFamilyNames) {
        if (k == f) {
            return name;
        }
    }
    return "?";
}

FamilyPair parse_family(const std::string& s)
{
    for (const auto& [k, name] : kFamilyNames) {
        if (s == name) {
            return k;
        }
    }
    throw ParseError("unknown family '" + s + "'");
}

std::vector<FamilyPair> all_families()
{
    std::vector<FamilyPair> out;
    for (const auto& entry : kFamilyNames) {
        out.push_back(entry.first);
    }
    return out;
}

ParamSubst family_specialize(FamilyPair f)
{
    const ParamRat one(1);
    const ParamRat ga = var(kGa);
    const ParamRat gb = var(kGb);
    ParamSubst s{};
    switch (f) {
    case FamilyPair::BnBn:
        s[kGb] = one;
        s[kGc] = one;
        s[kGd] = one;
        break;
    case FamilyPair::CnBn:
        s[kGa] = gb;
        s[kGc] = one;
        s[kGd] = one;
        break;
    case FamilyPair::BCnBn:
        s[kGa] = ga * gb;
        s[kGc] = one;
        s[kGd] = one;
        break;
    case FamilyPair::BnCn:
        s[kGb] = one;
        s[kGc] = ga;
        s[kGd] = one;
        break;
    case FamilyPair::CnCn:
        s[kGa] = gb;
        s[kGc] = gb;
        s[kGd] = gb;
        break;
    case FamilyPair::BCnCn:
        s[kGa] = ga * gb;
        s[kGc] = ga * gb;
        s[kGd] = gb;
        break;
    case FamilyPair::Dn:
        s[kGa] = one;
        s[kGb] = one;
        s[kGc] = one;
        s[kGd] = one;
        break;
    case FamilyPair::An:
        break;
    }
    return s;
}

bool family_short_is_C(FamilyPair f)
{
    return f == FamilyPair::BnCn || f == FamilyPair::CnCn || f == FamilyPair::BCnCn;
}

OrthoPoly family_polynomial(FamilyPair f, int n, const Weight& lambda)
{
    if (f != FamilyPair::An) {
        return koornwinder_triangular(n, lambda, family_specialize(f), true);
    }
    OrthoPoly a = macdonald_An_extract(koornwinder_triangular(n, lambda, {}, false));
    for (int r = 1; r < n; ++r) {
        OperatorSpec spec;
        spec.kind = OpKind::ATypeCentered;
        spec.n = n;
        spec.r = r;
        if (auto bad = eigen_defect(spec, a, eigenvalue_An(r, n, lambda))) {
            throw NotEigenfunction("A-type eigen-equation for r = " + std::to_string(r) + " fails at " +
                                   weight_to_string(*bad));
        }
    }
    return a;
}

ParamSubst antiperiodic_params(ShortRoot s)
{
    ParamSubst p{};
    p[kGb] = var(kQh);
    p[kGc] = s == ShortRoot::B ? ParamRat(1) : var(kGa);
    p[kGd] = ParamRat(1);
    return p;
}

ParamRat relm_constant(int n, ShortRoot s)
{
    return relm_constant(n, s, false);
}

LaurentPoly spin_monomial(int n)
{
    return monomial_symmetric(Weight(static_cast<std::size_t>(n), 1), Group::Hyperoctahedral, true);
}

LaurentPoly bn_antiperiodic(int n, const Weight& lambda, ShortRoot s, bool dn)
{
    const ParamSubst pc = antiperiodic_params(s, dn);
    const OrthoPoly p = koornwinder_triangular(n, lambda, pc, true);
    const LaurentPoly f = spin_monomial(n) * p.to_laurent().to_half_lattice();
    const LaurentPoly image = apply_operator(d1_spec(n, target_params(s, dn)), f);
    const ParamRat e = specialize(eigenvalue_Ern(1, n, lambda), pc) + relm_constant(n, s, dn);
    if (image != f * e) {
        throw NotEigenfunction("spin-shifted polynomial at " + weight_to_string(lambda) +
                               " is not an eigenfunction of the specialized D_1");
    }
    return f;
}

bool relm_identity(int n, const Weight& lambda, ShortRoot s)
{
    const LaurentPoly m = monomial_symmetric(lambda, Group::Hyperoctahedral);
    const LaurentPoly spin = spin_monomial(n);
    const LaurentPoly lhs = apply_operator(d1_spec(n, target_params(s, false)), spin * m.to_half_lattice());
    const LaurentPoly inner = apply_operator(d1_spec(n, antiperiodic_params(s)), m) + m * relm_constant(n, s);
    return lhs == spin * inner.to_half_lattice();
}

LaurentPoly dn_combine(int n, const Weight& lambda, int delta)
{
    if (delta == 0) {
        return koornwinder_triangular(n, lambda, family_specialize(FamilyPair::Dn), true).to_laurent();
    }
    if (delta == 1) {
        return bn_antiperiodic(n, lambda, ShortRoot::B, true);
    }
    throw ContractViolation("dn_combine: delta must be 0 or 1");
}

DnSplit dn_split(int n, const Weight& lambda, int delta)
{
    const LaurentPoly p = dn_combine(n, lambda, delta);
    OperatorSpec plus_op;
    plus_op.kind = OpKind::DnPlus;
    plus_op.n = n;
    plus_op.r = n;
    plus_op.params = family_specialize(FamilyPair::Dn);
    OperatorSpec minus_op = plus_op;
    minus_op.kind = OpKind::DnMinus;

    Weight top = lambda;
    if (delta == 1) {
        for (int& v : top) {
            v = 2 * v + 1;
        }
    }
    const LaurentPoly a = apply_operator_exact(plus_op, p);
    const LaurentPoly b = apply_operator_exact(minus_op, p);
    const ParamRat sum = (a + b).coeff(top);
    if (a + b != p * sum) {
        throw NotEigenfunction("the even combination at " + weight_to_string(lambda) +
                               " is not an eigenfunction of the full half-spin sum");
    }
    const LaurentPoly diff = a - b;
    const ParamRat gap = diff.coeff(top);
    DnSplit out;
    if (gap.is_zero()) {
        if (!diff.is_zero()) {
            throw NotEigenfunction("half-spin operators disagree on an unsplittable combination at " +
                                   weight_to_string(lambda));
        }
        out.plus = p;
        out.minus = p;
        out.alpha = sum / ParamRat(2);
        out.beta = out.alpha;
        return out;
    }
    const ParamRat half = ParamRat(Rat(1, 2));
    out.plus = (p + diff * (ParamRat(1) / gap)) * half;
    out.minus = p - out.plus;
    out.alpha = (sum + gap) * half;
    out.beta = (sum - gap) * half;
    if (apply_operator_exact(plus_op, out.plus) != out.plus * out.alpha ||
        apply_operator_exact(minus_op, out.plus) != out.plus * out.beta) {
        throw NotEigenfunction("separated polynomial at " + weight_to_string(lambda) + " fails its eigen-equations");
    }
    if (flip_last(out.plus) != out.minus) {
        throw NotEigenfunction("separated polynomials at " + weight_to_string(lambda) + " are not sign-flip partners");
    }
    return out;
}

std::string to_string(HalfSpin h)
{
    switch (h) {
    case HalfSpin::CSpin:
        return "C_spin";
    case HalfSpin::DnMinus:
        return "Dn_minus";
    case HalfSpin::DnPlus:
        return "Dn_plus";
    }
    return "?";
}

HalfSpin parse_half_spin(const std::string& s)
{
    for (HalfSpin h : {HalfSpin::CSpin, HalfSpin::DnMinus, HalfSpin::DnPlus}) {
        if (to_string(h) == s) {
            return h;
        }
    }
    throw ParseError("unknown half-spin operator '" + s + "'");
}

bool square_in_e_algebra(const OperatorSpec& sum_op, int n, FamilyPair pair)
{
    const ParamSubst subst = family_specialize(pair);
    OperatorSpec op = sum_op;
    op.params = subst;
    Weight top(static_cast<std::size_t>(n), 0);
    top[0] = n + 1;
    const OperatorMatrix m = operator_matrix(op, top);

    std::vector<ParamRat> squares;
    std::vector<std::vector<ParamRat>> xs;
    std::vector<std::vector<ParamRat>> rows;
    for (std::size_t i = 0; i < m.basis.size(); ++i) {
        const ParamRat mu = m.entry[i][i];
        std::vector<ParamRat> x;
        for (const ParamRat& v : ch_values(n, m.basis[i])) {
            x.push_back(specialize(v, subst));
        }
        std::vector<ParamRat> row;
        for (int k = 0; k <= n; ++k) {
            row.push_back(elementary(k, x));
        }
        row.push_back(mu * mu);
        rows.push_back(std::move(row));
        squares.push_back(mu * mu);
        xs.push_back(std::move(x));
    }
    if (rows.size() <= static_cast<std::size_t>(n + 1)) {
        throw ContractViolation("square_in_e_algebra: not enough weights for a checked fit");
    }
    const auto c = solve_overdetermined(rows);
    if (!c) {
        return false;
    }
    MPoly S;
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        int k = 0;
        for (int j = 0; j < n; ++j) {
            if (mask & (1U << j)) {
                e[static_cast<std::size_t>(j)] = 1;
                ++k;
            }
        }
        if (!(*c)[static_cast<std::size_t>(k)].is_zero()) {
            S = mpoly_add(S, MPoly{{e, (*c)[static_cast<std::size_t>(k)]}});
        }
    }
    const MPoly lifted = hc_lift(S, n, subst);
    for (std::size_t i = 0; i < m.basis.size(); ++i) {
        std::vector<ParamRat> gens;
        for (const ParamRat& g : generator_values(n, m.basis[i])) {
            gens.push_back(specialize(g, subst));
        }
        if (mpoly_eval(lifted, gens) != squares[i]) {
            return false;
        }
    }
    return true;
}

ParamRat halfspin_eigencheck(HalfSpin which, int n, const Weight& lambda, FamilyPair pair)
{
    OperatorSpec sum_op;
    sum_op.kind = OpKind::CSpin;
    sum_op.n = n;
    sum_op.r = n;
    if (which == HalfSpin::CSpin) {
        if (!family_short_is_C(pair)) {
            throw ContractViolation("C_spin needs a family with short roots of type C");
        }
        const OrthoPoly p = family_polynomial(pair, n, lambda);
        OperatorSpec op = sum_op;
        op.params = family_specialize(pair);
        const OperatorMatrix m = operator_matrix(op, lambda);
        const auto at = std::find(m.basis.begin(), m.basis.end(), lambda) - m.basis.begin();
        const ParamRat mu = m.entry[static_cast<std::size_t>(at)][static_cast<std::size_t>(at)];
        if (auto bad = eigen_defect(op, p, mu)) {
            throw NotEigenfunction("C_spin eigen-equation fails at " + weight_to_string(*bad));
        }
        if (!square_in_e_algebra(sum_op, n, pair)) {
            throw NotEigenfunction("squared C_spin eigenvalue is not in the algebra of the D_r spectra");
        }
        return mu;
    }
    const DnSplit split = dn_split(n, lambda, 0);
    if (!square_in_e_algebra(sum_op, n, FamilyPair::Dn)) {
        throw NotEigenfunction("squared half-spin eigenvalue sum is not in the algebra of the D_r spectra");
    }
    return which == HalfSpin::DnPlus ? split.alpha : split.beta;
}

} // namespace qpoly
