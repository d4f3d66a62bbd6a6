// Copyright (c) 2026 The qpoly authors
// Use of this source code is governed by the MIT license that can be found in the LICENSE file.

#include "qpoly/polynomials.hpp"

#include "qpoly/errors.hpp"
#include "qpoly/spectra.hpp"

#include <algorithm>

namespace qpoly {

namespace {

bool has_params(const ParamSubst& s)
{
    return std::any_of(s.begin(), s.end(), [](const auto& x) { return x.has_value(); });
}

ParamRat specialize(const ParamRat& v, const ParamSubst& s)
{
    return has_params(s) ? substitute_params(v, s) : v;
}

} // namespace

LaurentPoly OrthoPoly::to_laurent() const
{
    return from_expansion(coeffs, n, group, half_lattice);
}

std::map<Weight, ParamRat> back_substitute(const OperatorMatrix& m, const Weight& lambda, const ParamRat& eigenvalue)
{
    const auto& basis = m.basis;
    auto top = std::find(basis.begin(), basis.end(), lambda);
    if (top == basis.end()) {
        throw ContractViolation("back_substitute: lambda is not in the basis");
    }
    const std::size_t L = static_cast<std::size_t>(top - basis.begin());
    if (m.entry[L][L] != eigenvalue) {
        throw NotEigenfunction("diagonal entry at " + weight_to_string(lambda) + " differs from the eigenvalue");
    }
    std::vector<ParamRat> c(basis.size(), ParamRat(0));
    c[L] = ParamRat(1);
    for (std::size_t ii = L; ii-- > 0;) {
        ParamRat rhs(0);
        for (std::size_t j = ii + 1; j <= L; ++j) {
            if (!c[j].is_zero() && !m.entry[ii][j].is_zero()) {
                rhs += m.entry[ii][j] * c[j];
            }
        }
        if (rhs.is_zero()) {
            continue;
        }
        const ParamRat gap = eigenvalue - m.entry[ii][ii];
        if (gap.is_zero()) {
            throw ZeroDenominator("eigenvalue collision between " + weight_to_string(lambda) + " and " +
                                  weight_to_string(basis[ii]));
        }
        c[ii] = rhs / gap;
    }
    std::map<Weight, ParamRat> out;
    for (std::size_t i = 0; i <= L; ++i) {
        if (!c[i].is_zero()) {
            out.emplace(basis[i], c[i]);
        }
    }
    return out;
}

std::optional<Weight> eigen_defect(const OperatorSpec& spec, const OrthoPoly& p, const ParamRat& eigenvalue)
{
    const OperatorMatrix m = operator_matrix(spec, p.lambda);
    for (std::size_t i = 0; i < m.basis.size(); ++i) {
        ParamRat lhs(0);
        for (std::size_t j = 0; j < m.basis.size(); ++j) {
            auto it = p.coeffs.find(m.basis[j]);
            if (it != p.coeffs.end() && !m.entry[i][j].is_zero()) {
                lhs += m.entry[i][j] * it->second;
            }
        }
        auto it = p.coeffs.find(m.basis[i]);
        const ParamRat rhs = it == p.coeffs.end() ? ParamRat(0) : eigenvalue * it->second;
        if (lhs != rhs) {
            return m.basis[i];
        }
    }
    return std::nullopt;
}

OrthoPoly koornwinder_triangular(int n, const Weight& lambda, const ParamSubst& params, bool check_all)
{
    if (static_cast<int>(lambda.size()) != n || !is_dominant(lambda, Group::Hyperoctahedral)) {
        throw ContractViolation("koornwinder_triangular needs a dominant weight of length n");
    }
    OperatorSpec spec;
    spec.kind = OpKind::Dr;
    spec.n = n;
    spec.r = 1;
    spec.params = params;
    OrthoPoly p;
    p.n = n;
    p.lambda = lambda;
    const OperatorMatrix m = operator_matrix(spec, lambda);
    p.coeffs = back_substitute(m, lambda, specialize(eigenvalue_Ern(1, n, lambda), params));
    if (check_all) {
        for (int r = 2; r <= n; ++r) {
            spec.r = r;
            auto bad = eigen_defect(spec, p, specialize(eigenvalue_Ern(r, n, lambda), params));
            if (bad) {
                throw NotEigenfunction("D_" + std::to_string(r) + " eigen-equation fails at " + weight_to_string(*bad));
            }
        }
    }
    return p;
}

OrthoPoly jacobi_triangular(int n, const Weight& lambda)
{
    OperatorSpec spec;
    spec.kind = OpKind::JacobiD10;
    spec.n = n;
    spec.r = 1;
    OrthoPoly p;
    p.n = n;
    p.lambda = lambda;
    p.vars = VarSet::Jacobi;
    p.coeffs = back_substitute(operator_matrix(spec, lambda), lambda, eigenvalue_jacobi(1, n, lambda));
    return p;
}

std::map<Weight, Rat> specialize_numeric(const OrthoPoly& p, const NumericPoint& pt)
{
    const ParamRat top = eigenvalue_Ern(1, p.n, p.lambda);
    std::map<Weight, Rat> out;
    for (const auto& [nu, c] : p.coeffs) {
        if (nu != p.lambda) {
            const ParamRat gap = top - eigenvalue_Ern(1, p.n, nu);
            if (vanishes_at(gap.num(), pt)) {
                throw ZeroDenominator("eigenvalue collision between " + weight_to_string(p.lambda) + " and " +
                                      weight_to_string(nu) + " at " + pt.to_string());
            }
        }
        out.emplace(nu, eval_rational(c, pt));
    }
    return out;
}

std::map<Weight, Rat> qh1_limit(const OrthoPoly& p, int g, int g0, int g1, int g0p, int g1p)
{
    ParamSubst s{};
    s[kTh] = ParamRat(ParamPoly::qh_pow(g));
    s[kGa] = ParamRat(ParamPoly::qh_pow(g0));
    s[kGb] = ParamRat(ParamPoly::qh_pow(g1));
    s[kGc] = ParamRat(ParamPoly::qh_pow(g0p));
    s[kGd] = ParamRat(ParamPoly::qh_pow(g1p));
    std::array<Rat, kParamVars> ones;
    ones.fill(Rat(1));
    std::map<Weight, Rat> out;
    for (const auto& [nu, c] : p.coeffs) {
        out.emplace(nu, substitute_params(c, s).evaluate(ones));
    }
    return out;
}

std::map<Weight, Rat> specialize_jacobi(const OrthoPoly& p, const Rat& g, const Rat& tg0, const Rat& tg1)
{
    ParamSubst s{};
    s[kG] = ParamRat(g);
    s[kTg0] = ParamRat(tg0);
    s[kTg1] = ParamRat(tg1);
    std::map<Weight, Rat> out;
    for (const auto& [nu, c] : p.coeffs) {
        ParamRat v = substitute_params(c, s);
        if (!v.is_constant()) {
            throw ContractViolation("Jacobi specialization left free parameters");
        }
        out.emplace(nu, v.constant_value());
    }
    return out;
}

OrthoPoly macdonald_An_extract(const OrthoPoly& p)
{
    OrthoPoly a;
    a.n = p.n;
    a.lambda = p.lambda;
    a.group = Group::Permutations;
    a.vars = p.vars;
    const int size = weight_size(p.lambda);
    for (const auto& [nu, c] : p.coeffs) {
        if (weight_size(nu) == size) {
            a.coeffs.emplace(nu, c);
        }
    }
    return a;
}

} // namespace qpoly
