// Copyright (c) 2026 The qpoly authors
// Use of this source code is governed by the MIT license that can be found in the LICENSE file.

#include "qpoly/verify.hpp"

#include "qpoly/errors.hpp"
#include "qpoly/families.hpp"
#include "qpoly/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <sstream>

namespace qpoly {

namespace {

std::string tag(int n)
{
    return "n" + std::to_string(n);
}

std::string wtag(const Weight& w)
{
    return weight_to_string(w);
}

std::string fmt(long double x)
{
    std::ostringstream s;
    s.precision(3);
    s << std::scientific << static_cast<double>(x);
    return s.str();
}

std::vector<int> pick(const SuiteOptions& o, std::vector<int> fallback)
{
    return o.ns.empty() ? fallback : o.ns;
}

OperatorSpec op(OpKind k, int n, int r, ParamSubst params = {})
{
    OperatorSpec s;
    s.kind = k;
    s.n = n;
    s.r = r;
    s.params = std::move(params);
    return s;
}

bool same_matrix(const std::vector<std::vector<ParamRat>>& a, const std::vector<std::vector<ParamRat>>& b)
{
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (a[i][j] != b[i][j]) {
                return false;
            }
        }
    }
    return true;
}

// Runs f and turns a library error into a failed check.
void guarded(std::vector<CheckResult>& out, const std::string& id, const std::string& claim,
             const std::function<std::pair<bool, std::string>()>& f)
{
    CheckResult c{id, false, claim, ""};
    try {
        auto [ok, detail] = f();
        c.pass = ok;
        c.detail = detail;
    } catch (const Error& e) {
        c.detail = std::string("error: ") + e.what();
    }
    out.push_back(std::move(c));
}

LaurentPoly embed(const LaurentPoly& one_var, int n, int j)
{
    LaurentPoly out(n);
    for (const auto& [w, c] : one_var.terms()) {
        Weight v(static_cast<std::size_t>(n), 0);
        v[static_cast<std::size_t>(j)] = w[0];
        out.add_term(v, c);
    }
    return out;
}

ParamSubst g_zero()
{
    ParamSubst s{};
    s[kTh] = ParamRat(1);
    return s;
}

std::vector<Weight> upto(int n, int d)
{
    return weights_below(size_cover(n, d));
}

NumPoly numeric_poly(const std::map<Weight, long double>& coeffs, Group g)
{
    NumPoly p;
    for (const auto& [w, c] : coeffs) {
        for (const Weight& a : worbit(w, g)) {
            p[a] += c;
        }
    }
    return p;
}

long double to_ld(const Rat& r)
{
    return std::strtold(r.get_num().get_str().c_str(), nullptr) / std::strtold(r.get_den().get_str().c_str(), nullptr);
}

WeightFunctionSpec weight_spec(const SuiteOptions& o)
{
    WeightFunctionSpec s;
    s.M = o.trunc;
    s.point = o.point;
    s.grid = o.grid;
    return s;
}

// ---------------------------------------------------------------------------

std::vector<CheckResult> suite_triangularity(const SuiteOptions& o)
{
    std::vector<CheckResult> out;
    for (int n : pick(o, {1, 2})) {
        const Weight top = size_cover(n, o.maxdeg);
        for (int r = 1; r <= n; ++r) {
            OperatorMatrix m;
            guarded(out, "triangularity/" + tag(n) + "/r" + std::to_string(r) + "/" + wtag(top),
                    "D_r maps the span of m_mu, mu <= lambda, into itself", [&] {
                        m = operator_matrix(op(OpKind::Dr, n, r), top);
                        return std::pair{is_triangular(m), std::to_string(m.basis.size()) + " basis elements"};
                    });
            guarded(out, "triangularity/forms/" + tag(n) + "/r" + std::to_string(r),
                    "the (T - 1) form and the chain-sum form of D_r agree", [&] {
                        const OperatorMatrix m1 = operator_matrix(op(OpKind::Dr1, n, r), top);
                        return std::pair{same_matrix(m.entry, m1.entry), std::string("exact")};
                    });
        }
    }
    return out;
}

std::vector<CheckResult> suite_eigenvalues(const SuiteOptions& o)
{
    std::vector<CheckResult> out;
    for (int n : pick(o, {1, 2})) {
        const Weight top = size_cover(n, o.maxdeg);
        for (int r = 1; r <= n; ++r) {
            guarded(out, "eigenvalues/" + tag(n) + "/r" + std::to_string(r),
                    "diagonal entries equal 2^r E_{r,n}(ch(lambda + rho); ch(rho_r), ..., ch(rho_n))", [&] {
                        const OperatorMatrix m = operator_matrix(op(OpKind::Dr, n, r), top);
                        for (std::size_t i = 0; i < m.basis.size(); ++i) {
                            if (m.entry[i][i] != eigenvalue_Ern(r, n, m.basis[i])) {
                                return std::pair{false, "mismatch at " + wtag(m.basis[i])};
                            }
                            if (eigenvalue_Ern_recursive(r, n, m.basis[i]) != m.entry[i][i]) {
                                return std::pair{false, "recursion mismatch at " + wtag(m.basis[i])};
                            }
                        }
                        return std::pair{true, std::to_string(m.basis.size()) + " weights"};
                    });
        }
    }
    return out;
}

std::vector<CheckResult> suite_commute(const SuiteOptions& o)
{
    std::vector<CheckResult> out;
    for (int n : pick(o, {1, 2})) {
        const Weight top = size_cover(n, o.maxdeg);
        std::vector<OperatorMatrix> ms;
        for (int r = 1; r <= n; ++r) {
            ms.push_back(operator_matrix(op(OpKind::Dr, n, r), top));
        }
        for (int r = 1; r <= n; ++r) {
            for (int s = r + 1; s <= n; ++s) {
                guarded(out, "commute/" + tag(n) + "/D" + std::to_string(r) + "D" + std::to_string(s),
                        "the operators D_1, ..., D_n mutually commute", [&] {
                            const auto& a = ms[static_cast<std::size_t>(r - 1)];
                            const auto& b = ms[static_cast<std::size_t>(s - 1)];
                            return std::pair{same_matrix(matrix_product(a, b), matrix_product(b, a)),
                                             "on " + std::to_string(a.basis.size()) + " monomials"};
                        });
            }
        }
        if (n >= 2) {
            guarded(out, "commute/" + tag(n) + "/direct", "the commutator of D_1 and D_2 annihilates m_lambda", [&] {
                return std::pair{commutator_on_basis(op(OpKind::Dr, n, 1), op(OpKind::Dr, n, 2), top).is_zero(),
                                 "at " + wtag(top)};
            });
        }
        for (int d = 0; d <= o.maxdeg; ++d) {
            const Weight atop = size_cover(n, d);
            for (int r = 1; r <= n; ++r) {
                for (int s = r + 1; s <= n; ++s) {
                    guarded(out,
                            "commute/" + tag(n) + "/A/deg" + std::to_string(d) + "/D" + std::to_string(r) + "D" +
                                std::to_string(s),
                            "the A-type operators mutually commute", [&] {
                                const auto a = operator_matrix(op(OpKind::AType, n, r), atop);
                                const auto b = operator_matrix(op(OpKind::AType, n, s), atop);
                                return std::pair{same_matrix(matrix_product(a, b), matrix_product(b, a)),
                                                 "degree " + std::to_string(d)};
                            });
                }
            }
        }
    }
    return out;
}

std::vector<CheckResult> suite_symmetry(const SuiteOptions& o)
{
    std::vector<CheckResult> out;
    for (int n : pick(o, {2})) {
        const Weight top = size_cover(n, o.maxdeg);
        const Quadrature quad(n, weight_spec(o));
        const auto basis = upto(n, o.maxdeg);
        const std::size_t N = basis.size();
        std::vector<std::vector<long double>> G(N, std::vector<long double>(N));
        for (std::size_t i = 0; i < N; ++i) {
            for (std::size_t j = 0; j < N; ++j) {
                G[i][j] = quad.inner(monomial_numeric(basis[i], Group::Hyperoctahedral),
                                     monomial_numeric(basis[j], Group::Hyperoctahedral));
            }
        }
        for (int r = 1; r <= n; ++r) {
            guarded(out, "symmetry/" + tag(n) + "/r" + std::to_string(r),
                    "D_r is symmetric with respect to the truncated weight (tol(M) propagated through the matrix entries)", [&] {
                        const auto M = numeric_matrix(operator_matrix(op(OpKind::Dr, n, r), top), o.point);
                        long double worst = 0;
                        for (std::size_t l = 0; l < N; ++l) {
                            for (std::size_t m = 0; m < N; ++m) {
                                long double lhs = 0;
                                long double rhs = 0;
                                long double tol = 0;
                                for (std::size_t v = 0; v < N; ++v) {
                                    lhs += M[v][l] * G[v][m];
                                    rhs += G[l][v] * M[v][m];
                                    const int sv = weight_size(basis[v]);
                                    tol += std::fabs(M[v][l]) *
                                               truncation_tolerance(o.point, o.trunc, sv, weight_size(basis[m])) +
                                           std::fabs(M[v][m]) *
                                               truncation_tolerance(o.point, o.trunc, weight_size(basis[l]), sv);
                                }
                                worst = std::max(worst, std::fabs(lhs - rhs) / tol);
                            }
                        }
                        return std::pair{worst <= 1, "max defect/tol " + fmt(worst)};
                    });
        }
    }
    return out;
}

std::vector<CheckResult> suite_orthogonality(const SuiteOptions& o)
{
    std::vector<CheckResult> out;
    for (int n : pick(o, {1, 2})) {
        const Quadrature quad(n, weight_spec(o));
        const auto basis = upto(n, o.maxdeg);
        std::map<Weight, std::map<Weight, long double>> exact;
        for (const Weight& l : basis) {
            guarded(out, "orthogonality/" + tag(n) + "/gs/" + wtag(l),
                    "eigenproblem and Gram-Schmidt give the same polynomial", [&] {
                        std::map<Weight, long double> e;
                        for (const auto& [w, c] : specialize_numeric(koornwinder_triangular(n, l), o.point)) {
                            e[w] = to_ld(c);
                        }
                        exact[l] = e;
                        const auto below = weights_below(l);
                        const auto gs1 = gram_schmidt_oracle(l, linear_refinement(below), quad);
                        const auto gs2 = gram_schmidt_oracle(l, size_then_lex(below), quad);
                        long double worst = 0;
                        for (const Weight& v : below) {
                            const long double tol =
                                truncation_tolerance(o.point, o.trunc, weight_size(l), weight_size(v));
                            const long double ev = e.count(v) ? e.at(v) : 0.0L;
                            const long double g1 = gs1.count(v) ? gs1.at(v) : 0.0L;
                            const long double g2 = gs2.count(v) ? gs2.at(v) : 0.0L;
                            worst = std::max({worst, std::fabs(ev - g1) / tol, std::fabs(g1 - g2) / tol});
                        }
                        return std::pair{worst <= 1, "max deviation/tol " + fmt(worst)};
                    });
        }
        for (std::size_t i = 0; i < basis.size(); ++i) {
            for (std::size_t j = i + 1; j < basis.size(); ++j) {
                const Weight& l = basis[i];
                const Weight& m = basis[j];
                if (!exact.count(l) || !exact.count(m)) {
                    continue;
                }
                guarded(out, "orthogonality/" + tag(n) + "/" + wtag(l) + "-" + wtag(m),
                        "Koornwinder polynomials are mutually orthogonal", [&] {
                            const long double ip = quad.inner(numeric_poly(exact[l], Group::Hyperoctahedral),
                                                              numeric_poly(exact[m], Group::Hyperoctahedral));
                            const long double tol =
                                truncation_tolerance(o.point, o.trunc, weight_size(l), weight_size(m));
                            return std::pair{std::fabs(ip) <= tol, "|<p,p'>| = " + fmt(std::fabs(ip))};
                        });
            }
        }
    }
    return out;
}

std::vector<CheckResult> suite_decouple(const SuiteOptions& o)
{
    std::vector<CheckResult> out;
    for (int n : pick(o, {2, 3})) {
        for (const Weight& l : upto(n, o.maxdeg)) {
            for (int r = 1; r <= n; ++r) {
                guarded(out, "decouple/" + tag(n) + "/r" + std::to_string(r) + "/" + wtag(l),
                        "at g = 0, D_r = e_r(D_1(x_1), ..., D_1(x_n))", [&] {
                            const LaurentPoly lhs =
                                apply_operator(op(OpKind::Dr, n, r, g_zero()), monomial_symmetric(l, Group::Hyperoctahedral));
                            return std::pair{lhs == decoupled_image(n, r, l), std::string("exact")};
                        });
            }
        }
    }
    for (int p = 1; p <= 8; ++p) {
        guarded(out, "decouple/cp/p" + std::to_string(p), "c_p = (-1)^p", [&] {
            const Int c = cp_check(p);
            return std::pair{c == (p % 2 == 0 ? 1 : -1), "c_p = " + c.get_str()};
        });
    }
    return out;
}

std::vector<CheckResult> suite_limits(const SuiteOptions& o)
{
    std::vector<CheckResult> out;
    for (int n : pick(o, {1, 2})) {
        for (const Weight& l : upto(n, o.maxdeg)) {
            guarded(out, "limits/" + tag(n) + "/jacobi/" + wtag(l),
                    "the q -> 1 limit of the Koornwinder polynomial is the Jacobi polynomial", [&] {
                        const OrthoPoly k = koornwinder_triangular(n, l);
                        const OrthoPoly j = jacobi_triangular(n, l);
                        int combos = 0;
                        for (int mask = 0; mask < 32; ++mask) {
                            const int g = mask & 1;
                            const int g0 = (mask >> 1) & 1;
                            const int g1 = (mask >> 2) & 1;
                            const int g0p = (mask >> 3) & 1;
                            const int g1p = (mask >> 4) & 1;
                            if (qh1_limit(k, g, g0, g1, g0p, g1p) != specialize_jacobi(j, g, g0 + g0p, g1 + g1p)) {
                                std::ostringstream s;
                                s << "mismatch at (g,g0,g1,g0',g1') = (" << g << "," << g0 << "," << g1 << "," << g0p
                                  << "," << g1p << ")";
                                return std::pair{false, s.str()};
                            }
                            ++combos;
                        }
                        return std::pair{true, std::to_string(combos) + " exponent choices"};
                    });
        }
        guarded(out, "limits/" + tag(n) + "/jacobi-spectrum",
                "the diagonal of the differential operator is the Jacobi spectrum", [&] {
                    const auto m = operator_matrix(op(OpKind::JacobiD10, n, 1), size_cover(n, o.maxdeg));
                    for (std::size_t i = 0; i < m.basis.size(); ++i) {
                        if (m.entry[i][i] != eigenvalue_jacobi(1, n, m.basis[i])) {
                            return std::pair{false, "mismatch at " + wtag(m.basis[i])};
                        }
                    }
                    return std::pair{is_triangular(m), std::string("exact")};
                });
        if (n < 2) {
            continue;
        }
        for (const Weight& l : upto(n, o.maxdeg)) {
            guarded(out, "limits/" + tag(n) + "/An/" + wtag(l),
                    "extracted A-type polynomials are eigenfunctions of the A-type operators", [&] {
                        const OrthoPoly a = family_polynomial(FamilyPair::An, n, l);
                        const LaurentPoly f = a.to_laurent();
                        ParamExp e{};
                        e[kQh] = 2 * weight_size(l) * kQhScale;
                        const LaurentPoly shifted = apply_operator(op(OpKind::AType, n, n), f);
                        return std::pair{shifted == f * ParamRat(ParamPoly::monomial(e)),
                                         std::string("D'_n is the pure translation")};
                    });
        }
    }
    return out;
}

std::vector<CheckResult> suite_families(const SuiteOptions& o)
{
    std::vector<CheckResult> out;
    for (int n : pick(o, {1, 2})) {
        const auto basis = upto(n, o.maxdeg);
        for (FamilyPair f : all_families()) {
            for (const Weight& l : basis) {
                guarded(out, "families/" + tag(n) + "/" + to_string(f) + "/" + wtag(l),
                        "specialized polynomials remain joint eigenfunctions", [&] {
                            family_polynomial(f, n, l);
                            return std::pair{true, std::string("all eigen-equations exact")};
                        });
            }
        }
        for (ShortRoot s : {ShortRoot::B, ShortRoot::C}) {
            const std::string sn = s == ShortRoot::B ? "B" : "C";
            for (const Weight& l : basis) {
                guarded(out, "families/" + tag(n) + "/relm-" + sn + "/" + wtag(l),
                        "conjugation by m_omega shifts D_1 by the additive constant", [&] {
                            return std::pair{relm_identity(n, l, s), std::string("exact")};
                        });
                guarded(out, "families/" + tag(n) + "/antiperiodic-" + sn + "/" + wtag(l),
                        "m_omega p_lambda is an eigenfunction at the (B_n, S) parameters", [&] {
                            bn_antiperiodic(n, l, s);
                            return std::pair{true, std::string("exact")};
                        });
            }
        }
        for (FamilyPair f : {FamilyPair::BnCn, FamilyPair::CnCn, FamilyPair::BCnCn}) {
            for (const Weight& l : basis) {
                guarded(out, "families/" + tag(n) + "/C_spin/" + to_string(f) + "/" + wtag(l),
                        "the half-step operator is diagonal and its square lies in the spectral algebra", [&] {
                            const ParamRat mu = halfspin_eigencheck(HalfSpin::CSpin, n, l, f);
                            return std::pair{true, "mu = " + mu.to_string()};
                        });
            }
        }
        if (n < 2) {
            continue;
        }
        for (const Weight& l : basis) {
            for (int delta : {0, 1}) {
                guarded(out, "families/" + tag(n) + "/Dn-split/d" + std::to_string(delta) + "/" + wtag(l),
                        "even combinations split into D_n polynomials", [&] {
                            const DnSplit s = dn_split(n, l, delta);
                            return std::pair{true, "alpha = " + s.alpha.to_string() + ", beta = " + s.beta.to_string()};
                        });
            }
            guarded(out, "families/" + tag(n) + "/Dn-halfspin/" + wtag(l),
                    "the half-spin operators act diagonally on D_n polynomials", [&] {
                        const ParamRat a = halfspin_eigencheck(HalfSpin::DnPlus, n, l);
                        const ParamRat b = halfspin_eigencheck(HalfSpin::DnMinus, n, l);
                        return std::pair{true, "mu+ = " + a.to_string() + ", mu- = " + b.to_string()};
                    });
        }
    }
    return out;
}

std::vector<CheckResult> suite_spectral_identities(const SuiteOptions& o)
{
    std::vector<CheckResult> out;
    std::vector<ParamRat> t;
    for (int s = 0; s < kParamVars; ++s) {
        t.push_back(ParamRat(ParamPoly::var(s)));
    }
    const int maxn = std::min(o.max, kParamVars);
    for (int n = 1; n <= maxn; ++n) {
        for (int r = 1; r <= n; ++r) {
            guarded(out, "appendixB/linsyst/n" + std::to_string(n) + "/r" + std::to_string(r),
                    "F_{m,p} solves the linear system", [&] {
                        return std::pair{linsyst_residual(r, n, t).is_zero(), std::string("symbolic")};
                    });
        }
    }
    for (int n = 1; n <= std::min(maxn, 5); ++n) {
        const std::vector<ParamRat> tn(t.begin(), t.begin() + n);
        for (int r = 1; r <= n; ++r) {
            guarded(out, "appendixB/recursion/n" + std::to_string(n) + "/r" + std::to_string(r),
                    "direct and recursive E_{r,n} agree", [&] {
                        const std::vector<ParamRat> p(t.rbegin(), t.rbegin() + (n - r + 1));
                        bool ok = ern_direct(r, tn, p) == ern_recursive(r, tn, p);
                        ok = ok && eigenvalue_Ern(r, n, Weight(static_cast<std::size_t>(n), 0)).is_zero();
                        return std::pair{ok, std::string("symbolic, and E vanishes at lambda = 0")};
                    });
        }
        guarded(out, "appendixB/product/n" + std::to_string(n), "E_{n,n}(t; p_n) = prod_j (t_j - p_n)", [&] {
            const ParamRat pn = ParamRat(ParamPoly::var(kGd)) + ParamRat(3);
            ParamRat prod(1);
            for (const ParamRat& x : tn) {
                prod *= x - pn;
            }
            return std::pair{ern_direct(n, tn, {pn}) == prod, std::string("symbolic")};
        });
    }
    for (int p = 1; p <= 8; ++p) {
        guarded(out, "appendixB/cp/p" + std::to_string(p), "c_p = (-1)^p", [&] {
            const Int c = cp_check(p);
            return std::pair{c == (p % 2 == 0 ? 1 : -1), "c_p = " + c.get_str()};
        });
    }
    return out;
}

} // namespace

Weight size_cover(int n, int d)
{
    Weight w(static_cast<std::size_t>(n), 0);
    w[0] = d;
    return w;
}

bool is_triangular(const OperatorMatrix& m)
{
    for (std::size_t i = 0; i < m.basis.size(); ++i) {
        for (std::size_t j = 0; j < m.basis.size(); ++j) {
            if (!m.entry[i][j].is_zero() && !dominance_leq(m.basis[i], m.basis[j])) {
                return false;
            }
        }
    }
    return true;
}

std::vector<std::vector<ParamRat>> matrix_product(const OperatorMatrix& a, const OperatorMatrix& b)
{
    const std::size_t N = a.basis.size();
    if (b.basis != a.basis) {
        throw ContractViolation("matrix_product: bases differ");
    }
    std::vector<std::vector<ParamRat>> c(N, std::vector<ParamRat>(N, ParamRat(0)));
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t k = 0; k < N; ++k) {
            if (a.entry[i][k].is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < N; ++j) {
                if (!b.entry[k][j].is_zero()) {
                    c[i][j] += a.entry[i][k] * b.entry[k][j];
                }
            }
        }
    }
    return c;
}

LaurentPoly decoupled_image(int n, int r, const Weight& lambda)
{
    const int top = lambda.empty() ? 0 : *std::max_element(lambda.begin(), lambda.end());
    std::vector<LaurentPoly> f;
    std::vector<LaurentPoly> g;
    for (int k = 0; k <= top; ++k) {
        const LaurentPoly m = monomial_symmetric(Weight{k}, Group::Hyperoctahedral);
        f.push_back(m);
        g.push_back(apply_operator(op(OpKind::Dr, 1, 1), m));
    }
    LaurentPoly total(n);
    for (const Weight& perm : worbit(lambda, Group::Permutations)) {
        for (unsigned J = 0; J < (1U << n); ++J) {
            if (__builtin_popcount(J) != r) {
                continue;
            }
            LaurentPoly term = LaurentPoly::constant(n, ParamRat(1));
            for (int j = 0; j < n; ++j) {
                const int k = perm[static_cast<std::size_t>(j)];
                const LaurentPoly& src = (J & (1U << j)) ? g[static_cast<std::size_t>(k)] : f[static_cast<std::size_t>(k)];
                term = term * embed(src, n, j);
            }
            total += term;
        }
    }
    return total;
}

long double truncation_tolerance(const NumericPoint& pt, int M, int a, int b)
{
    return 10.0L * std::pow(std::fabs(to_ld(pt.q)), static_cast<long double>(M - a - b));
}

std::vector<std::vector<long double>> numeric_matrix(const OperatorMatrix& m, const NumericPoint& pt)
{
    const auto half = pt.half_values();
    std::vector<std::vector<long double>> out(m.basis.size(), std::vector<long double>(m.basis.size(), 0));
    for (std::size_t i = 0; i < m.basis.size(); ++i) {
        for (std::size_t j = 0; j < m.basis.size(); ++j) {
            if (!m.entry[i][j].is_zero()) {
                out[i][j] = eval_ld(m.entry[i][j], half);
            }
        }
    }
    return out;
}

std::vector<std::string> suite_names()
{
    return {"triangularity", "eigenvalues", "commute", "symmetry", "orthogonality",
            "decouple",      "limits",      "families", "appendixB"};
}

std::vector<CheckResult> run_suite(const std::string& name, const SuiteOptions& opts)
{
    std::vector<CheckResult> out;
    if (name == "triangularity") {
        out = suite_triangularity(opts);
    } else if (name == "eigenvalues") {
        out = suite_eigenvalues(opts);
    } else if (name == "commute") {
        out = suite_commute(opts);
    } else if (name == "symmetry") {
        out = suite_symmetry(opts);
    } else if (name == "orthogonality") {
        out = suite_orthogonality(opts);
    } else if (name == "decouple") {
        out = suite_decouple(opts);
    } else if (name == "limits") {
        out = suite_limits(opts);
    } else if (name == "families") {
        out = suite_families(opts);
    } else if (name == "appendixB") {
        out = suite_spectral_identities(opts);
    } else {
        throw ParseError("unknown suite '" + name + "'");
    }
    std::sort(out.begin(), out.end(), [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
    return out;
}

} // namespace qpoly
