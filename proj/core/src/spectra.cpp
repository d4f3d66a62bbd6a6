// Copyright (c) 2026 The qpoly authors
// Use of this source code is governed by the MIT license that can be found in the LICENSE file.

#include "qpoly/spectra.hpp"

#include "qpoly/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace qpoly {

namespace {

ParamRat pow2(int r)
{
    return ParamRat(Rat(Int(1) << static_cast<unsigned>(r)));
}

// Sum over multisets {i_1 <= ... <= i_k} drawn from x of the products.
ParamRat complete_rec(int k, const std::vector<ParamRat>& x, std::size_t from)
{
    if (k == 0) {
        return ParamRat(1);
    }
    ParamRat s(0);
    for (std::size_t i = from; i < x.size(); ++i) {
        s += x[i] * complete_rec(k - 1, x, i);
    }
    return s;
}

} // namespace

std::vector<ParamRat> rho_units(int n)
{
    std::vector<ParamRat> u;
    for (int j = 1; j <= n; ++j) {
        ParamExp e{};
        e[kTh] = 2 * (n - j);
        e[kGa] = e[kGb] = e[kGc] = e[kGd] = 1;
        u.emplace_back(ParamPoly::monomial(e));
    }
    return u;
}

ParamRat ch(const ParamRat& u)
{
    return (u + ParamRat(1) / u) * ParamRat(Rat(1, 2));
}

ParamRat elementary(int r, const std::vector<ParamRat>& x)
{
    // e_0..e_r by the usual one-variable-at-a-time recurrence
    std::vector<ParamRat> e(static_cast<std::size_t>(r) + 1, ParamRat(0));
    e[0] = ParamRat(1);
    for (const ParamRat& xi : x) {
        for (int k = r; k >= 1; --k) {
            e[static_cast<std::size_t>(k)] += xi * e[static_cast<std::size_t>(k - 1)];
        }
    }
    return e[static_cast<std::size_t>(r)];
}

ParamRat complete(int r, const std::vector<ParamRat>& x)
{
    return complete_rec(r, x, 0);
}

ParamRat ern_direct(int r, const std::vector<ParamRat>& t, const std::vector<ParamRat>& p)
{
    const int n = static_cast<int>(t.size());
    if (r == 0) {
        return ParamRat(1);
    }
    if (n < r) {
        return ParamRat(0);
    }
    if (static_cast<int>(p.size()) != n - r + 1) {
        throw ContractViolation("ern_direct expects p_r..p_n");
    }
    ParamRat sum(0);
    for (int s = 0; s <= r; ++s) {
        ParamRat term = elementary(s, t) * complete(r - s, p);
        sum += ((r + s) % 2 == 0) ? term : -term;
    }
    return sum;
}

ParamRat ern_recursive(int r, const std::vector<ParamRat>& t, const std::vector<ParamRat>& p)
{
    const int n = static_cast<int>(t.size());
    if (r == 0) {
        return ParamRat(1);
    }
    if (n < r) {
        return ParamRat(0);
    }
    if (static_cast<int>(p.size()) != n - r + 1) {
        throw ContractViolation("ern_recursive expects p_r..p_n");
    }
    std::vector<ParamRat> t1(t.begin(), t.end() - 1);
    std::vector<ParamRat> p1(p.begin(), p.end() - 1);
    ParamRat first = (t.back() - p.back()) * ern_recursive(r - 1, t1, p);
    return first + ern_recursive(r, t1, p1);
}

std::vector<ParamRat> ch_values(int n, const Weight& lambda)
{
    auto u = rho_units(n);
    std::vector<ParamRat> t;
    for (int j = 0; j < n; ++j) {
        ParamExp e{};
        e[kQh] = 2 * lambda[static_cast<std::size_t>(j)] * kQhScale;
        t.push_back(ch(u[static_cast<std::size_t>(j)] * ParamRat(ParamPoly::monomial(e))));
    }
    return t;
}

namespace {

std::vector<ParamRat> rho_tail(int r, int n)
{
    auto u = rho_units(n);
    std::vector<ParamRat> p;
    for (int i = r; i <= n; ++i) {
        p.push_back(ch(u[static_cast<std::size_t>(i - 1)]));
    }
    return p;
}

} // namespace

ParamRat eigenvalue_Ern(int r, int n, const Weight& lambda)
{
    return pow2(r) * ern_direct(r, ch_values(n, lambda), rho_tail(r, n));
}

ParamRat eigenvalue_Ern_recursive(int r, int n, const Weight& lambda)
{
    return pow2(r) * ern_recursive(r, ch_values(n, lambda), rho_tail(r, n));
}

std::vector<ParamRat> generator_values(int n, const Weight& lambda)
{
    std::vector<ParamRat> v;
    for (int r = 1; r <= n; ++r) {
        v.push_back(eigenvalue_Ern(r, n, lambda));
    }
    return v;
}

ParamRat F_solve(int m, int p, const std::vector<ParamRat>& t)
{
    if (p == 0) {
        return ParamRat(1);
    }
    if (p < 0 || p > m || static_cast<int>(t.size()) < m - p + 1) {
        throw ContractViolation("F_solve needs 0 <= p <= m and t_1..t_{m-p+1}");
    }
    std::vector<ParamRat> head(t.begin(), t.begin() + (m - p + 1));
    ParamRat s = complete(p, head);
    return p % 2 == 0 ? s : -s;
}

ParamRat linsyst_residual(int r, int n, const std::vector<ParamRat>& t)
{
    // sum over J subset {1..n}, |J| = s <= r of prod_{j in J} t_j F_{n-s, r-s}
    ParamRat sum(0);
    std::vector<ParamRat> head(t.begin(), t.begin() + n);
    for (int s = 0; s <= r; ++s) {
        sum += elementary(s, head) * F_solve(n - s, r - s, t);
    }
    return sum;
}

Int surjection_count(int p, int s)
{
    // sum over compositions p_1 + ... + p_s = p, p_j >= 1, of multinomial(p; p_1..p_s)
    std::function<Int(int, int)> rec = [&](int left, int slots) -> Int {
        if (slots == 0) {
            return left == 0 ? Int(1) : Int(0);
        }
        Int total = 0;
        for (int k = 1; k <= left - (slots - 1); ++k) {
            Int binom;
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(left), static_cast<unsigned long>(k));
            total += binom * rec(left - k, slots - 1);
        }
        return total;
    };
    return rec(p, s);
}

Int cp_check(int p)
{
    if (p == 0) {
        return 1;
    }
    Int c = 0;
    for (int s = 1; s <= p; ++s) {
        Int ns = surjection_count(p, s);
        c += (s % 2 == 0) ? ns : Int(-ns);
    }
    return c;
}

MPoly mpoly_add(const MPoly& a, const MPoly& b)
{
    MPoly r = a;
    for (const auto& [k, c] : b) {
        auto [it, inserted] = r.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                r.erase(it);
            }
        }
    }
    return r;
}

MPoly mpoly_mul(const MPoly& a, const MPoly& b)
{
    MPoly r;
    for (const auto& [ka, ca] : a) {
        for (const auto& [kb, cb] : b) {
            std::vector<int> k = ka;
            for (std::size_t i = 0; i < k.size(); ++i) {
                k[i] += kb[i];
            }
            r = mpoly_add(r, MPoly{{k, ca * cb}});
        }
    }
    return r;
}

MPoly mpoly_scale(const MPoly& a, const ParamRat& c)
{
    MPoly r;
    if (c.is_zero()) {
        return r;
    }
    for (const auto& [k, v] : a) {
        r.emplace(k, v * c);
    }
    return r;
}

MPoly mpoly_constant(int nvars, const ParamRat& c)
{
    if (c.is_zero()) {
        return {};
    }
    return MPoly{{std::vector<int>(static_cast<std::size_t>(nvars), 0), c}};
}

MPoly mpoly_var(int nvars, int i)
{
    std::vector<int> k(static_cast<std::size_t>(nvars), 0);
    k[static_cast<std::size_t>(i)] = 1;
    return MPoly{{k, ParamRat(1)}};
}

ParamRat mpoly_eval(const MPoly& a, const std::vector<ParamRat>& x)
{
    ParamRat s(0);
    for (const auto& [k, c] : a) {
        ParamRat term = c;
        for (std::size_t i = 0; i < k.size(); ++i) {
            term *= x[i].pow(k[i]);
        }
        s += term;
    }
    return s;
}

namespace {

MPoly mpoly_pow(const MPoly& a, int e, int nvars)
{
    MPoly r = mpoly_constant(nvars, ParamRat(1));
    for (int i = 0; i < e; ++i) {
        r = mpoly_mul(r, a);
    }
    return r;
}

// Elementary symmetric polynomial e_k in the variables X_1..X_n.
MPoly elementary_poly(int k, int n)
{
    MPoly r;
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
        if (__builtin_popcount(mask) != k) {
            continue;
        }
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        for (int j = 0; j < n; ++j) {
            if (mask & (1U << j)) {
                e[static_cast<std::size_t>(j)] = 1;
            }
        }
        r.emplace(e, ParamRat(1));
    }
    return r;
}

} // namespace

MPoly hc_lift(const MPoly& S, int n, const ParamSubst& params)
{
    const bool specialized = std::any_of(params.begin(), params.end(), [](const auto& x) { return x.has_value(); });
    // Fundamental theorem of symmetric polynomials: S = P(e_1, ..., e_n).
    MPoly rest = S;
    MPoly P;
    std::vector<MPoly> ek;
    for (int k = 1; k <= n; ++k) {
        ek.push_back(elementary_poly(k, n));
    }
    while (!rest.empty()) {
        const auto& [a, c] = *rest.rbegin();
        for (int j = 0; j + 1 < n; ++j) {
            if (a[static_cast<std::size_t>(j)] < a[static_cast<std::size_t>(j + 1)]) {
                throw NotInvariant("hc_lift: input is not symmetric");
            }
        }
        std::vector<int> pe(static_cast<std::size_t>(n), 0);
        MPoly sub = mpoly_constant(n, c);
        for (int k = 0; k < n; ++k) {
            int m = a[static_cast<std::size_t>(k)] - (k + 1 < n ? a[static_cast<std::size_t>(k + 1)] : 0);
            pe[static_cast<std::size_t>(k)] = m;
            sub = mpoly_mul(sub, mpoly_pow(ek[static_cast<std::size_t>(k)], m, n));
        }
        P = mpoly_add(P, MPoly{{pe, c}});
        rest = mpoly_add(rest, mpoly_scale(sub, ParamRat(-1)));
    }
    // e_r = 2^{-r} E_r - sum_{s<r} (-1)^{r+s} e_s h_{r-s}(ch rho_r, ..., ch rho_n)
    std::vector<MPoly> e_in_E;
    e_in_E.push_back(mpoly_constant(n, ParamRat(1)));
    for (int r = 1; r <= n; ++r) {
        MPoly er = mpoly_scale(mpoly_var(n, r - 1), ParamRat(1) / pow2(r));
        auto p = rho_tail(r, n);
        if (specialized) {
            for (auto& v : p) {
                v = substitute_params(v, params);
            }
        }
        for (int s = 0; s < r; ++s) {
            ParamRat coef = complete(r - s, p);
            if ((r + s) % 2 == 0) {
                coef = -coef;
            }
            er = mpoly_add(er, mpoly_scale(e_in_E[static_cast<std::size_t>(s)], coef));
        }
        e_in_E.push_back(er);
    }
    MPoly out;
    for (const auto& [pe, c] : P) {
        MPoly term = mpoly_constant(n, c);
        for (int k = 0; k < n; ++k) {
            term = mpoly_mul(term, mpoly_pow(e_in_E[static_cast<std::size_t>(k + 1)], pe[static_cast<std::size_t>(k)], n));
        }
        out = mpoly_add(out, term);
    }
    return out;
}

ParamRat eigenvalue_An(int r, int n, const Weight& lambda)
{
    std::vector<ParamRat> x;
    for (int j = 1; j <= n; ++j) {
        ParamExp e{};
        e[kQh] = 2 * lambda[static_cast<std::size_t>(j - 1)] * kQhScale;
        e[kTh] = n + 1 - 2 * j;
        x.emplace_back(ParamPoly::monomial(e));
    }
    ParamExp pre{};
    pre[kQh] = -2 * r * weight_size(lambda) * kQhScale / n;
    return ParamRat(ParamPoly::monomial(pre)) * elementary(r, x);
}

ParamRat eigenvalue_jacobi(int r, int n, const Weight& lambda)
{
    const ParamRat g(ParamPoly::var(kG, 1));
    const ParamRat half_sum = (ParamRat(ParamPoly::var(kTg0, 1)) + ParamRat(ParamPoly::var(kTg1, 1))) * ParamRat(Rat(1, 2));
    std::vector<ParamRat> t;
    std::vector<ParamRat> p;
    for (int j = 1; j <= n; ++j) {
        ParamRat rho = g * ParamRat(n - j) + half_sum;
        ParamRat x = rho + ParamRat(lambda[static_cast<std::size_t>(j - 1)]);
        t.push_back(x * x);
        if (j >= r) {
            p.push_back(rho * rho);
        }
    }
    return ern_direct(r, t, p);
}

double spectral_function(const Weight& lambda, const PhysicalParams& p)
{
    const int n = static_cast<int>(lambda.size());
    double s = 0;
    for (int j = 1; j <= n; ++j) {
        double rho = (n - j) * p.g + (p.g0 + p.g1 + p.g0p + p.g1p) / 2;
        s += std::cosh(p.beta * (lambda[static_cast<std::size_t>(j - 1)] + rho));
    }
    return s;
}

bool monotonicity_check(const Weight& lambda, const Weight& mu, const PhysicalParams& p)
{
    return spectral_function(lambda, p) > spectral_function(mu, p);
}

} // namespace qpoly
