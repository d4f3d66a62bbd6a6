// Copyright (c) 2026 The qpoly authors
// Use of this source code is governed by the MIT license that can be found in the LICENSE file.

#include "qpoly/operator_apply.hpp"

#include "qpoly/errors.hpp"
#include "qpoly/flat_poly.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <mutex>
#include <optional>
#include <thread>

namespace qpoly {

namespace {

using flat::BinomialRatio;
using flat::ParamVec;
using flat::Series;
using flat::Space;
using flat::ZVec;

// Numerator and denominator data of a factor ratio
// (a*A*W + c1) / (g*(b*B*W + c2)) with W = q^qpow z^w; parameters in flat units.
BinomialRatio ratio_of(const Factor& f, bool half)
{
    BinomialRatio r;
    for (std::size_t j = 0; j < f.w.size(); ++j) {
        r.w[j] = f.w[j] * (half ? 2 : 1);
    }
    ParamVec qp{};
    qp[kQh] = 4 * f.qpow;
    r.A = qp;
    r.B = qp;
    switch (f.kind) {
    case FactorKind::Va:
        r.A[kTh] += 2;
        r.g[kTh] = 1;
        r.c1 = -1;
        r.c2 = -1;
        break;
    case FactorKind::VbA:
        r.A[kGa] += 2;
        r.g[kGa] = 1;
        r.c1 = -1;
        r.c2 = -1;
        break;
    case FactorKind::VbB:
        r.A[kGb] += 2;
        r.g[kGb] = 1;
        r.c1 = 1;
        r.c2 = 1;
        break;
    case FactorKind::VbC:
        r.A[kGc] += 2;
        r.A[kQh] += 2;
        r.B[kQh] += 2;
        r.g[kGc] = 1;
        r.c1 = -1;
        r.c2 = -1;
        break;
    case FactorKind::VbD:
        r.A[kGd] += 2;
        r.A[kQh] += 2;
        r.B[kQh] += 2;
        r.g[kGd] = 1;
        r.c1 = 1;
        r.c2 = 1;
        break;
    case FactorKind::Cot:
        r.c1 = 1;
        r.c2 = -1;
        break;
    case FactorKind::Tan:
        r.c1 = -1;
        r.c2 = 1;
        break;
    }
    return r;
}

ParamVec to_flat_params(const ParamExp& e)
{
    ParamVec p{};
    if (e[kQh] % (kQhScale / 2) != 0) {
        throw ContractViolation("parameter prefactor not representable in the series engine");
    }
    p[kQh] = e[kQh] / (kQhScale / 2);
    for (int s = 1; s < kParamVars; ++s) {
        p[s] = e[s];
    }
    return p;
}

struct FactorKey {
    FactorKind kind;
    Weight w;
    int qpow;
    bool operator<(const FactorKey& o) const
    {
        if (kind != o.kind) return kind < o.kind;
        if (qpow != o.qpow) return qpow < o.qpow;
        return w < o.w;
    }
};

// Terms sharing an input map are summed into one coefficient series.
struct GroupKey {
    InputMap input;
    Weight shift;
    bool operator<(const GroupKey& o) const
    {
        if (input != o.input) return input < o.input;
        return shift < o.shift;
    }
};

int dot_y(const Space& sp, const Weight& a)
{
    int d = 0;
    for (int j = 0; j < sp.n(); ++j) {
        d += sp.y(j) * a[static_cast<std::size_t>(j)];
    }
    return d;
}

// Smallest grading among the dominant weights that can occur in the image of m_mu.
int window_floor(const Weight& mu, Group g, const Space& sp, bool half)
{
    if (g != Group::Permutations) {
        return 0;
    }
    if (half) {
        throw ContractViolation("type A operators act on the integer lattice only");
    }
    int lo = dot_y(sp, mu);
    for (const Weight& nu : weights_below(mu, Group::Permutations)) {
        lo = std::min(lo, dot_y(sp, nu));
    }
    return lo;
}

Series input_series(const Weight& mu, Group g, const GroupKey& gk, bool half, const Space& sp)
{
    const int n = sp.n();
    Series s;
    auto& terms = s.mutable_terms();
    for (const Weight& a : worbit(mu, g)) {
        ZVec z{};
        for (int j = 0; j < n; ++j) {
            z[j] = a[static_cast<std::size_t>(j)];
        }
        ParamVec p{};
        std::int64_t c = 1;
        switch (gk.input) {
        case InputMap::Shift: {
            int e = 0;
            for (int j = 0; j < n; ++j) {
                e += gk.shift[static_cast<std::size_t>(j)] * a[static_cast<std::size_t>(j)] * (half ? 1 : 2);
            }
            p[kQh] = e;
            break;
        }
        case InputMap::Linear: {
            if (half) {
                throw ContractViolation("differential operators act on the integer lattice only");
            }
            c = 0;
            for (int j = 0; j < n; ++j) {
                c += gk.shift[static_cast<std::size_t>(j)] * a[static_cast<std::size_t>(j)];
            }
            break;
        }
        case InputMap::Quadratic:
            if (half) {
                throw ContractViolation("differential operators act on the integer lattice only");
            }
            c = 0;
            for (int j = 0; j < n; ++j) {
                c += static_cast<std::int64_t>(a[static_cast<std::size_t>(j)]) * a[static_cast<std::size_t>(j)];
            }
            break;
        }
        if (c != 0) {
            terms.push_back(flat::Term{sp.pack(z, p), c, sp.ydeg_of(z)});
        }
    }
    s.normalize();
    return s;
}

// Coefficient series of every input group, truncated at ydeg >= -depth.
std::map<GroupKey, Series> coefficient_series(const OperatorSpec& spec, bool half, int depth, const Space& sp)
{
    std::map<FactorKey, Series> cache;
    auto factor_series = [&](const Factor& f) -> const Series& {
        FactorKey key{f.kind, f.w, f.qpow};
        auto it = cache.find(key);
        if (it == cache.end()) {
            it = cache.emplace(key, flat::ratio_series(ratio_of(f, half), depth, sp)).first;
        }
        return it->second;
    };
    // Products of identical factor lists are shared between terms.
    std::map<std::vector<FactorKey>, Series> products;
    std::map<GroupKey, flat::Accumulator> acc;
    std::map<GroupKey, Series> out;
    for (const OpTerm& t : operator_terms(spec)) {
        std::vector<FactorKey> keys;
        for (const Factor& f : t.factors) {
            keys.push_back(FactorKey{f.kind, f.w, f.qpow});
        }
        std::sort(keys.begin(), keys.end());
        auto pit = products.find(keys);
        if (pit == products.end()) {
            Series prod = Series::one(sp);
            // reuse the longest cached prefix
            std::size_t start = 0;
            for (std::size_t len = keys.size(); len > 0; --len) {
                std::vector<FactorKey> prefix(keys.begin(), keys.begin() + static_cast<long>(len));
                auto hit = products.find(prefix);
                if (hit != products.end()) {
                    prod = hit->second;
                    start = len;
                    break;
                }
            }
            for (std::size_t i = start; i < keys.size(); ++i) {
                prod = Series::mul_trunc(prod, factor_series(Factor{keys[i].kind, keys[i].w, keys[i].qpow}), -depth, sp);
                std::vector<FactorKey> prefix(keys.begin(), keys.begin() + static_cast<long>(i + 1));
                products.emplace(std::move(prefix), prod);
            }
            pit = products.find(keys);
            if (pit == products.end()) {
                pit = products.emplace(keys, prod).first;
            }
        }
        GroupKey gk{t.input, t.shift};
        Series mono = Series::monomial(sp, ZVec{}, to_flat_params(t.param), t.coef);
        acc[gk].add_product(mono, pit->second, -depth, sp);
    }
    for (auto& [gk, a] : acc) {
        Series s = a.take();
        if (!s.empty()) {
            out.emplace(gk, std::move(s));
        }
    }
    return out;
}

// When every substituted slot maps to a monomial with coefficient one (all
// family specializations do), the substitution is a linear map on flat
// exponent vectors and can be applied to the coefficient series before the
// window is read. This is needed for inputs whose generic images are not
// polynomial. Returns the images of the flat unit vectors.
std::optional<std::array<ParamVec, kParamVars>> monomial_map(const OperatorSpec& spec)
{
    std::array<ParamVec, kParamVars> img{};
    bool any = false;
    for (int s = 0; s < kParamVars; ++s) {
        img[s][s] = 1;
        if (!spec.params[s]) {
            continue;
        }
        any = true;
        const ParamRat& v = *spec.params[s];
        if (s == kQh || !v.is_polynomial() || !v.num().is_monomial() || v.num().leading().second != 1) {
            return std::nullopt;
        }
        const ParamExp e = ParamPoly::unpack(v.num().leading().first);
        if (e[kQh] % (kQhScale / 2) != 0) {
            return std::nullopt;
        }
        img[s] = to_flat_params(e);
    }
    if (!any) {
        return std::nullopt;
    }
    return img;
}

Series map_series(const Series& in, const std::array<ParamVec, kParamVars>& img, const Space& sp)
{
    Series out;
    auto& terms = out.mutable_terms();
    ZVec z;
    ParamVec p;
    for (const flat::Term& t : in.terms()) {
        sp.unpack(t.key, z, p);
        ParamVec q{};
        for (int s = 0; s < kParamVars; ++s) {
            for (int u = 0; u < kParamVars; ++u) {
                q[u] += p[s] * img[s][u];
            }
        }
        terms.push_back(flat::Term{sp.pack(z, q), t.c, t.ydeg});
    }
    out.normalize();
    return out;
}

ParamPoly to_param_poly(const std::vector<std::pair<ParamVec, std::int64_t>>& terms)
{
    std::vector<ParamPoly::Term> pt;
    pt.reserve(terms.size());
    for (const auto& [p, c] : terms) {
        pt.emplace_back(ParamPoly::pack(flat::to_param_exp(p)), Rat(static_cast<long>(c)));
    }
    return ParamPoly::from_terms(std::move(pt));
}

// Reads the window of an image, checks orbit consistency and returns the
// coefficients of the dominant weights.
std::map<Weight, ParamPoly> read_window(const Series& image, const Weight& mu, Group g, int lo, const Space& sp)
{
    const int n = sp.n();
    const int top = dot_y(sp, mu);
    std::map<Weight, std::vector<std::pair<ParamVec, std::int64_t>>> by_z;
    ZVec z;
    ParamVec p;
    for (const flat::Term& t : image.terms()) {
        sp.unpack(t.key, z, p);
        Weight a(z.begin(), z.begin() + n);
        by_z[a].emplace_back(p, t.c);
    }
    std::map<Weight, ParamPoly> coeffs;
    for (auto& [a, terms] : by_z) {
        coeffs.emplace(a, to_param_poly(terms));
    }
    std::map<Weight, ParamPoly> dominant;
    for (const auto& [a, c] : coeffs) {
        Weight d = dominant_rep(a, g);
        if (dot_y(sp, d) > top) {
            throw NotInvariant("image has support outside the highest weight space at " + weight_to_string(a));
        }
        auto it = coeffs.find(d);
        if (it == coeffs.end() || it->second != c) {
            throw NotInvariant("image is not invariant: coefficient at " + weight_to_string(a) +
                               " differs from its dominant representative");
        }
        if (a == d) {
            dominant.emplace(d, c);
        }
    }
    // every orbit element inside the window must be present
    for (const auto& [d, c] : dominant) {
        for (const Weight& a : worbit(d, g)) {
            if (dot_y(sp, a) >= lo && coeffs.find(a) == coeffs.end()) {
                throw NotInvariant("image is not invariant: missing orbit element " + weight_to_string(a));
            }
        }
    }
    return dominant;
}

ParamRat apply_params(const ParamPoly& c, const OperatorSpec& spec)
{
    bool any = false;
    for (const auto& s : spec.params) {
        any = any || s.has_value();
    }
    if (!any) {
        return ParamRat(c);
    }
    return substitute_params(ParamRat(c), spec.params);
}

} // namespace

int worker_threads()
{
    const char* env = std::getenv("QPOLY_THREADS");
    if (env == nullptr) {
        return 1;
    }
    int v = std::atoi(env);
    return v < 1 ? 1 : v;
}

std::vector<Expansion> apply_to_monomials(const OperatorSpec& spec, const std::vector<Weight>& mus, bool half_lattice)
{
    spec.validate();
    if (mus.empty()) {
        return {};
    }
    const Group g = spec.group();
    Space sp(spec.n);
    int top = 0;
    int lo = 0;
    std::vector<int> los;
    for (const Weight& mu : mus) {
        if (static_cast<int>(mu.size()) != spec.n || !is_dominant(mu, g)) {
            throw ContractViolation("apply_to_monomials needs dominant weights of length n");
        }
        top = std::max(top, dot_y(sp, mu));
        los.push_back(window_floor(mu, g, sp, half_lattice));
        lo = std::min(lo, los.back());
    }
    const int depth = top - lo;
    auto coeff = coefficient_series(spec, half_lattice, depth, sp);
    const auto mono = monomial_map(spec);
    if (mono) {
        for (auto& [gk, cs] : coeff) {
            cs = map_series(cs, *mono, sp);
        }
    }

    std::vector<Expansion> out(mus.size());
    auto work = [&](std::size_t i) {
        const Weight& mu = mus[i];
        flat::Accumulator acc;
        for (const auto& [gk, cs] : coeff) {
            Series in = input_series(mu, g, gk, half_lattice, sp);
            acc.add_product(cs, in, los[i], sp);
        }
        Series image = acc.take();
        auto dom = read_window(image, mu, g, los[i], sp);
        Expansion e;
        for (const auto& [d, c] : dom) {
            ParamPoly cc = c;
            if (spec.kind == OpKind::ATypeCentered) {
                ParamExp shift{};
                shift[kQh] = -2 * spec.r * weight_size(mu) * kQhScale / spec.n;
                cc = cc.shifted(shift);
            }
            ParamRat v = mono ? ParamRat(cc) : apply_params(cc, spec);
            if (!v.is_zero()) {
                e.emplace(d, v);
            }
        }
        out[i] = std::move(e);
    };
    const int threads = std::min<int>(worker_threads(), static_cast<int>(mus.size()));
    if (threads <= 1) {
        for (std::size_t i = 0; i < mus.size(); ++i) {
            work(i);
        }
    } else {
        std::vector<std::thread> pool;
        std::mutex err_mu;
        std::exception_ptr err;
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                for (std::size_t i = static_cast<std::size_t>(t); i < mus.size(); i += static_cast<std::size_t>(threads)) {
                    try {
                        work(i);
                    } catch (...) {
                        std::lock_guard<std::mutex> lock(err_mu);
                        if (!err) {
                            err = std::current_exception();
                        }
                    }
                }
            });
        }
        for (auto& th : pool) {
            th.join();
        }
        if (err) {
            std::rethrow_exception(err);
        }
    }
    return out;
}

LaurentPoly from_expansion(const Expansion& e, int n, Group g, bool half_lattice)
{
    LaurentPoly p(n, half_lattice);
    for (const auto& [w, c] : e) {
        for (const Weight& a : worbit(w, g)) {
            p.add_term(a, c);
        }
    }
    return p;
}

LaurentPoly apply_operator(const OperatorSpec& spec, const LaurentPoly& f)
{
    if (f.n() != spec.n) {
        throw ContractViolation("operator and polynomial have different n");
    }
    const Group g = spec.group();
    const auto coeffs = expand_in_monomials(f, g);
    std::vector<Weight> mus;
    for (const auto& [w, c] : coeffs) {
        mus.push_back(w);
    }
    const auto images = apply_to_monomials(spec, mus, f.half_lattice());
    Expansion total;
    std::size_t i = 0;
    for (const auto& [w, c] : coeffs) {
        for (const auto& [nu, v] : images[i]) {
            auto [it, inserted] = total.try_emplace(nu, c * v);
            if (!inserted) {
                it->second += c * v;
            }
        }
        ++i;
    }
    for (auto it = total.begin(); it != total.end();) {
        it = it->second.is_zero() ? total.erase(it) : std::next(it);
    }
    return from_expansion(total, spec.n, g, f.half_lattice());
}

namespace {

// Canonical binomial (P z^w - s) with the first nonzero entry of w positive.
struct Binomial {
    ParamExp P;
    Weight w;
    int s;
    bool operator<(const Binomial& o) const
    {
        if (w != o.w) return w < o.w;
        if (s != o.s) return s < o.s;
        return P < o.P;
    }
};

LaurentPoly binomial_poly(const Binomial& b, int n, bool half)
{
    LaurentPoly p(n, half);
    p.add_term(b.w, ParamRat(ParamPoly::monomial(b.P)));
    p.add_term(Weight(static_cast<std::size_t>(n), 0), ParamRat(-b.s));
    return p;
}

ParamExp flat_to_exp(const ParamVec& v)
{
    return flat::to_param_exp(v);
}

ParamExp neg(const ParamExp& e)
{
    ParamExp o;
    for (int i = 0; i < kParamVars; ++i) {
        o[i] = -e[i];
    }
    return o;
}

LaurentPoly apply_input(const OpTerm& t, const LaurentPoly& f)
{
    LaurentPoly r(f.n(), f.half_lattice());
    switch (t.input) {
    case InputMap::Shift:
        r = f;
        for (int j = 0; j < f.n(); ++j) {
            if (t.shift[static_cast<std::size_t>(j)] != 0) {
                r = r.shift_var(j, t.shift[static_cast<std::size_t>(j)]);
            }
        }
        return r;
    case InputMap::Linear:
    case InputMap::Quadratic:
        if (f.half_lattice()) {
            throw ContractViolation("differential operators act on the integer lattice only");
        }
        for (const auto& [a, c] : f.terms()) {
            long m = 0;
            for (int j = 0; j < f.n(); ++j) {
                const long aj = a[static_cast<std::size_t>(j)];
                m += t.input == InputMap::Linear ? t.shift[static_cast<std::size_t>(j)] * aj : aj * aj;
            }
            r.add_term(a, c * ParamRat(m));
        }
        return r;
    }
    return r;
}

} // namespace

LaurentPoly apply_operator_exact(const OperatorSpec& spec, const LaurentPoly& f)
{
    spec.validate();
    const int n = spec.n;
    const bool half = f.half_lattice();
    const auto terms = operator_terms(spec);
    // Per term: numerator polynomial, unit and canonical denominator binomials.
    struct Prepared {
        LaurentPoly num;
        std::map<Binomial, int> den;
    };
    std::vector<Prepared> prepared;
    std::map<Binomial, int> lcm;
    for (const OpTerm& t : terms) {
        Prepared pr{LaurentPoly::constant(n, ParamRat(t.coef) * ParamRat(ParamPoly::monomial(t.param)), half), {}};
        for (const Factor& fa : t.factors) {
            BinomialRatio r = ratio_of(fa, half);
            Weight w(r.w.begin(), r.w.begin() + n);
            // numerator a*A*W + c1
            LaurentPoly num(n, half);
            ParamExp A = flat_to_exp(r.A);
            num.add_term(w, ParamRat(ParamPoly::monomial(A, Rat(r.a))));
            num.add_term(Weight(static_cast<std::size_t>(n), 0), ParamRat(r.c1));
            pr.num = pr.num * num;
            // denominator g*(b*B*W + c2) = g*b*(B z^w - s), s = -c2*b
            ParamExp B = flat_to_exp(r.B);
            ParamExp g = flat_to_exp(r.g);
            Binomial bin{B, w, -r.c2 * r.b};
            ParamRat unit = ParamRat(ParamPoly::monomial(g, Rat(r.b)));
            LaurentPoly unit_mono = LaurentPoly::constant(n, ParamRat(1), half);
            auto first = std::find_if(w.begin(), w.end(), [](int x) { return x != 0; });
            if (first != w.end() && *first < 0) {
                // B z^w - s = -s B z^w (B^{-1} z^{-w} - s)
                Weight mw = w;
                for (auto& x : mw) {
                    x = -x;
                }
                unit_mono = LaurentPoly::monomial(w, ParamRat(ParamPoly::monomial(B, Rat(-bin.s))), half);
                bin = Binomial{neg(B), mw, bin.s};
            }
            // divide the numerator by the unit parts
            LaurentPoly inv_unit(n, half);
            const auto& [uw, uc] = *unit_mono.terms().begin();
            Weight iw = uw;
            for (auto& x : iw) {
                x = -x;
            }
            inv_unit.add_term(iw, ParamRat(1) / (uc * unit));
            pr.num = pr.num * inv_unit;
            pr.den[bin] += 1;
        }
        pr.num = pr.num * apply_input(t, f);
        for (const auto& [b, m] : pr.den) {
            lcm[b] = std::max(lcm[b], m);
        }
        prepared.push_back(std::move(pr));
    }
    LaurentPoly total(n, half);
    for (Prepared& pr : prepared) {
        LaurentPoly x = pr.num;
        for (const auto& [b, m] : lcm) {
            int have = 0;
            auto it = pr.den.find(b);
            if (it != pr.den.end()) {
                have = it->second;
            }
            for (int k = have; k < m; ++k) {
                x = x * binomial_poly(b, n, half);
            }
        }
        total += x;
    }
    for (const auto& [b, m] : lcm) {
        for (int k = 0; k < m; ++k) {
            total = exact_divide(total, binomial_poly(b, n, half));
        }
    }
    if (spec.kind == OpKind::ATypeCentered) {
        LaurentPoly centered(n, half);
        for (const auto& [a, c] : total.terms()) {
            int deg = 0;
            for (int x : a) {
                deg += x;
            }
            if (half) {
                throw ContractViolation("type A operators act on the integer lattice only");
            }
            ParamExp e{};
            e[kQh] = -2 * spec.r * deg * kQhScale / n;
            centered.add_term(a, c * ParamRat(ParamPoly::monomial(e)));
        }
        total = centered;
    }
    bool any = false;
    for (const auto& s : spec.params) {
        any = any || s.has_value();
    }
    return any ? total.map_coefficients(spec.params) : total;
}

OperatorMatrix operator_matrix(const OperatorSpec& spec, const Weight& lambda, bool half_lattice)
{
    OperatorMatrix m;
    m.basis = weights_below(lambda, spec.group() == Group::Permutations ? Group::Permutations : Group::Hyperoctahedral);
    const auto images = apply_to_monomials(spec, m.basis, half_lattice);
    const std::size_t k = m.basis.size();
    m.entry.assign(k, std::vector<ParamRat>(k, ParamRat(0)));
    for (std::size_t col = 0; col < k; ++col) {
        for (const auto& [nu, c] : images[col]) {
            auto it = std::lower_bound(m.basis.begin(), m.basis.end(), nu);
            if (it == m.basis.end() || *it != nu || !dominance_leq(nu, m.basis[col])) {
                throw ContractViolation("image of m" + weight_to_string(m.basis[col]) + " has a component at " +
                                        weight_to_string(nu) + " outside the dominance order ideal");
            }
            m.entry[static_cast<std::size_t>(it - m.basis.begin())][col] = c;
        }
    }
    return m;
}

LaurentPoly commutator_on_basis(const OperatorSpec& a, const OperatorSpec& b, const Weight& lambda)
{
    const Group g = a.group();
    LaurentPoly m = monomial_symmetric(lambda, g);
    return apply_operator(a, apply_operator(b, m)) - apply_operator(b, apply_operator(a, m));
}

} // namespace qpoly
