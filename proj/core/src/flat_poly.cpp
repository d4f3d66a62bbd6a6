// Copyright (c) 2026 The qpoly authors
// Use of this source code is governed by the MIT license that can be found in the LICENSE file.

#include "qpoly/flat_poly.hpp"

#include "qpoly/errors.hpp"

#include <absl/container/flat_hash_map.h>

#include <algorithm>
#include <limits>

namespace qpoly::flat {

namespace {

constexpr int kPOffset(int s) { return kPBits * s; }
constexpr int kZOffset(int i) { return kPBits * kParamVars + kZBits * i; }

static_assert(kZOffset(kMaxVars) <= 128, "packed key exceeds 128 bits");

struct KeyHash {
    std::size_t operator()(Key k) const noexcept
    {
        auto lo = static_cast<std::uint64_t>(k);
        auto hi = static_cast<std::uint64_t>(k >> 64);
        std::uint64_t h = lo * 0x9E3779B97F4A7C15ULL;
        h ^= (hi + 0x632BE59BD9B4E019ULL) * 0xC2B2AE3D27D4EB4FULL;
        h ^= h >> 29;
        return static_cast<std::size_t>(h);
    }
};

bool term_order(const Term& x, const Term& y)
{
    if (x.ydeg != y.ydeg) {
        return x.ydeg > y.ydeg;
    }
    return x.key < y.key;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw ContractViolation("integer overflow in series coefficient");
    }
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw ContractViolation("integer overflow in series coefficient");
    }
    return r;
}

// Per-field extremes of a series, used to rule out field overflow in products.
struct Extent {
    ZVec zmin, zmax;
    ParamVec pmin, pmax;
};

Extent extent(const Series& s, const Space& sp)
{
    Extent e;
    e.zmin.fill(std::numeric_limits<int>::max());
    e.zmax.fill(std::numeric_limits<int>::min());
    e.pmin.fill(std::numeric_limits<int>::max());
    e.pmax.fill(std::numeric_limits<int>::min());
    ZVec z;
    ParamVec p;
    for (const Term& t : s.terms()) {
        sp.unpack(t.key, z, p);
        for (int i = 0; i < kMaxVars; ++i) {
            e.zmin[i] = std::min(e.zmin[i], z[i]);
            e.zmax[i] = std::max(e.zmax[i], z[i]);
        }
        for (int i = 0; i < kParamVars; ++i) {
            e.pmin[i] = std::min(e.pmin[i], p[i]);
            e.pmax[i] = std::max(e.pmax[i], p[i]);
        }
    }
    return e;
}

void check_product_range(const Series& a, const Series& b, const Space& sp)
{
    if (a.empty() || b.empty()) {
        return;
    }
    Extent x = extent(a, sp), y = extent(b, sp);
    for (int i = 0; i < kMaxVars; ++i) {
        if (x.zmin[i] + y.zmin[i] <= -kZBias || x.zmax[i] + y.zmax[i] >= kZBias) {
            throw ContractViolation("torus exponent out of packed range");
        }
    }
    for (int i = 0; i < kParamVars; ++i) {
        if (x.pmin[i] + y.pmin[i] <= -kPBias || x.pmax[i] + y.pmax[i] >= kPBias) {
            throw ContractViolation("parameter exponent out of packed range");
        }
    }
}

} // namespace

Space::Space(int n) : n_(n)
{
    if (n < 1 || n > kMaxVars) {
        throw ContractViolation("series engine supports 1 to 5 torus variables");
    }
    for (int j = 0; j < n; ++j) {
        y_[static_cast<std::size_t>(j)] = n - j;
    }
    zero_ = pack(ZVec{}, ParamVec{});
}

Key Space::pack(const ZVec& z, const ParamVec& p) const
{
    Key k = 0;
    for (int s = 0; s < kParamVars; ++s) {
        int v = p[s] + kPBias;
        if (v <= 0 || v >= 2 * kPBias) {
            throw ContractViolation("parameter exponent out of packed range");
        }
        k |= static_cast<Key>(static_cast<unsigned>(v)) << kPOffset(s);
    }
    for (int i = 0; i < kMaxVars; ++i) {
        int v = z[i] + kZBias;
        if (v <= 0 || v >= 2 * kZBias) {
            throw ContractViolation("torus exponent out of packed range");
        }
        k |= static_cast<Key>(static_cast<unsigned>(v)) << kZOffset(i);
    }
    return k;
}

void Space::unpack(Key k, ZVec& z, ParamVec& p) const
{
    for (int s = 0; s < kParamVars; ++s) {
        p[s] = static_cast<int>((k >> kPOffset(s)) & ((1U << kPBits) - 1)) - kPBias;
    }
    for (int i = 0; i < kMaxVars; ++i) {
        z[i] = static_cast<int>((k >> kZOffset(i)) & ((1U << kZBits) - 1)) - kZBias;
    }
}

int Space::ydeg_of(const ZVec& z) const
{
    int d = 0;
    for (int j = 0; j < n_; ++j) {
        d += y_[static_cast<std::size_t>(j)] * z[j];
    }
    return d;
}

Series Series::monomial(const Space& sp, const ZVec& z, const ParamVec& p, std::int64_t c)
{
    Series s;
    if (c != 0) {
        s.terms_.push_back(Term{sp.pack(z, p), c, sp.ydeg_of(z)});
    }
    return s;
}

Series Series::one(const Space& sp)
{
    return monomial(sp, ZVec{}, ParamVec{}, 1);
}

void Series::normalize()
{
    std::sort(terms_.begin(), terms_.end(), term_order);
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const Term& t : terms_) {
        if (!out.empty() && out.back().key == t.key) {
            out.back().c = checked_add(out.back().c, t.c);
        } else {
            out.push_back(t);
        }
        if (out.back().c == 0) {
            out.pop_back();
        }
    }
    terms_ = std::move(out);
}

struct Accumulator::Impl {
    absl::flat_hash_map<Key, std::pair<std::int64_t, int>, KeyHash> map;
};

Accumulator::Accumulator() : impl_(new Impl) {}
Accumulator::~Accumulator() { delete impl_; }

void Accumulator::add(Key k, int ydeg, std::int64_t c)
{
    auto [it, inserted] = impl_->map.try_emplace(k, c, ydeg);
    if (!inserted) {
        it->second.first = checked_add(it->second.first, c);
    }
}

void Accumulator::add(const Series& s, std::int64_t factor)
{
    for (const Term& t : s.terms()) {
        add(t.key, t.ydeg, checked_mul(t.c, factor));
    }
}

void Accumulator::add_product(const Series& a, const Series& b, int lo, const Space& sp, std::int64_t factor)
{
    check_product_range(a, b, sp);
    const Key zero = sp.zero();
    const auto& bt = b.terms();
    for (const Term& x : a.terms()) {
        const int need = lo - x.ydeg;
        const std::int64_t cx = checked_mul(x.c, factor);
        for (const Term& y : bt) {
            if (y.ydeg < need) {
                break;
            }
            add(key_add(x.key, y.key, zero), x.ydeg + y.ydeg, checked_mul(cx, y.c));
        }
    }
}

Series Accumulator::take()
{
    Series s;
    auto& terms = s.mutable_terms();
    terms.reserve(impl_->map.size());
    for (const auto& [k, v] : impl_->map) {
        if (v.first != 0) {
            terms.push_back(Term{k, v.first, v.second});
        }
    }
    impl_->map.clear();
    std::sort(terms.begin(), terms.end(), term_order);
    return s;
}

Series Series::mul_trunc(const Series& a, const Series& b, int lo, const Space& sp)
{
    if (a.size() == 1 || b.size() == 1) {
        // monomial fast path keeps the order
        const Series& mono = a.size() == 1 ? a : b;
        const Series& other = a.size() == 1 ? b : a;
        check_product_range(a, b, sp);
        const Term& m = mono.terms()[0];
        Series out;
        out.terms_.reserve(other.size());
        for (const Term& t : other.terms()) {
            if (t.ydeg + m.ydeg < lo) {
                break;
            }
            out.terms_.push_back(Term{key_add(t.key, m.key, sp.zero()), checked_mul(t.c, m.c), t.ydeg + m.ydeg});
        }
        return out;
    }
    Accumulator acc;
    acc.add_product(a, b, lo, sp);
    return acc.take();
}

Series ratio_series(const BinomialRatio& r, int depth, const Space& sp)
{
    const int d = sp.ydeg_of(r.w);
    if (d == 0) {
        throw ContractViolation("composite variable has zero grading");
    }
    auto neg = [](const ParamVec& v) {
        ParamVec o;
        for (int i = 0; i < kParamVars; ++i) {
            o[i] = -v[i];
        }
        return o;
    };
    auto sum = [](const ParamVec& u, const ParamVec& v, int k = 1) {
        ParamVec o;
        for (int i = 0; i < kParamVars; ++i) {
            o[i] = u[i] + k * v[i];
        }
        return o;
    };
    // step monomial X = W^{-1} (d > 0) or W (d < 0), lowering ydeg by |d|
    ZVec step{};
    for (int i = 0; i < kMaxVars; ++i) {
        step[i] = d > 0 ? -r.w[i] : r.w[i];
    }
    const int ad = d > 0 ? d : -d;
    const int kmax = depth / ad;
    // prefactor, numerator correction and geometric ratio
    ParamVec pre, num_p, geo_p;
    std::int64_t pre_c, num_c, geo_c;
    if (d > 0) {
        pre = sum(sum(r.A, neg(r.g)), neg(r.B));
        pre_c = r.a * r.b;
        num_p = neg(r.A);
        num_c = r.c1 * r.a;
        geo_p = neg(r.B);
        geo_c = -(r.c2 * r.b);
    } else {
        pre = neg(r.g);
        pre_c = r.c1 * r.c2;
        num_p = r.A;
        num_c = r.a * r.c1;
        geo_p = r.B;
        geo_c = -(r.b * r.c2);
    }
    // coefficient of X^k: geo^k + num * geo^{k-1}
    Series s;
    auto& terms = s.mutable_terms();
    std::int64_t gpow = 1;
    std::int64_t gprev = 0;
    for (int k = 0; k <= kmax; ++k) {
        ZVec z{};
        for (int i = 0; i < kMaxVars; ++i) {
            z[i] = k * step[i];
        }
        terms.push_back(Term{sp.pack(z, sum(pre, geo_p, k)), pre_c * gpow, -k * ad});
        if (k >= 1) {
            terms.push_back(Term{sp.pack(z, sum(sum(pre, num_p), geo_p, k - 1)), pre_c * num_c * gprev, -k * ad});
        }
        gprev = gpow;
        gpow *= geo_c;
    }
    s.normalize();
    return s;
}

ParamExp to_param_exp(const ParamVec& p)
{
    ParamExp e{};
    e[kQh] = p[kQh] * (kQhScale / 2);
    for (int s = 1; s < kParamVars; ++s) {
        e[s] = p[s];
    }
    return e;
}

} // namespace qpoly::flat
