// Copyright (c) 2026 The qpoly authors
// Use of this source code is governed by the MIT license that can be found in the LICENSE file.

#include "qpoly/numeric.hpp"

#include "qpoly/errors.hpp"

#include <cmath>
#include <sstream>

namespace qpoly {

namespace {

constexpr int kRootOrder = 120; // w = qh^{1/60}, w^120 = q

long double to_ld(const Rat& r)
{
    return static_cast<long double>(r.get_d());
}

long double sqrt_ld(const Rat& r)
{
    // long double precision for the square root of a rational
    long double num = std::strtold(r.get_num().get_str().c_str(), nullptr);
    long double den = std::strtold(r.get_den().get_str().c_str(), nullptr);
    return std::sqrt(num / den);
}

long floor_div(long a, long b)
{
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
    }
    return q;
}

// Element of the formal ring: key = (w exponent mod 120, parity bits of the five square roots).
using RingKey = std::pair<int, unsigned>;
using RingElt = std::map<RingKey, Rat>;

struct RingImage {
    RingKey key;
    Rat coef;
};

RingImage monomial_image(const ParamExp& e, const NumericPoint& pt)
{
    // radicands of s_t, s_a, s_b, s_c, s_d
    const std::array<Rat, 5> rad = {pt.t, pt.a, Rat(-pt.b), pt.c, Rat(-pt.d)};
    long wexp = e[kQh];
    Rat coef = 1;
    unsigned bits = 0;
    for (int i = 0; i < 5; ++i) {
        const long m = e[i + 1];
        if (i >= 3) {
            wexp -= 30 * m;
        }
        const long half = floor_div(m, 2);
        coef *= pow(rad[static_cast<std::size_t>(i)], half);
        if (m - 2 * half == 1) {
            bits |= 1U << i;
        }
    }
    const long k = floor_div(wexp, kRootOrder);
    coef *= pow(pt.q, k);
    return RingImage{RingKey{static_cast<int>(wexp - k * kRootOrder), bits}, coef};
}

RingElt ring_image(const ParamPoly& p, const NumericPoint& pt)
{
    RingElt out;
    for (const auto& [key, c] : p.terms()) {
        RingImage im = monomial_image(ParamPoly::unpack(key), pt);
        Rat& slot = out[im.key];
        slot += c * im.coef;
    }
    for (auto it = out.begin(); it != out.end();) {
        it = (it->second == 0) ? out.erase(it) : std::next(it);
    }
    return out;
}

} // namespace

void NumericPoint::validate() const
{
    if (!(q > 0 && q < 1)) {
        throw ContractViolation("numeric point needs 0 < q < 1");
    }
    if (!(t > 0 && a > 0 && b < 0 && c > 0 && d < 0)) {
        throw ContractViolation("numeric point needs t, a, c > 0 and b, d < 0 (real half parameters)");
    }
}

std::array<long double, kParamVars> NumericPoint::half_values() const
{
    validate();
    std::array<long double, kParamVars> h{};
    h[kQh] = sqrt_ld(q);
    h[kTh] = sqrt_ld(t);
    h[kGa] = sqrt_ld(a);
    h[kGb] = sqrt_ld(Rat(-b));
    h[kGc] = std::sqrt(to_ld(c) / h[kQh]);
    h[kGd] = std::sqrt(to_ld(Rat(-d)) / h[kQh]);
    return h;
}

std::string NumericPoint::to_string() const
{
    std::ostringstream os;
    os << "q=" << qpoly::to_string(q) << ",t=" << qpoly::to_string(t) << ",a=" << qpoly::to_string(a)
       << ",b=" << qpoly::to_string(b) << ",c=" << qpoly::to_string(c) << ",d=" << qpoly::to_string(d);
    return os.str();
}

NumericPoint parse_numeric_point(const std::string& text)
{
    NumericPoint pt;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) {
            continue;
        }
        auto eq = item.find('=');
        if (eq == std::string::npos) {
            throw ParseError("numeric point entry without '=': " + item);
        }
        const std::string name = item.substr(0, eq);
        const Rat v = parse_rat(item.substr(eq + 1));
        if (name == "q") {
            pt.q = v;
        } else if (name == "t") {
            pt.t = v;
        } else if (name == "a") {
            pt.a = v;
        } else if (name == "b") {
            pt.b = v;
        } else if (name == "c") {
            pt.c = v;
        } else if (name == "d") {
            pt.d = v;
        } else {
            throw ParseError("unknown numeric parameter: " + name);
        }
    }
    return pt;
}

long double eval_ld(const ParamPoly& p, const std::array<long double, kParamVars>& half)
{
    long double s = 0;
    for (const auto& [key, c] : p.terms()) {
        const ParamExp e = ParamPoly::unpack(key);
        long double term = to_ld(c);
        term *= std::pow(half[kQh], static_cast<long double>(e[kQh]) / kQhScale);
        for (int i = 1; i < kParamVars; ++i) {
            if (e[i] != 0) {
                term *= std::pow(half[static_cast<std::size_t>(i)], static_cast<long double>(e[i]));
            }
        }
        s += term;
    }
    return s;
}

long double eval_ld(const ParamRat& f, const std::array<long double, kParamVars>& half)
{
    long double v = eval_ld(f.num(), half);
    for (const auto& [atom, mult] : f.atoms()) {
        v /= std::pow(eval_ld(atom, half), static_cast<long double>(mult));
    }
    return v;
}

Rat eval_rational(const ParamRat& f, const NumericPoint& pt)
{
    pt.validate();
    const RingElt den = ring_image(f.den(), pt);
    if (den.empty()) {
        throw DenominatorVanishes("denominator vanishes at " + pt.to_string());
    }
    const RingElt num = ring_image(f.num(), pt);
    // f * den = num componentwise with a rational f
    const auto& [k0, d0] = *den.begin();
    auto it = num.find(k0);
    const Rat value = it == num.end() ? Rat(0) : Rat(it->second / d0);
    for (const auto& [k, d] : den) {
        auto jt = num.find(k);
        const Rat nk = jt == num.end() ? Rat(0) : jt->second;
        if (nk != value * d) {
            throw ContractViolation("value is not rational in the ordinary parameters");
        }
    }
    for (const auto& [k, nk] : num) {
        if (den.find(k) == den.end() && nk != 0) {
            throw ContractViolation("value is not rational in the ordinary parameters");
        }
    }
    return value;
}

bool vanishes_at(const ParamPoly& p, const NumericPoint& pt)
{
    return ring_image(p, pt).empty();
}

NumPoly to_numeric(const LaurentPoly& f, const std::array<long double, kParamVars>& half)
{
    NumPoly out;
    for (const auto& [w, c] : f.terms()) {
        out[w] = eval_ld(c, half);
    }
    return out;
}

} // namespace qpoly
