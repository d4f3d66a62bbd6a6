// Copyright (c) 2026 The qpoly authors
// Use of this source code is governed by the MIT license that can be found in the LICENSE file.

#include "qpoly/param_poly.hpp"

#include "qpoly/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace qpoly {

namespace {

constexpr ParamPoly::Key field_mask = (ParamPoly::Key(1) << ParamPoly::kBits) - 1;

int shift_of(int slot)
{
    // slot 0 occupies the most significant field so key order is lex order
    return ParamPoly::kBits * (kParamVars - 1 - slot);
}

const char* slot_name(int slot, VarSet vars)
{
    static const char* half[kParamVars] = {"qh", "th", "ga", "gb", "gc", "gd"};
    static const char* jac[kParamVars] = {"g", "tg0", "tg1", "x3", "x4", "x5"};
    return vars == VarSet::Half ? half[slot] : jac[slot];
}

} // namespace

ParamPoly::ParamPoly(long c)
{
    if (c != 0) {
        terms_.emplace_back(one_key(), Rat(c));
    }
}

ParamPoly::ParamPoly(const Rat& c)
{
    if (c != 0) {
        terms_.emplace_back(one_key(), c);
    }
}

ParamPoly::Key ParamPoly::pack(const ParamExp& e)
{
    Key k = 0;
    for (int s = 0; s < kParamVars; ++s) {
        if (e[s] <= -kBias || e[s] >= kBias) {
            throw ContractViolation("parameter exponent out of range");
        }
        k |= Key(static_cast<unsigned>(e[s] + kBias)) << shift_of(s);
    }
    return k;
}

ParamExp ParamPoly::unpack(Key k)
{
    ParamExp e{};
    for (int s = 0; s < kParamVars; ++s) {
        e[s] = static_cast<int>((k >> shift_of(s)) & field_mask) - kBias;
    }
    return e;
}

ParamPoly::Key ParamPoly::one_key()
{
    static const Key k = pack(ParamExp{});
    return k;
}

ParamPoly ParamPoly::monomial(const ParamExp& e, const Rat& c)
{
    ParamPoly p;
    if (c != 0) {
        p.terms_.emplace_back(pack(e), c);
    }
    return p;
}

ParamPoly ParamPoly::var(int slot, int power)
{
    ParamExp e{};
    e[slot] = slot == kQh ? power * kQhScale : power;
    return monomial(e);
}

ParamPoly ParamPoly::qh_pow(int num, int den)
{
    if (den <= 0 || (num * kQhScale) % den != 0) {
        throw ContractViolation("qh power not representable");
    }
    ParamExp e{};
    e[kQh] = num * kQhScale / den;
    return monomial(e);
}

bool ParamPoly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first == one_key());
}

Rat ParamPoly::constant_term() const
{
    const Key one = one_key();
    auto it = std::lower_bound(terms_.begin(), terms_.end(), one,
                               [](const Term& t, Key k) { return t.first < k; });
    if (it != terms_.end() && it->first == one) {
        return it->second;
    }
    return Rat(0);
}

ParamPoly ParamPoly::from_terms(std::vector<Term> terms)
{
    ParamPoly p;
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

void ParamPoly::normalize()
{
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms_.size();) {
        Key k = terms_[i].first;
        Rat c = terms_[i].second;
        std::size_t j = i + 1;
        while (j < terms_.size() && terms_[j].first == k) {
            c += terms_[j].second;
            ++j;
        }
        if (c != 0) {
            terms_[out].first = k;
            terms_[out].second = std::move(c);
            ++out;
        }
        i = j;
    }
    terms_.resize(out);
}

ParamPoly ParamPoly::operator-() const
{
    ParamPoly r = *this;
    for (auto& t : r.terms_) {
        t.second = -t.second;
    }
    return r;
}

namespace {

std::vector<ParamPoly::Term> merge(const std::vector<ParamPoly::Term>& a,
                                   const std::vector<ParamPoly::Term>& b, bool subtract)
{
    std::vector<ParamPoly::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, subtract ? Rat(-b[j].second) : b[j].second);
            ++j;
        } else {
            Rat c = subtract ? Rat(a[i].second - b[j].second) : Rat(a[i].second + b[j].second);
            if (c != 0) {
                out.emplace_back(a[i].first, std::move(c));
            }
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

ParamPoly& ParamPoly::operator+=(const ParamPoly& o)
{
    terms_ = merge(terms_, o.terms_, false);
    return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o)
{
    terms_ = merge(terms_, o.terms_, true);
    return *this;
}

ParamPoly& ParamPoly::operator*=(const Rat& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) {
        t.second *= c;
    }
    return *this;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& o)
{
    *this = *this * o;
    return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b)
{
    if (a.is_zero() || b.is_zero()) {
        return ParamPoly();
    }
    // Range check every field so packed addition cannot carry across fields.
    ParamExp amin = a.min_exponents(), amax = a.max_exponents();
    ParamExp bmin = b.min_exponents(), bmax = b.max_exponents();
    for (int s = 0; s < kParamVars; ++s) {
        if (amin[s] + bmin[s] <= -ParamPoly::kBias || amax[s] + bmax[s] >= ParamPoly::kBias) {
            throw ContractViolation("parameter exponent overflow in product");
        }
    }
    const ParamPoly::Key bias = ParamPoly::one_key();
    std::vector<ParamPoly::Term> out;
    out.reserve(a.size() * b.size());
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            out.emplace_back(ka + kb - bias, ca * cb);
        }
    }
    return ParamPoly::from_terms(std::move(out));
}

bool operator==(const ParamPoly& a, const ParamPoly& b)
{
    return a.terms_ == b.terms_;
}

ParamPoly ParamPoly::pow(unsigned e) const
{
    ParamPoly result(1);
    ParamPoly base = *this;
    while (e != 0) {
        if (e & 1U) {
            result *= base;
        }
        e >>= 1;
        if (e != 0) {
            base = base * base;
        }
    }
    return result;
}

ParamPoly ParamPoly::shifted(const ParamExp& e) const
{
    ParamPoly r;
    r.terms_.reserve(terms_.size());
    for (const auto& [k, c] : terms_) {
        ParamExp x = unpack(k);
        for (int s = 0; s < kParamVars; ++s) {
            x[s] += e[s];
        }
        r.terms_.emplace_back(pack(x), c);
    }
    return r;
}

unsigned ParamPoly::used_slots() const
{
    unsigned mask = 0;
    for (const auto& t : terms_) {
        ParamExp e = unpack(t.first);
        for (int s = 0; s < kParamVars; ++s) {
            if (e[s] != 0) {
                mask |= 1U << s;
            }
        }
    }
    return mask;
}

ParamExp ParamPoly::min_exponents() const
{
    ParamExp m{};
    bool first = true;
    for (const auto& t : terms_) {
        ParamExp e = unpack(t.first);
        for (int s = 0; s < kParamVars; ++s) {
            m[s] = first ? e[s] : std::min(m[s], e[s]);
        }
        first = false;
    }
    return m;
}

ParamExp ParamPoly::max_exponents() const
{
    ParamExp m{};
    bool first = true;
    for (const auto& t : terms_) {
        ParamExp e = unpack(t.first);
        for (int s = 0; s < kParamVars; ++s) {
            m[s] = first ? e[s] : std::max(m[s], e[s]);
        }
        first = false;
    }
    return m;
}

Rat ParamPoly::content() const
{
    if (terms_.empty()) {
        return Rat(1);
    }
    Int num_gcd = 0;
    Int den_lcm = 1;
    for (const auto& t : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.second.get_num_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.second.get_den_mpz_t());
    }
    Rat c(num_gcd, den_lcm);
    c.canonicalize();
    if (terms_.back().second < 0) {
        c = -c;
    }
    return c;
}

namespace {

using PKey = ParamPoly::Key;
using PTerm = ParamPoly::Term;

// Division loop shared by the exact and the modular variants. The remainder
// lives in an ordered map so that each step touches only the terms of b.
template <class C, class Conv, class Div, class SubMul, class IsZero, class Emit>
bool divide_loop(const std::vector<PTerm>& a, const std::vector<PTerm>& b, Conv conv, Div div, SubMul submul,
                 IsZero is_zero, Emit emit)
{
    const PKey bias = ParamPoly::one_key();
    const PKey lead_b = b.back().first;
    const C lc_b = conv(b.back().second);
    const PKey trail_bound = a.front().first + bias - b.front().first;
    const ParamExp be = ParamPoly::unpack(lead_b);
    // Per-slot box for the quotient: in an exact division the extreme
    // exponents of each slot add. Without it lex descent need not terminate
    // for Laurent inputs.
    ParamExp qmin;
    ParamExp qmax;
    {
        ParamExp amin = ParamPoly::unpack(a.front().first);
        ParamExp amax = amin;
        ParamExp bmin = ParamPoly::unpack(b.front().first);
        ParamExp bmax = bmin;
        for (const auto& t : a) {
            const ParamExp e = ParamPoly::unpack(t.first);
            for (int s = 0; s < kParamVars; ++s) {
                amin[s] = std::min(amin[s], e[s]);
                amax[s] = std::max(amax[s], e[s]);
            }
        }
        for (const auto& t : b) {
            const ParamExp e = ParamPoly::unpack(t.first);
            for (int s = 0; s < kParamVars; ++s) {
                bmin[s] = std::min(bmin[s], e[s]);
                bmax[s] = std::max(bmax[s], e[s]);
            }
        }
        for (int s = 0; s < kParamVars; ++s) {
            qmin[s] = amin[s] - bmin[s];
            qmax[s] = amax[s] - bmax[s];
        }
    }
    std::vector<std::pair<PKey, C>> bt;
    bt.reserve(b.size());
    for (const auto& [k, c] : b) {
        bt.emplace_back(k, conv(c));
    }
    std::map<PKey, C, std::greater<PKey>> rem;
    for (const auto& [k, c] : a) {
        rem.emplace_hint(rem.end(), k, conv(c));
    }
    while (!rem.empty()) {
        auto top = rem.begin();
        if (is_zero(top->second)) {
            rem.erase(top);
            continue;
        }
        const PKey qk = top->first + bias - lead_b;
        if (qk < trail_bound) {
            return false;
        }
        const ParamExp qe = ParamPoly::unpack(qk);
        const ParamExp le = ParamPoly::unpack(top->first);
        for (int s = 0; s < kParamVars; ++s) {
            if (qe[s] != le[s] - be[s] || qe[s] < qmin[s] || qe[s] > qmax[s]) {
                return false;
            }
        }
        const C qc = div(top->second, lc_b);
        for (const auto& [kb, cb] : bt) {
            auto [it, inserted] = rem.try_emplace(qk + kb - bias, C(0));
            submul(it->second, qc, cb);
        }
        auto lead = rem.find(top->first);
        if (lead != rem.end()) {
            rem.erase(lead);
        }
        emit(qk, qc);
    }
    return true;
}

constexpr std::uint64_t kPrime = (std::uint64_t(1) << 61) - 1;

std::uint64_t mulmod(std::uint64_t x, std::uint64_t y)
{
    unsigned __int128 p = static_cast<unsigned __int128>(x) * y;
    std::uint64_t lo = static_cast<std::uint64_t>(p & kPrime);
    std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
    std::uint64_t r = lo + hi;
    return r >= kPrime ? r - kPrime : r;
}

std::uint64_t powmod(std::uint64_t x, std::uint64_t e)
{
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) {
            r = mulmod(r, x);
        }
        x = mulmod(x, x);
        e >>= 1;
    }
    return r;
}

std::optional<std::uint64_t> reduce_mod(const Rat& c)
{
    const std::uint64_t num = mpz_fdiv_ui(c.get_num_mpz_t(), kPrime);
    const std::uint64_t den = mpz_fdiv_ui(c.get_den_mpz_t(), kPrime);
    if (den == 0) {
        return std::nullopt;
    }
    return mulmod(num, powmod(den, kPrime - 2));
}

// nullopt when some coefficient cannot be reduced; otherwise whether the
// division succeeds modulo the prime.
std::optional<bool> divides_mod_prime(const std::vector<PTerm>& a, const std::vector<PTerm>& b)
{
    for (const auto* v : {&a, &b}) {
        for (const auto& t : *v) {
            if (!reduce_mod(t.second)) {
                return std::nullopt;
            }
        }
    }
    if (*reduce_mod(b.back().second) == 0) {
        return std::nullopt;
    }
    return divide_loop<std::uint64_t>(
        a, b, [](const Rat& c) { return *reduce_mod(c); },
        [](std::uint64_t x, std::uint64_t y) { return mulmod(x, powmod(y, kPrime - 2)); },
        [](std::uint64_t& acc, std::uint64_t x, std::uint64_t y) {
            std::uint64_t p = mulmod(x, y);
            acc = acc >= p ? acc - p : acc + kPrime - p;
        },
        [](std::uint64_t c) { return c == 0; }, [](PKey, std::uint64_t) {});
}

} // namespace

std::optional<ParamPoly> ParamPoly::divide_exact(const ParamPoly& b) const
{
    if (b.is_zero()) {
        throw ContractViolation("division by the zero polynomial");
    }
    if (is_zero()) {
        return ParamPoly();
    }
    if (b.is_monomial()) {
        ParamExp e = unpack(b.terms_[0].first);
        for (auto& x : e) {
            x = -x;
        }
        ParamPoly q = shifted(e);
        q *= Rat(1) / b.terms_[0].second;
        return q;
    }
    // Sparse division in lex order. The quotient's support lies between
    // lead(a)-lead(b) and trail(a)-trail(b); leaving that window means the
    // division is not exact. Most trial divisions fail, so the division is
    // first run modulo a prime with machine arithmetic.
    if (auto ok = divides_mod_prime(terms_, b.terms_); ok.has_value() && !*ok) {
        return std::nullopt;
    }
    std::vector<Term> quotient;
    const bool exact = divide_loop<Rat>(
        terms_, b.terms_, [](const Rat& c) { return c; }, [](const Rat& x, const Rat& y) { return Rat(x / y); },
        [](Rat& acc, const Rat& x, const Rat& y) { acc -= x * y; }, [](const Rat& c) { return c == 0; },
        [&](Key k, const Rat& c) { quotient.emplace_back(k, c); });
    if (!exact) {
        return std::nullopt;
    }
    std::reverse(quotient.begin(), quotient.end());
    return from_terms(std::move(quotient));
}

Rat ParamPoly::evaluate(const std::array<Rat, kParamVars>& values) const
{
    Rat total(0);
    for (const auto& [k, c] : terms_) {
        ParamExp e = unpack(k);
        Rat term = c;
        for (int s = 0; s < kParamVars; ++s) {
            int p = e[s];
            if (p == 0) {
                continue;
            }
            if (s == kQh) {
                if (p % kQhScale != 0) {
                    throw ContractViolation("cannot evaluate a fractional power of qh");
                }
                p /= kQhScale;
            }
            if (p < 0 && values[s] == 0) {
                throw DenominatorVanishes("evaluation at a pole of a Laurent monomial");
            }
            term *= qpoly::pow(values[s], p);
        }
        total += term;
    }
    return total;
}

std::string ParamPoly::to_string(VarSet vars) const
{
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Rat& c = it->second;
        ParamExp e = unpack(it->first);
        bool is_one = it->first == one_key();
        Rat mag = abs(c);
        if (first) {
            if (c < 0) {
                os << "-";
            }
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool wrote = false;
        if (mag != 1 || is_one) {
            os << mag.get_str();
            wrote = true;
        }
        for (int s = 0; s < kParamVars; ++s) {
            if (e[s] == 0) {
                continue;
            }
            if (wrote) {
                os << "*";
            }
            os << slot_name(s, vars);
            int num = e[s];
            int den = s == kQh ? kQhScale : 1;
            int g = std::gcd(num < 0 ? -num : num, den);
            num /= g;
            den /= g;
            if (den != 1) {
                os << "^(" << num << "/" << den << ")";
            } else if (num != 1) {
                os << "^" << num;
            }
            wrote = true;
        }
    }
    return os.str();
}

} // namespace qpoly
