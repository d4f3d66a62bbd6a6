// Copyright (c) 2026 The qpoly authors
// Use of this source code is governed by the MIT license that can be found in the LICENSE file.

#include "qpoly/param_rat.hpp"

#include "qpoly/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace qpoly {

namespace {

// Splits p = unit * atom with atom canonical. unit is a monomial times a
// rational constant.
std::pair<ParamPoly, ParamPoly> split_unit(const ParamPoly& p)
{
    ParamExp lo = p.min_exponents();
    ParamExp neg{};
    for (int s = 0; s < kParamVars; ++s) {
        neg[s] = -lo[s];
    }
    ParamPoly atom = p.shifted(neg);
    Rat c = atom.content();
    atom *= Rat(1) / c;
    return {ParamPoly::monomial(lo, c), atom};
}

ParamPoly invert_unit(const ParamPoly& unit)
{
    ParamExp e = ParamPoly::unpack(unit.terms()[0].first);
    for (auto& x : e) {
        x = -x;
    }
    return ParamPoly::monomial(e, Rat(1) / unit.terms()[0].second);
}

// Cheap necessary condition for b | a given canonical b (min exponents 0).
bool may_divide(const ParamPoly& a, const ParamPoly& b)
{
    if (b.size() > a.size() * 64 + 64) {
        return false;
    }
    ParamExp amin = a.min_exponents(), amax = a.max_exponents();
    ParamExp bmax = b.max_exponents();
    for (int s = 0; s < kParamVars; ++s) {
        if (bmax[s] > amax[s] - amin[s]) {
            return false;
        }
    }
    return true;
}

int single_slot(unsigned mask)
{
    if (mask == 0 || (mask & (mask - 1)) != 0) {
        return -1;
    }
    int s = 0;
    while (!(mask & (1U << s))) {
        ++s;
    }
    return s;
}

} // namespace

ParamRat ParamRat::fraction(const ParamPoly& num, const ParamPoly& den)
{
    if (den.is_zero()) {
        throw ZeroDenominator("fraction with zero denominator");
    }
    ParamRat r;
    r.num_ = num;
    r.add_factor(den, 1);
    r.cancel();
    return r;
}

ParamRat ParamRat::unreduced(const ParamPoly& num, const ParamPoly& den)
{
    if (den.is_zero()) {
        throw ZeroDenominator("fraction with zero denominator");
    }
    ParamRat r;
    auto [unit, atom] = split_unit(den);
    r.num_ = num * invert_unit(unit);
    if (!atom.is_constant()) {
        r.den_.emplace_back(atom, 1);
    }
    return r;
}

ParamPoly ParamRat::den() const
{
    ParamPoly d(1);
    for (const auto& [f, m] : den_) {
        d = d * f.pow(static_cast<unsigned>(m));
    }
    return d;
}

Rat ParamRat::constant_value() const
{
    if (!is_constant()) {
        throw ContractViolation("ParamRat is not a constant");
    }
    return num_.constant_term();
}

void ParamRat::add_factor(const ParamPoly& p, int mult)
{
    if (p.is_zero()) {
        throw ZeroDenominator("zero factor in denominator");
    }
    auto [unit, atom] = split_unit(p);
    num_ = num_ * invert_unit(unit).pow(static_cast<unsigned>(mult));
    if (atom.is_constant()) {
        return;
    }
    // Refine against existing atoms so that shared factors are recognised.
    for (std::size_t i = 0; i < den_.size(); ++i) {
        ParamPoly& f = den_[i].first;
        if (f == atom) {
            den_[i].second += mult;
            return;
        }
        if (may_divide(atom, f)) {
            if (auto h = atom.divide_exact(f)) {
                den_[i].second += mult;
                add_factor(*h, mult);
                return;
            }
        }
        if (may_divide(f, atom)) {
            if (auto h = f.divide_exact(atom)) {
                int mf = den_[i].second;
                ParamPoly rest = *h;
                den_.erase(den_.begin() + static_cast<long>(i));
                add_factor(atom, mf + mult);
                add_factor(rest, mf);
                return;
            }
        }
    }
    den_.emplace_back(atom, mult);
}

void ParamRat::cancel()
{
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    for (auto& [f, m] : den_) {
        while (m > 0 && may_divide(num_, f)) {
            auto q = num_.divide_exact(f);
            if (!q) {
                break;
            }
            num_ = std::move(*q);
            --m;
        }
    }
    den_.erase(std::remove_if(den_.begin(), den_.end(), [](const Atom& a) { return a.second == 0; }),
               den_.end());
    if (den_.empty()) {
        return;
    }
    // Single-slot elements get a complete reduction.
    unsigned mask = num_.used_slots();
    for (const auto& a : den_) {
        mask |= a.first.used_slots();
    }
    int slot = single_slot(mask);
    if (slot >= 0) {
        ParamPoly d = den();
        ParamPoly g = univariate_gcd(num_, d, slot);
        if (!g.is_constant()) {
            num_ = *num_.divide_exact(g);
            d = *d.divide_exact(g);
        }
        den_.clear();
        auto [unit, atom] = split_unit(d);
        num_ = num_ * invert_unit(unit);
        if (!atom.is_constant()) {
            den_.emplace_back(atom, 1);
        }
    }
    std::sort(den_.begin(), den_.end(), [](const Atom& a, const Atom& b) {
        if (a.first.size() != b.first.size()) {
            return a.first.size() < b.first.size();
        }
        return a.first.terms() < b.first.terms();
    });
}

ParamRat ParamRat::operator-() const
{
    ParamRat r = *this;
    r.num_ = -r.num_;
    return r;
}

ParamRat& ParamRat::operator+=(const ParamRat& o)
{
    if (o.is_zero()) {
        return *this;
    }
    if (is_zero()) {
        return *this = o;
    }
    if (den_ == o.den_) {
        num_ += o.num_;
        cancel();
        return *this;
    }
    // lcm of the atom lists, then scale both numerators
    std::vector<Atom> lcm = den_;
    for (const auto& [f, m] : o.den_) {
        auto it = std::find_if(lcm.begin(), lcm.end(), [&](const Atom& a) { return a.first == f; });
        if (it == lcm.end()) {
            lcm.emplace_back(f, m);
        } else {
            it->second = std::max(it->second, m);
        }
    }
    auto scale = [&](const ParamRat& x) {
        ParamPoly s = x.num_;
        for (const auto& [f, m] : lcm) {
            int have = 0;
            for (const auto& [g, k] : x.den_) {
                if (g == f) {
                    have = k;
                }
            }
            if (m > have) {
                s = s * f.pow(static_cast<unsigned>(m - have));
            }
        }
        return s;
    };
    ParamPoly sum = scale(*this) + scale(o);
    num_ = std::move(sum);
    den_ = std::move(lcm);
    cancel();
    return *this;
}

ParamRat& ParamRat::operator-=(const ParamRat& o)
{
    return *this += -o;
}

ParamRat& ParamRat::operator*=(const ParamRat& o)
{
    if (is_zero() || o.is_zero()) {
        num_ = ParamPoly();
        den_.clear();
        return *this;
    }
    // cross-cancel before multiplying to keep the numerator small
    ParamPoly a = num_;
    ParamPoly b = o.num_;
    std::vector<Atom> da = den_;
    std::vector<Atom> db = o.den_;
    auto cross = [](ParamPoly& n, std::vector<Atom>& d) {
        for (auto& [f, m] : d) {
            while (m > 0 && may_divide(n, f)) {
                auto q = n.divide_exact(f);
                if (!q) {
                    break;
                }
                n = std::move(*q);
                --m;
            }
        }
    };
    cross(a, db);
    cross(b, da);
    num_ = a * b;
    den_.clear();
    for (const auto& [f, m] : da) {
        if (m > 0) {
            den_.emplace_back(f, m);
        }
    }
    for (const auto& [f, m] : db) {
        if (m > 0) {
            add_factor(f, m);
        }
    }
    cancel();
    return *this;
}

ParamRat& ParamRat::operator/=(const ParamRat& o)
{
    if (o.is_zero()) {
        throw ZeroDenominator("division by zero in the parameter field");
    }
    ParamRat inv;
    inv.num_ = o.den();
    inv.add_factor(o.num_, 1);
    return *this *= inv;
}

bool operator==(const ParamRat& a, const ParamRat& b)
{
    if (a.den_ == b.den_) {
        return a.num_ == b.num_;
    }
    return a.num_ * b.den() == b.num_ * a.den();
}

ParamRat ParamRat::pow(int e) const
{
    if (e < 0) {
        return ParamRat(1) / pow(-e);
    }
    ParamRat r;
    r.num_ = num_.pow(static_cast<unsigned>(e));
    for (const auto& [f, m] : den_) {
        r.den_.emplace_back(f, m * e);
    }
    if (e == 0) {
        r.den_.clear();
    }
    return r;
}

Rat ParamRat::evaluate(const std::array<Rat, kParamVars>& values) const
{
    Rat d = den().evaluate(values);
    if (d == 0) {
        throw DenominatorVanishes("denominator vanishes at the evaluation point");
    }
    return num_.evaluate(values) / d;
}

std::string ParamRat::to_string(VarSet vars) const
{
    if (den_.empty()) {
        return num_.to_string(vars);
    }
    return "(" + num_.to_string(vars) + ")/(" + den().to_string(vars) + ")";
}

ParamPoly univariate_gcd(const ParamPoly& a, const ParamPoly& b, int slot)
{
    if (a.is_zero()) {
        return b.is_zero() ? ParamPoly() : ParamPoly(1);
    }
    if (b.is_zero()) {
        return ParamPoly(1);
    }
    // Shift each to min exponent zero and compress by the common step.
    auto exps = [&](const ParamPoly& p) {
        std::vector<std::pair<int, Rat>> out;
        for (const auto& [k, c] : p.terms()) {
            out.emplace_back(ParamPoly::unpack(k)[slot], c);
        }
        return out;
    };
    auto ea = exps(a);
    auto eb = exps(b);
    int amin = ea.front().first, bmin = eb.front().first;
    for (auto& t : ea) amin = std::min(amin, t.first);
    for (auto& t : eb) bmin = std::min(bmin, t.first);
    int step = 0;
    for (auto& t : ea) step = std::gcd(step, t.first - amin);
    for (auto& t : eb) step = std::gcd(step, t.first - bmin);
    if (step == 0) {
        return ParamPoly(1);
    }
    auto dense = [&](const std::vector<std::pair<int, Rat>>& e, int lo) {
        int deg = 0;
        for (auto& t : e) deg = std::max(deg, (t.first - lo) / step);
        std::vector<Rat> v(static_cast<std::size_t>(deg) + 1);
        for (auto& t : e) v[static_cast<std::size_t>((t.first - lo) / step)] += t.second;
        return v;
    };
    std::vector<Rat> x = dense(ea, amin);
    std::vector<Rat> y = dense(eb, bmin);
    auto trim = [](std::vector<Rat>& v) {
        while (!v.empty() && v.back() == 0) {
            v.pop_back();
        }
    };
    trim(x);
    trim(y);
    while (!y.empty()) {
        // x mod y
        while (x.size() >= y.size() && !x.empty()) {
            Rat f = x.back() / y.back();
            std::size_t off = x.size() - y.size();
            for (std::size_t i = 0; i < y.size(); ++i) {
                x[off + i] -= f * y[i];
            }
            trim(x);
        }
        std::swap(x, y);
    }
    Rat lc = x.back();
    ParamPoly g;
    std::vector<ParamPoly::Term> terms;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] != 0) {
            ParamExp e{};
            e[slot] = static_cast<int>(i) * step;
            terms.emplace_back(ParamPoly::pack(e), x[i] / lc);
        }
    }
    return ParamPoly::from_terms(std::move(terms));
}

namespace {

bool all_monomial_images(const ParamSubst& sigma)
{
    for (const auto& s : sigma) {
        if (s && !(s->is_polynomial() && s->num().is_monomial())) {
            return false;
        }
    }
    return true;
}

// Raise a monomial image to the power e (e in stored units of the slot).
ParamPoly monomial_power(const ParamPoly& image, int e, int slot)
{
    const auto& [k, c] = image.terms()[0];
    ParamExp x = ParamPoly::unpack(k);
    int num = e;
    int den = slot == kQh ? kQhScale : 1;
    if (num % den == 0) {
        num /= den;
        den = 1;
    }
    ParamExp y{};
    for (int s = 0; s < kParamVars; ++s) {
        long v = static_cast<long>(x[s]) * num;
        if (v % den != 0) {
            throw ContractViolation("fractional power of a substituted monomial is not representable");
        }
        y[s] = static_cast<int>(v / den);
    }
    Rat coeff(1);
    if (den == 1) {
        coeff = qpoly::pow(c, num);
    } else if (c != 1) {
        throw ContractViolation("fractional power of a non-unit coefficient");
    }
    return ParamPoly::monomial(y, coeff);
}

} // namespace

ParamPoly substitute_monomial_map(const ParamPoly& p, const ParamSubst& sigma)
{
    std::vector<ParamPoly::Term> out;
    out.reserve(p.size());
    std::array<std::map<int, ParamPoly>, kParamVars> cache;
    for (const auto& [k, c] : p.terms()) {
        ParamExp e = ParamPoly::unpack(k);
        ParamExp kept{};
        ParamPoly term = ParamPoly::monomial(ParamExp{}, c);
        for (int s = 0; s < kParamVars; ++s) {
            if (!sigma[s]) {
                kept[s] = e[s];
                continue;
            }
            if (e[s] == 0) {
                continue;
            }
            auto it = cache[s].find(e[s]);
            if (it == cache[s].end()) {
                it = cache[s].emplace(e[s], monomial_power(sigma[s]->num(), e[s], s)).first;
            }
            term = term * it->second;
        }
        term = term.shifted(kept);
        for (const auto& t : term.terms()) {
            out.push_back(t);
        }
    }
    return ParamPoly::from_terms(std::move(out));
}

namespace {

// Substitute a single slot by a general ParamRat image.
ParamRat substitute_slot(const ParamPoly& p, int slot, const ParamRat& image)
{
    std::map<int, ParamPoly> by_power;
    for (const auto& [k, c] : p.terms()) {
        ParamExp e = ParamPoly::unpack(k);
        int power = e[slot];
        e[slot] = 0;
        by_power[power] += ParamPoly::monomial(e, c);
    }
    ParamRat result;
    for (const auto& [power, coeff] : by_power) {
        int whole = power;
        if (slot == kQh) {
            if (power % kQhScale != 0) {
                throw ContractViolation("cannot substitute a non-monomial image into a fractional qh power");
            }
            whole = power / kQhScale;
        }
        result += ParamRat(coeff) * image.pow(whole);
    }
    return result;
}

ParamPoly kernel_generator(int slot, const ParamRat& image)
{
    // den(image)*x_slot - num(image)
    return image.den() * ParamPoly::var(slot) - image.num();
}

} // namespace

ParamRat substitute_params(const ParamRat& f, const ParamSubst& sigma)
{
    if (all_monomial_images(sigma)) {
        ParamPoly n = substitute_monomial_map(f.num(), sigma);
        ParamPoly d = substitute_monomial_map(f.den(), sigma);
        if (!d.is_zero()) {
            return ParamRat::fraction(n, d);
        }
    }
    // Slot-by-slot substitution is a valid factorization of the homomorphism
    // when no image mentions a slot that is itself substituted.
    unsigned substituted = 0;
    for (int s = 0; s < kParamVars; ++s) {
        if (sigma[s]) {
            substituted |= 1U << s;
        }
    }
    bool sequential = true;
    for (int s = 0; s < kParamVars; ++s) {
        if (sigma[s]) {
            unsigned used = sigma[s]->num().used_slots() | sigma[s]->den().used_slots();
            if (used & substituted) {
                sequential = false;
            }
        }
    }
    ParamPoly num = f.num();
    ParamPoly den = f.den();
    if (!sequential) {
        // simultaneous: substitute slot images directly term by term
        auto apply_all = [&](const ParamPoly& p) {
            ParamRat out;
            for (const auto& [k, c] : p.terms()) {
                ParamExp e = ParamPoly::unpack(k);
                ParamExp kept{};
                ParamRat term = ParamRat(c);
                for (int s = 0; s < kParamVars; ++s) {
                    if (!sigma[s]) {
                        kept[s] = e[s];
                        continue;
                    }
                    int whole = e[s];
                    if (s == kQh) {
                        if (whole % kQhScale != 0) {
                            throw ContractViolation("fractional qh power in simultaneous substitution");
                        }
                        whole /= kQhScale;
                    }
                    term *= sigma[s]->pow(whole);
                }
                out += term * ParamRat(ParamPoly::monomial(kept));
            }
            return out;
        };
        ParamRat dd = apply_all(den);
        if (dd.is_zero()) {
            throw DenominatorVanishes("substitution hits a pole");
        }
        return apply_all(num) / dd;
    }
    ParamRat cur_num(num);
    ParamRat cur_den(den);
    for (int s = 0; s < kParamVars; ++s) {
        if (!sigma[s]) {
            continue;
        }
        const ParamRat& image = *sigma[s];
        ParamPoly gen = kernel_generator(s, image);
        // numerator and denominator are polynomials at this point
        ParamPoly pn = cur_num.num();
        ParamPoly pd = cur_den.num();
        ParamRat extra = ParamRat::fraction(cur_den.den(), cur_num.den());
        for (;;) {
            ParamRat dn = substitute_slot(pd, s, image);
            if (!dn.is_zero()) {
                ParamRat nn = substitute_slot(pn, s, image);
                ParamRat value = nn / dn * substitute_slot(extra.num(), s, image);
                ParamRat ed = substitute_slot(extra.den(), s, image);
                if (ed.is_zero()) {
                    throw DenominatorVanishes("substitution hits a pole");
                }
                value /= ed;
                cur_num = ParamRat(value.num());
                cur_den = ParamRat(value.den());
                break;
            }
            auto qd = pd.divide_exact(gen);
            auto qn = pn.divide_exact(gen);
            if (!qd || !qn) {
                throw DenominatorVanishes("substitution hits a pole of the function");
            }
            pd = std::move(*qd);
            pn = std::move(*qn);
        }
    }
    return ParamRat::fraction(cur_num.num(), cur_den.num());
}

} // namespace qpoly
