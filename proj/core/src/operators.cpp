// Copyright (c) 2026 The qpoly authors
// Use of this source code is governed by the MIT license that can be found in the LICENSE file.

#include "qpoly/operators.hpp"

#include "qpoly/errors.hpp"

#include <functional>

namespace qpoly {

namespace {

const std::pair<OpKind, const char*> kKindNames[] = {
    {OpKind::Dr, "Dr"},
    {OpKind::Dr1, "Dr1"},
    {OpKind::AType, "A"},
    {OpKind::ATypeCentered, "A_centered"},
    {OpKind::JacobiD10, "D10"},
    {OpKind::CSpin, "C_spin"},
    {OpKind::DnMinus, "Dn_minus"},
    {OpKind::DnPlus, "Dn_plus"},
};

Weight unit(int n, int j, int s = 1)
{
    Weight w(static_cast<std::size_t>(n), 0);
    w[static_cast<std::size_t>(j)] = s;
    return w;
}

Weight pair_weight(int n, int j, int sj, int k, int sk)
{
    Weight w(static_cast<std::size_t>(n), 0);
    w[static_cast<std::size_t>(j)] += sj;
    w[static_cast<std::size_t>(k)] += sk;
    return w;
}

void append(std::vector<Factor>& dst, const std::vector<Factor>& src)
{
    dst.insert(dst.end(), src.begin(), src.end());
}

int popcount(unsigned m)
{
    return __builtin_popcount(m);
}

// Every assignment of signs to the bits of mask, written into eps.
void for_each_sign(int n, unsigned mask, std::vector<int>& eps, const std::function<void()>& fn)
{
    std::vector<int> bits;
    for (int j = 0; j < n; ++j) {
        if (mask & (1U << j)) {
            bits.push_back(j);
        }
    }
    const unsigned count = 1U << bits.size();
    for (unsigned s = 0; s < count; ++s) {
        for (std::size_t i = 0; i < bits.size(); ++i) {
            eps[static_cast<std::size_t>(bits[i])] = (s & (1U << i)) ? -1 : 1;
        }
        fn();
    }
}

std::vector<unsigned> subsets_of_size(int n, int size, unsigned within)
{
    std::vector<unsigned> out;
    for (unsigned m = 0; m < (1U << n); ++m) {
        if ((m & ~within) == 0 && popcount(m) == size) {
            out.push_back(m);
        }
    }
    return out;
}

} // namespace

std::string to_string(OpKind k)
{
    for (const auto& [kind, name] : kKindNames) {
        if (kind == k) {
            return name;
        }
    }
    return "Dr";
}

OpKind parse_op_kind(const std::string& s)
{
    for (const auto& [kind, name] : kKindNames) {
        if (s == name) {
            return kind;
        }
    }
    throw ParseError("unknown operator kind '" + s + "'");
}

Group OperatorSpec::group() const
{
    switch (kind) {
    case OpKind::AType:
    case OpKind::ATypeCentered:
        return Group::Permutations;
    case OpKind::DnMinus:
    case OpKind::DnPlus:
        return Group::EvenSigned;
    default:
        return Group::Hyperoctahedral;
    }
}

void OperatorSpec::validate() const
{
    if (n < 1 || n > 5) {
        throw ContractViolation("operator needs 1 <= n <= 5");
    }
    switch (kind) {
    case OpKind::Dr:
    case OpKind::Dr1:
    case OpKind::AType:
        if (r < 1 || r > n) {
            throw ContractViolation("operator index r must satisfy 1 <= r <= n");
        }
        break;
    case OpKind::ATypeCentered:
        if (r < 1 || r > n) {
            throw ContractViolation("centered operator index r must satisfy 1 <= r <= n");
        }
        break;
    default:
        break;
    }
}

std::vector<std::vector<unsigned>> enumerate_chains(unsigned J)
{
    std::vector<std::vector<unsigned>> out;
    if (J == 0) {
        throw ContractViolation("enumerate_chains needs a nonempty set");
    }
    std::vector<unsigned> chain;
    std::function<void(unsigned)> rec = [&](unsigned used) {
        if (used == J) {
            out.push_back(chain);
            return;
        }
        const unsigned rest = J & ~used;
        // nonempty sub-masks of rest, in increasing numeric order
        std::vector<unsigned> blocks;
        for (unsigned b = rest; b != 0; b = (b - 1) & rest) {
            blocks.push_back(b);
        }
        for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
            chain.push_back(used | *it);
            rec(used | *it);
            chain.pop_back();
        }
    };
    rec(0);
    return out;
}

std::vector<Factor> v_factors(int n, unsigned J, const std::vector<int>& eps, unsigned K)
{
    std::vector<Factor> fs;
    for (int j = 0; j < n; ++j) {
        if (!(J & (1U << j))) {
            continue;
        }
        const int ej = eps[static_cast<std::size_t>(j)];
        for (FactorKind k : {FactorKind::VbA, FactorKind::VbB, FactorKind::VbC, FactorKind::VbD}) {
            fs.push_back(Factor{k, unit(n, j, ej), 0});
        }
        for (int jp = j + 1; jp < n; ++jp) {
            if (J & (1U << jp)) {
                const int ejp = eps[static_cast<std::size_t>(jp)];
                fs.push_back(Factor{FactorKind::Va, pair_weight(n, j, ej, jp, ejp), 0});
                fs.push_back(Factor{FactorKind::Va, pair_weight(n, j, ej, jp, ejp), 1});
            }
        }
        for (int k = 0; k < n; ++k) {
            if (K & (1U << k)) {
                fs.push_back(Factor{FactorKind::Va, pair_weight(n, j, ej, k, 1), 0});
                fs.push_back(Factor{FactorKind::Va, pair_weight(n, j, ej, k, -1), 0});
            }
        }
    }
    return fs;
}

std::vector<std::pair<long, std::vector<Factor>>> w_terms(int n, unsigned I, int p)
{
    std::vector<std::pair<long, std::vector<Factor>>> out;
    if (p == 0) {
        out.emplace_back(1, std::vector<Factor>{});
        return out;
    }
    if (p > popcount(I)) {
        return out;
    }
    std::vector<int> eps(static_cast<std::size_t>(n), 1);
    for (unsigned Iq : subsets_of_size(n, p, I)) {
        const auto chains = enumerate_chains(Iq);
        for_each_sign(n, Iq, eps, [&] {
            for (const auto& chain : chains) {
                const long sign = chain.size() % 2 == 0 ? 1 : -1;
                std::vector<Factor> fs;
                unsigned prev = 0;
                for (unsigned cur : chain) {
                    append(fs, v_factors(n, cur & ~prev, eps, I & ~cur));
                    prev = cur;
                }
                out.emplace_back(sign, std::move(fs));
            }
        });
    }
    return out;
}

std::vector<OpTerm> operator_terms(const OperatorSpec& spec)
{
    spec.validate();
    const int n = spec.n;
    const unsigned all = (1U << n) - 1;
    std::vector<OpTerm> terms;
    std::vector<int> eps(static_cast<std::size_t>(n), 1);
    auto shift_of = [&](unsigned J, int step) {
        Weight s(static_cast<std::size_t>(n), 0);
        for (int j = 0; j < n; ++j) {
            if (J & (1U << j)) {
                s[static_cast<std::size_t>(j)] = step * eps[static_cast<std::size_t>(j)];
            }
        }
        return s;
    };
    switch (spec.kind) {
    case OpKind::Dr:
        for (int s = 0; s <= spec.r; ++s) {
            for (unsigned J : subsets_of_size(n, s, all)) {
                const unsigned I = all & ~J;
                if (spec.r - s > popcount(I)) {
                    continue;
                }
                for_each_sign(n, J, eps, [&] {
                    // signs on J are fixed here; w_terms reuses its own copy
                    std::vector<int> saved = eps;
                    auto wt = w_terms(n, I, spec.r - s);
                    eps = saved;
                    std::vector<Factor> v = v_factors(n, J, eps, I);
                    for (auto& [c, fs] : wt) {
                        OpTerm t;
                        t.coef = c;
                        t.factors = fs;
                        append(t.factors, v);
                        t.shift = shift_of(J, 2);
                        terms.push_back(std::move(t));
                    }
                });
            }
        }
        break;
    case OpKind::Dr1:
        for (unsigned J : subsets_of_size(n, spec.r, all)) {
            const auto chains = enumerate_chains(J);
            for_each_sign(n, J, eps, [&] {
                for (const auto& chain : chains) {
                    const long sign = chain.size() % 2 == 1 ? 1 : -1;
                    OpTerm t;
                    t.coef = sign;
                    unsigned prev = 0;
                    for (unsigned cur : chain) {
                        append(t.factors, v_factors(n, cur & ~prev, eps, all & ~cur));
                        prev = cur;
                    }
                    t.shift = shift_of(chain.front(), 2);
                    OpTerm id = t;
                    id.coef = -sign;
                    id.shift.assign(static_cast<std::size_t>(n), 0);
                    terms.push_back(std::move(t));
                    terms.push_back(std::move(id));
                }
            });
        }
        break;
    case OpKind::AType:
    case OpKind::ATypeCentered:
        for (unsigned J : subsets_of_size(n, spec.r, all)) {
            OpTerm t;
            for (int j = 0; j < n; ++j) {
                if (!(J & (1U << j))) {
                    continue;
                }
                for (int k = 0; k < n; ++k) {
                    if (!(J & (1U << k))) {
                        t.factors.push_back(Factor{FactorKind::Va, pair_weight(n, j, 1, k, -1), 0});
                    }
                }
            }
            std::fill(eps.begin(), eps.end(), 1);
            t.shift = shift_of(J, 2);
            terms.push_back(std::move(t));
        }
        break;
    case OpKind::JacobiD10: {
        OpTerm lap;
        lap.input = InputMap::Quadratic;
        lap.shift.assign(static_cast<std::size_t>(n), 0);
        terms.push_back(lap);
        for (int j = 0; j < n; ++j) {
            for (int k = j + 1; k < n; ++k) {
                for (int s : {1, -1}) {
                    OpTerm t;
                    t.param[kG] = kQhScale;
                    t.factors.push_back(Factor{FactorKind::Cot, pair_weight(n, j, 1, k, s), 0});
                    t.input = InputMap::Linear;
                    t.shift = pair_weight(n, j, 1, k, s);
                    terms.push_back(std::move(t));
                }
            }
            for (int which : {kTg0, kTg1}) {
                OpTerm t;
                t.param[which] = 1;
                t.factors.push_back(Factor{which == kTg0 ? FactorKind::Cot : FactorKind::Tan, unit(n, j), 0});
                t.input = InputMap::Linear;
                t.shift = unit(n, j);
                terms.push_back(std::move(t));
            }
        }
        break;
    }
    case OpKind::CSpin:
    case OpKind::DnMinus:
    case OpKind::DnPlus:
        for_each_sign(n, all, eps, [&] {
            int prod = 1;
            for (int e : eps) {
                prod *= e;
            }
            if ((spec.kind == OpKind::DnMinus && prod != -1) || (spec.kind == OpKind::DnPlus && prod != 1)) {
                return;
            }
            OpTerm t;
            for (int j = 0; j < n; ++j) {
                const int ej = eps[static_cast<std::size_t>(j)];
                if (spec.kind == OpKind::CSpin) {
                    t.factors.push_back(Factor{FactorKind::VbA, unit(n, j, ej), 0});
                    t.factors.push_back(Factor{FactorKind::VbB, unit(n, j, ej), 0});
                }
                for (int k = j + 1; k < n; ++k) {
                    t.factors.push_back(
                        Factor{FactorKind::Va, pair_weight(n, j, ej, k, eps[static_cast<std::size_t>(k)]), 0});
                }
            }
            t.shift = shift_of(all, 1);
            terms.push_back(std::move(t));
        });
        break;
    }
    return terms;
}

LaurentRat coeff_va(int gamma_shift)
{
    // composite variable w is z_1 of a one-variable Laurent ring
    ParamRat th(ParamPoly::var(kTh));
    ParamRat qfac = ParamRat(ParamPoly::var(kQh, 2 * gamma_shift));
    LaurentRat r{LaurentPoly(1), LaurentPoly(1)};
    r.num.add_term({1}, th * th * qfac);
    r.num.add_term({0}, ParamRat(-1));
    r.den.add_term({1}, th * qfac);
    r.den.add_term({0}, -th);
    return r;
}

LaurentRat coeff_vb()
{
    auto binom = [](const ParamRat& lead, long c) {
        LaurentPoly p(1);
        p.add_term({1}, lead);
        p.add_term({0}, ParamRat(c));
        return p;
    };
    ParamRat qh(ParamPoly::var(kQh));
    ParamRat ga(ParamPoly::var(kGa)), gb(ParamPoly::var(kGb)), gc(ParamPoly::var(kGc)), gd(ParamPoly::var(kGd));
    LaurentPoly num = binom(ga * ga, -1) * binom(gb * gb, 1) * binom(gc * gc * qh, -1) * binom(gd * gd * qh, 1);
    LaurentPoly den = binom(ParamRat(1), -1) * binom(ParamRat(1), 1) * binom(qh, -1) * binom(qh, 1);
    den *= ga * gb * gc * gd;
    return LaurentRat{num, den};
}

} // namespace qpoly
