// Copyright (c) 2026 The qpoly authors
// Use of this source code is governed by the MIT license that can be found in the LICENSE file.

#include "qpoly/weights.hpp"

#include "qpoly/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace qpoly {

std::string to_string(Group g)
{
    switch (g) {
    case Group::Hyperoctahedral:
        return "BC";
    case Group::Permutations:
        return "A";
    case Group::EvenSigned:
        return "D";
    }
    return "BC";
}

Group parse_group(const std::string& s)
{
    if (s == "BC" || s == "B" || s == "C") {
        return Group::Hyperoctahedral;
    }
    if (s == "A") {
        return Group::Permutations;
    }
    if (s == "D") {
        return Group::EvenSigned;
    }
    throw ParseError("unknown group '" + s + "'");
}

Weight dominant_rep(const Weight& w, Group g)
{
    Weight d = w;
    if (g == Group::Permutations) {
        std::sort(d.begin(), d.end(), std::greater<>());
        return d;
    }
    int negatives = 0;
    bool has_zero = false;
    for (auto& x : d) {
        if (x < 0) {
            ++negatives;
            x = -x;
        }
        if (x == 0) {
            has_zero = true;
        }
    }
    std::sort(d.begin(), d.end(), std::greater<>());
    if (g == Group::EvenSigned && negatives % 2 == 1 && !has_zero && !d.empty()) {
        d.back() = -d.back();
    }
    return d;
}

bool is_dominant(const Weight& w, Group g)
{
    return dominant_rep(w, g) == w;
}

bool dominance_leq(const Weight& a, const Weight& b)
{
    if (a.size() != b.size()) {
        throw ContractViolation("dominance_leq on weights of different length");
    }
    long sa = 0, sb = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        sa += a[k];
        sb += b[k];
        if (sa > sb) {
            return false;
        }
    }
    return true;
}

int weight_size(const Weight& w)
{
    return std::accumulate(w.begin(), w.end(), 0);
}

std::vector<Weight> weights_below(const Weight& lambda, Group g)
{
    const std::size_t n = lambda.size();
    if (!is_dominant(lambda, g)) {
        throw ContractViolation("weights_below needs a dominant weight");
    }
    std::vector<long> bound(n);
    long run = 0;
    for (std::size_t k = 0; k < n; ++k) {
        run += lambda[k];
        bound[k] = run;
    }
    std::vector<Weight> out;
    Weight cur(n);
    int lo_entry = 0;
    if (g == Group::Permutations && n > 0) {
        lo_entry = *std::min_element(lambda.begin(), lambda.end());
    }
    // Depth-first over weakly decreasing vectors with bounded partial sums.
    std::function<void(std::size_t, int, long)> rec = [&](std::size_t k, int prev, long sum) {
        if (k == n) {
            if (g == Group::Permutations && sum != run) {
                return;
            }
            out.push_back(cur);
            return;
        }
        int hi = prev;
        hi = static_cast<int>(std::min<long>(hi, bound[k] - sum));
        for (int v = lo_entry; v <= hi; ++v) {
            cur[k] = v;
            rec(k + 1, v, sum + v);
        }
    };
    if (n == 0) {
        return {Weight{}};
    }
    int top = lambda[0];
    if (g == Group::EvenSigned) {
        // The last entry may be negative; enumerate by absolute value and add
        // the sign variants that stay dominant and below lambda.
        std::vector<Weight> base;
        Weight abs_lambda = dominant_rep(lambda, Group::Hyperoctahedral);
        for (const Weight& w : weights_below(abs_lambda, Group::Hyperoctahedral)) {
            base.push_back(w);
            if (w.back() != 0) {
                Weight v = w;
                v.back() = -v.back();
                base.push_back(v);
            }
        }
        for (const Weight& w : base) {
            if (dominance_leq(w, lambda)) {
                out.push_back(w);
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }
    rec(0, top, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Weight> worbit(const Weight& w, Group g)
{
    std::set<Weight> seen;
    Weight base = w;
    std::sort(base.begin(), base.end());
    const std::size_t n = w.size();
    do {
        if (g == Group::Permutations) {
            seen.insert(base);
            continue;
        }
        for (unsigned mask = 0; mask < (1U << n); ++mask) {
            if (g == Group::EvenSigned && __builtin_popcount(mask) % 2 == 1) {
                continue;
            }
            Weight v = base;
            for (std::size_t i = 0; i < n; ++i) {
                if (mask & (1U << i)) {
                    v[i] = -v[i];
                }
            }
            seen.insert(v);
        }
    } while (std::next_permutation(base.begin(), base.end()));
    return {seen.begin(), seen.end()};
}

LaurentPoly monomial_symmetric(const Weight& lambda, Group g, bool half_lattice)
{
    LaurentPoly p(static_cast<int>(lambda.size()), half_lattice);
    for (const Weight& v : worbit(lambda, g)) {
        p.add_term(v, ParamRat(1));
    }
    return p;
}

std::map<Weight, ParamRat> expand_in_monomials(const LaurentPoly& f, Group g)
{
    std::map<Weight, ParamRat> out;
    LaurentPoly rest = f;
    while (!rest.is_zero()) {
        // lexicographically maximal dominant weight of the support
        const Weight* best = nullptr;
        for (const auto& [w, c] : rest.terms()) {
            if (is_dominant(w, g) && (best == nullptr || *best < w)) {
                best = &w;
            }
        }
        if (best == nullptr) {
            throw NotInvariant("support contains no dominant weight");
        }
        Weight lam = *best;
        ParamRat c = rest.coeff(lam);
        for (const Weight& v : worbit(lam, g)) {
            ParamRat have = rest.coeff(v);
            if (have != c) {
                throw NotInvariant("coefficients differ along the orbit of " + weight_to_string(lam));
            }
            rest.add_term(v, -c);
        }
        out.emplace(lam, c);
    }
    return out;
}

std::vector<Weight> linear_refinement(std::vector<Weight> weights)
{
    std::sort(weights.begin(), weights.end());
    weights.erase(std::unique(weights.begin(), weights.end()), weights.end());
    return weights;
}

Weight parse_weight(const std::string& text)
{
    Weight w;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw ParseError("malformed weight '" + text + "'");
        }
        while (used < item.size() && item[used] == ' ') {
            ++used;
        }
        if (used != item.size()) {
            throw ParseError("malformed weight '" + text + "'");
        }
        w.push_back(v);
    }
    if (w.empty()) {
        throw ParseError("empty weight");
    }
    return w;
}

std::string weight_to_string(const Weight& w)
{
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        s += (i ? "," : "") + std::to_string(w[i]);
    }
    return s + ")";
}

} // namespace qpoly
