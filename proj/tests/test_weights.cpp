// Copyright (c) 2026 The qpoly authors
// Use of this source code is governed by the MIT license that can be found in the LICENSE file.

#include "qpoly/errors.hpp"
#include "qpoly/weights.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

using namespace qpoly;

namespace {

// All weakly decreasing nonnegative vectors of length n with entries <= bound.
void dominant_box(int n, int bound, Weight& cur, std::vector<Weight>& out)
{
    if (static_cast<int>(cur.size()) == n) {
        out.push_back(cur);
        return;
    }
    const int top = cur.empty() ? bound : cur.back();
    for (int v = 0; v <= top; ++v) {
        cur.push_back(v);
        dominant_box(n, bound, cur, out);
        cur.pop_back();
    }
}

bool partial_sums_below(const Weight& a, const Weight& b)
{
    int sa = 0;
    int sb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        sa += a[i];
        sb += b[i];
        if (sa > sb) {
            return false;
        }
    }
    return true;
}

// Orbit under all 2^n n! signed permutations, by brute force.
std::set<Weight> brute_orbit(const Weight& w)
{
    const int n = static_cast<int>(w.size());
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::set<Weight> out;
    do {
        for (int mask = 0; mask < (1 << n); ++mask) {
            Weight v(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) {
                const int x = w[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
                v[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? -x : x;
            }
            out.insert(v);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

} // namespace

TEST_CASE("dominance order matches the partial-sum definition")
{
    for (int n = 1; n <= 3; ++n) {
        std::vector<Weight> all;
        Weight cur;
        dominant_box(n, 4, cur, all);
        for (const Weight& lam : all) {
            if (weight_size(lam) > 4) {
                continue;
            }
            std::vector<Weight> expected;
            for (const Weight& mu : all) {
                if (partial_sums_below(mu, lam)) {
                    expected.push_back(mu);
                }
            }
            auto got = weights_below(lam);
            std::sort(got.begin(), got.end());
            std::sort(expected.begin(), expected.end());
            CHECK_MESSAGE(got == expected, weight_to_string(lam));
            for (const Weight& mu : all) {
                CHECK(dominance_leq(mu, lam) == partial_sums_below(mu, lam));
            }
        }
    }
}

TEST_CASE("hyperoctahedral orbits match brute-force signed permutations")
{
    for (const Weight& w : {Weight{0}, Weight{2}, Weight{1, 0}, Weight{2, 2}, Weight{3, 1, 0}, Weight{1, 1, 1}, Weight{2, 1, 1}}) {
        const auto orbit = worbit(w, Group::Hyperoctahedral);
        const std::set<Weight> got(orbit.begin(), orbit.end());
        CHECK(got == brute_orbit(w));
        CHECK(orbit.size() == got.size());
        CHECK(monomial_symmetric(w, Group::Hyperoctahedral).size() == got.size());
    }
}

TEST_CASE("dominant representatives")
{
    CHECK(dominant_rep({-1, 3, 0}, Group::Hyperoctahedral) == Weight{3, 1, 0});
    CHECK(dominant_rep({-1, 3, 0}, Group::Permutations) == Weight{3, 0, -1});
    CHECK(is_dominant({2, 1, 0}, Group::Hyperoctahedral));
    CHECK_FALSE(is_dominant({1, 2}, Group::Hyperoctahedral));
    CHECK_FALSE(is_dominant({1, -1}, Group::Hyperoctahedral));
    CHECK(is_dominant({1, -1}, Group::Permutations));
    // The D-type dominant chamber allows a negative last entry.
    CHECK(is_dominant({1, -1}, Group::EvenSigned));
}

TEST_CASE("linear refinement is a linear extension of dominance")
{
    const auto below = weights_below({3, 1, 0});
    const auto order = linear_refinement(below);
    REQUIRE(order.size() == below.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (std::size_t j = i + 1; j < order.size(); ++j) {
            CHECK_FALSE((dominance_leq(order[j], order[i]) && order[j] != order[i]));
        }
    }
    CHECK(order.back() == Weight{3, 1, 0});
}

TEST_CASE("expansion in monomials inverts the orbit sum")
{
    const LaurentPoly f = monomial_symmetric({2, 1}, Group::Hyperoctahedral) * ParamRat(3) +
                          monomial_symmetric({1, 0}, Group::Hyperoctahedral);
    const auto e = expand_in_monomials(f, Group::Hyperoctahedral);
    REQUIRE(e.size() == 2);
    CHECK(e.at({2, 1}) == ParamRat(3));
    CHECK(e.at({1, 0}) == ParamRat(1));
    LaurentPoly g(2);
    g.add_term({1, 0}, ParamRat(1));
    CHECK_THROWS_AS(expand_in_monomials(g, Group::Hyperoctahedral), NotInvariant);
}

TEST_CASE("weight parsing")
{
    CHECK(parse_weight("2,1,0") == Weight{2, 1, 0});
    CHECK(weight_to_string({2, 1}) == "(2,1)");
    CHECK_THROWS_AS(parse_weight("2,x"), ParseError);
}
