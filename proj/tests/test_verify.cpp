// Copyright (c) 2026 The qpoly authors
// Use of this source code is governed by the MIT license that can be found in the LICENSE file.

#include "qpoly/errors.hpp"
#include "qpoly/verify.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace qpoly;

TEST_CASE("suite names and unknown suites")
{
    const auto names = suite_names();
    CHECK(names.size() == 9);
    CHECK(std::find(names.begin(), names.end(), "appendixB") != names.end());
    CHECK_THROWS_AS(run_suite("nosuch", SuiteOptions{}), ParseError);
}

TEST_CASE("reports are sorted and pass at small ranges")
{
    SuiteOptions o;
    o.maxdeg = 1;
    for (const char* name : {"triangularity", "eigenvalues", "commute", "limits", "appendixB"}) {
        const auto r = run_suite(name, o);
        REQUIRE_FALSE(r.empty());
        CHECK(std::is_sorted(r.begin(), r.end(), [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; }));
        for (const auto& c : r) {
            CHECK_MESSAGE(c.pass, c.id << ": " << c.detail);
            CHECK_FALSE(c.claim.empty());
        }
    }
}

TEST_CASE("helpers")
{
    CHECK(size_cover(3, 2) == Weight{2, 0, 0});
    const NumericPoint pt;
    CHECK(truncation_tolerance(pt, 16, 1, 2) == doctest::Approx(10 * std::pow(0.25, 13)));
    CHECK_FALSE(decoupled_image(2, 1, {1, 0}).is_zero());
}
