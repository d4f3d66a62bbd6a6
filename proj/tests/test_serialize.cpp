// Copyright (c) 2026 The qpoly authors
// Use of this source code is governed by the MIT license that can be found in the LICENSE file.

#include "qpoly/errors.hpp"
#include "qpoly/polynomials.hpp"
#include "qpoly/serialize.hpp"

#include <doctest.h>

#include <cmath>

using namespace qpoly;

TEST_CASE("polynomials round trip through JSON")
{
    const OrthoPoly p = koornwinder_triangular(2, {1, 1});
    const Json j = to_json(p);
    CHECK(j.at("n") == 2);
    CHECK(j.at("basis") == "monomial");
    const OrthoPoly back = ortho_from_json(Json::parse(j.dump()));
    CHECK(back.lambda == p.lambda);
    CHECK(back.coeffs == p.coeffs);
    CHECK(poly_from_json(j) == p.to_laurent());
}

TEST_CASE("Jacobi polynomials keep their variable set")
{
    const OrthoPoly p = jacobi_triangular(2, {1, 1});
    const Json j = to_json(p);
    CHECK(j.at("vars") == "jacobi");
    CHECK(ortho_from_json(j).coeffs == p.coeffs);
}

TEST_CASE("serialization is deterministic")
{
    const std::string a = to_json(koornwinder_triangular(1, {2})).dump(2);
    const std::string b = to_json(koornwinder_triangular(1, {2})).dump(2);
    CHECK(a == b);
}

TEST_CASE("malformed input is rejected")
{
    CHECK_THROWS_AS(poly_from_json(Json::array()), ParseError);
    CHECK_THROWS_AS(poly_from_json(Json::parse(R"({"coeffs": []})")), ParseError);
    CHECK_THROWS_AS(poly_from_json(Json::parse(R"({"n": 2, "coeffs": [{"weight": [1, 2], "value": "1"}]})")),
                    ParseError);
    CHECK_THROWS_AS(poly_from_json(Json::parse(R"({"n": 1, "coeffs": [{"weight": [1], "value": "th +"}]})")),
                    ParseError);
    CHECK_THROWS_AS(poly_from_json(Json::parse(R"({"n": 2, "coeffs": [{"weight": [1], "value": "1"}]})")),
                    ParseError);
}

TEST_CASE("binary rationals are exact")
{
    CHECK(exact_rational(0.375L) == Rat(3, 8));
    CHECK(exact_rational(-2.5L) == Rat(-5, 2));
    CHECK(exact_rational(0.0L) == Rat(0));
    const long double x = 0.1L;
    const Rat r = exact_rational(x);
    CHECK(std::fabs(static_cast<long double>(r.get_d()) - x) < 1e-16L);
    CHECK(rat_to_string(Rat(-3, 4)) == "-3/4");
}

TEST_CASE("numeric output carries the point")
{
    const NumericPoint pt;
    const OrthoPoly p = koornwinder_triangular(1, {1});
    const Json j = numeric_to_json(1, {1}, specialize_numeric(p, pt), pt.to_string());
    CHECK(j.dump().find(pt.to_string()) != std::string::npos);
}
