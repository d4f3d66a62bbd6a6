// Copyright (c) 2026 The qpoly authors
// Use of this source code is governed by the MIT license that can be found in the LICENSE file.

#pragma once

#include "qpoly/inner_product.hpp"
#include "qpoly/polynomials.hpp"

#include <string>
#include <vector>

namespace qpoly {

struct CheckResult {
    std::string id;
    bool pass = false;
    std::string claim;
    std::string detail;
};

struct SuiteOptions {
    std::vector<int> ns;  // empty selects the suite default
    int maxdeg = 2;
    int max = 6;          // largest n for the spectral identities
    NumericPoint point;
    int trunc = 16;
    int grid = 128;
};

std::vector<std::string> suite_names();

// Runs a named suite; results are sorted by check id. Throws ParseError for
// an unknown suite name.
std::vector<CheckResult> run_suite(const std::string& name, const SuiteOptions& opts);

// Top weight (d, 0, ..., 0) whose order ideal holds every dominant weight of size <= d.
Weight size_cover(int n, int d);

// Nonzero entries only where the row weight is below the column weight.
bool is_triangular(const OperatorMatrix& m);

// Entrywise product of two operator matrices on the same basis.
std::vector<std::vector<ParamRat>> matrix_product(const OperatorMatrix& a, const OperatorMatrix& b);

// e_r(D_1(x_1), ..., D_1(x_n)) m_lambda assembled from images of the
// one-variable operator on z^k + z^-k.
LaurentPoly decoupled_image(int n, int r, const Weight& lambda);

// 10 |q|^{M - a - b}.
long double truncation_tolerance(const NumericPoint& pt, int M, int a, int b);

// Operator matrix evaluated at a numeric point.
std::vector<std::vector<long double>> numeric_matrix(const OperatorMatrix& m, const NumericPoint& pt);

} // namespace qpoly
