// Copyright (c) 2026 The qpoly authors
// Use of this source code is governed by the MIT license that can be found in the LICENSE file.

#pragma once

#include "qpoly/param_poly.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace qpoly::flat {

// Packed monomials in up to five torus variables and the six parameter slots
// with machine-integer coefficients. Used for truncated formal expansions of
// operator coefficients, where every coefficient stays an integer.
//
// The qh slot is stored in half units (qh^(1/2)); every other slot and every
// torus exponent uses the stored units of the caller.
constexpr int kMaxVars = 5;
constexpr int kZBits = 9;
constexpr int kPBits = 13;
constexpr int kZBias = 1 << (kZBits - 1);
constexpr int kPBias = 1 << (kPBits - 1);

using Key = unsigned __int128;

struct Term {
    Key key;
    std::int64_t c;
    int ydeg;
};

using ParamVec = std::array<int, kParamVars>;
using ZVec = std::array<int, kMaxVars>;

// Packing context: number of torus variables and the grading vector y used
// to order expansions (y_1 > y_2 > ... > y_n > 0).
class Space {
public:
    explicit Space(int n);

    int n() const { return n_; }
    int y(int j) const { return y_[static_cast<std::size_t>(j)]; }

    Key pack(const ZVec& z, const ParamVec& p) const;
    void unpack(Key k, ZVec& z, ParamVec& p) const;
    int ydeg_of(const ZVec& z) const;
    Key zero() const { return zero_; }

private:
    int n_;
    std::array<int, kMaxVars> y_{};
    Key zero_ = 0;
};

inline Key key_add(Key a, Key b, Key zero) { return a + b - zero; }

// Sorted by decreasing ydeg, then by key. No zero coefficients.
class Series {
public:
    Series() = default;

    static Series monomial(const Space& sp, const ZVec& z, const ParamVec& p, std::int64_t c);
    static Series one(const Space& sp);

    const std::vector<Term>& terms() const { return terms_; }
    std::vector<Term>& mutable_terms() { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }
    // Canonical order after external edits.
    void normalize();

    // Truncated product keeping ydeg >= lo.
    static Series mul_trunc(const Series& a, const Series& b, int lo, const Space& sp);

private:
    std::vector<Term> terms_;
};

// Accumulates weighted series and produces a normalized sum.
class Accumulator {
public:
    Accumulator();
    ~Accumulator();
    Accumulator(const Accumulator&) = delete;
    Accumulator& operator=(const Accumulator&) = delete;

    void add(Key k, int ydeg, std::int64_t c);
    void add(const Series& s, std::int64_t factor = 1);
    // Adds a*b truncated to ydeg >= lo without materializing the product.
    void add_product(const Series& a, const Series& b, int lo, const Space& sp, std::int64_t factor = 1);
    Series take();

private:
    struct Impl;
    Impl* impl_;
};

// Expansion of the ratio (a*A*W + c1) / (g * (b*B*W + c2)) in the direction of
// decreasing ydeg, truncated at ydeg >= -depth. W = z^w with nonzero grading;
// A, B, g are parameter monomials, a, b, c1, c2 are +-1.
struct BinomialRatio {
    ZVec w{};
    ParamVec A{};
    int a = 1;
    int c1 = -1;
    ParamVec B{};
    int b = 1;
    int c2 = -1;
    ParamVec g{};
};
Series ratio_series(const BinomialRatio& r, int depth, const Space& sp);

// Converts a parameter exponent vector in flat units to a ParamPoly monomial.
ParamExp to_param_exp(const ParamVec& p);

} // namespace qpoly::flat
