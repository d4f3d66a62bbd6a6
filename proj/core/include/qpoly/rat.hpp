// Copyright (c) 2026 The qpoly authors
// Use of this source code is governed by the MIT license that can be found in the LICENSE file.

#pragma once

#include <gmpxx.h>

#include <string>

namespace qpoly {

// Arbitrary precision rational, always kept in lowest terms with a positive
// denominator (gmpxx canonicalizes after every arithmetic operation).
using Rat = mpq_class;
using Int = mpz_class;

Rat rat(long num, long den = 1);

// Parses "p", "-p" or "p/q" (no decimal point). Throws ParseError.
Rat parse_rat(const std::string& text);

// Canonical "p" or "p/q" rendering.
std::string to_string(const Rat& r);

Rat pow(const Rat& base, long exponent);

bool is_integer(const Rat& r);

} // namespace qpoly
