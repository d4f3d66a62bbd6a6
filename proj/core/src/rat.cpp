// Copyright (c) 2026 The qpoly authors
// Use of this source code is governed by the MIT license that can be found in the LICENSE file.

#include "qpoly/rat.hpp"

#include "qpoly/errors.hpp"

#include <cctype>

namespace qpoly {

Rat rat(long num, long den)
{
    if (den == 0) {
        throw ContractViolation("rat: zero denominator");
    }
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat parse_rat(const std::string& text)
{
    std::size_t i = 0;
    auto digits = [&](bool allow_sign) {
        std::string out;
        if (allow_sign && i < text.size() && (text[i] == '-' || text[i] == '+')) {
            if (text[i] == '-') {
                out += '-';
            }
            ++i;
        }
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            out += text[i++];
        }
        if (i == start) {
            throw ParseError("expected digits in rational '" + text + "'");
        }
        return out;
    };
    Int num(digits(true));
    Int den(1);
    if (i < text.size() && text[i] == '/') {
        ++i;
        den = Int(digits(false));
        if (den == 0) {
            throw ParseError("zero denominator in rational '" + text + "'");
        }
    }
    if (i != text.size()) {
        throw ParseError("trailing characters in rational '" + text + "'");
    }
    Rat r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rat& r)
{
    return r.get_str();
}

Rat pow(const Rat& base, long exponent)
{
    if (exponent < 0) {
        if (base == 0) {
            throw ContractViolation("pow: zero to a negative power");
        }
        return pow(Rat(1) / base, -exponent);
    }
    Rat result(1);
    Rat b = base;
    unsigned long e = static_cast<unsigned long>(exponent);
    while (e != 0) {
        if (e & 1UL) {
            result *= b;
        }
        b *= b;
        e >>= 1;
    }
    return result;
}

bool is_integer(const Rat& r)
{
    return mpz_divisible_p(r.get_num_mpz_t(), r.get_den_mpz_t()) != 0;
}

} // namespace qpoly
