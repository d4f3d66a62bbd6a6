// Copyright (c) 2026 The qpoly authors
// Use of this source code is governed by the MIT license that can be found in the LICENSE file.

#include "qpoly/errors.hpp"
#include "qpoly/param_rat.hpp"

#include <cctype>
#include <numeric>

namespace qpoly {

namespace {

class Parser {
public:
    Parser(const std::string& text, VarSet vars) : s_(text), vars_(vars) {}

    ParamRat parse()
    {
        ParamRat r = expr();
        skip();
        if (pos_ != s_.size()) {
            fail("unexpected trailing input");
        }
        return r;
    }

private:
    const std::string& s_;
    VarSet vars_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" + s_ + "\"");
    }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
            ++pos_;
        }
    }

    bool eat(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    ParamRat expr()
    {
        ParamRat r;
        bool first = true;
        for (;;) {
            skip();
            bool neg = false;
            if (eat('+')) {
            } else if (eat('-')) {
                neg = true;
            } else if (!first) {
                break;
            }
            ParamRat t = term();
            r += neg ? -t : t;
            first = false;
        }
        return r;
    }

    ParamRat term()
    {
        ParamRat r = power();
        for (;;) {
            if (eat('*')) {
                r *= power();
            } else if (eat('/')) {
                ParamRat d = power();
                if (d.is_zero()) {
                    fail("division by zero");
                }
                r /= d;
            } else {
                return r;
            }
        }
    }

    // Returns numerator and denominator of an exponent.
    std::pair<long, long> exponent()
    {
        skip();
        if (eat('(')) {
            long sign = eat('-') ? -1 : 1;
            long num = sign * integer();
            long den = 1;
            if (eat('/')) {
                den = integer();
            }
            if (!eat(')')) {
                fail("expected ')' in exponent");
            }
            if (den == 0) {
                fail("zero exponent denominator");
            }
            long g = std::gcd(num, den);
            return {num / g, den / g};
        }
        long sign = eat('-') ? -1 : 1;
        return {sign * integer(), 1};
    }

    long integer()
    {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected integer");
        }
        if (pos_ - start > 9) {
            fail("integer too large");
        }
        return std::stol(s_.substr(start, pos_ - start));
    }

    ParamRat power()
    {
        ParamRat base = atom();
        if (!eat('^')) {
            return base;
        }
        auto [num, den] = exponent();
        if (den == 1) {
            return base.pow(static_cast<int>(num));
        }
        if (!(base.is_polynomial() && base.num().is_monomial() && base.num().terms()[0].second == 1)) {
            fail("fractional power of a non-monomial");
        }
        ParamExp e = ParamPoly::unpack(base.num().terms()[0].first);
        for (int s = 0; s < kParamVars; ++s) {
            long v = static_cast<long>(e[s]) * num;
            if (v % den != 0) {
                fail("fractional power is not representable");
            }
            e[s] = static_cast<int>(v / den);
        }
        return ParamRat(ParamPoly::monomial(e));
    }

    ParamRat atom()
    {
        skip();
        if (eat('(')) {
            ParamRat r = expr();
            if (!eat(')')) {
                fail("expected ')'");
            }
            return r;
        }
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                ++pos_;
            }
            return ParamRat(Rat(Int(s_.substr(start, pos_ - start))));
        }
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) {
            ++pos_;
        }
        std::string id = s_.substr(start, pos_ - start);
        if (id.empty()) {
            fail("expected a number, a name or '('");
        }
        return identifier(id);
    }

    ParamRat identifier(const std::string& id)
    {
        if (vars_ == VarSet::Jacobi) {
            if (id == "g") return ParamPoly::var(kG);
            if (id == "tg0") return ParamPoly::var(kTg0);
            if (id == "tg1") return ParamPoly::var(kTg1);
            fail("unknown name '" + id + "'");
        }
        static const char* names[kParamVars] = {"qh", "th", "ga", "gb", "gc", "gd"};
        for (int s = 0; s < kParamVars; ++s) {
            if (id == names[s]) {
                return ParamPoly::var(s);
            }
        }
        if (id == "q") return ParamPoly::var(kQh, 2);
        if (id == "t") return ParamPoly::var(kTh, 2);
        if (id == "a") return ParamPoly::var(kGa, 2);
        if (id == "b") return -ParamRat(ParamPoly::var(kGb, 2));
        if (id == "c") return ParamPoly::var(kGc, 2) * ParamPoly::var(kQh);
        if (id == "d") return -ParamRat(ParamPoly::var(kGd, 2) * ParamPoly::var(kQh));
        fail("unknown name '" + id + "'");
    }
};

} // namespace

ParamRat parse_param_rat(const std::string& text, VarSet vars)
{
    return Parser(text, vars).parse();
}

} // namespace qpoly
