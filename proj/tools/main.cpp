// Copyright (c) 2026 The qpoly authors
// Use of this source code is governed by the MIT license that can be found in the LICENSE file.

#include "qpoly/errors.hpp"
#include "qpoly/families.hpp"
#include "qpoly/inner_product.hpp"
#include "qpoly/serialize.hpp"
#include "qpoly/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace qpoly;

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kDegenerate = 3, kContract = 4 };

struct Config {
    int n = 1;
    std::string weight = "0";
    std::string method = "eigen";
    std::string params;
    std::string numeric;
    int trunc = 16;
    std::string family;
    std::string suite;
    int maxdeg = -1;
    int max = 6;
    std::string out;
    std::string format = "json";
    std::string op = "Dr";
    int r = 1;
    std::string input;
    bool exact = false;
};

const char* const kSlotNames[kParamVars] = {"qh", "th", "ga", "gb", "gc", "gd"};

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot read '" + path + "'");
    }
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

// "ga=1,gb=qh" inline, or a file holding that text or a JSON object {"ga":"1"}.
ParamSubst parse_params(const std::string& spec)
{
    ParamSubst s{};
    if (spec.empty()) {
        return s;
    }
    std::ifstream probe(spec);
    const std::string text = probe ? read_file(spec) : spec;
    std::vector<std::pair<std::string, std::string>> items;
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        Json j;
        try {
            j = Json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("malformed parameter JSON: ") + e.what());
        }
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!it.value().is_string()) {
                throw ParseError("parameter values must be strings");
            }
            items.emplace_back(it.key(), it.value().get<std::string>());
        }
    } else {
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            const auto eq = item.find('=');
            if (eq == std::string::npos) {
                throw ParseError("expected name=value in '" + item + "'");
            }
            auto trim = [](std::string x) {
                const auto a = x.find_first_not_of(" \t\r\n");
                const auto b = x.find_last_not_of(" \t\r\n");
                return a == std::string::npos ? std::string() : x.substr(a, b - a + 1);
            };
            items.emplace_back(trim(item.substr(0, eq)), trim(item.substr(eq + 1)));
        }
    }
    for (const auto& [name, value] : items) {
        int slot = -1;
        for (int k = 0; k < kParamVars; ++k) {
            if (name == kSlotNames[k]) {
                slot = k;
            }
        }
        if (slot < 0) {
            throw ParseError("unknown parameter '" + name + "'");
        }
        s[slot] = parse_param_rat(value);
    }
    return s;
}

ParamSubst merge(ParamSubst base, const ParamSubst& extra)
{
    for (int k = 0; k < kParamVars; ++k) {
        if (extra[k]) {
            base[k] = extra[k];
        }
    }
    return base;
}

Weight checked_weight(const Config& c, Group g = Group::Hyperoctahedral)
{
    const Weight w = parse_weight(c.weight);
    if (static_cast<int>(w.size()) != c.n) {
        throw ParseError("weight " + c.weight + " does not have " + std::to_string(c.n) + " entries");
    }
    if (!is_dominant(w, g)) {
        throw ParseError("weight " + c.weight + " is not dominant");
    }
    return w;
}

void emit(const Config& c, const std::string& text)
{
    if (c.out.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream f(c.out);
    if (!f) {
        throw ParseError("cannot write '" + c.out + "'");
    }
    f << text << "\n";
}

std::string render(const Config& c, const Json& j)
{
    if (c.format == "json") {
        return j.dump(2);
    }
    std::ostringstream s;
    if (j.contains("weight")) {
        s << "weight " << j.at("weight").dump() << "\n";
    }
    for (const Json& t : j.at("coeffs")) {
        s << t.at("weight").dump() << "  " << t.at("value").get<std::string>() << "\n";
    }
    std::string text = s.str();
    if (!text.empty()) {
        text.pop_back();
    }
    return text;
}

NumericPoint numeric_point(const Config& c)
{
    NumericPoint p = c.numeric.empty() ? NumericPoint{} : parse_numeric_point(c.numeric);
    try {
        p.validate();
    } catch (const ContractViolation& e) {
        throw ParseError(e.what());
    }
    return p;
}

int cmd_poly(const Config& c)
{
    if (c.n < 1) {
        throw ParseError("--n must be positive");
    }
    if (c.method == "an") {
        const Weight w = checked_weight(c);
        emit(c, render(c, to_json(family_polynomial(FamilyPair::An, c.n, w))));
        return kOk;
    }
    const Weight w = checked_weight(c);
    if (c.method == "eigen" || c.method == "family") {
        ParamSubst params = parse_params(c.params);
        if (c.method == "family") {
            if (c.family.empty()) {
                throw ParseError("--method family needs --family");
            }
            const FamilyPair f = parse_family(c.family);
            if (f == FamilyPair::An) {
                emit(c, render(c, to_json(family_polynomial(f, c.n, w))));
                return kOk;
            }
            params = merge(family_specialize(f), params);
        }
        const OrthoPoly p = koornwinder_triangular(c.n, w, params, true);
        if (!c.numeric.empty()) {
            const NumericPoint pt = numeric_point(c);
            emit(c, render(c, numeric_to_json(c.n, w, specialize_numeric(p, pt), pt.to_string())));
        } else {
            emit(c, render(c, to_json(p)));
        }
        return kOk;
    }
    if (c.method == "gs") {
        if (c.trunc < 0) {
            throw ParseError("--trunc must be nonnegative");
        }
        WeightFunctionSpec spec;
        spec.M = c.trunc;
        spec.point = numeric_point(c);
        const Quadrature quad(c.n, spec);
        std::map<Weight, Rat> coeffs;
        for (const auto& [v, x] : gram_schmidt_oracle(w, quad)) {
            coeffs.emplace(v, exact_rational(x));
        }
        emit(c, render(c, numeric_to_json(c.n, w, coeffs, spec.point.to_string())));
        return kOk;
    }
    if (c.method == "jacobi") {
        emit(c, render(c, to_json(jacobi_triangular(c.n, w))));
        return kOk;
    }
    throw ParseError("unknown method '" + c.method + "'");
}

int cmd_apply(const Config& c)
{
    Json j;
    try {
        j = Json::parse(read_file(c.input));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed polynomial JSON: ") + e.what());
    }
    const LaurentPoly f = poly_from_json(j);
    OperatorSpec spec;
    spec.kind = parse_op_kind(c.op);
    spec.n = f.n();
    spec.r = c.r;
    ParamSubst params = c.family.empty() ? ParamSubst{} : family_specialize(parse_family(c.family));
    spec.params = merge(params, parse_params(c.params));
    const LaurentPoly image = c.exact ? apply_operator_exact(spec, f) : apply_operator(spec, f);
    const Group g = spec.group();
    const Expansion e = expand_in_monomials(image, g);
    emit(c, render(c, expansion_to_json(e, f.n(), g, f.half_lattice(), spec.vars())));
    return kOk;
}

int cmd_verify(const Config& c)
{
    SuiteOptions o;
    if (c.n > 0) {
        o.ns = {c.n};
    }
    if (c.maxdeg >= 0) {
        o.maxdeg = c.maxdeg;
    }
    o.max = c.max;
    o.point = numeric_point(c);
    o.trunc = c.trunc;
    std::vector<std::string> suites = c.suite == "all" ? suite_names() : std::vector<std::string>{c.suite};
    std::vector<CheckResult> results;
    for (const std::string& s : suites) {
        auto r = run_suite(s, o);
        results.insert(results.end(), r.begin(), r.end());
    }
    bool all = true;
    Json arr = Json::array();
    std::ostringstream text;
    for (const CheckResult& r : results) {
        all = all && r.pass;
        arr.push_back(Json{{"id", r.id}, {"pass", r.pass}, {"claim", r.claim}, {"detail", r.detail}});
        text << (r.pass ? "PASS " : "FAIL ") << r.id << "  [" << r.claim << "]  " << r.detail << "\n";
    }
    if (c.format == "json") {
        emit(c, Json{{"suite", c.suite}, {"pass", all}, {"checks", arr}}.dump(2));
    } else {
        std::string t = text.str();
        t += all ? "ALL PASS" : "FAILURES PRESENT";
        emit(c, t);
    }
    return all ? kOk : kVerifyFailed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Koornwinder polynomials and commuting difference operators in exact arithmetic"};
    app.require_subcommand(1);
    Config c;
    c.n = 0;

    auto common = [&](CLI::App* s) {
        s->add_option("--params", c.params, "parameter substitution: file or inline name=value list");
        s->add_option("--numeric", c.numeric, "numeric point q=..,t=..,a=..,b=..,c=..,d=..");
        s->add_option("--trunc", c.trunc, "truncation order of the weight function");
        s->add_option("--family", c.family, "Bn:Bn|Bn:Cn|Cn:Bn|Cn:Cn|BCn:Bn|BCn:Cn|Dn|An");
        s->add_option("--out", c.out, "output path (default stdout)");
        s->add_option("--format", c.format, "json|text")->check(CLI::IsMember({"json", "text"}));
    };

    auto* poly = app.add_subcommand("poly", "compute an orthogonal polynomial");
    poly->add_option("--n", c.n, "number of variables")->required();
    poly->add_option("--weight", c.weight, "dominant weight, e.g. 2,1")->required();
    poly->add_option("--method", c.method, "eigen|gs|jacobi|an|family")
        ->check(CLI::IsMember({"eigen", "gs", "jacobi", "an", "family"}));
    common(poly);

    auto* apply = app.add_subcommand("apply", "apply an operator to a polynomial file");
    apply->add_option("--op", c.op, "Dr|Dr1|A|A_centered|D10|C_spin|Dn_minus|Dn_plus");
    apply->add_option("--r", c.r, "operator index");
    apply->add_option("--input", c.input, "polynomial JSON")->required();
    apply->add_flag("--exact", c.exact, "use the common-denominator route");
    common(apply);

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::vector<std::string> names = suite_names();
    names.push_back("all");
    verify->add_option("--suite", c.suite, "suite name")->required()->check(CLI::IsMember(names));
    verify->add_option("--n", c.n, "restrict to this number of variables");
    verify->add_option("--maxdeg", c.maxdeg, "largest |lambda|");
    verify->add_option("--max", c.max, "largest n for the spectral identities");
    common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }
    if (poly->parsed() && c.n < 1) {
        c.n = 1;
    }

    try {
        if (poly->parsed()) {
            return cmd_poly(c);
        }
        if (apply->parsed()) {
            return cmd_apply(c);
        }
        return cmd_verify(c);
    } catch (const ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const ZeroDenominator& e) {
        std::cerr << "degenerate parameters: " << e.what() << "\n";
        return kDegenerate;
    } catch (const DegenerateNorm& e) {
        std::cerr << "degenerate parameters: " << e.what() << "\n";
        return kDegenerate;
    } catch (const DenominatorVanishes& e) {
        std::cerr << "degenerate parameters: " << e.what() << "\n";
        return kDegenerate;
    } catch (const Error& e) {
        std::cerr << "contract violation: " << e.what() << "\n";
        return kContract;
    }
}
