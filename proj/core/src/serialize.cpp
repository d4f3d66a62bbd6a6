// Copyright (c) 2026 The qpoly authors
// Use of this source code is governed by the MIT license that can be found in the LICENSE file.

#include "qpoly/serialize.hpp"

#include "qpoly/errors.hpp"

#include <cmath>
#include <cstdint>

namespace qpoly {

namespace {

std::string vars_name(VarSet v)
{
    return v == VarSet::Jacobi ? "jacobi" : "half";
}

VarSet parse_vars(const std::string& s)
{
    if (s == "half") {
        return VarSet::Half;
    }
    if (s == "jacobi") {
        return VarSet::Jacobi;
    }
    throw ParseError("unknown parameter set '" + s + "'");
}

Json coeff_list(const std::map<Weight, ParamRat>& coeffs, VarSet vars)
{
    Json list = Json::array();
    for (const auto& [w, c] : coeffs) {
        list.push_back(Json{{"weight", w}, {"value", c.to_string(vars)}});
    }
    return list;
}

Weight read_weight(const Json& j, int n)
{
    if (!j.is_array()) {
        throw ParseError("weight must be an array of integers");
    }
    Weight w;
    for (const Json& e : j) {
        if (!e.is_number_integer()) {
            throw ParseError("weight entries must be integers");
        }
        w.push_back(e.get<int>());
    }
    if (static_cast<int>(w.size()) != n) {
        throw ParseError("weight length differs from n");
    }
    return w;
}

template <class T>
T field(const Json& j, const char* name)
{
    if (!j.contains(name)) {
        throw ParseError(std::string("missing field '") + name + "'");
    }
    try {
        return j.at(name).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw ParseError(std::string("field '") + name + "' has the wrong type");
    }
}

std::map<Weight, ParamRat> read_coeffs(const Json& j, int n, VarSet vars)
{
    if (!j.contains("coeffs") || !j.at("coeffs").is_array()) {
        throw ParseError("missing coefficient list");
    }
    std::map<Weight, ParamRat> out;
    for (const Json& t : j.at("coeffs")) {
        if (!t.is_object()) {
            throw ParseError("coefficient entries must be objects");
        }
        const Weight w = read_weight(t.contains("weight") ? t.at("weight") : Json(), n);
        const ParamRat v = parse_param_rat(field<std::string>(t, "value"), vars);
        if (!out.emplace(w, v).second) {
            throw ParseError("duplicate coefficient at " + weight_to_string(w));
        }
    }
    return out;
}

} // namespace

std::string rat_to_string(const Rat& r)
{
    return r.get_str();
}

Rat exact_rational(long double x)
{
    if (!std::isfinite(x)) {
        throw ContractViolation("exact_rational: value is not finite");
    }
    if (x == 0) {
        return Rat(0);
    }
    int e = 0;
    const long double m = std::frexp(x, &e);
    // 64 mantissa bits cover the x87 extended format and narrower ones
    const long double scaled = std::ldexp(std::fabs(m), 64);
    const auto hi = static_cast<std::uint64_t>(std::ldexp(scaled, -32));
    const auto lo = static_cast<std::uint64_t>(scaled - std::ldexp(static_cast<long double>(hi), 32));
    Int mant = Int(static_cast<unsigned long>(hi));
    mant <<= 32;
    mant += Int(static_cast<unsigned long>(lo));
    Rat r(mant);
    const int shift = e - 64;
    if (shift >= 0) {
        mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(shift));
    } else {
        mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-shift));
    }
    r.canonicalize();
    return m < 0 ? Rat(-r) : r;
}

Json to_json(const OrthoPoly& p)
{
    Json j;
    j["n"] = p.n;
    j["weight"] = p.lambda;
    j["basis"] = "monomial";
    j["half_lattice"] = p.half_lattice;
    j["group"] = to_string(p.group);
    j["vars"] = vars_name(p.vars);
    j["coeffs"] = coeff_list(p.coeffs, p.vars);
    return j;
}

OrthoPoly ortho_from_json(const Json& j)
{
    if (!j.is_object()) {
        throw ParseError("polynomial JSON must be an object");
    }
    OrthoPoly p;
    p.n = field<int>(j, "n");
    if (p.n < 1) {
        throw ParseError("n must be positive");
    }
    p.lambda = read_weight(j.contains("weight") ? j.at("weight") : Json(), p.n);
    p.half_lattice = j.contains("half_lattice") ? field<bool>(j, "half_lattice") : false;
    p.group = j.contains("group") ? parse_group(field<std::string>(j, "group")) : Group::Hyperoctahedral;
    p.vars = j.contains("vars") ? parse_vars(field<std::string>(j, "vars")) : VarSet::Half;
    p.coeffs = read_coeffs(j, p.n, p.vars);
    return p;
}

Json numeric_to_json(int n, const Weight& lambda, const std::map<Weight, Rat>& coeffs, const std::string& point)
{
    Json j;
    j["n"] = n;
    j["weight"] = lambda;
    j["basis"] = "monomial";
    j["half_lattice"] = false;
    j["numeric"] = point;
    Json list = Json::array();
    for (const auto& [w, c] : coeffs) {
        list.push_back(Json{{"weight", w}, {"value", rat_to_string(c)}});
    }
    j["coeffs"] = list;
    return j;
}

Json expansion_to_json(const Expansion& e, int n, Group g, bool half_lattice, VarSet vars)
{
    Json j;
    j["n"] = n;
    j["basis"] = "monomial";
    j["half_lattice"] = half_lattice;
    j["group"] = to_string(g);
    j["vars"] = vars_name(vars);
    j["coeffs"] = coeff_list(e, vars);
    return j;
}

LaurentPoly poly_from_json(const Json& j)
{
    if (!j.is_object()) {
        throw ParseError("polynomial JSON must be an object");
    }
    const int n = field<int>(j, "n");
    if (n < 1) {
        throw ParseError("n must be positive");
    }
    const bool half = j.contains("half_lattice") ? field<bool>(j, "half_lattice") : false;
    const Group g = j.contains("group") ? parse_group(field<std::string>(j, "group")) : Group::Hyperoctahedral;
    const VarSet vars = j.contains("vars") ? parse_vars(field<std::string>(j, "vars")) : VarSet::Half;
    const auto coeffs = read_coeffs(j, n, vars);
    for (const auto& [w, c] : coeffs) {
        if (!is_dominant(w, g)) {
            throw ParseError("coefficient weight " + weight_to_string(w) + " is not dominant for the group");
        }
    }
    return from_expansion(coeffs, n, g, half);
}

Json eigenvalue_table(const std::map<Weight, ParamRat>& values, VarSet vars)
{
    Json j = Json::object();
    for (const auto& [w, v] : values) {
        j[weight_to_string(w)] = v.to_string(vars);
    }
    return j;
}

} // namespace qpoly
