// Copyright (c) 2026 The qpoly authors
// Use of this source code is governed by the MIT license that can be found in the LICENSE file.

// Runs the twelve acceptance criteria and prints one PASS or FAIL line per
// criterion. The exit status is nonzero if any criterion fails.

#include "qpoly/families.hpp"
#include "qpoly/operator_apply.hpp"
#include "qpoly/spectra.hpp"
#include "qpoly/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace qpoly;

namespace {

// Truncation order and tolerance factor of the numeric criteria.
constexpr int kTruncation = 16;
constexpr long double kToleranceFactor = 10.0L;
constexpr int kMonotonicitySeed = 20261015;
constexpr int kMonotonicityPoints = 10;

struct Tally {
    int checks = 0;
    std::vector<std::string> failures;

    void add(bool ok, const std::string& what)
    {
        ++checks;
        if (!ok) {
            failures.push_back(what);
        }
    }

    void add(const std::vector<CheckResult>& rs, const std::function<bool(const std::string&)>& keep)
    {
        for (const auto& r : rs) {
            if (keep(r.id)) {
                add(r.pass, r.id + " " + r.detail);
            }
        }
    }
};

bool contains(const std::string& s, const std::string& part)
{
    return s.find(part) != std::string::npos;
}

bool any(const std::string&)
{
    return true;
}

SuiteOptions options(std::vector<int> ns, int maxdeg)
{
    SuiteOptions o;
    o.ns = std::move(ns);
    o.maxdeg = maxdeg;
    o.trunc = kTruncation;
    return o;
}

// Runs a suite over n in {1, 2} up to size 4 and over n = 3 up to size 3.
std::vector<CheckResult> full_range(const std::string& suite)
{
    auto a = run_suite(suite, options({1, 2}, 4));
    auto b = run_suite(suite, options({3}, 3));
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

OperatorSpec op(OpKind k, int n, int r)
{
    OperatorSpec s;
    s.kind = k;
    s.n = n;
    s.r = r;
    return s;
}

std::vector<Weight> dominant_upto(int n, int d)
{
    std::vector<Weight> out;
    for (const Weight& w : weights_below(size_cover(n, d))) {
        out.push_back(w);
    }
    return out;
}

Tally criterion_triangularity(const std::vector<CheckResult>& tri)
{
    Tally t;
    t.add(tri, [](const std::string& id) { return !contains(id, "/forms/"); });
    return t;
}

Tally criterion_forms(const std::vector<CheckResult>& tri)
{
    Tally t;
    t.add(tri, [](const std::string& id) { return contains(id, "/forms/"); });
    return t;
}

Tally criterion_suite(const std::vector<CheckResult>& rs)
{
    Tally t;
    t.add(rs, any);
    return t;
}

Tally criterion_decouple()
{
    Tally t;
    t.add(run_suite("decouple", options({2, 3}, 3)), any);
    return t;
}

Tally criterion_spectral_identities()
{
    SuiteOptions o;
    o.max = 6;
    Tally t;
    t.add(run_suite("appendixB", o), any);
    return t;
}

Tally criterion_symmetry()
{
    Tally t;
    const SuiteOptions o = options({2}, 3);
    t.add(truncation_tolerance(o.point, kTruncation, 0, 0) ==
              kToleranceFactor * std::pow(std::fabs(static_cast<long double>(o.point.q.get_d())), kTruncation),
          "tolerance constant");
    t.add(run_suite("symmetry", o), any);
    t.add(run_suite("orthogonality", o), [](const std::string& id) { return !contains(id, "/gs/"); });
    return t;
}

Tally criterion_cross_method()
{
    Tally t;
    t.add(run_suite("orthogonality", options({1, 2}, 3)), [](const std::string& id) { return contains(id, "/gs/"); });
    return t;
}

Tally criterion_limits()
{
    Tally t;
    t.add(run_suite("limits", options({1, 2}, 2)), [](const std::string& id) { return contains(id, "/jacobi/"); });
    return t;
}

Tally criterion_An()
{
    Tally t;
    for (int n = 1; n <= 3; ++n) {
        for (const Weight& l : dominant_upto(n, 3)) {
            const std::string at = "n" + std::to_string(n) + " " + weight_to_string(l);
            const LaurentPoly f = family_polynomial(FamilyPair::An, n, l).to_laurent();
            for (int r = 1; r <= n; ++r) {
                const LaurentPoly img = apply_operator(op(OpKind::ATypeCentered, n, r), f);
                t.add(img == f * eigenvalue_An(r, n, l), at + " r" + std::to_string(r));
            }
            ParamExp e{};
            e[kQh] = 2 * weight_size(l) * kQhScale;
            t.add(apply_operator(op(OpKind::AType, n, n), f) == f * ParamRat(ParamPoly::monomial(e)),
                  at + " translation");
        }
    }
    return t;
}

Tally criterion_families()
{
    Tally t;
    t.add(run_suite("families", options({2}, 2)), any);
    return t;
}

Tally criterion_monotonicity()
{
    Tally t;
    std::mt19937 rng(kMonotonicitySeed);
    std::uniform_real_distribution<double> u(0.05, 2.0);
    for (int k = 0; k < kMonotonicityPoints; ++k) {
        PhysicalParams p;
        p.beta = u(rng);
        p.g = u(rng);
        p.g0 = u(rng);
        p.g1 = u(rng);
        p.g0p = u(rng);
        p.g1p = u(rng);
        for (int n = 1; n <= 3; ++n) {
            const auto ws = dominant_upto(n, 5);
            for (const Weight& l : ws) {
                for (const Weight& m : ws) {
                    if (l != m && dominance_leq(m, l)) {
                        t.add(monotonicity_check(l, m, p),
                              "point " + std::to_string(k) + " " + weight_to_string(l) + " > " + weight_to_string(m));
                    }
                }
            }
        }
    }
    return t;
}

} // namespace

int main()
{
    std::setvbuf(stdout, nullptr, _IOLBF, 0);
    int failed = 0;
    auto report = [&](int id, const std::string& name, const std::function<Tally()>& run) {
        const auto start = std::chrono::steady_clock::now();
        Tally t;
        try {
            t = run();
        } catch (const std::exception& e) {
            t.add(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool ok = t.failures.empty() && t.checks > 0;
        failed += ok ? 0 : 1;
        std::printf("%s criterion %2d %-28s %5d checks %8.1fs\n", ok ? "PASS" : "FAIL", id, name.c_str(), t.checks, secs);
        for (const auto& f : t.failures) {
            std::printf("     %s\n", f.c_str());
        }
    };

    std::vector<CheckResult> tri;
    report(1, "triangularity", [&] {
        tri = full_range("triangularity");
        return criterion_triangularity(tri);
    });
    report(2, "eigenvalues", [] { return criterion_suite(full_range("eigenvalues")); });
    report(3, "commutativity", [] { return criterion_suite(full_range("commute")); });
    report(4, "operator forms", [&] { return criterion_forms(tri); });
    report(5, "decoupling", criterion_decouple);
    report(6, "spectral identities", criterion_spectral_identities);
    report(7, "symmetry and orthogonality", criterion_symmetry);
    report(8, "Gram-Schmidt cross-check", criterion_cross_method);
    report(9, "q -> 1 limit", criterion_limits);
    report(10, "A-type limit", criterion_An);
    report(11, "families", criterion_families);
    report(12, "monotonicity", criterion_monotonicity);
    std::printf("%s\n", failed == 0 ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
    return failed == 0 ? 0 : 1;
}
