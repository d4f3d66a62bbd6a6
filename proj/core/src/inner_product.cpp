// Copyright (c) 2026 The qpoly authors
// Use of this source code is governed by the MIT license that can be found in the LICENSE file.

#include "qpoly/inner_product.hpp"

#include "qpoly/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

namespace qpoly {

namespace {

using Cx = std::complex<long double>;

long double to_ld(const Rat& r)
{
    return std::strtold(r.get_num().get_str().c_str(), nullptr) / std::strtold(r.get_den().get_str().c_str(), nullptr);
}

Weight unit(int n, int j, int s)
{
    Weight w(static_cast<std::size_t>(n), 0);
    w[static_cast<std::size_t>(j)] = s;
    return w;
}

Weight combo(int n, int j, int sj, int k, int sk)
{
    Weight w(static_cast<std::size_t>(n), 0);
    w[static_cast<std::size_t>(j)] = sj;
    w[static_cast<std::size_t>(k)] = sk;
    return w;
}

void pair_factors(std::vector<DeltaFactor>& out, int n, int M, const Rat& q, const Rat& t)
{
    for (int j = 0; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
            // d_a(x_j + x_k) d_a(x_j - x_k) with d_a(z) = d_a^+(z) d_a^+(-z)
            for (const Weight& w : {combo(n, j, 1, k, 1), combo(n, j, -1, k, -1), combo(n, j, 1, k, -1),
                                    combo(n, j, -1, k, 1)}) {
                Rat qm = 1;
                for (int m = 0; m < M; ++m) {
                    out.push_back(DeltaFactor{qm, w, 1});
                    out.push_back(DeltaFactor{Rat(t * qm), w, -1});
                    qm *= q;
                }
            }
        }
    }
}

// Removes numerator and denominator binomials that coincide, so that
// removable singularities such as t = 1 do not evaluate to 0/0.
std::vector<DeltaFactor> cancel_common(const std::vector<DeltaFactor>& in)
{
    std::map<std::pair<Weight, Rat>, std::vector<std::size_t>> open;
    std::vector<bool> keep(in.size(), true);
    for (std::size_t i = 0; i < in.size(); ++i) {
        auto& slot = open[{in[i].w, in[i].coef}];
        if (!slot.empty() && in[slot.back()].power == -in[i].power) {
            keep[slot.back()] = false;
            keep[i] = false;
            slot.pop_back();
        } else {
            slot.push_back(i);
        }
    }
    std::vector<DeltaFactor> out;
    for (std::size_t i = 0; i < in.size(); ++i) {
        if (keep[i]) {
            out.push_back(in[i]);
        }
    }
    return out;
}

} // namespace

std::vector<DeltaFactor> delta_truncate(int n, const WeightFunctionSpec& spec)
{
    if (spec.M < 0) {
        throw ContractViolation("truncation order must be nonnegative");
    }
    const NumericPoint& p = spec.point;
    std::vector<DeltaFactor> out;
    switch (spec.family) {
    case WeightFamily::Jacobi:
        throw ContractViolation("the Jacobi weight is not a product of binomials");
    case WeightFamily::AType:
        // prod_{j<k} d_a(x_j - x_k)
        for (int j = 0; j < n; ++j) {
            for (int k = j + 1; k < n; ++k) {
                for (const Weight& w : {combo(n, j, 1, k, -1), combo(n, j, -1, k, 1)}) {
                    Rat qm = 1;
                    for (int m = 0; m < spec.M; ++m) {
                        out.push_back(DeltaFactor{qm, w, 1});
                        out.push_back(DeltaFactor{Rat(p.t * qm), w, -1});
                        qm *= p.q;
                    }
                }
            }
        }
        return cancel_common(out);
    case WeightFamily::Koornwinder:
        break;
    }
    pair_factors(out, n, spec.M, p.q, p.t);
    for (int j = 0; j < n; ++j) {
        for (int s : {1, -1}) {
            const Weight w = unit(n, j, s);
            const Weight w2 = unit(n, j, 2 * s);
            Rat qm = 1;
            for (int m = 0; m < spec.M; ++m) {
                out.push_back(DeltaFactor{qm, w2, 1});
                for (const Rat& x : {p.a, p.b, p.c, p.d}) {
                    out.push_back(DeltaFactor{Rat(x * qm), w, -1});
                }
                qm *= p.q;
            }
        }
    }
    return cancel_common(out);
}

Cx eval_factors(const std::vector<DeltaFactor>& f, const std::vector<Cx>& z)
{
    Cx v = 1;
    for (const DeltaFactor& d : f) {
        Cx zw = to_ld(d.coef);
        for (std::size_t j = 0; j < z.size(); ++j) {
            for (int e = 0; e < std::abs(d.w[j]); ++e) {
                zw *= d.w[j] > 0 ? z[j] : std::conj(z[j]);
            }
        }
        const Cx b = Cx(1) - zw;
        v = d.power > 0 ? v * b : v / b;
    }
    return v;
}

Quadrature::Quadrature(int n, const WeightFunctionSpec& spec) : n_(n), N_(spec.grid)
{
    if (N_ < 8) {
        throw ContractViolation("quadrature grid too small");
    }
    std::vector<DeltaFactor> factors;
    if (spec.family != WeightFamily::Jacobi) {
        spec.point.validate();
        factors = delta_truncate(n, spec);
    }
    const long double pi = std::numbers::pi_v<long double>;
    std::size_t total = 1;
    for (int j = 0; j < n; ++j) {
        total *= static_cast<std::size_t>(N_);
    }
    nodes_.reserve(total);
    weight_.reserve(total);
    std::vector<int> idx(static_cast<std::size_t>(n), 0);
    for (std::size_t p = 0; p < total; ++p) {
        std::vector<Cx> z(static_cast<std::size_t>(n));
        std::vector<long double> x(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) {
            x[static_cast<std::size_t>(j)] = 2 * pi * (idx[static_cast<std::size_t>(j)] + 0.5L) / N_;
            z[static_cast<std::size_t>(j)] = std::polar(1.0L, x[static_cast<std::size_t>(j)]);
        }
        long double w;
        if (spec.family == WeightFamily::Jacobi) {
            const JacobiPoint& jp = spec.jacobi;
            w = 1;
            for (int j = 0; j < n; ++j) {
                const long double xj = x[static_cast<std::size_t>(j)];
                w *= std::pow(std::fabs(std::sin(xj / 2)), 2 * jp.tg0) * std::pow(std::fabs(std::cos(xj / 2)), 2 * jp.tg1);
                for (int k = j + 1; k < n; ++k) {
                    const long double xk = x[static_cast<std::size_t>(k)];
                    w *= std::pow(std::fabs(std::sin((xj + xk) / 2) * std::sin((xj - xk) / 2)), 2 * jp.g);
                }
            }
        } else {
            w = eval_factors(factors, z).real();
        }
        nodes_.push_back(std::move(z));
        weight_.push_back(w / static_cast<long double>(total));
        for (int j = 0; j < n; ++j) {
            if (++idx[static_cast<std::size_t>(j)] < N_) {
                break;
            }
            idx[static_cast<std::size_t>(j)] = 0;
        }
    }
}

std::vector<long double> Quadrature::values(const NumPoly& f) const
{
    std::vector<long double> out(nodes_.size(), 0);
    for (std::size_t p = 0; p < nodes_.size(); ++p) {
        Cx s = 0;
        for (const auto& [w, c] : f) {
            Cx m = c;
            for (int j = 0; j < n_; ++j) {
                const int e = w[static_cast<std::size_t>(j)];
                if (e != 0) {
                    m *= std::pow(nodes_[p][static_cast<std::size_t>(j)], e);
                }
            }
            s += m;
        }
        out[p] = s.real();
    }
    return out;
}

long double Quadrature::inner(const NumPoly& f, const NumPoly& g) const
{
    // W-invariant polynomials with real coefficients are real on the torus,
    // so g(1/z) = g(z) there.
    const auto fv = values(f);
    const auto gv = values(g);
    long double s = 0;
    for (std::size_t p = 0; p < nodes_.size(); ++p) {
        s += fv[p] * gv[p] * weight_[p];
    }
    return s;
}

long double inner_product(const NumPoly& f, const NumPoly& g, int n, const WeightFunctionSpec& spec)
{
    return Quadrature(n, spec).inner(f, g);
}

NumPoly monomial_numeric(const Weight& lambda, Group g)
{
    NumPoly p;
    for (const Weight& w : worbit(lambda, g)) {
        p[w] += 1;
    }
    return p;
}

std::vector<Weight> size_then_lex(std::vector<Weight> weights)
{
    std::sort(weights.begin(), weights.end(), [](const Weight& a, const Weight& b) {
        const int sa = weight_size(a);
        const int sb = weight_size(b);
        return sa != sb ? sa < sb : a < b;
    });
    return weights;
}

std::map<Weight, long double> gram_schmidt_oracle(const Weight& lambda, const std::vector<Weight>& order,
                                                  const Quadrature& quad, Group g)
{
    // p_k = m_k - sum_{i<k} <m_k, p_i>/<p_i, p_i> p_i, with p_i kept as coefficient maps
    std::vector<std::map<Weight, long double>> ps;
    std::vector<NumPoly> pnum;
    std::vector<long double> norms;
    for (const Weight& mu : order) {
        std::map<Weight, long double> p{{mu, 1.0L}};
        const NumPoly m = monomial_numeric(mu, g);
        for (std::size_t i = 0; i < ps.size(); ++i) {
            const long double c = quad.inner(m, pnum[i]) / norms[i];
            for (const auto& [w, v] : ps[i]) {
                p[w] -= c * v;
            }
        }
        NumPoly pn;
        for (const auto& [w, v] : p) {
            for (const Weight& a : worbit(w, g)) {
                pn[a] += v;
            }
        }
        const long double nrm = quad.inner(pn, pn);
        if (!(std::fabs(nrm) > 1e-30L)) {
            throw DegenerateNorm("vanishing norm at " + weight_to_string(mu) + "; raise the truncation order");
        }
        if (mu == lambda) {
            return p;
        }
        ps.push_back(std::move(p));
        pnum.push_back(std::move(pn));
        norms.push_back(nrm);
    }
    throw ContractViolation("gram_schmidt_oracle: lambda missing from the order");
}

std::map<Weight, long double> gram_schmidt_oracle(const Weight& lambda, const Quadrature& quad, Group g)
{
    return gram_schmidt_oracle(lambda, linear_refinement(weights_below(lambda, g)), quad, g);
}

long double difference_equation_defect(const WeightFunctionSpec& spec, Cx w)
{
    const long double q = to_ld(spec.point.q);
    const long double t = to_ld(spec.point.t);
    auto dplus = [&](Cx x) {
        Cx v = 1;
        long double qm = 1;
        for (int m = 0; m < spec.M; ++m) {
            v *= (Cx(1) - x * qm) / (Cx(1) - t * x * qm);
            qm *= q;
        }
        return v;
    };
    // th v_a(w) = (1 - t w) / (1 - w)
    const Cx rhs = (Cx(1) - t * w) / (Cx(1) - w);
    return std::abs(dplus(q * w) / dplus(w) / rhs - Cx(1));
}

} // namespace qpoly
