#pragma once

// Shorthand shared by the identity evaluators. Everything that ends up in a
// denominator goes through the *_den primitives so the sampler's factor
// guard can reject near-singular bindings.

#include <cmath>
#include <string>
#include <vector>

#include "ellhyp/binding.hpp"
#include "ellhyp/elliptic.hpp"
#include "ellhyp/partition.hpp"
#include "ellhyp/registry.hpp"

namespace ellhyp::ids {

using V = std::vector<cplx>;

inline ScaledComplex th(cplx z, const Context& c) { return theta(z, c); }
inline ScaledComplex thd(cplx z, const Context& c) { return theta_den(z, c); }
inline ScaledComplex fac(const V& zs, int k, const Context& c) { return shifted_factorial(zs, k, c); }
inline ScaledComplex dfac(const V& zs, int k, const Context& c) { return shifted_factorial_den(zs, k, c); }
inline ScaledComplex pfac(const V& zs, const Partition& lam, const Context& c) {
    return partition_factorial(zs, lam, c);
}
inline ScaledComplex dpfac(const V& zs, const Partition& lam, const Context& c) {
    return partition_factorial_den(zs, lam, c);
}

inline cplx prod(const V& v) {
    cplx r = 1.0;
    for (cplx z : v) r *= z;
    return r;
}

inline V scaled(const V& v, cplx f) {
    V r;
    for (cplx z : v) r.push_back(z * f);
    return r;
}

inline V recip(const V& v) {
    V r;
    for (cplx z : v) r.push_back(1.0 / z);
    return r;
}

inline V cat(V a, const V& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

inline int total(const std::vector<int>& k) {
    int s = 0;
    for (int v : k) s += v;
    return s;
}

inline int geti(const ParameterBinding& b, const char* name) { return static_cast<int>(b.get_int(name)); }

inline std::size_t sz(int n) { return static_cast<std::size_t>(n); }

// Δ^A(x q^k)/Δ^A(x)
inline ScaledComplex dA_ratio(const V& x, const std::vector<int>& k, const Context& c) {
    ScaledComplex r(1.0);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j) {
            r *= ScaledComplex(ipow(c.q, k[j])) * th(x[i] / x[j] * ipow(c.q, k[i] - k[j]), c);
            r /= thd(x[i] / x[j], c);
        }
    return r;
}

// Δ^C(x q^k)/Δ^C(x)
inline ScaledComplex dC_ratio(const V& x, const std::vector<int>& k, const Context& c) {
    ScaledComplex r(1.0);
    for (std::size_t j = 0; j < x.size(); ++j) r *= th(x[j] * x[j] * ipow(c.q, 2 * k[j]), c) / thd(x[j] * x[j], c);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j) {
            r *= ScaledComplex(ipow(c.q, k[j]));
            r *= th(x[i] * x[j] * ipow(c.q, k[i] + k[j]), c) / thd(x[i] * x[j], c);
            r *= th(x[i] / x[j] * ipow(c.q, k[i] - k[j]), c) / thd(x[i] / x[j], c);
        }
    return r;
}

inline Sides make_sides(ScaledComplex lhs, ScaledComplex rhs) {
    Sides s;
    s.lhs = lhs;
    s.rhs = rhs;
    return s;
}

// Largest of several residuals, reported as the identity's residual.
inline double worst(std::initializer_list<double> r) {
    double m = 0.0;
    for (double v : r) m = std::isnan(v) ? v : std::max(m, v);
    return m;
}

inline void draw_nomes(Sampler& s, ParameterBinding& b, bool with_t) {
    b.set("p", s.nome());
    b.set("q", s.nome());
    if (with_t) b.set("t", s.nome());
}

}  // namespace ellhyp::ids
