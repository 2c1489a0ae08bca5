#pragma once

#include <array>
#include <vector>

#include "ellhyp/context.hpp"
#include "ellhyp/scaled.hpp"

namespace ellhyp {

// z^k for integer k by repeated squaring.
cplx ipow(cplx z, long long k);

// θ(z;p) = ∏_{i≥0} (1 - z p^i)(1 - p^{i+1}/z)
ScaledComplex theta(cplx z, const Context& ctx);
// Same value, but raises PoleError when |θ(z)| is below ctx.factor_guard.
// Used for every theta that ends up in a denominator.
ScaledComplex theta_den(cplx z, const Context& ctx);

// Number of factor pairs theta(z) multiplies for the current truncation policy.
int theta_truncation(cplx z, const Context& ctx);

// (z;q,p)_k = θ(z)θ(zq)…θ(zq^{k-1}), k >= 0
ScaledComplex shifted_factorial(cplx z, int k, const Context& ctx);
ScaledComplex shifted_factorial_base(cplx z, cplx base, int k, const Context& ctx);
ScaledComplex shifted_factorial_den(cplx z, int k, const Context& ctx);
ScaledComplex shifted_factorial(const std::vector<cplx>& zs, int k, const Context& ctx);
ScaledComplex shifted_factorial_den(const std::vector<cplx>& zs, int k, const Context& ctx);

// Γ(z;p,q) = ∏_{i,j≥0} (1 - p^{i+1}q^{j+1}/z)/(1 - z p^i q^j)
ScaledComplex elliptic_gamma(cplx z, const Context& ctx);
// 1/Γ(z;p,q), finite on the zeros of Γ (including z = 1).
ScaledComplex elliptic_gamma_recip(cplx z, const Context& ctx);

// (z;base)_∞
ScaledComplex q_pochhammer_infinity(cplx z, cplx base, const Context& ctx);

// ∏ θ(args) and ∏ Γ(args)
ScaledComplex theta_condensed(const std::vector<cplx>& args, const Context& ctx);
ScaledComplex gamma_condensed(const std::vector<cplx>& args, const Context& ctx);

// az^± -> (az, a/z)
std::array<cplx, 2> pm(cplx a, cplx z);
// tz^±w^± -> (tzw, tz/w, tw/z, t/zw)
std::array<cplx, 4> pmpm(cplx t, cplx z, cplx w);

}  // namespace ellhyp
