#pragma once

#include <functional>
#include <vector>

#include "ellhyp/context.hpp"
#include "ellhyp/partition.hpp"
#include "ellhyp/scaled.hpp"

namespace ellhyp {

// Parameters of the biorthogonal functions; balanced when t^{2n-2}abcduv = pq.
struct BCParams {
    cplx a, b, c, d, u, v;
};

// c_{λμ}(z; a, b; q, t, T; p); zero unless μ ≺ λ.
ScaledComplex branching_coefficient(const Partition& lam, const Partition& mu, cplx z, cplx a, cplx b, cplx T,
                                    const Context& ctx);

// R*_λ(x; a, b) through the branching rule, x of length n.
// Zero when l(λ) > n.
ScaledComplex r_star(const Partition& lam, const std::vector<cplx>& x, cplx a, cplx b, const Context& ctx);

// Binomial coefficient (λ over μ)_{[a,b]} =
//   Δ_μ(a/b | t^n, 1/b) R*_μ(a^{1/2} q^{λ_i} t^{1-i}; a^{1/2} t^{1-n}, b/a^{1/2}).
// n = 0 picks max(l(λ), l(μ), 1); sqrt_sign selects the branch of a^{1/2}.
ScaledComplex elliptic_binomial(const Partition& lam, const Partition& mu, cplx a, cplx b, const Context& ctx,
                                int n = 0, int sqrt_sign = 1);

// R̃_λ(x; a : b, c, d; u, v)
ScaledComplex r_tilde(const Partition& lam, const std::vector<cplx>& x, const BCParams& P, const Context& ctx);

using SymmetricFunction = std::function<ScaledComplex(const std::vector<cplx>&)>;

// D^{(n)}(a, b, c, d) f evaluated at x; sqrt_q is the chosen square root of q.
ScaledComplex difference_operator(const SymmetricFunction& f, const std::vector<cplx>& x, cplx a, cplx b, cplx c,
                                  cplx d, cplx sqrt_q, const Context& ctx);

// a q^{λ_i} t^{n-i}, i = 1..n
std::vector<cplx> grid_point(cplx a, const Partition& lam, int n, const Context& ctx);

}  // namespace ellhyp
