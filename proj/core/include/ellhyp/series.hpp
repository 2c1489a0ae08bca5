#pragma once

#include <functional>
#include <vector>

#include "ellhyp/context.hpp"
#include "ellhyp/partition.hpp"
#include "ellhyp/scaled.hpp"

namespace ellhyp {

// Δ^A(x) = ∏_{i<j} x_j θ(x_i/x_j)
ScaledComplex delta_A(const std::vector<cplx>& x, const Context& ctx);
// Δ^C(x) = ∏_j θ(x_j²) ∏_{i<j} x_j θ(x_i x_j) θ(x_i/x_j)
ScaledComplex delta_C(const std::vector<cplx>& x, const Context& ctx);

using LatticeTerm = std::function<ScaledComplex(const std::vector<int>&)>;

// Σ over 0 <= k_i <= N_i, k_1 varying slowest.
ScaledComplex sum_rectangle(const std::vector<int>& limits, const LatticeTerm& term);
// Σ over k in Z_{>=0}^r with k_1 + ... + k_r = N, k_1 descending slowest.
ScaledComplex sum_simplex(int N, int r, const LatticeTerm& term);

// Well-poised weight of the V-series at λ (padded to n parts):
// ∏_i θ(a t^{2-2i} q^{2λ_i})/θ(a t^{2-2i}) times the pairwise factors.
ScaledComplex v_series_weight(cplx a, const Partition& lam, int n, const Context& ctx);

// Terminating elliptic V-series in n variables:
//   Σ_{λ ⊂ (N^n)} W(a;λ) (a t^{1-n}, b_1, …)_λ / (q t^{n-1}, aq/b_1, …)_λ q^{|λ|} t^{2n(λ)}
// N is read from the first argument equal to q^{-N}; DomainError if none.
ScaledComplex v_series(int n, cplx a, const std::vector<cplx>& bs, const Context& ctx);
ScaledComplex v_series(int n, cplx a, const std::vector<cplx>& bs, int N, const Context& ctx);

// Same series with the weight written through Δ_λ(a | t^n, b_1, b_2, a t^{1-n}/b_1 b_2).
ScaledComplex v_series_delta(int n, cplx a, const std::vector<cplx>& bs, const Context& ctx);

// N >= 0 with b = q^{-N}, or -1.
int termination_index(cplx b, const Context& ctx);

}  // namespace ellhyp
