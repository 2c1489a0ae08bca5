#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ellhyp/context.hpp"
#include "ellhyp/scaled.hpp"

namespace ellhyp {

// One factor Γ(c · z^e) of an integrand, or 1/Γ(c · z^e) when recip is set.
// z^e = z_1^{e_1} ⋯ z_n^{e_n}.
struct GammaFactor {
    cplx c;
    std::vector<int> e;
    bool recip = false;
};

enum class IntegrandFamily { ATypeI, ATypeII, AMixed3, AMixed4, CTypeI, CTypeII };

struct Integrand {
    int n = 1;
    IntegrandFamily family = IntegrandFamily::CTypeI;
    std::vector<GammaFactor> factors;
};

struct QuadratureOptions {
    double tol = 1e-11;     // relative change between successive grids
    int M_min = 16;
    int M_max = 0;          // 0: 512 for n = 1, 192 for n = 2
    double margin = 0.02;   // poles must stay this far (relatively) from |z| = 1
    int threads = 1;
};

struct QuadratureDiagnostics {
    int M_final = 0;
    double pole_margin = 0.0;
    double predicted_rate = 0.0;  // ρ: error ~ ρ^M from the nearest pole
    double observed_rate = 0.0;   // from the last two grid differences
    double last_change = 0.0;
    std::vector<std::pair<int, double>> history;  // (M, |value|)
};

struct QuadratureResult {
    ScaledComplex mean;  // average of the integrand over the grid
    QuadratureDiagnostics diag;
};

// Grid schedule 16, 24, 32, 48, ... up to M_max.
std::vector<int> quadrature_schedule(int n, const QuadratureOptions& opt);

// Pole margin of an integrand: min over factors of the relative distance of
// the nearest pole sequence to the unit torus. Negative means a pole crosses.
double pole_margin(const Integrand& f, const Context& ctx);
double predicted_rate(const Integrand& f, const Context& ctx);

// Trapezoid rule on T^n. Throws AdmissibilityError when the pole margin is
// below opt.margin and ConvergenceError when M_max is reached first.
QuadratureResult torus_integrate(const Integrand& f, const Context& ctx, const QuadratureOptions& opt = {});

// (p;p)^n (q;q)^n / ((n+1)! (2πi)^n) and (p;p)^n (q;q)^n / (n! 2^n (2πi)^n)
ScaledComplex kappa_A(int n, const Context& ctx);
ScaledComplex kappa_C(int n, const Context& ctx);

struct IntegralValue {
    ScaledComplex value;
    QuadratureDiagnostics diag;
};

// I^{(m)}_{A_n}(s; t), m = |s| - n - 2, and ∏ s_i t_i = (pq)^{m+1}
IntegralValue i_a(int n, const std::vector<cplx>& s, const std::vector<cplx>& t, const Context& ctx,
                  const QuadratureOptions& opt = {});
// I^{(m)}_{C_n}(t), m = (|t| - 2n - 4)/2, ∏ t_i = (pq)^{m+1}
IntegralValue i_c(int n, const std::vector<cplx>& t, const Context& ctx, const QuadratureOptions& opt = {});
// J^{(m)}_{C_n}(t; tau), m = (|t| - 6)/2, τ^{2n-2} ∏ t_i = (pq)^{m+1}
IntegralValue j_c(int n, const std::vector<cplx>& t, cplx tau, const Context& ctx,
                  const QuadratureOptions& opt = {});

// The integrands of i_a, i_c and j_c.
Integrand integrand_i_a(int n, const std::vector<cplx>& s, const std::vector<cplx>& t);
Integrand integrand_i_c(int n, const std::vector<cplx>& t);
Integrand integrand_j_c(int n, const std::vector<cplx>& t, cplx tau);

// The checks torus_integrate performs before touching the grid. Lets a
// caller with several integrals reject a binding before any quadrature.
void require_admissible(const Integrand& f, const Context& ctx, const QuadratureOptions& opt = {});

// κ_A or κ_C times the torus integral of f (f.n variables).
IntegralValue integrate_A(const Integrand& f, const Context& ctx, const QuadratureOptions& opt = {});
IntegralValue integrate_C(const Integrand& f, const Context& ctx, const QuadratureOptions& opt = {});

// Integrand builders shared by the identity registry.
Integrand weyl_A(int n);  // 1/∏ Γ(z_i/z_j, z_j/z_i), z_{n+1} = 1/(z_1⋯z_n)
Integrand weyl_C(int n);  // 1/∏ Γ(z_i^{±2}) ∏ Γ(z_i^± z_j^±)
// e-vector of z_i (1-based i <= n) or of z_{n+1} for the A family
std::vector<int> a_coord(int n, int i);
std::vector<int> c_coord(int n, int i);
std::vector<int> add_e(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> neg_e(const std::vector<int>& a);

std::string family_name(IntegrandFamily f);

}  // namespace ellhyp
