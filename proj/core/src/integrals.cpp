#include "ellhyp/integrals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <thread>

#include "ellhyp/elliptic.hpp"
#include "ellhyp/errors.hpp"

namespace ellhyp {

std::string family_name(IntegrandFamily f) {
    switch (f) {
        case IntegrandFamily::ATypeI: return "A-typeI";
        case IntegrandFamily::ATypeII: return "A-typeII";
        case IntegrandFamily::AMixed3: return "A-mixed-ai3";
        case IntegrandFamily::AMixed4: return "A-mixed-ai4";
        case IntegrandFamily::CTypeI: return "C-typeI";
        case IntegrandFamily::CTypeII: return "C-typeII";
    }
    return "?";
}

std::vector<int> a_coord(int n, int i) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    if (i == n + 1)
        std::fill(e.begin(), e.end(), -1);
    else
        e[static_cast<std::size_t>(i - 1)] = 1;
    return e;
}

std::vector<int> c_coord(int n, int i) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i - 1)] = 1;
    return e;
}

std::vector<int> add_e(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r(a);
    for (std::size_t k = 0; k < r.size(); ++k) r[k] += b[k];
    return r;
}

std::vector<int> neg_e(const std::vector<int>& a) {
    std::vector<int> r(a);
    for (int& x : r) x = -x;
    return r;
}

Integrand weyl_A(int n) {
    Integrand f;
    f.n = n;
    f.family = IntegrandFamily::ATypeI;
    for (int i = 1; i <= n + 1; ++i)
        for (int j = i + 1; j <= n + 1; ++j) {
            auto d = add_e(a_coord(n, i), neg_e(a_coord(n, j)));
            f.factors.push_back({1.0, d, true});
            f.factors.push_back({1.0, neg_e(d), true});
        }
    return f;
}

Integrand weyl_C(int n) {
    Integrand f;
    f.n = n;
    f.family = IntegrandFamily::CTypeI;
    for (int i = 1; i <= n; ++i) {
        auto e = c_coord(n, i);
        f.factors.push_back({1.0, add_e(e, e), true});
        f.factors.push_back({1.0, neg_e(add_e(e, e)), true});
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            for (int si : {1, -1})
                for (int sj : {1, -1}) {
                    std::vector<int> e(static_cast<std::size_t>(n), 0);
                    e[static_cast<std::size_t>(i - 1)] = si;
                    e[static_cast<std::size_t>(j - 1)] = sj;
                    f.factors.push_back({1.0, e, true});
                }
        }
    return f;
}

namespace {

int max_abs_e(const std::vector<int>& e) {
    int m = 0;
    for (int x : e) m = std::max(m, std::abs(x));
    return m;
}

double factor_margin(const GammaFactor& g, const Context& ctx) {
    double ac = std::abs(g.c);
    if (!g.recip) return 1.0 / ac - 1.0;
    double apq = std::abs(ctx.p * ctx.q);
    if (apq == 0.0) return std::numeric_limits<double>::infinity();
    return ac / apq - 1.0;
}

double factor_rate(const GammaFactor& g, const Context& ctx) {
    int k = max_abs_e(g.e);
    if (k == 0) return 0.0;
    double r = g.recip ? std::abs(ctx.p * ctx.q) / std::abs(g.c) : std::abs(g.c);
    return std::pow(r, 1.0 / k);
}

}  // namespace

double pole_margin(const Integrand& f, const Context& ctx) {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& g : f.factors)
        if (max_abs_e(g.e) > 0) m = std::min(m, factor_margin(g, ctx));
    return m;
}

double predicted_rate(const Integrand& f, const Context& ctx) {
    double r = 0.0;
    for (const auto& g : f.factors) r = std::max(r, factor_rate(g, ctx));
    return r;
}

std::vector<int> quadrature_schedule(int n, const QuadratureOptions& opt) {
    int M_max = opt.M_max > 0 ? opt.M_max : (n == 1 ? 512 : 192);
    std::vector<int> out;
    // powers of two interleaved with 3 * 2^k
    for (int M = 8; M <= M_max; M *= 2) {
        if (M >= opt.M_min) out.push_back(M);
        int M3 = 3 * M / 2;
        if (M3 >= opt.M_min && M3 <= M_max) out.push_back(M3);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

struct Table {
    std::vector<cplx> m;
    std::vector<std::int64_t> e;
};

ScaledComplex grid_mean(const Integrand& f, const Context& ctx, int M, int threads) {
    const int n = f.n;
    const double two_pi = 2.0 * std::numbers::pi;
    std::vector<Table> tables;
    ScaledComplex constant(1.0);
    std::vector<const GammaFactor*> active;
    for (const auto& g : f.factors) {
        if (max_abs_e(g.e) == 0) {
            constant *= g.recip ? elliptic_gamma_recip(g.c, ctx) : elliptic_gamma(g.c, ctx);
            continue;
        }
        Table tb;
        tb.m.resize(static_cast<std::size_t>(M));
        tb.e.resize(static_cast<std::size_t>(M));
        for (int r = 0; r < M; ++r) {
            cplx w = g.c * std::polar(1.0, two_pi * r / M);
            ScaledComplex v = g.recip ? elliptic_gamma_recip(w, ctx) : elliptic_gamma(w, ctx);
            tb.m[static_cast<std::size_t>(r)] = v.mantissa();
            tb.e[static_cast<std::size_t>(r)] = v.is_zero() ? 0 : v.exponent();
        }
        tables.push_back(std::move(tb));
        active.push_back(&g);
    }

    // rows are indexed by j_1; each row sums over the remaining coordinates
    const long long rows = M;
    const long long per_row = n == 1 ? 1 : static_cast<long long>(std::pow(M, n - 1));
    std::vector<ScaledComplex> row_sum(static_cast<std::size_t>(rows));
    auto do_row = [&](long long j1) {
        ScaledSum acc;
        std::vector<int> j(static_cast<std::size_t>(n), 0);
        j[0] = static_cast<int>(j1);
        for (long long idx = 0; idx < per_row; ++idx) {
            long long rem = idx;
            for (int k = n - 1; k >= 1; --k) {
                j[static_cast<std::size_t>(k)] = static_cast<int>(rem % M);
                rem /= M;
            }
            cplx m(1.0, 0.0);
            std::int64_t ex = 0;
            bool zero = false;
            for (std::size_t a = 0; a < active.size(); ++a) {
                long long r = 0;
                const auto& e = active[a]->e;
                for (int k = 0; k < n; ++k) r += static_cast<long long>(e[static_cast<std::size_t>(k)]) * j[static_cast<std::size_t>(k)];
                r %= M;
                if (r < 0) r += M;
                cplx tm = tables[a].m[static_cast<std::size_t>(r)];
                if (tm == cplx(0.0, 0.0)) {
                    zero = true;
                    break;
                }
                m *= tm;
                ex += tables[a].e[static_cast<std::size_t>(r)];
                if (std::abs(m.real()) + std::abs(m.imag()) > 1e200) {
                    ScaledComplex s(m);
                    m = s.mantissa();
                    ex += s.exponent();
                }
            }
            if (!zero) acc.add(ScaledComplex::from_parts(m, ex));
        }
        row_sum[static_cast<std::size_t>(j1)] = acc.value();
    };
    int nt = std::max(1, std::min<int>(threads, static_cast<int>(rows)));
    if (nt == 1) {
        for (long long j1 = 0; j1 < rows; ++j1) do_row(j1);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < nt; ++w)
            pool.emplace_back([&, w] {
                for (long long j1 = w; j1 < rows; j1 += nt) do_row(j1);
            });
        for (auto& th : pool) th.join();
    }
    ScaledSum total;
    for (const auto& s : row_sum) total.add(s);
    ScaledComplex mean = total.value() * constant;
    return mean / ScaledComplex(std::pow(static_cast<double>(M), n));
}

}  // namespace

QuadratureResult torus_integrate(const Integrand& f, const Context& ctx, const QuadratureOptions& opt) {
    if (f.n < 1) throw DomainError("torus_integrate: n must be >= 1");
    for (const auto& g : f.factors)
        if (static_cast<int>(g.e.size()) != f.n) throw DomainError("torus_integrate: exponent vector size mismatch");
    QuadratureResult res;
    res.diag.pole_margin = pole_margin(f, ctx);
    res.diag.predicted_rate = predicted_rate(f, ctx);
    if (res.diag.pole_margin < opt.margin) {
        std::ostringstream os;
        os << "torus_integrate: pole within margin of T^n (";
        for (const auto& g : f.factors)
            if (max_abs_e(g.e) > 0 && factor_margin(g, ctx) < opt.margin) {
                os << (g.recip ? "1/Gamma(" : "Gamma(") << g.c << " z^e) ";
                break;
            }
        os << "margin " << res.diag.pole_margin << ")";
        throw AdmissibilityError(os.str());
    }
    std::vector<int> sched = quadrature_schedule(f.n, opt);
    if (sched.empty()) throw DomainError("torus_integrate: empty grid schedule");
    double reach = std::pow(res.diag.predicted_rate, sched.back());
    if (reach > opt.tol * 1e-1)
        throw ConvergenceError("torus_integrate: nearest pole too close to converge by M_max", reach);

    ScaledComplex prev;
    bool have_prev = false;
    std::vector<std::pair<int, double>> changes;
    for (int M : sched) {
        ScaledComplex v = grid_mean(f, ctx, M, opt.threads);
        res.diag.history.emplace_back(M, std::exp2(v.log2_abs()));
        if (have_prev) {
            double ch = relative_residual(v, prev) * 2.0;
            changes.emplace_back(M, ch);
            res.diag.last_change = ch;
            if (ch < opt.tol) {
                res.mean = v;
                res.diag.M_final = M;
                break;
            }
        }
        prev = v;
        have_prev = true;
    }
    if (res.diag.M_final == 0)
        throw ConvergenceError("torus_integrate: no convergence at M_max", res.diag.last_change);
    // change at grid M_k estimates the error at M_{k-1}
    for (std::size_t k = changes.size(); k-- > 1;) {
        double d1 = changes[k - 1].second, d2 = changes[k].second;
        if (d1 > 1e-14 && d2 > 0.0) {
            int Ma = k >= 2 ? changes[k - 2].first : sched.front();
            int Mb = changes[k - 1].first;
            res.diag.observed_rate = std::pow(d2 / d1, 1.0 / (Mb - Ma));
            break;
        }
    }
    return res;
}

namespace {

ScaledComplex base_constant(int n, const Context& ctx) {
    ScaledComplex pp = q_pochhammer_infinity(ctx.p, ctx.p, ctx);
    ScaledComplex qq = q_pochhammer_infinity(ctx.q, ctx.q, ctx);
    return (pp * qq).pow(n);
}

double factorial(int n) {
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

ScaledComplex two_pi_i_pow(int n) { return ScaledComplex(cplx(0.0, 2.0 * std::numbers::pi)).pow(n); }

}  // namespace

ScaledComplex kappa_A(int n, const Context& ctx) {
    if (n < 1) throw DomainError("kappa_A: n must be >= 1");
    return base_constant(n, ctx) / (ScaledComplex(factorial(n + 1)) * two_pi_i_pow(n));
}

ScaledComplex kappa_C(int n, const Context& ctx) {
    if (n < 1) throw DomainError("kappa_C: n must be >= 1");
    return base_constant(n, ctx) / (ScaledComplex(factorial(n) * std::pow(2.0, n)) * two_pi_i_pow(n));
}

Integrand integrand_i_a(int n, const std::vector<cplx>& s, const std::vector<cplx>& t) {
    if (s.size() != t.size() || static_cast<int>(s.size()) < n + 2)
        throw DomainError("i_a: need |s| = |t| >= n + 2");
    Integrand f = weyl_A(n);
    f.family = IntegrandFamily::ATypeI;
    for (int j = 1; j <= n + 1; ++j) {
        for (cplx si : s) f.factors.push_back({si, a_coord(n, j), false});
        for (cplx ti : t) f.factors.push_back({ti, neg_e(a_coord(n, j)), false});
    }
    return f;
}

Integrand integrand_i_c(int n, const std::vector<cplx>& t) {
    if (t.size() < static_cast<std::size_t>(2 * n + 4) || t.size() % 2 != 0)
        throw DomainError("i_c: need an even number >= 2n + 4 of parameters");
    Integrand f = weyl_C(n);
    f.family = IntegrandFamily::CTypeI;
    for (int j = 1; j <= n; ++j)
        for (cplx ti : t) {
            f.factors.push_back({ti, c_coord(n, j), false});
            f.factors.push_back({ti, neg_e(c_coord(n, j)), false});
        }
    return f;
}

Integrand integrand_j_c(int n, const std::vector<cplx>& t, cplx tau) {
    if (t.size() < 6 || t.size() % 2 != 0) throw DomainError("j_c: need an even number >= 6 of parameters");
    Integrand f = weyl_C(n);
    f.family = IntegrandFamily::CTypeII;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int si : {1, -1})
                for (int sj : {1, -1}) {
                    std::vector<int> e(static_cast<std::size_t>(n), 0);
                    e[static_cast<std::size_t>(i - 1)] = si;
                    e[static_cast<std::size_t>(j - 1)] = sj;
                    f.factors.push_back({tau, e, false});
                }
    for (int j = 1; j <= n; ++j)
        for (cplx ti : t) {
            f.factors.push_back({ti, c_coord(n, j), false});
            f.factors.push_back({ti, neg_e(c_coord(n, j)), false});
        }
    return f;
}

void require_admissible(const Integrand& f, const Context& ctx, const QuadratureOptions& opt) {
    double m = pole_margin(f, ctx);
    if (m < opt.margin) {
        std::ostringstream os;
        os << family_name(f.family) << " integrand: pole within margin of T^" << f.n << " (margin " << m << ")";
        throw AdmissibilityError(os.str());
    }
    QuadratureOptions o = opt;
    std::vector<int> sched = quadrature_schedule(f.n, o);
    if (sched.empty()) throw DomainError("empty grid schedule");
    double reach = std::pow(predicted_rate(f, ctx), sched.back());
    if (reach > opt.tol * 1e-1)
        throw ConvergenceError(family_name(f.family) + " integrand: nearest pole too close to converge by M_max", reach);
}

// κ (2πi)^n times the grid mean
IntegralValue integrate_A(const Integrand& f, const Context& ctx, const QuadratureOptions& opt) {
    auto r = torus_integrate(f, ctx, opt);
    ScaledComplex pref = base_constant(f.n, ctx) / ScaledComplex(factorial(f.n + 1));
    return {pref * r.mean, r.diag};
}

IntegralValue integrate_C(const Integrand& f, const Context& ctx, const QuadratureOptions& opt) {
    auto r = torus_integrate(f, ctx, opt);
    ScaledComplex pref = base_constant(f.n, ctx) / ScaledComplex(factorial(f.n) * std::pow(2.0, f.n));
    return {pref * r.mean, r.diag};
}

IntegralValue i_a(int n, const std::vector<cplx>& s, const std::vector<cplx>& t, const Context& ctx,
                  const QuadratureOptions& opt) {
    return integrate_A(integrand_i_a(n, s, t), ctx, opt);
}

IntegralValue i_c(int n, const std::vector<cplx>& t, const Context& ctx, const QuadratureOptions& opt) {
    return integrate_C(integrand_i_c(n, t), ctx, opt);
}

IntegralValue j_c(int n, const std::vector<cplx>& t, cplx tau, const Context& ctx, const QuadratureOptions& opt) {
    return integrate_C(integrand_j_c(n, t, tau), ctx, opt);
}

}  // namespace ellhyp
