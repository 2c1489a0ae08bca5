#include "ellhyp/bc.hpp"

#include <map>

#include "ellhyp/elliptic.hpp"
#include "ellhyp/errors.hpp"

namespace ellhyp {

std::vector<cplx> grid_point(cplx a, const Partition& lam, int n, const Context& ctx) {
    std::vector<cplx> x;
    for (int i = 1; i <= n; ++i) x.push_back(a * ipow(ctx.q, lam(i)) * ipow(ctx.t, n - i));
    return x;
}

ScaledComplex branching_coefficient(const Partition& lam, const Partition& mu, cplx z, cplx a, cplx b, cplx T,
                                    const Context& ctx) {
    if (!lam.interlaces(mu)) return ScaledComplex();
    const cplx p = ctx.p, q = ctx.q, t = ctx.t, pq = p * q;
    std::vector<cplx> top{a * T * z, a * T / z, pq * a / (b * t)};
    ScaledComplex r = partition_factorial(top, lam, ctx) / partition_factorial_den(top, mu, ctx);
    r *= partition_factorial({pq * z / (b * t), pq / (z * b * t), T}, mu, ctx);
    r /= partition_factorial_den({pq * z / b, pq / (z * b), t * T}, lam, ctx);
    const cplx aTb = a * T / b;
    Partition lc = lam.conjugate(), mc = mu.conjugate();
    for (auto [i, j] : lam.cells()) {
        int li = lam(i), lcj = lc(j), mi = mu(i), mcj = mc(j);
        if (lcj == mcj) {
            r *= theta(ipow(q, li + j - 1) * ipow(t, 2 - i - lcj) * aTb, ctx);
            r /= theta_den(p * ipow(q, mi - j + 1) * ipow(t, mcj - i), ctx);
        } else {
            r *= theta(ipow(q, li - j) * ipow(t, lcj - i + 1), ctx);
            r /= theta_den(p * ipow(q, mi + j) * ipow(t, -i - mcj) * aTb, ctx);
        }
    }
    for (auto [i, j] : mu.cells()) {
        int li = lam(i), lcj = lc(j), mi = mu(i), mcj = mc(j);
        if (lcj == mcj) {
            r *= theta(p * ipow(q, li - j + 1) * ipow(t, lcj - i), ctx);
            r /= theta_den(ipow(q, mi + j - 1) * ipow(t, 1 - i - mcj) * aTb, ctx);
        } else {
            r *= theta(p * ipow(q, li + j) * ipow(t, 1 - i - lcj) * aTb, ctx);
            r /= theta_den(ipow(q, mi - j) * ipow(t, mcj - i + 1), ctx);
        }
    }
    return r;
}

namespace {

struct RStarEval {
    const std::vector<cplx>& x;
    cplx a, b;
    const Context& ctx;
    std::map<std::pair<std::vector<int>, int>, ScaledComplex> memo;

    ScaledComplex operator()(const Partition& lam, int n) {
        if (n == 0) return lam.empty() ? ScaledComplex(1.0) : ScaledComplex();
        if (lam.length() > n) return ScaledComplex();
        auto key = std::make_pair(lam.parts(), n);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        ScaledSum acc;
        cplx T = ipow(ctx.t, n - 1);
        for (const Partition& mu : interlaced_below(lam)) {
            if (mu.length() > n - 1) continue;
            ScaledComplex sub = (*this)(mu, n - 1);
            if (sub.is_zero()) continue;
            acc.add(branching_coefficient(lam, mu, x[static_cast<std::size_t>(n - 1)], a, b, T, ctx) * sub);
        }
        ScaledComplex v = acc.value();
        memo.emplace(std::move(key), v);
        return v;
    }
};

}  // namespace

ScaledComplex r_star(const Partition& lam, const std::vector<cplx>& x, cplx a, cplx b, const Context& ctx) {
    for (cplx xi : x)
        if (xi == cplx(0.0, 0.0)) throw DomainError("r_star: variables must be nonzero");
    RStarEval ev{x, a, b, ctx, {}};
    return ev(lam, static_cast<int>(x.size()));
}

ScaledComplex elliptic_binomial(const Partition& lam, const Partition& mu, cplx a, cplx b, const Context& ctx, int n,
                                int sqrt_sign) {
    if (!lam.contains(mu)) return ScaledComplex();
    if (n <= 0) n = std::max({lam.length(), mu.length(), 1});
    if (lam.length() > n) throw DomainError("elliptic_binomial: l(lambda) exceeds n");
    const cplx q = ctx.q, t = ctx.t;
    cplx sa = std::sqrt(a) * static_cast<double>(sqrt_sign >= 0 ? 1 : -1);
    std::vector<cplx> x;
    for (int i = 1; i <= n; ++i) x.push_back(sa * ipow(q, lam(i)) * ipow(t, 1 - i));
    ScaledComplex d = delta_lambda(a / b, {ipow(t, n), 1.0 / b}, mu, ctx);
    return d * r_star(mu, x, sa * ipow(t, 1 - n), b / sa, ctx);
}

ScaledComplex r_tilde(const Partition& lam, const std::vector<cplx>& x, const BCParams& P, const Context& ctx) {
    const int n = static_cast<int>(x.size());
    if (lam.length() > n) throw DomainError("r_tilde: l(lambda) exceeds the number of variables");
    const cplx pq = ctx.p * ctx.q, t = ctx.t, tn1 = ipow(t, n - 1);
    std::vector<cplx> num{pq / (P.b * P.u), pq / (P.c * P.u), pq / (P.d * P.u), pq / (P.u * P.v)};
    std::vector<cplx> den{tn1 * P.a * P.b, tn1 * P.a * P.c, tn1 * P.a * P.d, tn1 * P.a * P.v};
    ScaledSum acc;
    for (const Partition& mu : contained_in(lam)) {
        ScaledComplex term = elliptic_binomial(lam, mu, 1.0 / (P.u * P.v), ipow(t, 1 - n) / (P.a * P.v), ctx, n);
        if (term.is_zero()) continue;
        term *= partition_factorial(num, mu, ctx) / partition_factorial_den(den, mu, ctx);
        term *= r_star(mu, x, P.a, P.u, ctx);
        acc.add(term);
    }
    return acc.value();
}

ScaledComplex difference_operator(const SymmetricFunction& f, const std::vector<cplx>& x, cplx a, cplx b, cplx c,
                                  cplx d, cplx sqrt_q, const Context& ctx) {
    const std::size_t n = x.size();
    if (n == 0) throw DomainError("difference_operator: no variables");
    ScaledSum acc;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<cplx> xs(n), xp(n);
        for (std::size_t i = 0; i < n; ++i) {
            bool neg = (mask >> i) & 1u;
            xp[i] = neg ? 1.0 / x[i] : x[i];
            xs[i] = neg ? x[i] / sqrt_q : x[i] * sqrt_q;
        }
        ScaledComplex w(1.0);
        for (std::size_t i = 0; i < n; ++i) {
            cplx xi = xp[i];
            w *= theta_condensed({a * xi, b * xi, c * xi, d * xi}, ctx) / theta_den(xi * xi, ctx);
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                w *= theta(ctx.t * xp[i] * xp[j], ctx) / theta_den(xp[i] * xp[j], ctx);
        acc.add(f(xs) * w);
    }
    return acc.value();
}

}  // namespace ellhyp
