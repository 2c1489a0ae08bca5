#include "ellhyp/series.hpp"

#include <cmath>
#include <string>

#include "ellhyp/elliptic.hpp"
#include "ellhyp/errors.hpp"

namespace ellhyp {

ScaledComplex delta_A(const std::vector<cplx>& x, const Context& ctx) {
    ScaledComplex r(1.0);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j) r *= ScaledComplex(x[j]) * theta(x[i] / x[j], ctx);
    return r;
}

ScaledComplex delta_C(const std::vector<cplx>& x, const Context& ctx) {
    ScaledComplex r(1.0);
    for (cplx xj : x) r *= theta(xj * xj, ctx);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j)
            r *= ScaledComplex(x[j]) * theta(x[i] * x[j], ctx) * theta(x[i] / x[j], ctx);
    return r;
}

namespace {

std::string kstr(const std::vector<int>& k) {
    std::string s = "(";
    for (std::size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + std::to_string(k[i]);
    return s + ")";
}

ScaledComplex eval_term(const LatticeTerm& term, const std::vector<int>& k) {
    try {
        return term(k);
    } catch (const PoleError& e) {
        throw PoleError(std::string(e.what()) + " at k=" + kstr(k), e.i(), e.j());
    } catch (const DomainError& e) {
        throw DomainError(std::string(e.what()) + " at k=" + kstr(k));
    }
}

void rect_rec(const std::vector<int>& limits, std::vector<int>& k, std::size_t i, const LatticeTerm& term,
              ScaledSum& acc) {
    if (i == limits.size()) {
        acc.add(eval_term(term, k));
        return;
    }
    for (int v = 0; v <= limits[i]; ++v) {
        k[i] = v;
        rect_rec(limits, k, i + 1, term, acc);
    }
}

void simplex_rec(int left, std::vector<int>& k, std::size_t i, const LatticeTerm& term, ScaledSum& acc) {
    if (i + 1 == k.size()) {
        k[i] = left;
        acc.add(eval_term(term, k));
        return;
    }
    for (int v = left; v >= 0; --v) {
        k[i] = v;
        simplex_rec(left - v, k, i + 1, term, acc);
    }
}

}  // namespace

ScaledComplex sum_rectangle(const std::vector<int>& limits, const LatticeTerm& term) {
    for (int N : limits)
        if (N < 0) throw DomainError("sum_rectangle: negative limit");
    std::vector<int> k(limits.size(), 0);
    ScaledSum acc;
    rect_rec(limits, k, 0, term, acc);
    return acc.value();
}

ScaledComplex sum_simplex(int N, int r, const LatticeTerm& term) {
    if (N < 0 || r < 1) throw DomainError("sum_simplex: need N >= 0 and r >= 1");
    std::vector<int> k(static_cast<std::size_t>(r), 0);
    ScaledSum acc;
    simplex_rec(N, k, 0, term, acc);
    return acc.value();
}

ScaledComplex v_series_weight(cplx a, const Partition& lam, int n, const Context& ctx) {
    const cplx q = ctx.q, t = ctx.t;
    ScaledComplex r(1.0);
    for (int i = 1; i <= n; ++i) {
        cplx base = a * ipow(t, 2 - 2 * i);
        r *= theta(base * ipow(q, 2 * lam(i)), ctx) / theta_den(base, ctx);
    }
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            int li = lam(i), lj = lam(j);
            cplx tji = ipow(t, j - i);
            cplx at = a * ipow(t, 2 - i - j);
            r *= theta(tji * ipow(q, li - lj), ctx) * theta(at * ipow(q, li + lj), ctx);
            r /= theta_den(tji, ctx) * theta_den(at, ctx);
            r *= shifted_factorial(t * tji, li - lj, ctx) * shifted_factorial(at * t, li + lj, ctx);
            r /= shifted_factorial_den(q * tji / t, li - lj, ctx) * shifted_factorial_den(a * q * ipow(t, 1 - i - j), li + lj, ctx);
        }
    }
    return r;
}

int termination_index(cplx b, const Context& ctx) {
    double lq = std::log(std::abs(ctx.q));
    if (b == cplx(0.0, 0.0) || lq == 0.0) return -1;
    double x = -std::log(std::abs(b)) / lq;
    long long N = std::llround(x);
    if (N < 0 || N > 1000) return -1;
    if (std::abs(b * ipow(ctx.q, N) - 1.0) < 1e-10) return static_cast<int>(N);
    return -1;
}

ScaledComplex v_series(int n, cplx a, const std::vector<cplx>& bs, const Context& ctx) {
    int N = -1;
    for (cplx b : bs) {
        int k = termination_index(b, ctx);
        if (k >= 0 && (N < 0 || k < N)) N = k;
    }
    if (N < 0) throw DomainError("v_series: no argument of the form q^{-N}; series does not terminate");
    return v_series(n, a, bs, N, ctx);
}

ScaledComplex v_series(int n, cplx a, const std::vector<cplx>& bs, int N, const Context& ctx) {
    if (n < 1) throw DomainError("v_series: n must be >= 1");
    const cplx q = ctx.q, t = ctx.t;
    std::vector<cplx> num{a * ipow(t, 1 - n)};
    std::vector<cplx> den{q * ipow(t, n - 1)};
    for (cplx b : bs) {
        num.push_back(b);
        den.push_back(a * q / b);
    }
    ScaledSum acc;
    for (const Partition& lam : partitions_in_box(N, n)) {
        ScaledComplex term = v_series_weight(a, lam, n, ctx);
        term *= partition_factorial(num, lam, ctx);
        term /= partition_factorial_den(den, lam, ctx);
        term *= ScaledComplex(ipow(q, lam.weight())) * ScaledComplex(ipow(t, 2 * lam.n_stat()));
        acc.add(term);
    }
    return acc.value();
}

ScaledComplex v_series_delta(int n, cplx a, const std::vector<cplx>& bs, const Context& ctx) {
    if (bs.size() < 2) throw DomainError("v_series_delta: need at least two arguments");
    int N = -1;
    for (cplx b : bs) {
        int k = termination_index(b, ctx);
        if (k >= 0 && (N < 0 || k < N)) N = k;
    }
    if (N < 0) throw DomainError("v_series_delta: series does not terminate");
    const cplx q = ctx.q, t = ctx.t;
    cplx b1 = bs[0], b2 = bs[1];
    std::vector<cplx> num(bs.begin() + 2, bs.end()), den;
    for (cplx b : num) den.push_back(a * q / b);
    num.push_back(q * ipow(t, n - 1) * b1 * b2);
    den.push_back(a * ipow(t, 1 - n) / (b1 * b2));
    std::vector<cplx> dargs{ipow(t, n), b1, b2, a * ipow(t, 1 - n) / (b1 * b2)};
    ScaledSum acc;
    for (const Partition& lam : partitions_in_box(N, n)) {
        ScaledComplex term = partition_factorial(num, lam, ctx) / partition_factorial_den(den, lam, ctx);
        term *= delta_lambda(a, dargs, lam, ctx);
        acc.add(term);
    }
    return acc.value();
}

}  // namespace ellhyp
