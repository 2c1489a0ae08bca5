#include "oracles.hpp"

#include <algorithm>
#include <cmath>

namespace oracle {

using ellhyp::Partition;

double rel_err(cplx a, cplx b) {
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

cplx ipow(cplx z, int k) {
    cplx r = 1.0, b = k < 0 ? 1.0 / z : z;
    for (int i = 0; i < std::abs(k); ++i) r *= b;
    return r;
}

cplx theta(cplx z, cplx p) {
    cplx r = 1.0 - z, pk = p;
    for (int i = 0; i < 4000 && std::abs(pk) * (std::abs(z) + 1.0 / std::abs(z)) > 1e-19; ++i) {
        r *= (1.0 - z * pk) * (1.0 - pk / z);
        pk *= p;
    }
    return r;
}

cplx theta(const std::vector<cplx>& zs, cplx p) {
    cplx r = 1.0;
    for (cplx z : zs) r *= theta(z, p);
    return r;
}

cplx qpoch(cplx z, cplx b) {
    cplx r = 1.0, bk = 1.0;
    for (int i = 0; i < 4000 && std::abs(z * bk) > 1e-19; ++i) {
        r *= 1.0 - z * bk;
        bk *= b;
    }
    return r;
}

cplx gamma_log_series(cplx z, cplx p, cplx q) {
    cplx sum = 0.0, zm = 1.0, wm = 1.0, pm = 1.0, qm = 1.0;
    const cplx w = p * q / z;
    for (int m = 1; m < 20000; ++m) {
        zm *= z;
        wm *= w;
        pm *= p;
        qm *= q;
        cplx term = (zm - wm) / (double(m) * (1.0 - pm) * (1.0 - qm));
        sum += term;
        if (std::abs(zm) < 1e-19 && std::abs(wm) < 1e-19) break;
    }
    return std::exp(sum);
}

cplx shifted(cplx z, int k, cplx p, cplx q) {
    cplx r = 1.0;
    for (int i = 0; i < k; ++i) r *= theta(z * ipow(q, i), p);
    return r;
}

cplx cell_factorial(cplx z, const Partition& lam, cplx p, cplx q, cplx t) {
    cplx r = 1.0;
    for (int i = 1; i <= lam.length(); ++i)
        for (int j = 1; j <= lam(i); ++j) r *= theta(z * ipow(q, j - 1) * ipow(t, 1 - i), p);
    return r;
}

cplx row_factorial(cplx z, const Partition& lam, cplx p, cplx q, cplx t) {
    cplx r = 1.0;
    for (int i = 1; i <= lam.length(); ++i) r *= shifted(z * ipow(t, 1 - i), lam(i), p, q);
    return r;
}

cplx c_minus(cplx z, const Partition& lam, cplx p, cplx q, cplx t) {
    Partition lc = lam.conjugate();
    cplx r = 1.0;
    for (int i = 1; i <= lam.length(); ++i)
        for (int j = 1; j <= lam(i); ++j) r *= theta(z * ipow(q, lam(i) - j) * ipow(t, lc(j) - i), p);
    return r;
}

cplx c_plus(cplx z, const Partition& lam, cplx p, cplx q, cplx t) {
    Partition lc = lam.conjugate();
    cplx r = 1.0;
    for (int i = 1; i <= lam.length(); ++i)
        for (int j = 1; j <= lam(i); ++j) r *= theta(z * ipow(q, lam(i) + j - 1) * ipow(t, 2 - lc(j) - i), p);
    return r;
}

cplx delta_explicit(cplx a, const std::vector<cplx>& bs, const Partition& lam, int n, cplx p, cplx q, cplx t) {
    const int k = static_cast<int>(bs.size());
    auto fac = [&](cplx z) { return cell_factorial(z, lam, p, q, t); };
    auto sh = [&](cplx z, int m) { return shifted(z, m, p, q); };
    cplx bprod = 1.0;
    for (cplx b : bs) bprod *= b;
    const int w = lam.weight();
    const long long nl = lam.n_stat(), nlc = lam.conjugate().n_stat();
    cplx pre = ipow((k % 2 ? -1.0 : 1.0) * ipow(a, k - 3) * ipow(q, k - 3) * t / bprod, w) *
               ipow(q, static_cast<int>((k - 4) * nlc)) * ipow(t, static_cast<int>(-(k - 6) * nl));
    cplx num = fac(a * ipow(t, 1 - n)) * fac(a * q * ipow(t, -n)), den = fac(q * ipow(t, n - 1)) * fac(ipow(t, n));
    for (cplx b : bs) {
        num *= fac(b);
        den *= fac(a * q / b);
    }
    cplx r = pre * num / den;
    for (int i = 1; i <= n; ++i)
        r *= theta(a * ipow(t, 2 - 2 * i) * ipow(q, 2 * lam(i)), p) / theta(a * ipow(t, 2 - 2 * i), p);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            int d = lam(i) - lam(j), s = lam(i) + lam(j);
            r *= theta(ipow(t, j - i) * ipow(q, d), p) * theta(a * ipow(t, 2 - i - j) * ipow(q, s), p) /
                 (theta(ipow(t, j - i), p) * theta(a * ipow(t, 2 - i - j), p));
            r *= sh(ipow(t, j - i + 1), d) * sh(a * ipow(t, 3 - i - j), s) /
                 (sh(q * ipow(t, j - i - 1), d) * sh(a * q * ipow(t, 1 - i - j), s));
        }
    return r;
}

cplx delta_A(const std::vector<cplx>& x, cplx p) {
    cplx r = 1.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j) r *= x[j] * theta(x[i] / x[j], p);
    return r;
}

cplx delta_C(const std::vector<cplx>& x, cplx p) {
    cplx r = 1.0;
    for (std::size_t j = 0; j < x.size(); ++j) r *= theta(x[j] * x[j], p);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j) r *= x[j] * theta(x[i] * x[j], p) * theta(x[i] / x[j], p);
    return r;
}

// e^{-δ} = p, e^{-ε_i} = x_i
cplx affine_C_product(const std::vector<cplx>& x, cplx p, int M) {
    const std::size_t n = x.size();
    cplx r = 1.0;
    for (int m = 0; m <= M; ++m) {
        cplx pm = ipow(p, m), pm1 = pm * p;
        r *= ipow(1.0 - pm1, static_cast<int>(n));
        for (std::size_t i = 0; i < n; ++i) r *= (1.0 - pm * x[i] * x[i]) * (1.0 - pm1 / (x[i] * x[i]));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                r *= (1.0 - pm * x[i] * x[j]) * (1.0 - pm1 / (x[i] * x[j])) * (1.0 - pm * x[i] / x[j]) *
                     (1.0 - pm1 * x[j] / x[i]);
    }
    return r;
}

}  // namespace oracle
