#include "ellhyp/elliptic.hpp"

#include <cmath>
#include <string>

#include "ellhyp/errors.hpp"
#include "product_acc.hpp"

namespace ellhyp {

void Context::validate() const {
    if (!(std::abs(p) < 1.0)) throw DomainError("context: |p| must be < 1");
    double aq = std::abs(q);
    if (!(aq > 0.0 && aq < 1.0)) throw DomainError("context: need 0 < |q| < 1");
    if (!(trunc_tol > 0.0)) throw DomainError("context: trunc_tol must be positive");
    if (max_terms < 1) throw DomainError("context: max_terms must be >= 1");
}

cplx ipow(cplx z, long long k) {
    if (k == 0) return {1.0, 0.0};
    bool neg = k < 0;
    unsigned long long n = static_cast<unsigned long long>(neg ? -k : k);
    cplx r(1.0, 0.0), b = z;
    while (n) {
        if (n & 1ULL) r *= b;
        b *= b;
        n >>= 1;
    }
    return neg ? cplx(1.0, 0.0) / r : r;
}

namespace {

void require_nonzero(cplx z, const char* what) {
    if (z == cplx(0.0, 0.0)) throw DomainError(std::string(what) + ": argument must be nonzero");
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw DomainError(std::string(what) + ": non-finite argument");
}

}  // namespace

int theta_truncation(cplx z, const Context& ctx) {
    double r = std::abs(ctx.p);
    if (r == 0.0) return 0;
    double az = std::abs(z);
    double scale = (1.0 + az + 1.0 / az) / (1.0 - r);
    // smallest I with r^{I+1} * scale < tol
    double need = std::log(ctx.trunc_tol / scale) / std::log(r);
    int I = need <= 1.0 ? 0 : static_cast<int>(std::ceil(need)) - 1;
    while (I > 0 && std::pow(r, I) * scale < ctx.trunc_tol) --I;
    if (I >= ctx.max_terms) {
        double achieved = std::pow(r, ctx.max_terms) * scale;
        throw ConvergenceError("theta: truncation cap reached before tolerance", achieved);
    }
    return I;
}

ScaledComplex theta(cplx z, const Context& ctx) {
    // at p = 0 the product is the single factor 1 - z, defined at z = 0 too
    if (ctx.p == cplx(0.0, 0.0)) return ScaledComplex(cplx(1.0, 0.0) - z);
    require_nonzero(z, "theta");
    int I = theta_truncation(z, ctx);
    detail::ProductAcc acc;
    cplx pk(1.0, 0.0);
    for (int i = 0; i <= I; ++i) {
        cplx pk1 = pk * ctx.p;
        acc.mul((1.0 - z * pk) * (1.0 - pk1 / z));
        pk = pk1;
    }
    return acc.value();
}

ScaledComplex theta_den(cplx z, const Context& ctx) {
    ScaledComplex v = theta(z, ctx);
    if (v.is_zero()) throw PoleError("theta in denominator vanishes");
    if (ctx.factor_guard > 0.0 && v.log2_abs() < std::log2(ctx.factor_guard))
        throw PoleError("theta in denominator below factor guard");
    return v;
}

ScaledComplex shifted_factorial_base(cplx z, cplx base, int k, const Context& ctx) {
    if (k < 0) throw DomainError("shifted_factorial: negative index");
    ScaledComplex r(1.0);
    cplx zi = z;
    for (int i = 0; i < k; ++i) {
        r *= theta(zi, ctx);
        zi *= base;
    }
    return r;
}

ScaledComplex shifted_factorial(cplx z, int k, const Context& ctx) {
    return shifted_factorial_base(z, ctx.q, k, ctx);
}

ScaledComplex shifted_factorial_den(cplx z, int k, const Context& ctx) {
    if (k < 0) throw DomainError("shifted_factorial: negative index");
    ScaledComplex r(1.0);
    cplx zi = z;
    for (int i = 0; i < k; ++i) {
        r *= theta_den(zi, ctx);
        zi *= ctx.q;
    }
    return r;
}

ScaledComplex shifted_factorial(const std::vector<cplx>& zs, int k, const Context& ctx) {
    ScaledComplex r(1.0);
    for (cplx z : zs) r *= shifted_factorial(z, k, ctx);
    return r;
}

ScaledComplex shifted_factorial_den(const std::vector<cplx>& zs, int k, const Context& ctx) {
    ScaledComplex r(1.0);
    for (cplx z : zs) r *= shifted_factorial_den(z, k, ctx);
    return r;
}

namespace {

int gamma_truncation(cplx z, const Context& ctx) {
    double r = std::max(std::abs(ctx.p), std::abs(ctx.q));
    if (!(r < 1.0)) throw DomainError("elliptic_gamma: need |p|, |q| < 1");
    double scale = (std::abs(z) + std::abs(ctx.p * ctx.q / z)) / ((1.0 - r) * (1.0 - r));
    int I = 0;
    // (I+2) r^{I+1} scale bounds the dropped terms of the log-product
    double rp = r;
    while ((I + 2) * rp * scale >= ctx.trunc_tol) {
        ++I;
        rp *= r;
        if (I >= ctx.max_terms)
            throw ConvergenceError("elliptic_gamma: truncation cap reached", (I + 2) * rp * scale);
    }
    return I;
}

// Shared loop for Γ and 1/Γ.
ScaledComplex gamma_product(cplx z, const Context& ctx, bool recip) {
    require_nonzero(z, recip ? "elliptic_gamma_recip" : "elliptic_gamma");
    int I = gamma_truncation(z, ctx);
    const cplx p = ctx.p, q = ctx.q, pq = p * q;
    const bool p0 = p == cplx(0.0, 0.0), q0 = q == cplx(0.0, 0.0);
    std::vector<cplx> qp(static_cast<std::size_t>(I) + 1);
    qp[0] = 1.0;
    for (int j = 1; j <= I; ++j) qp[j] = qp[j - 1] * q;
    detail::ProductAcc acc;
    cplx pi(1.0, 0.0);
    for (int i = 0; i <= I; ++i) {
        if (i > 0 && p0) break;
        for (int j = 0; j + i <= I; ++j) {
            if (j > 0 && q0) break;
            cplx w = pi * qp[j];
            cplx a = 1.0 - z * w;        // zero <=> pole of Γ
            cplx b = 1.0 - pq * w / z;   // zero <=> zero of Γ
            if (!recip) {
                if (std::abs(a) < ctx.pole_guard)
                    throw PoleError("elliptic_gamma: argument at a pole", i, j);
                acc.mul(b / a);
            } else {
                if (std::abs(b) < ctx.pole_guard)
                    throw PoleError("elliptic_gamma_recip: argument at a zero of gamma", i, j);
                acc.mul(a / b);
            }
        }
        pi *= p;
    }
    return acc.value();
}

}  // namespace

ScaledComplex elliptic_gamma(cplx z, const Context& ctx) { return gamma_product(z, ctx, false); }

ScaledComplex elliptic_gamma_recip(cplx z, const Context& ctx) { return gamma_product(z, ctx, true); }

ScaledComplex q_pochhammer_infinity(cplx z, cplx base, const Context& ctx) {
    double r = std::abs(base);
    if (!(r < 1.0)) throw DomainError("q_pochhammer_infinity: need |base| < 1");
    if (z == cplx(0.0, 0.0)) return ScaledComplex(1.0);
    double az = std::abs(z);
    detail::ProductAcc acc;
    cplx bk(1.0, 0.0);
    for (int i = 0;; ++i) {
        if (i >= ctx.max_terms)
            throw ConvergenceError("q_pochhammer_infinity: truncation cap reached", az * std::abs(bk) / (1.0 - r));
        acc.mul(1.0 - z * bk);
        bk *= base;
        if (az * std::abs(bk) / (1.0 - r) < ctx.trunc_tol || bk == cplx(0.0, 0.0)) break;
    }
    return acc.value();
}

ScaledComplex theta_condensed(const std::vector<cplx>& args, const Context& ctx) {
    ScaledComplex r(1.0);
    for (cplx z : args) r *= theta(z, ctx);
    return r;
}

ScaledComplex gamma_condensed(const std::vector<cplx>& args, const Context& ctx) {
    ScaledComplex r(1.0);
    for (cplx z : args) r *= elliptic_gamma(z, ctx);
    return r;
}

std::array<cplx, 2> pm(cplx a, cplx z) { return {a * z, a / z}; }

std::array<cplx, 4> pmpm(cplx t, cplx z, cplx w) {
    return {t * z * w, t * z / w, t * w / z, t / (z * w)};
}

}  // namespace ellhyp
