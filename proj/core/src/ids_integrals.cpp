#include <algorithm>
#include <cmath>
#include <numbers>

#include "ellhyp/errors.hpp"
#include "ellhyp/integrals.hpp"
#include "ellhyp/registry.hpp"
#include "ids_common.hpp"

namespace ellhyp {

using namespace ids;

namespace {

using E = std::vector<int>;

ScaledComplex G(cplx z, const Context& c) { return elliptic_gamma(z, c); }

ScaledComplex G(const V& zs, const Context& c) {
    ScaledComplex r(1.0);
    for (cplx z : zs) r *= elliptic_gamma(z, c);
    return r;
}

// 1/Γ(z), finite where Γ has zeros
ScaledComplex Gi(cplx z, const Context& c) { return elliptic_gamma_recip(z, c); }

struct Job {
    Integrand f;
    bool a_type;
};

// All integrands are checked before any quadrature runs.
std::vector<IntegralValue> integrate_all(const std::vector<Job>& jobs, const Context& c, const QuadratureOptions& opt) {
    for (const auto& j : jobs) require_admissible(j.f, c, opt);
    std::vector<IntegralValue> out;
    for (const auto& j : jobs) out.push_back(j.a_type ? integrate_A(j.f, c, opt) : integrate_C(j.f, c, opt));
    return out;
}

void record(Sides& s, const std::vector<IntegralValue>& v) {
    double M = 0, margin = 1e300, pred = 0, obs = 0, last = 0;
    for (const auto& x : v) {
        M = std::max(M, static_cast<double>(x.diag.M_final));
        margin = std::min(margin, x.diag.pole_margin);
        pred = std::max(pred, x.diag.predicted_rate);
        obs = std::max(obs, x.diag.observed_rate);
        last = std::max(last, x.diag.last_change);
    }
    s.diagnostics["M_final"] = M;
    s.diagnostics["pole_margin"] = margin;
    s.diagnostics["predicted_rate"] = pred;
    s.diagnostics["observed_rate"] = obs;
    s.diagnostics["last_change"] = last;
}

Sides integral_sides(ScaledComplex lhs, ScaledComplex rhs, const std::vector<IntegralValue>& v) {
    Sides s = make_sides(lhs, rhs);
    record(s, v);
    return s;
}

void draw_pq(Sampler& s, ParameterBinding& b) {
    b.set("p", s.nome());
    b.set("q", s.nome());
}

cplx pq_of(const ParameterBinding& b) { return b.get("p") * b.get("q"); }

// k values with moduli near |C|^{1/k}; the caller solves the last one
V draw_balanced(Sampler& s, int k, cplx C, double jitter = 0.15) {
    V v;
    for (int i = 0; i + 1 < k; ++i) v.push_back(s.balanced(k, C, jitter));
    return v;
}

// moves the last entry of `all` into a separate symbol
void split_set(ParameterBinding& b, const V& all, const std::string& a, std::size_t na, const std::string& t) {
    b.set_vec(a, V(all.begin(), all.begin() + static_cast<long>(na)));
    b.set_vec(t, V(all.begin() + static_cast<long>(na), all.end()));
}

// A-coordinate exponent vectors
E za(int n, int i) { return a_coord(n, i); }
E zz(int n, int i, int j) { return add_e(a_coord(n, i), a_coord(n, j)); }

ScaledComplex product_gamma_pairs(const V& t, cplx scale, const Context& c) {
    ScaledComplex r(1.0);
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = i + 1; j < t.size(); ++j) r *= G(scale * t[i] * t[j], c);
    return r;
}

const char* kAI1 = "s_1...s_{n+2} t_1...t_{n+2} = pq";
const char* kAI2 = "s^{n-1} t^{n-1} s_1 s_2 s_3 t_1 t_2 t_3 = pq";
const char* kAI3 = "t^2 t_1...t_{n+3} = pq";
const char* kAI4 = "t^{n-1} s_1...s_4 t_1...t_{n+1} = pq";
const char* kCI1 = "t_1...t_{2n+4} = pq";
const char* kCI2 = "t^{2n-2} t_1...t_6 = pq";
const char* kCI3 = "t^{n-2} t_1 t_2 t_3 t_4 = 1";
const char* kAIT = "s_1...s_{m+n+2} t_1...t_{m+n+2} = (pq)^{m+1}";
const char* kCIT = "t_1...t_{2m+2n+4} = (pq)^{m+1}";
const char* kACIT = "s_1...s_{n+3} t_1...t_{n+3} = (pq)^2";
const char* kCIT2 = "t^{2n-2} t_1...t_8 = (pq)^2";
const char* kCIT3 = "t_1 t_2 t_3 t_4 = t^{m-n+2}";
const char* kIC = "t_1...t_{2m+2n+4} = (pq)^{m+1}";
const char* kN1 = "t_1...t_6 = pq";

// ---- AI2 / AI3 / AI4 integrands ----------------------------------------------

Integrand ai2_integrand(int n, cplx s, cplx t, const V& ss, const V& tt) {
    Integrand f = weyl_A(n);
    f.family = IntegrandFamily::ATypeII;
    for (int i = 1; i <= n + 1; ++i)
        for (int j = i + 1; j <= n + 1; ++j) {
            f.factors.push_back({s, zz(n, i, j), false});
            f.factors.push_back({t, neg_e(zz(n, i, j)), false});
        }
    for (int j = 1; j <= n + 1; ++j)
        for (std::size_t i = 0; i < 3; ++i) {
            f.factors.push_back({ss[i], za(n, j), false});
            f.factors.push_back({tt[i], neg_e(za(n, j)), false});
        }
    return f;
}

ScaledComplex ai2_rhs(int n, cplx s, cplx t, const V& ss, const V& tt, const Context& c) {
    ScaledComplex r(1.0);
    auto pairs = [&](int m, bool with_st) {
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i + 1; j < 3; ++j)
                r *= G({ipow(s, m - 1) * ipow(t, m) * ss[i] * ss[j], ipow(s, m) * ipow(t, m - 1) * tt[i] * tt[j]}, c);
        if (with_st) r *= G(ipow(s * t, m), c);
    };
    auto cross = [&](int m) {
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) r *= G(ipow(s * t, m - 1) * ss[i] * tt[j], c);
    };
    if (n % 2 == 0) {
        int N = n / 2;
        for (int m = 1; m <= N; ++m) {
            pairs(m, true);
            cross(m);
        }
        r *= G({ipow(s, N - 1) * prod(ss), ipow(t, N - 1) * prod(tt)}, c);
        for (std::size_t i = 0; i < 3; ++i) r *= G({ipow(s, N) * ss[i], ipow(t, N) * tt[i]}, c);
    } else {
        int N = (n - 1) / 2;
        for (int m = 1; m <= N; ++m) pairs(m, true);
        for (int m = 1; m <= N + 1; ++m) cross(m);
        r *= G({ipow(s, N + 1), ipow(t, N + 1)}, c);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i + 1; j < 3; ++j)
                r *= G({ipow(s, N) * ss[i] * ss[j], ipow(t, N) * tt[i] * tt[j]}, c);
    }
    return r;
}

Integrand ai3_integrand(int n, cplx t, const V& s, const V& ts) {
    Integrand f = weyl_A(n);
    f.family = IntegrandFamily::AMixed3;
    for (int i = 1; i <= n + 1; ++i)
        for (int j = i + 1; j <= n + 1; ++j) f.factors.push_back({t * t, zz(n, i, j), true});
    for (int j = 1; j <= n + 1; ++j) {
        for (cplx si : s) {
            f.factors.push_back({t * si, za(n, j), false});
            f.factors.push_back({t / si, za(n, j), false});
        }
        for (cplx ti : ts) f.factors.push_back({ti, neg_e(za(n, j)), false});
    }
    return f;
}

Integrand ai4_integrand(int n, cplx t, const V& s, const V& ts) {
    Integrand f = weyl_A(n);
    f.family = IntegrandFamily::AMixed4;
    for (int i = 1; i <= n + 1; ++i)
        for (int j = i + 1; j <= n + 1; ++j) f.factors.push_back({t, zz(n, i, j), false});
    for (int j = 1; j <= n + 1; ++j) {
        for (cplx si : s) f.factors.push_back({si, za(n, j), false});
        for (cplx ti : ts) f.factors.push_back({ti, neg_e(za(n, j)), false});
    }
    return f;
}

ScaledComplex ai4_rhs(int n, cplx t, const V& s, const V& ts, const Context& c) {
    cplx T = prod(ts);
    int N = n / 2;
    ScaledComplex r = product_gamma_pairs(ts, t, c);
    for (cplx si : s)
        for (cplx tj : ts) r *= G(si * tj, c);
    if (n % 2 == 0) {
        r *= G(T, c);
        for (cplx si : s) r *= G(ipow(t, N) * si, c) * Gi(ipow(t, N) * T * si, c);
    } else {
        r *= G({ipow(t, N + 1), T}, c) * Gi(ipow(t, N + 1) * T, c);
        r *= product_gamma_pairs(s, ipow(t, N), c);
    }
    return r;
}

// J-integral parameter list (t_1..t_4, s_1..s_k, pq/t s_1..pq/t s_k)
V cit3_args(const V& t4, const V& s, cplx t, cplx pq) {
    V a = t4;
    for (cplx si : s) a.push_back(si);
    for (cplx si : s) a.push_back(pq / (t * si));
    return a;
}

// ∏_{i,j} Γ(s_i t_j)/Γ(t s_i/t_j)
ScaledComplex cit3_cross(const V& s, const V& t4, cplx t, const Context& c) {
    ScaledComplex r(1.0);
    for (cplx si : s)
        for (cplx tj : t4) r *= G(si * tj, c) * Gi(t * si / tj, c);
    return r;
}

cplx root_of(cplx z, int k, int branch) {
    return std::pow(z, 1.0 / k) * std::polar(1.0, 2.0 * std::numbers::pi * branch / k);
}

void add_evaluations(BehaviorTable& T) {
    T["integrals/AI1"] = {
        [](Sampler& s, ParameterBinding& b) {
            int n = geti(b, "n");
            draw_pq(s, b);
            V all = draw_balanced(s, 2 * n + 4, pq_of(b));
            split_set(b, all, "s", sz(n + 2), "t");
        },
        [](ParameterBinding& b) {
            int n = geti(b, "n");
            std::string last = "t" + std::to_string(n + 2);
            b.set(last, pq_of(b) / (prod(b.vec("s", sz(n + 2))) * prod(b.vec("t", sz(n + 1)))));
            b.mark_solved(last, kAI1);
        },
        [](const ParameterBinding& b, const EvalEnv& env) {
            const Context c = b.context(env.ctx);
            int n = geti(b, "n");
            V s = b.vec("s", sz(n + 2)), t = b.vec("t", sz(n + 2));
            auto v = integrate_all({{integrand_i_a(n, s, t), true}}, c, env.quad);
            cplx S = prod(s), Tt = prod(t);
            ScaledComplex rhs(1.0);
            for (std::size_t i = 0; i < s.size(); ++i) rhs *= G({S / s[i], Tt / t[i]}, c);
            for (cplx si : s)
                for (cplx tj : t) rhs *= G(si * tj, c);
            return integral_sides(v[0].value, rhs, v);
        }};

    T["integrals/AI2"] = {
        [](Sampler& s, ParameterBinding& b) {
            int n = geti(b, "n");
            draw_pq(s, b);
            cplx ss = s.param(0.5, 0.7), tt = s.param(0.5, 0.7);
            b.set("s", ss);
            b.set("t", tt);
            V all = draw_balanced(s, 6, pq_of(b) / ipow(ss * tt, n - 1));
            split_set(b, all, "s", 3, "t");
        },
        [](ParameterBinding& b) {
            int n = geti(b, "n");
            cplx C = pq_of(b) / ipow(b.get("s") * b.get("t"), n - 1);
            b.set("t3", C / (prod(b.vec("s", 3)) * b.get("t1") * b.get("t2")));
            b.mark_solved("t3", kAI2);
        },
        [](const ParameterBinding& b, const EvalEnv& env) {
            const Context c = b.context(env.ctx);
            int n = geti(b, "n");
            cplx s = b.get("s"), t = b.get("t");
            V ss = b.vec("s", 3), tt = b.vec("t", 3);
            auto v = integrate_all({{ai2_integrand(n, s, t, ss, tt), true}}, c, env.quad);
            return integral_sides(v[0].value, ai2_rhs(n, s, t, ss, tt, c), v);
        }};

    T["integrals/AI3"] = {
        [](Sampler& s, ParameterBinding& b) {
            int n = geti(b, "n");
            draw_pq(s, b);
            cplx t = s.param(0.5, 0.7);
            b.set("t", t);
            b.set_vec("s", [&] {
                V v;
                for (int i = 0; i < n; ++i) v.push_back(s.param(0.9, 1.1));
                return v;
            }());
            b.set_vec("t", draw_balanced(s, n + 3, pq_of(b) / (t * t)));
        },
        [](ParameterBinding& b) {
            int n = geti(b, "n");
            cplx t = b.get("t");
            std::string last = "t" + std::to_string(n + 3);
            b.set(last, pq_of(b) / (t * t * prod(b.vec("t", sz(n + 2)))));
            b.mark_solved(last, kAI3);
        },
        [](const ParameterBinding& b, const EvalEnv& env) {
            const Context c = b.context(env.ctx);
            int n = geti(b, "n");
            cplx t = b.get("t");
            V s = b.vec("s", sz(n)), ts = b.vec("t", sz(n + 3));
            auto v = integrate_all({{ai3_integrand(n, t, s, ts), true}}, c, env.quad);
            ScaledComplex rhs(1.0);
            for (cplx si : s)
                for (cplx tj : ts) rhs *= G({t * si * tj, t * tj / si}, c);
            for (std::size_t i = 0; i < ts.size(); ++i)
                for (std::size_t j = i + 1; j < ts.size(); ++j) rhs *= Gi(t * t * ts[i] * ts[j], c);
            return integral_sides(v[0].value, rhs, v);
        }};

    T["integrals/AI4"] = {
        [](Sampler& s, ParameterBinding& b) {
            int n = geti(b, "n");
            draw_pq(s, b);
            cplx t = s.param(0.4, 0.7);
            b.set("t", t);
            V all = draw_balanced(s, n + 5, pq_of(b) / ipow(t, n - 1));
            split_set(b, all, "s", 4, "t");
        },
        [](ParameterBinding& b) {
            int n = geti(b, "n");
            cplx C = pq_of(b) / ipow(b.get("t"), n - 1);
            std::string last = "t" + std::to_string(n + 1);
            b.set(last, C / (prod(b.vec("s", 4)) * prod(b.vec("t", sz(n)))));
            b.mark_solved(last, kAI4);
        },
        [](const ParameterBinding& b, const EvalEnv& env) {
            const Context c = b.context(env.ctx);
            int n = geti(b, "n");
            cplx t = b.get("t");
            V s = b.vec("s", 4), ts = b.vec("t", sz(n + 1));
            auto v = integrate_all({{ai4_integrand(n, t, s, ts), true}}, c, env.quad);
            return integral_sides(v[0].value, ai4_rhs(n, t, s, ts, c), v);
        }};

    T["integrals/CI1"] = {
        [](Sampler& s, ParameterBinding& b) {
            int n = geti(b, "n");
            draw_pq(s, b);
            b.set_vec("t", draw_balanced(s, 2 * n + 4, pq_of(b)));
        },
        [](ParameterBinding& b) {
            int n = geti(b, "n");
            std::string last = "t" + std::to_string(2 * n + 4);
            b.set(last, pq_of(b) / prod(b.vec("t", sz(2 * n + 3))));
            b.mark_solved(last, kCI1);
        },
        [](const ParameterBinding& b, const EvalEnv& env) {
            const Context c = b.context(env.ctx);
            int n = geti(b, "n");
            V t = b.vec("t", sz(2 * n + 4));
            auto v = integrate_all({{integrand_i_c(n, t), false}}, c, env.quad);
            return integral_sides(v[0].value, product_gamma_pairs(t, 1.0, c), v);
        }};

    T["integrals/CI2"] = {
        [](Sampler& s, ParameterBinding& b) {
            int n = geti(b, "n");
            draw_pq(s, b);
            cplx t = s.param(0.4, 0.7);
            b.set("t", t);
            b.set_vec("t", draw_balanced(s, 6, pq_of(b) / ipow(t, 2 * n - 2)));
        },
        [](ParameterBinding& b) {
            int n = geti(b, "n");
            cplx C = pq_of(b) / ipow(b.get("t"), 2 * n - 2);
            b.set("t6", C / prod(b.vec("t", 5)));
            b.mark_solved("t6", kCI2);
        },
        [](const ParameterBinding& b, const EvalEnv& env) {
            const Context c = b.context(env.ctx);
            int n = geti(b, "n");
            cplx t = b.get("t");
            V ts = b.vec("t", 6);
            auto v = integrate_all({{integrand_j_c(n, ts, t), false}}, c, env.quad);
            ScaledComplex rhs(1.0);
            for (int m = 1; m <= n; ++m) rhs *= G(ipow(t, m), c) * Gi(t, c) * product_gamma_pairs(ts, ipow(t, m - 1), c);
            return integral_sides(v[0].value, rhs, v);
        }};

    // variant 1: the prefactor Γ(t)^n
    T["integrals/CI3"] = {
        [](Sampler& s, ParameterBinding& b) {
            int n = geti(b, "n");
            if (n >= 2)
                throw AdmissibilityError("|t_i|, |t| < 1 is incompatible with t^{n-2} t_1 t_2 t_3 t_4 = 1 for n >= 2");
            draw_pq(s, b);
            cplx t = s.param(0.4, 0.6);
            b.set("t", t);
            b.set_vec("t", draw_balanced(s, 4, ipow(t, 2 - n)));
            double r = std::sqrt(std::abs(pq_of(b) / t));
            V ss;
            for (int i = 0; i < n; ++i) ss.push_back(std::polar(r, s.uniform(-std::numbers::pi, std::numbers::pi)));
            b.set_vec("s", ss);
        },
        [](ParameterBinding& b) {
            int n = geti(b, "n");
            b.set("t4", ipow(b.get("t"), 2 - n) / prod(b.vec("t", 3)));
            b.mark_solved("t4", kCI3);
        },
        [](const ParameterBinding& b, const EvalEnv& env) {
            const Context c = b.context(env.ctx);
            int n = geti(b, "n");
            cplx t = b.get("t"), pq = c.p * c.q;
            V t4 = b.vec("t", 4), s = b.vec("s", sz(n));
            auto v = integrate_all({{integrand_j_c(n, cit3_args(t4, s, t, pq), t), false}}, c, env.quad);
            int power = b.get_int("variant", 0) == 1 ? n : -n;
            ScaledComplex rhs = G(t, c).pow(power);
            for (int l = 1; l <= n; ++l) rhs *= product_gamma_pairs(t4, ipow(t, l - 1), c);
            rhs *= cit3_cross(s, t4, t, c);
            return integral_sides(v[0].value, rhs, v);
        }};
}

void add_transformations(BehaviorTable& T) {
    T["integrals/AIT"] = {
        [](Sampler& s, ParameterBinding& b) {
            int n = geti(b, "n"), m = geti(b, "m");
            draw_pq(s, b);
            V all = draw_balanced(s, 2 * (m + n + 2), ipow(pq_of(b), m + 1));
            split_set(b, all, "s", sz(m + n + 2), "t");
        },
        [](ParameterBinding& b) {
            int n = geti(b, "n"), m = geti(b, "m"), k = m + n + 2;
            std::string last = "t" + std::to_string(k);
            b.set(last, ipow(pq_of(b), m + 1) / (prod(b.vec("s", sz(k))) * prod(b.vec("t", sz(k - 1)))));
            b.mark_solved(last, kAIT);
        },
        [](const ParameterBinding& b, const EvalEnv& env) {
            const Context c = b.context(env.ctx);
            int n = geti(b, "n"), m = geti(b, "m"), k = m + n + 2;
            cplx pq = c.p * c.q;
            V s = b.vec("s", sz(k)), t = b.vec("t", sz(k));
            cplx lam = root_of(prod(s), m + 1, static_cast<int>(b.get_int("branch", 0)));
            V s2, t2;
            for (int i = 0; i < k; ++i) {
                s2.push_back(lam / s[sz(i)]);
                t2.push_back(pq / (lam * t[sz(i)]));
            }
            auto v = integrate_all({{integrand_i_a(n, s, t), true}, {integrand_i_a(m, s2, t2), true}}, c, env.quad);
            ScaledComplex pre(1.0);
            for (cplx si : s)
                for (cplx tj : t) pre *= G(si * tj, c);
            return integral_sides(v[0].value, pre * v[1].value, v);
        }};

    T["integrals/CIT"] = {
        [](Sampler& s, ParameterBinding& b) {
            int n = geti(b, "n"), m = geti(b, "m");
            draw_pq(s, b);
            b.set_vec("t", draw_balanced(s, 2 * m + 2 * n + 4, ipow(pq_of(b), m + 1)));
        },
        [](ParameterBinding& b) {
            int n = geti(b, "n"), m = geti(b, "m"), k = 2 * m + 2 * n + 4;
            std::string last = "t" + std::to_string(k);
            b.set(last, ipow(pq_of(b), m + 1) / prod(b.vec("t", sz(k - 1))));
            b.mark_solved(last, kCIT);
        },
        [](const ParameterBinding& b, const EvalEnv& env) {
            const Context c = b.context(env.ctx);
            int n = geti(b, "n"), m = geti(b, "m"), k = 2 * m + 2 * n + 4;
            V t = b.vec("t", sz(k));
            cplx r = std::sqrt(c.p * c.q);
            if (b.get_int("branch", 0) == 1) r = -r;
            auto v = integrate_all({{integrand_i_c(n, t), false}, {integrand_i_c(m, scaled(recip(t), r)), false}}, c,
                                   env.quad);
            return integral_sides(v[0].value, product_gamma_pairs(t, 1.0, c) * v[1].value, v);
        }};

    T["integrals/ACIT"] = {
        [](Sampler& s, ParameterBinding& b) {
            int n = geti(b, "n");
            draw_pq(s, b);
            V all = draw_balanced(s, 2 * n + 6, ipow(pq_of(b), 2));
            split_set(b, all, "s", sz(n + 3), "t");
        },
        [](ParameterBinding& b) {
            int n = geti(b, "n"), k = n + 3;
            std::string last = "t" + std::to_string(k);
            b.set(last, ipow(pq_of(b), 2) / (prod(b.vec("s", sz(k))) * prod(b.vec("t", sz(k - 1)))));
            b.mark_solved(last, kACIT);
        },
        [](const ParameterBinding& b, const EvalEnv& env) {
            const Context c = b.context(env.ctx);
            int n = geti(b, "n"), k = n + 3;
            cplx pq = c.p * c.q;
            V s = b.vec("s", sz(k)), t = b.vec("t", sz(k));
            cplx S = prod(s), Tt = prod(t);
            cplx v = root_of(S / pq, 2, static_cast<int>(b.get_int("branch", 0)));
            V args = cat(scaled(s, 1.0 / v), scaled(t, v));
            auto q = integrate_all({{integrand_i_a(n, s, t), true}, {integrand_i_c(n, args), false}}, c, env.quad);
            ScaledComplex pre(1.0);
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j)
                    pre *= G({S / (s[sz(i)] * s[sz(j)]), Tt / (t[sz(i)] * t[sz(j)])}, c);
            return integral_sides(q[0].value, pre * q[1].value, q);
        }};

    T["integrals/AIT2"] = {
        [](Sampler& s, ParameterBinding& b) {
            int n = geti(b, "n");
            draw_pq(s, b);
            V all = draw_balanced(s, 2 * n + 6, ipow(pq_of(b), 2));
            split_set(b, all, "s", sz(n + 3), "t");
        },
        [](ParameterBinding& b) {
            int n = geti(b, "n"), k = n + 3;
            std::string last = "t" + std::to_string(k);
            b.set(last, ipow(pq_of(b), 2) / (prod(b.vec("s", sz(k))) * prod(b.vec("t", sz(k - 1)))));
            b.mark_solved(last, kACIT);
        },
        [](const ParameterBinding& b, const EvalEnv& env) {
            const Context c = b.context(env.ctx);
            int n = geti(b, "n"), k = n + 3;
            cplx pq = c.p * c.q;
            V s = b.vec("s", sz(k)), t = b.vec("t", sz(k));
            cplx S = prod(s), Tt = prod(t), sl = s.back(), tl = t.back();
            cplx v = root_of(S * tl / (pq * sl), n + 1, static_cast<int>(b.get_int("branch", 0)));
            V a1, a2;
            for (int i = 0; i + 1 < k; ++i) {
                a1.push_back(s[sz(i)] / v);
                a2.push_back(t[sz(i)] * v);
            }
            a1.push_back(sl * ipow(v, n));
            a2.push_back(tl / ipow(v, n));
            auto q = integrate_all({{integrand_i_a(n, s, t), true}, {integrand_i_a(n, a1, a2), true}}, c, env.quad);
            ScaledComplex pre(1.0);
            for (int i = 0; i + 1 < k; ++i)
                pre *= G({s[sz(i)] * tl, t[sz(i)] * sl, S / (s[sz(i)] * sl), Tt / (t[sz(i)] * tl)}, c);
            return integral_sides(q[0].value, pre * q[1].value, q);
        }};

    T["integrals/CIT2"] = {
        [](Sampler& s, ParameterBinding& b) {
            int n = geti(b, "n");
            draw_pq(s, b);
            cplx t = s.param(0.3, 0.5);
            b.set("t", t);
            b.set_vec("t", draw_balanced(s, 8, ipow(pq_of(b), 2) / ipow(t, 2 * n - 2)));
        },
        [](ParameterBinding& b) {
            int n = geti(b, "n");
            cplx C = ipow(pq_of(b), 2) / ipow(b.get("t"), 2 * n - 2);
            b.set("t8", C / prod(b.vec("t", 7)));
            b.mark_solved("t8", kCIT2);
        },
        [](const ParameterBinding& b, const EvalEnv& env) {
            const Context c = b.context(env.ctx);
            int n = geti(b, "n");
            cplx t = b.get("t"), pq = c.p * c.q;
            V ts = b.vec("t", 8);
            V lo(ts.begin(), ts.begin() + 4), hi(ts.begin() + 4, ts.end());
            cplx v = root_of(pq * ipow(t, 1 - n) / prod(lo), 2, static_cast<int>(b.get_int("branch", 0)));
            V args = cat(scaled(lo, v), scaled(hi, 1.0 / v));
            auto q = integrate_all({{integrand_j_c(n, ts, t), false}, {integrand_j_c(n, args, t), false}}, c, env.quad);
            ScaledComplex pre(1.0);
            for (int m = 1; m <= n; ++m)
                pre *= product_gamma_pairs(lo, ipow(t, m - 1), c) * product_gamma_pairs(hi, ipow(t, m - 1), c);
            return integral_sides(q[0].value, pre * q[1].value, q);
        }};

    // variant 1: the prefactor Γ(t)^{n-m}
    T["integrals/CIT3"] = {
        [](Sampler& s, ParameterBinding& b) {
            int n = geti(b, "n"), m = geti(b, "m");
            draw_pq(s, b);
            cplx t = s.param(0.3, 0.45);
            b.set("t", t);
            b.set_vec("t", draw_balanced(s, 4, ipow(t, m - n + 2), 0.05));
            double r = std::sqrt(std::abs(pq_of(b) / t));
            V ss;
            for (int i = 0; i < m + n; ++i) ss.push_back(std::polar(r, s.uniform(-std::numbers::pi, std::numbers::pi)));
            b.set_vec("s", ss);
        },
        [](ParameterBinding& b) {
            int n = geti(b, "n"), m = geti(b, "m");
            b.set("t4", ipow(b.get("t"), m - n + 2) / prod(b.vec("t", 3)));
            b.mark_solved("t4", kCIT3);
        },
        [](const ParameterBinding& b, const EvalEnv& env) {
            const Context c = b.context(env.ctx);
            int n = geti(b, "n"), m = geti(b, "m");
            cplx t = b.get("t"), pq = c.p * c.q;
            V t4 = b.vec("t", 4), s = b.vec("s", sz(m + n));
            V a = cit3_args(t4, s, t, pq), bb = cit3_args(scaled(recip(t4), t), s, t, pq);
            auto q = integrate_all({{integrand_j_c(n, a, t), false}, {integrand_j_c(m, bb, t), false}}, c, env.quad);
            int power = b.get_int("variant", 0) == 1 ? n - m : m - n;
            ScaledComplex pre = G(t, c).pow(power);
            for (int l = 1; l <= n; ++l) pre *= product_gamma_pairs(t4, ipow(t, l - 1), c);
            for (int l = 1; l <= m; ++l) pre /= product_gamma_pairs(t4, ipow(t, l + n - m - 1), c);
            pre *= cit3_cross(s, t4, t, c);
            return integral_sides(q[0].value, pre * q[1].value, q);
        }};
}

void add_properties(BehaviorTable& T) {
    // I_A^{(m)} under s_i -> s_i ζ, t_i -> t_i/ζ with ζ a primitive (n+1)-th root of unity
    T["integrals/IA-ROOT"] = T["integrals/AIT"];
    T["integrals/IA-ROOT"].eval = [](const ParameterBinding& b, const EvalEnv& env) {
        const Context c = b.context(env.ctx);
        int n = geti(b, "n"), m = geti(b, "m"), k = m + n + 2;
        V s = b.vec("s", sz(k)), t = b.vec("t", sz(k));
        cplx zeta = std::polar(1.0, 2.0 * std::numbers::pi / (n + 1));
        auto q = integrate_all({{integrand_i_a(n, s, t), true},
                                {integrand_i_a(n, scaled(s, zeta), scaled(t, 1.0 / zeta)), true}},
                               c, env.quad);
        return integral_sides(q[0].value, q[1].value, q);
    };

    // I_C^{(m)} under t_i -> -t_i
    T["integrals/IC-NEG"] = T["integrals/CIT"];
    T["integrals/IC-NEG"].solve = [](ParameterBinding& b) {
        int n = geti(b, "n"), m = geti(b, "m"), k = 2 * m + 2 * n + 4;
        std::string last = "t" + std::to_string(k);
        b.set(last, ipow(pq_of(b), m + 1) / prod(b.vec("t", sz(k - 1))));
        b.mark_solved(last, kIC);
    };
    T["integrals/IC-NEG"].eval = [](const ParameterBinding& b, const EvalEnv& env) {
        const Context c = b.context(env.ctx);
        int n = geti(b, "n"), m = geti(b, "m"), k = 2 * m + 2 * n + 4;
        V t = b.vec("t", sz(k));
        auto q = integrate_all({{integrand_i_c(n, t), false}, {integrand_i_c(n, scaled(t, -1.0)), false}}, c, env.quad);
        return integral_sides(q[0].value, q[1].value, q);
    };

    // I_{A_1}^{(m)}(t_1..t_{m+3}; t_{m+4}..t_{2m+6}) = I_{C_1}^{(m)}(t_1..t_{2m+6})
    T["integrals/A1-C1"] = {
        [](Sampler& s, ParameterBinding& b) {
            int m = geti(b, "m");
            draw_pq(s, b);
            b.set_vec("t", draw_balanced(s, 2 * m + 6, ipow(pq_of(b), m + 1)));
        },
        [](ParameterBinding& b) {
            int m = geti(b, "m"), k = 2 * m + 6;
            std::string last = "t" + std::to_string(k);
            b.set(last, ipow(pq_of(b), m + 1) / prod(b.vec("t", sz(k - 1))));
            b.mark_solved(last, kIC);
        },
        [](const ParameterBinding& b, const EvalEnv& env) {
            const Context c = b.context(env.ctx);
            int m = geti(b, "m"), k = 2 * m + 6;
            V t = b.vec("t", sz(k));
            V s(t.begin(), t.begin() + m + 3), u(t.begin() + m + 3, t.end());
            auto q = integrate_all({{integrand_i_a(1, s, u), true}, {integrand_i_c(1, t), false}}, c, env.quad);
            return integral_sides(q[0].value, q[1].value, q);
        }};

    // n = 1: the A type I and II, C type I and II integrals reduce to one
    // beta integral; all four quadratures against the closed form
    T["integrals/N1-CROSS"] = {
        [](Sampler& s, ParameterBinding& b) {
            draw_pq(s, b);
            b.set("s", s.param(0.5, 0.7));
            b.set("t", s.param(0.5, 0.7));
            b.set("tau", s.param(0.3, 0.7));
            b.set_vec("t", draw_balanced(s, 6, pq_of(b)));
        },
        [](ParameterBinding& b) {
            b.set("t6", pq_of(b) / prod(b.vec("t", 5)));
            b.mark_solved("t6", kN1);
        },
        [](const ParameterBinding& b, const EvalEnv& env) {
            const Context c = b.context(env.ctx);
            V t = b.vec("t", 6);
            V lo(t.begin(), t.begin() + 3), hi(t.begin() + 3, t.end());
            cplx s = b.get("s"), tt = b.get("t");
            auto q = integrate_all({{integrand_i_c(1, t), false},
                                    {integrand_i_a(1, lo, hi), true},
                                    {ai2_integrand(1, s, tt, lo, hi), true},
                                    {integrand_j_c(1, t, b.get("tau")), false}},
                                   c, env.quad);
            ScaledComplex closed = product_gamma_pairs(t, 1.0, c);
            ScaledComplex ai2 = q[2].value * Gi(s, c) * Gi(tt, c);
            Sides out = integral_sides(q[0].value, closed, q);
            out.residual = worst({relative_residual(q[0].value, closed), relative_residual(q[1].value, q[0].value),
                                  relative_residual(ai2, q[0].value), relative_residual(q[3].value, q[0].value)});
            return out;
        }};
}

}  // namespace

void register_integral_behaviors(BehaviorTable& table) {
    add_evaluations(table);
    add_transformations(table);
    add_properties(table);
}

}  // namespace ellhyp
