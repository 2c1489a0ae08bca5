#include <cmath>

#include "ellhyp/errors.hpp"
#include "ellhyp/registry.hpp"
#include "ellhyp/series.hpp"
#include "ids_common.hpp"

namespace ellhyp {

using namespace ids;

namespace {

// ---- draws shared by several identities -------------------------------------

// x_1..x_k plus N_1..N_n (each in 0..N, the first pinned to N)
void draw_rect_data(Sampler& s, ParameterBinding& b, int n) {
    int N = geti(b, "N");
    b.set_vec("x", s.params(sz(n)));
    std::vector<int> Ns{N};
    for (int i = 1; i < n; ++i) Ns.push_back(s.integer(0, N));
    b.set_int_vec("N", Ns);
}

std::vector<int> rect_limits(const ParameterBinding& b, int n) { return b.int_vec("N", sz(n)); }

// ---- sum shapes -------------------------------------------------------------

// ∏_{i,j} (q^{-N_j} x_i/x_j)_{k_i} / (q x_i/x_j)_{k_i}
ScaledComplex a_rect_factor(const V& x, const std::vector<int>& k, const std::vector<int>& Ns, const Context& c) {
    ScaledComplex r(1.0);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j)
            r *= fac({ipow(c.q, -Ns[j]) * x[i] / x[j]}, k[i], c) / dfac({c.q * x[i] / x[j]}, k[i], c);
    return r;
}

// ∏_{i,j} (q^{-N_j} x_i/x_j, x_i x_j)_{k_i} / (q x_i/x_j, q^{N_j+1} x_i x_j)_{k_i}
ScaledComplex c_rect_factor(const V& x, const std::vector<int>& k, const std::vector<int>& Ns, const Context& c) {
    ScaledComplex r(1.0);
    const cplx q = c.q;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j)
            r *= fac({ipow(q, -Ns[j]) * x[i] / x[j], x[i] * x[j]}, k[i], c) /
                 dfac({q * x[i] / x[j], ipow(q, Ns[j] + 1) * x[i] * x[j]}, k[i], c);
    return r;
}

// ∏_{i,j} (q x_i x_j)_{N_i} / ∏_{i<j} (q x_i x_j)_{N_i+N_j}
ScaledComplex c_rect_closed(const V& x, const std::vector<int>& Ns, const Context& c) {
    ScaledComplex r(1.0);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) r *= fac({c.q * x[i] * x[j]}, Ns[i], c);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j) r /= dfac({c.q * x[i] * x[j]}, Ns[i] + Ns[j], c);
    return r;
}

// C_n sum with the parameters u: Σ_{k ≤ N} Δ^C ratio ∏_i (u x_i)_{k_i} q^{k_i}/(q x_i/u)_{k_i} · c_rect_factor
ScaledComplex c_rect_sum(const V& x, const std::vector<int>& Ns, const V& us, const Context& c) {
    return sum_rectangle(Ns, [&](const std::vector<int>& k) {
        ScaledComplex term = dC_ratio(x, k, c);
        for (std::size_t i = 0; i < x.size(); ++i) {
            V num, den;
            for (cplx u : us) {
                num.push_back(u * x[i]);
                den.push_back(c.q * x[i] / u);
            }
            term *= fac(num, k[i], c) / dfac(den, k[i], c) * ScaledComplex(ipow(c.q, k[i]));
        }
        return term * c_rect_factor(x, k, Ns, c);
    });
}

// A_n sum of well-poised Bailey shape with base parameter lam:
//   Σ_{k ≤ N} Δ^A ratio ∏_i θ(lam x_i q^{k_i+|k|})/θ(lam x_i) (lam x_i)_{|k|}/(lam q^{N_i+1} x_i)_{|k|}
//   ∏_i (num_k x_i)_{k_i}/(den_k x_i)_{k_i} · (num_K)_{|k|}/(den_K)_{|k|} q^{|k|} · a_rect_factor
ScaledComplex a_bailey_sum(const V& x, const std::vector<int>& Ns, cplx lam, const V& num_k, const V& den_k,
                           const V& num_K, const V& den_K, const Context& c) {
    const cplx q = c.q;
    return sum_rectangle(Ns, [&](const std::vector<int>& k) {
        int K = total(k);
        ScaledComplex term = dA_ratio(x, k, c);
        for (std::size_t i = 0; i < x.size(); ++i) {
            cplx lx = lam * x[i];
            term *= th(lx * ipow(q, k[i] + K), c) / thd(lx, c);
            term *= fac({lx}, K, c) / dfac({lx * ipow(q, Ns[i] + 1)}, K, c);
            term *= fac(scaled(num_k, x[i]), k[i], c) / dfac(scaled(den_k, x[i]), k[i], c);
        }
        term *= fac(num_K, K, c) / dfac(den_K, K, c) * ScaledComplex(ipow(q, K));
        return term * a_rect_factor(x, k, Ns, c);
    });
}

// Σ_{|k|=N} Δ^A ratio ∏_i (x_i a_j)_{k_i} / ((x_i y_j)_{k_i} (q x_i/x_j)_{k_i})
ScaledComplex a_simplex_sum(const V& x, const V& a, const V& y, int N, const Context& c) {
    return sum_simplex(N, static_cast<int>(x.size()), [&](const std::vector<int>& k) {
        ScaledComplex term = dA_ratio(x, k, c);
        for (std::size_t i = 0; i < x.size(); ++i) {
            term *= fac(scaled(a, x[i]), k[i], c) / dfac(scaled(y, x[i]), k[i], c);
            term /= dfac(scaled(recip(x), c.q * x[i]), k[i], c);
        }
        return term;
    });
}

// One-row well-poised series Σ_k θ(a q^{2k})/θ(a) (a, b_1, …)_k/(q, aq/b_1, …)_k q^k,
// written with ordinary theta shifted factorials.
ScaledComplex one_row_vseries(cplx a, const V& bs, int N, const Context& c) {
    const cplx q = c.q;
    V num{a}, den{q};
    for (cplx b : bs) {
        num.push_back(b);
        den.push_back(a * q / b);
    }
    ScaledSum acc;
    for (int k = 0; k <= N; ++k)
        acc.add(th(a * ipow(q, 2 * k), c) / thd(a, c) * fac(num, k, c) / dfac(den, k, c) *
                ScaledComplex(ipow(q, k)));
    return acc.value();
}

// ---- individual identities -------------------------------------------------

const char* kAS1A = "b = a_1...a_{n+2} x_1...x_{n+1}";
const char* kAS1B = "c = a^2 q^{N+1} / (b_1...b_{n+2} x_1...x_n)";
const char* kAS1C = "e = a^2 q^{|N|+1} / (bcd)";
const char* kAS4 = "q^{N-1} b_1 b_2 b_3 b_4 X^2 = 1, X = x_1...x_{n+1}";
const char* kDGS = "e = q^{|N|+1} / (bcd)";
const char* kW = "e = a^2 q^{N+1} / (bcd t^{n-1})";
const char* kSS = "e = q^{N-n+2} / (bcd)";
const char* kAST1 = "g = a^3 q^{|N|+2} / (bcdef)";
const char* kACST = "g = q^{|N|+2} / (bcdef)";
const char* kTE = "y_1...y_{m+1} = x_1...x_{n+1} a_1...a_{m+n+2}";
const char* kCST1 = "e = q^{|N|-|M|+1} / (bcd)";
const char* kWT = "g = a^3 q^{N+2} / (bcdef t^{n-1})";

ScaledComplex as1a_rhs(const V& a, const V& x, cplx bb, int N, const Context& c) {
    return fac(scaled(recip(a), bb), N, c) / dfac(cat({c.q}, scaled(x, bb)), N, c);
}

ScaledComplex as1c_lhs(const V& x, const std::vector<int>& Ns, cplx a, cplx b, cplx cc, cplx d, cplx e,
                       const Context& c) {
    const cplx q = c.q;
    return a_bailey_sum(x, Ns, a, {d, e}, {a * q / b, a * q / cc}, {b, cc}, {a * q / d, a * q / e}, c);
}

ScaledComplex as1c_rhs(const V& x, const std::vector<int>& Ns, cplx a, cplx b, cplx cc, cplx d, const Context& c) {
    const cplx q = c.q;
    int NN = total(Ns);
    ScaledComplex r = fac({a * q / (cc * d), a * q / (b * d)}, NN, c) / dfac({a * q / d, a * q / (b * cc * d)}, NN, c);
    for (std::size_t i = 0; i < x.size(); ++i)
        r *= fac({a * q * x[i], a * q * x[i] / (b * cc)}, Ns[i], c) / dfac({a * q * x[i] / b, a * q * x[i] / cc}, Ns[i], c);
    return r;
}

// the DGS closed form with parameters (b, c, d) and solved e
ScaledComplex dgs_rhs(const V& x, const std::vector<int>& Ns, cplx b, cplx cc, cplx d, cplx e, const Context& c) {
    const cplx q = c.q;
    ScaledComplex r = c_rect_closed(x, Ns, c) * fac({q / (b * cc), q / (b * d), q / (cc * d)}, total(Ns), c);
    for (std::size_t i = 0; i < x.size(); ++i)
        r /= dfac({q * x[i] / b, q * x[i] / cc, q * x[i] / d, ipow(q, -Ns[i]) * e / x[i]}, Ns[i], c);
    return r;
}

struct AST1Parts {
    ScaledComplex lhs, rhs;
};

AST1Parts ast1_sides(const V& x, const std::vector<int>& Ns, const V& P, const Context& c) {
    const cplx q = c.q;
    cplx a = P[0], b = P[1], cc = P[2], d = P[3], e = P[4], f = P[5], g = P[6];
    int NN = total(Ns);
    cplx lam = a * a * q / (b * cc * e);
    ScaledComplex lhs = a_bailey_sum(x, Ns, a, {e, f, g}, {a * q / b, a * q / cc, a * q / d}, {b, cc, d},
                                     {a * q / e, a * q / f, a * q / g}, c);
    ScaledComplex pre = ScaledComplex(a / lam).pow(NN) * fac({lam * q / f, lam * q / g}, NN, c) /
                        dfac({a * q / f, a * q / g}, NN, c);
    for (std::size_t i = 0; i < x.size(); ++i)
        pre *= fac({a * q * x[i], lam * q * x[i] / d}, Ns[i], c) / dfac({lam * q * x[i], a * q * x[i] / d}, Ns[i], c);
    ScaledComplex rhs = pre * a_bailey_sum(x, Ns, lam, {lam * e / a, f, g}, {a * q / b, a * q / cc, lam * q / d},
                                           {lam * b / a, lam * cc / a, d}, {a * q / e, lam * q / f, lam * q / g}, c);
    return {lhs, rhs};
}

AST1Parts acst_sides(const V& x, const std::vector<int>& Ns, const V& P, const Context& c) {
    const cplx q = c.q;
    cplx b = P[0], cc = P[1], d = P[2], e = P[3], f = P[4], g = P[5];
    int NN = total(Ns);
    cplx lam = q / (b * cc * d);
    ScaledComplex lhs = c_rect_sum(x, Ns, {b, cc, d, e, f, g}, c);
    ScaledComplex pre = c_rect_closed(x, Ns, c) * fac({lam * q / e, lam * q / f, q / (e * f)}, NN, c);
    for (std::size_t i = 0; i < x.size(); ++i)
        pre /= dfac({lam * q * x[i], q * x[i] / e, q * x[i] / f, ipow(q, -Ns[i]) * g / x[i]}, Ns[i], c);
    ScaledComplex rhs = pre * a_bailey_sum(x, Ns, lam, {e, f, g}, {q / b, q / cc, q / d}, {lam * b, lam * cc, lam * d},
                                           {lam * q / e, lam * q / f, lam * q / g}, c);
    return {lhs, rhs};
}

AST1Parts wt_sides(int n, int N, const V& P, const Context& c) {
    const cplx q = c.q;
    cplx a = P[0], b = P[1], cc = P[2], d = P[3], e = P[4], f = P[5], g = P[6];
    cplx lam = a * a * q / (b * cc * d);
    cplx qN = ipow(q, -N);
    Partition R = rectangle(N, n);
    ScaledComplex lhs = v_series(n, a, {b, cc, d, e, f, g, qN}, N, c);
    ScaledComplex pre = pfac({a * q, a * q / (e * f), lam * q / e, lam * q / f}, R, c) /
                        dpfac({lam * q, lam * q / (e * f), a * q / e, a * q / f}, R, c);
    ScaledComplex rhs = pre * v_series(n, lam, {lam * b / a, lam * cc / a, lam * d / a, e, f, g, qN}, N, c);
    return {lhs, rhs};
}

ScaledComplex te_side(const V& x, const V& a, const V& y, int N, const Context& c) {
    return a_simplex_sum(x, a, y, N, c);
}

void add_series(BehaviorTable& T) {
    // --- AS1A
    T["series/AS1A"] = {
        [](Sampler& s, ParameterBinding& b) {
            int n = geti(b, "n");
            draw_nomes(s, b, false);
            b.set_vec("x", s.params(sz(n + 1)));
            b.set_vec("a", s.params(sz(n + 2)));
        },
        [](ParameterBinding& b) {
            int n = geti(b, "n");
            b.set("b", prod(b.vec("a", sz(n + 2))) * prod(b.vec("x", sz(n + 1))));
            b.mark_solved("b", kAS1A);
        },
        [](const ParameterBinding& b, const EvalEnv& env) {
            const Context c = b.context(env.ctx);
            int n = geti(b, "n"), N = geti(b, "N");
            V x = b.vec("x", sz(n + 1)), a = b.vec("a", sz(n + 2));
            cplx bb = b.get("b");
            ScaledComplex lhs = a_simplex_sum(x, a, {bb}, N, c);
            return make_sides(lhs, as1a_rhs(a, x, bb, N, c));
        }};

    // --- AS1B
    T["series/AS1B"] = {
        [](Sampler& s, ParameterBinding& b) {
            int n = geti(b, "n");
            draw_nomes(s, b, false);
            b.set_vec("x", s.params(sz(n)));
            b.set_vec("b", s.params(sz(n + 2)));
            b.set("a", s.param());
        },
        [](ParameterBinding& b) {
            int n = geti(b, "n"), N = geti(b, "N");
            cplx a = b.get("a"), q = b.get("q");
            b.set("c", a * a * ipow(q, N + 1) / (prod(b.vec("b", sz(n + 2))) * prod(b.vec("x", sz(n)))));
            b.mark_solved("c", kAS1B);
        },
        [](const ParameterBinding& b, const EvalEnv& env) {
            const Context c = b.context(env.ctx);
            const cplx q = c.q;
            int n = geti(b, "n"), N = geti(b, "N");
            V x = b.vec("x", sz(n)), bs = b.vec("b", sz(n + 2));
            cplx a = b.get("a"), cc = b.get("c");
            ScaledComplex lhs = sum_rectangle(std::vector<int>(sz(n), N), [&](const std::vector<int>& k) {
                int K = total(k);
                if (K > N) return ScaledComplex();
                ScaledComplex term = dA_ratio(x, k, c);
                for (int i = 0; i < n; ++i) {
                    cplx ax = a * x[sz(i)];
                    term *= th(ax * ipow(q, k[sz(i)] + K), c) / thd(ax, c) * fac({ax}, K, c);
                    term *= fac(scaled(bs, x[sz(i)]), k[sz(i)], c);
                    term /= dfac({ax * ipow(q, N + 1), ax * q / cc}, k[sz(i)], c);
                    term /= dfac(scaled(recip(x), q * x[sz(i)]), k[sz(i)], c);
                }
                term *= fac({ipow(q, -N), cc}, K, c) / dfac(scaled(recip(bs), a * q), K, c);
                return term * ScaledComplex(ipow(q, K));
            });
            ScaledComplex rhs = ScaledComplex(cc).pow(N);
            for (int i = 0; i < n; ++i)
                rhs *= fac({a * q * x[sz(i)]}, N, c) / dfac({a * q * x[sz(i)] / cc}, N, c);
            for (cplx bj : bs) rhs *= fac({a * q / (cc * bj)}, N, c) / dfac({a * q / bj}, N, c);
            return make_sides(lhs, rhs);
        }};

    // --- AS1C
    T["series/AS1C"] = {
        [](Sampler& s, ParameterBinding& b) {
            int n = geti(b, "n");
            draw_nomes(s, b, false);
            draw_rect_data(s, b, n);
            for (const char* k : {"a", "b", "c", "d"}) b.set(k, s.param());
        },
        [](ParameterBinding& b) {
            int n = geti(b, "n");
            cplx a = b.get("a"), q = b.get("q");
            b.set("e", a * a * ipow(q, total(rect_limits(b, n)) + 1) / (b.get("b") * b.get("c") * b.get("d")));
            b.mark_solved("e", kAS1C);
        },
        [](const ParameterBinding& b, const EvalEnv& env) {
            const Context c = b.context(env.ctx);
            int n = geti(b, "n");
            V x = b.vec("x", sz(n));
            auto Ns = rect_limits(b, n);
            cplx a = b.get("a"), bb = b.get("b"), cc = b.get("c"), d = b.get("d"), e = b.get("e");
            return make_sides(as1c_lhs(x, Ns, a, bb, cc, d, e, c), as1c_rhs(x, Ns, a, bb, cc, d, c));
        }};

    // --- AS2
    T["series/AS2"] = {
        [](Sampler& s, ParameterBinding& b) {
            int n = geti(b, "n");
            draw_nomes(s, b, false);
            b.set_vec("x", s.params(sz(n + 1)));
            b.set_vec("a", s.params(sz(n)));
            b.set("b", s.param());
        },
        nullptr,
        [](const ParameterBinding& b, const EvalEnv& env) {
            const Context c = b.context(env.ctx);
            const cplx q = c.q;
            int n = geti(b, "n"), N = geti(b, "N");
            V x = b.vec("x", sz(n + 1)), a = b.vec("a", sz(n));
            cplx bb = b.get("b");
            V a_both = cat(a, recip(a));
            ScaledComplex lhs = sum_simplex(N, n + 1, [&](const std::vector<int>& k) {
                ScaledComplex term = dA_ratio(x, k, c);
                for (std::size_t i = 0; i < x.size(); ++i)
                    for (std::size_t j = i + 1; j < x.size(); ++j) term /= dfac({x[i] * x[j]}, k[i] + k[j], c);
                for (std::size_t i = 0; i < x.size(); ++i) {
                    int ki = k[i];
                    term *= ScaledComplex(ipow(q, ki * (ki - 1) / 2) * ipow(x[i], ki));
                    term *= fac(scaled(a_both, x[i]), ki, c);
                    term /= dfac({bb * x[i], ipow(q, 1 - N) * x[i] / bb}, ki, c);
                    term /= dfac(scaled(recip(x), q * x[i]), ki, c);
                }
                return term;
            });
            ScaledComplex rhs = ScaledComplex(-bb * ipow(q, N - 1)).pow(N) * fac(scaled(a_both, bb), N, c) /
                                dfac(cat(cat({q}, scaled(x, bb)), scaled(recip(x), bb)), N, c);
            return make_sides(lhs, rhs);
        }};

    // --- AS4 (variant 1: the two parity branches exchanged)
    T["series/AS4"] = {
        [](Sampler& s, ParameterBinding& b) {
            int n = geti(b, "n");
            draw_nomes(s, b, false);
            b.set_vec("x", s.params(sz(n + 1)));
            b.set_vec("b", s.params(3));
        },
        [](ParameterBinding& b) {
            int n = geti(b, "n"), N = geti(b, "N");
            cplx X = prod(b.vec("x", sz(n + 1))), q = b.get("q");
            cplx b123 = b.get("b1") * b.get("b2") * b.get("b3");
            b.set("b4", 1.0 / (ipow(q, N - 1) * b123 * X * X));
            b.mark_solved("b4", kAS4);
        },
        [](const ParameterBinding& b, const EvalEnv& env) {
            const Context c = b.context(env.ctx);
            const cplx q = c.q;
            int n = geti(b, "n"), N = geti(b, "N");
            V x = b.vec("x", sz(n + 1)), bs = b.vec("b", 4);
            cplx X = prod(x);
            ScaledComplex lhs = sum_simplex(N, n + 1, [&](const std::vector<int>& k) {
                ScaledComplex term = dA_ratio(x, k, c);
                for (std::size_t i = 0; i < x.size(); ++i)
                    for (std::size_t j = i + 1; j < x.size(); ++j)
                        term *= ScaledComplex(ipow(q, k[i] * k[j])) * fac({x[i] * x[j]}, k[i] + k[j], c);
                for (std::size_t i = 0; i < x.size(); ++i) {
                    term *= fac(scaled(bs, x[i]), k[i], c) / ScaledComplex(ipow(x[i], k[i]));
                    term /= dfac(scaled(recip(x), q * x[i]), k[i], c);
                }
                return term;
            });
            bool even = n % 2 == 0;
            if (b.get_int("variant", 0) == 1) even = !even;
            ScaledComplex rhs;
            if (even) {
                rhs = fac(scaled(bs, X), N, c) / (ScaledComplex(X).pow(N) * dfac({q}, N, c));
            } else {
                cplx b1 = bs[0];
                rhs = fac({X, X * b1 * bs[1], X * b1 * bs[2], X * b1 * bs[3]}, N, c) /
                      (ScaledComplex(X * b1).pow(N) * dfac({q}, N, c));
            }
            return make_sides(lhs, rhs);
        }};

    // --- DGS
    T["series/DGS"] = {
        [](Sampler& s, ParameterBinding& b) {
            int n = geti(b, "n");
            draw_nomes(s, b, false);
            draw_rect_data(s, b, n);
            for (const char* k : {"b", "c", "d"}) b.set(k, s.param());
        },
        [](ParameterBinding& b) {
            int n = geti(b, "n");
            b.set("e", ipow(b.get("q"), total(rect_limits(b, n)) + 1) / (b.get("b") * b.get("c") * b.get("d")));
            b.mark_solved("e", kDGS);
        },
        [](const ParameterBinding& b, const EvalEnv& env) {
            const Context c = b.context(env.ctx);
            int n = geti(b, "n");
            V x = b.vec("x", sz(n));
            auto Ns = rect_limits(b, n);
            cplx bb = b.get("b"), cc = b.get("c"), d = b.get("d"), e = b.get("e");
            return make_sides(c_rect_sum(x, Ns, {bb, cc, d, e}, c), dgs_rhs(x, Ns, bb, cc, d, e, c));
        }};

    // --- W
    T["series/W"] = {
        [](Sampler& s, ParameterBinding& b) {
            draw_nomes(s, b, true);
            for (const char* k : {"a", "b", "c", "d"}) b.set(k, s.param());
        },
        [](ParameterBinding& b) {
            int n = geti(b, "n"), N = geti(b, "N");
            cplx a = b.get("a"), q = b.get("q"), t = b.get("t");
            b.set("e", a * a * ipow(q, N + 1) / (b.get("b") * b.get("c") * b.get("d") * ipow(t, n - 1)));
            b.mark_solved("e", kW);
        },
        [](const ParameterBinding& b, const EvalEnv& env) {
            const Context c = b.context(env.ctx);
            const cplx q = c.q;
            int n = geti(b, "n"), N = geti(b, "N");
            cplx a = b.get("a"), bb = b.get("b"), cc = b.get("c"), d = b.get("d"), e = b.get("e");
            ScaledComplex lhs = v_series(n, a, {bb, cc, d, e, ipow(q, -N)}, N, c);
            Partition R = rectangle(N, n);
            ScaledComplex rhs = pfac({a * q, a * q / (bb * cc), a * q / (bb * d), a * q / (cc * d)}, R, c) /
                                dpfac({a * q / bb, a * q / cc, a * q / d, a * q / (bb * cc * d)}, R, c);
            return make_sides(lhs, rhs);
        }};

    // --- BS (r = 2, composition k of N)
    T["series/BS"] = {
        [](Sampler& s, ParameterBinding& b) {
            draw_nomes(s, b, true);
            b.set_int_vec("k", s.composition(geti(b, "N"), 2));
            for (const char* k : {"a", "b"}) b.set(k, s.param());
            b.set_vec("c", s.params(2));
        },
        nullptr,
        [](const ParameterBinding& b, const EvalEnv& env) {
            const Context c = b.context(env.ctx);
            const cplx q = c.q, t = c.t;
            int n = geti(b, "n"), N = geti(b, "N");
            auto ks = b.int_vec("k", 2);
            cplx a = b.get("a"), bb = b.get("b");
            V cs = b.vec("c", 2);
            cplx tn = ipow(t, n - 1);
            V args{bb / tn, a / bb};
            for (std::size_t i = 0; i < 2; ++i) args.push_back(cs[i] * ipow(q, ks[i]));
            for (std::size_t i = 0; i < 2; ++i) args.push_back(a * q / cs[i]);
            args.push_back(ipow(q, -N));
            ScaledComplex lhs = v_series(n, a, args, N, c);
            Partition R = rectangle(N, n);
            ScaledComplex rhs = pfac({a * q, q * tn}, R, c) / dpfac({bb * q, a * q * tn / bb}, R, c);
            for (std::size_t i = 0; i < 2; ++i) {
                Partition K = rectangle(ks[i], n);
                rhs *= pfac({cs[i] * bb / a, cs[i] * tn / bb}, K, c) / dpfac({cs[i], cs[i] * tn / a}, K, c);
            }
            return make_sides(lhs, rhs);
        }};

    // --- SS
    T["series/SS"] = {
        [](Sampler& s, ParameterBinding& b) {
            int n = geti(b, "n");
            draw_nomes(s, b, false);
            b.set_vec("x", s.params(sz(n)));
            for (const char* k : {"b", "c", "d"}) b.set(k, s.param());
        },
        [](ParameterBinding& b) {
            int n = geti(b, "n"), N = geti(b, "N");
            b.set("e", ipow(b.get("q"), N - n + 2) / (b.get("b") * b.get("c") * b.get("d")));
            b.mark_solved("e", kSS);
        },
        [](const ParameterBinding& b, const EvalEnv& env) {
            const Context c = b.context(env.ctx);
            const cplx q = c.q;
            int n = geti(b, "n"), N = geti(b, "N");
            V x = b.vec("x", sz(n));
            cplx bb = b.get("b"), cc = b.get("c"), d = b.get("d"), e = b.get("e");
            ScaledComplex lhs = sum_rectangle(std::vector<int>(sz(n), N), [&](const std::vector<int>& k) {
                ScaledComplex term = dC_ratio(x, k, c);
                for (int i = 0; i < n; ++i) {
                    cplx xi = x[sz(i)];
                    int ki = k[sz(i)];
                    term *= fac({xi * xi, bb * xi, cc * xi, d * xi, e * xi, ipow(q, -N)}, ki, c);
                    term /= dfac({q, q * xi / bb, q * xi / cc, q * xi / d, q * xi / e, ipow(q, N + 1) * xi * xi}, ki, c);
                    term *= ScaledComplex(ipow(q, ki));
                }
                return term;
            });
            ScaledComplex rhs(1.0);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    cplx xx = x[sz(i)] * x[sz(j)];
                    rhs *= th(ipow(q, N) * xx, c) / thd(xx, c);
                }
            for (int i = 0; i < n; ++i) {
                cplx xi = x[sz(i)], qi = ipow(q, 1 - i);  // q^{2-i} with 1-based i
                rhs *= fac({q * xi * xi, qi / (bb * cc), qi / (bb * d), qi / (cc * d)}, N, c);
                rhs /= dfac({q * xi / bb, q * xi / cc, q * xi / d, ipow(q, -N) * e / xi}, N, c);
            }
            return make_sides(lhs, rhs);
        }};

    // --- AST1
    T["series/AST1"] = {
        [](Sampler& s, ParameterBinding& b) {
            int n = geti(b, "n");
            draw_nomes(s, b, false);
            draw_rect_data(s, b, n);
            for (const char* k : {"a", "b", "c", "d", "e", "f"}) b.set(k, s.param());
        },
        [](ParameterBinding& b) {
            int n = geti(b, "n");
            cplx a = b.get("a"), q = b.get("q");
            cplx den = b.get("b") * b.get("c") * b.get("d") * b.get("e") * b.get("f");
            b.set("g", a * a * a * ipow(q, total(rect_limits(b, n)) + 2) / den);
            b.mark_solved("g", kAST1);
        },
        [](const ParameterBinding& b, const EvalEnv& env) {
            const Context c = b.context(env.ctx);
            int n = geti(b, "n");
            V P;
            for (const char* k : {"a", "b", "c", "d", "e", "f", "g"}) P.push_back(b.get(k));
            auto r = ast1_sides(b.vec("x", sz(n)), rect_limits(b, n), P, c);
            return make_sides(r.lhs, r.rhs);
        }};

    // --- ACST
    T["series/ACST"] = {
        [](Sampler& s, ParameterBinding& b) {
            int n = geti(b, "n");
            draw_nomes(s, b, false);
            draw_rect_data(s, b, n);
            for (const char* k : {"b", "c", "d", "e", "f"}) b.set(k, s.param());
        },
        [](ParameterBinding& b) {
            int n = geti(b, "n");
            cplx den = b.get("b") * b.get("c") * b.get("d") * b.get("e") * b.get("f");
            b.set("g", ipow(b.get("q"), total(rect_limits(b, n)) + 2) / den);
            b.mark_solved("g", kACST);
        },
        [](const ParameterBinding& b, const EvalEnv& env) {
            const Context c = b.context(env.ctx);
            int n = geti(b, "n");
            V P;
            for (const char* k : {"b", "c", "d", "e", "f", "g"}) P.push_back(b.get(k));
            auto r = acst_sides(b.vec("x", sz(n)), rect_limits(b, n), P, c);
            return make_sides(r.lhs, r.rhs);
        }};

    // --- TE
    T["series/TE"] = {
        [](Sampler& s, ParameterBinding& b) {
            int n = geti(b, "n"), m = geti(b, "m");
            draw_nomes(s, b, false);
            b.set_vec("x", s.params(sz(n + 1)));
            b.set_vec("a", s.params(sz(m + n + 2)));
            b.set_vec("y", s.params(sz(m)));
        },
        [](ParameterBinding& b) {
            int n = geti(b, "n"), m = geti(b, "m");
            cplx r = prod(b.vec("x", sz(n + 1))) * prod(b.vec("a", sz(m + n + 2))) / prod(b.vec("y", sz(m)));
            std::string name = "y" + std::to_string(m + 1);
            b.set(name, r);
            b.mark_solved(name, kTE);
        },
        [](const ParameterBinding& b, const EvalEnv& env) {
            const Context c = b.context(env.ctx);
            int n = geti(b, "n"), m = geti(b, "m"), N = geti(b, "N");
            V x = b.vec("x", sz(n + 1)), a = b.vec("a", sz(m + n + 2)), y = b.vec("y", sz(m + 1));
            return make_sides(te_side(x, a, y, N, c), te_side(y, recip(a), x, N, c));
        }};

    // --- CST1
    T["series/CST1"] = {
        [](Sampler& s, ParameterBinding& b) {
            int n = geti(b, "n"), m = geti(b, "m"), N = geti(b, "N");
            draw_nomes(s, b, false);
            draw_rect_data(s, b, n);
            b.set_vec("y", s.params(sz(m)));
            std::vector<int> Ms;
            for (int i = 0; i < m; ++i) Ms.push_back(s.integer(0, N));
            b.set_int_vec("M", Ms);
            for (const char* k : {"b", "c", "d"}) b.set(k, s.param());
        },
        [](ParameterBinding& b) {
            int n = geti(b, "n"), m = geti(b, "m");
            int NN = total(rect_limits(b, n)), MM = total(b.int_vec("M", sz(m)));
            b.set("e", ipow(b.get("q"), NN - MM + 1) / (b.get("b") * b.get("c") * b.get("d")));
            b.mark_solved("e", kCST1);
        },
        [](const ParameterBinding& b, const EvalEnv& env) {
            const Context c = b.context(env.ctx);
            const cplx q = c.q;
            int n = geti(b, "n"), m = geti(b, "m");
            V x = b.vec("x", sz(n)), y = b.vec("y", sz(m));
            auto Ns = rect_limits(b, n);
            auto Ms = b.int_vec("M", sz(m));
            int NN = total(Ns), MM = total(Ms);
            cplx bb = b.get("b"), cc = b.get("c"), d = b.get("d"), e = b.get("e");
            V us{bb, cc, d, e};
            ScaledComplex lhs = sum_rectangle(Ns, [&](const std::vector<int>& k) {
                ScaledComplex term = dC_ratio(x, k, c);
                for (int i = 0; i < n; ++i) {
                    cplx xi = x[sz(i)];
                    int ki = k[sz(i)];
                    term *= fac(scaled(us, xi), ki, c) / dfac(scaled(recip(us), q * xi), ki, c);
                    term *= ScaledComplex(ipow(q, ki));
                    for (int j = 0; j < m; ++j) {
                        cplx yj = y[sz(j)];
                        term *= fac({ipow(q, Ms[sz(j)]) * xi * yj, q * xi / yj}, ki, c);
                        term /= dfac({xi * yj, ipow(q, 1 - Ms[sz(j)]) * xi / yj}, ki, c);
                    }
                }
                return term * c_rect_factor(x, k, Ns, c);
            });
            V ys = scaled(y, 1.0 / std::sqrt(q));
            ScaledComplex rsum = sum_rectangle(Ms, [&](const std::vector<int>& k) {
                ScaledComplex term = dC_ratio(ys, k, c);
                for (int i = 0; i < m; ++i) {
                    cplx yi = y[sz(i)];
                    int ki = k[sz(i)];
                    term *= fac(scaled(recip(us), yi), ki, c) / dfac(scaled(us, yi), ki, c);
                    term *= ScaledComplex(ipow(q, ki));
                    for (int j = 0; j < n; ++j) {
                        cplx xj = x[sz(j)];
                        term *= fac({ipow(q, Ns[sz(j)]) * yi * xj, yi / xj}, ki, c);
                        term /= dfac({yi * xj, ipow(q, -Ns[sz(j)]) * yi / xj}, ki, c);
                    }
                    for (int j = 0; j < m; ++j) {
                        cplx yj = y[sz(j)];
                        term *= fac({ipow(q, -Ms[sz(j)]) * yi / yj, yi * yj / q}, ki, c);
                        term /= dfac({q * yi / yj, ipow(q, Ms[sz(j)]) * yi * yj}, ki, c);
                    }
                }
                return term;
            });
            ScaledComplex pre = ScaledComplex(ipow(q, -NN * MM));
            pre *= fac({q / (bb * cc), q / (bb * d), q / (cc * d)}, NN, c);
            cplx qN = ipow(q, -NN);
            pre /= dfac({qN * bb * cc, qN * bb * d, qN * cc * d}, MM, c);
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < n; ++j) {
                    cplx r = y[sz(i)] / x[sz(j)];
                    pre *= fac({ipow(q, -Ns[sz(j)]) * r}, Ms[sz(i)], c) / dfac({r}, Ms[sz(i)], c);
                }
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) pre *= fac({q * x[sz(i)] * x[sz(j)]}, Ns[sz(i)], c);
            for (int i = 0; i < m; ++i)
                for (int j = i + 1; j < m; ++j) pre *= fac({y[sz(i)] * y[sz(j)]}, Ms[sz(i)] + Ms[sz(j)], c);
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) pre /= dfac({y[sz(i)] * y[sz(j)]}, Ms[sz(i)], c);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) pre /= dfac({q * x[sz(i)] * x[sz(j)]}, Ns[sz(i)] + Ns[sz(j)], c);
            for (int i = 0; i < m; ++i) {
                cplx yi = y[sz(i)];
                pre *= fac({bb * yi, cc * yi, d * yi, ipow(q, 1 - Ms[sz(i)]) / (yi * e)}, Ms[sz(i)], c);
            }
            for (int i = 0; i < n; ++i) {
                cplx xi = x[sz(i)];
                pre /= dfac({q * xi / bb, q * xi / cc, q * xi / d, ipow(q, -Ns[sz(i)]) * e / xi}, Ns[sz(i)], c);
            }
            return make_sides(lhs, pre * rsum);
        }};

    // --- WT
    T["series/WT"] = {
        [](Sampler& s, ParameterBinding& b) {
            draw_nomes(s, b, true);
            for (const char* k : {"a", "b", "c", "d", "e", "f"}) b.set(k, s.param());
        },
        [](ParameterBinding& b) {
            int n = geti(b, "n"), N = geti(b, "N");
            cplx a = b.get("a"), q = b.get("q"), t = b.get("t");
            cplx den = b.get("b") * b.get("c") * b.get("d") * b.get("e") * b.get("f") * ipow(t, n - 1);
            b.set("g", a * a * a * ipow(q, N + 2) / den);
            b.mark_solved("g", kWT);
        },
        [](const ParameterBinding& b, const EvalEnv& env) {
            const Context c = b.context(env.ctx);
            V P;
            for (const char* k : {"a", "b", "c", "d", "e", "f", "g"}) P.push_back(b.get(k));
            auto r = wt_sides(geti(b, "n"), geti(b, "N"), P, c);
            return make_sides(r.lhs, r.rhs);
        }};

    // --- BT (r = 2, composition k of N + M)
    T["series/BT"] = {
        [](Sampler& s, ParameterBinding& b) {
            draw_nomes(s, b, true);
            b.set_int_vec("k", s.composition(geti(b, "N") + geti(b, "M"), 2));
            for (const char* k : {"a", "b"}) b.set(k, s.param());
            b.set_vec("c", s.params(2));
        },
        nullptr,
        [](const ParameterBinding& b, const EvalEnv& env) {
            const Context c = b.context(env.ctx);
            const cplx q = c.q, t = c.t;
            int n = geti(b, "n"), N = geti(b, "N"), M = geti(b, "M");
            auto ks = b.int_vec("k", 2);
            cplx a = b.get("a"), bb = b.get("b");
            V cs = b.vec("c", 2);
            cplx tn = ipow(t, n - 1);
            V args{bb / tn, a * ipow(q, -M) / bb};
            for (std::size_t i = 0; i < 2; ++i) args.push_back(cs[i] * ipow(q, ks[i]));
            for (std::size_t i = 0; i < 2; ++i) args.push_back(a * q / cs[i]);
            args.push_back(ipow(q, -N));
            ScaledComplex lhs = v_series(n, a, args, N, c);
            Partition RN = rectangle(N, n), RM = rectangle(M, n);
            ScaledComplex pre = pfac({a * q, tn * q}, RN, c) / dpfac({bb * q, tn * a * q / bb}, RN, c);
            pre *= pfac({bb * q, tn * bb * q / a}, RM, c) / dpfac({bb * bb * q / a, tn * q}, RM, c);
            for (std::size_t i = 0; i < 2; ++i) {
                Partition K = rectangle(ks[i], n);
                pre *= pfac({bb * cs[i] / a, tn * cs[i] / bb}, K, c) / dpfac({cs[i], tn * cs[i] / a}, K, c);
            }
            V args2{bb / tn, bb * ipow(q, -N) / a};
            for (std::size_t i = 0; i < 2; ++i) args2.push_back(bb * cs[i] * ipow(q, ks[i]) / a);
            for (std::size_t i = 0; i < 2; ++i) args2.push_back(bb * q / cs[i]);
            args2.push_back(ipow(q, -M));
            ScaledComplex rhs = pre * v_series(n, bb * bb / a, args2, M, c);
            return make_sides(lhs, rhs);
        }};
}

// ---- degeneration cross-checks ----------------------------------------------

void add_degenerations(BehaviorTable& T) {
    // AST1 with be = aq against the AS1C closed form with (b, c, d) -> (c, d, f)
    T["degen/AST1-AS1C"] = {
        [](Sampler& s, ParameterBinding& b) {
            int n = geti(b, "n");
            draw_nomes(s, b, false);
            draw_rect_data(s, b, n);
            for (const char* k : {"a", "b", "c", "d", "f"}) b.set(k, s.param());
        },
        [](ParameterBinding& b) {
            int n = geti(b, "n");
            cplx a = b.get("a"), q = b.get("q"), bb = b.get("b");
            b.set("e", a * q / bb);
            b.mark_solved("e", "be = aq");
            cplx den = bb * b.get("c") * b.get("d") * b.get("e") * b.get("f");
            b.set("g", a * a * a * ipow(q, total(rect_limits(b, n)) + 2) / den);
            b.mark_solved("g", kAST1);
        },
        [](const ParameterBinding& b, const EvalEnv& env) {
            const Context c = b.context(env.ctx);
            int n = geti(b, "n");
            V x = b.vec("x", sz(n));
            auto Ns = rect_limits(b, n);
            V P;
            for (const char* k : {"a", "b", "c", "d", "e", "f", "g"}) P.push_back(b.get(k));
            auto r = ast1_sides(x, Ns, P, c);
            ScaledComplex closed = as1c_rhs(x, Ns, P[0], P[2], P[3], P[5], c);
            Sides s = make_sides(r.lhs, closed);
            s.residual = worst({relative_residual(r.lhs, closed), relative_residual(r.rhs, closed)});
            return s;
        }};

    // ACST with bc = q against the DGS closed form with (b, c, d, e) -> (d, e, f, g)
    T["degen/ACST-DGS"] = {
        [](Sampler& s, ParameterBinding& b) {
            int n = geti(b, "n");
            draw_nomes(s, b, false);
            draw_rect_data(s, b, n);
            for (const char* k : {"b", "d", "e", "f"}) b.set(k, s.param());
        },
        [](ParameterBinding& b) {
            int n = geti(b, "n");
            cplx q = b.get("q");
            b.set("c", q / b.get("b"));
            b.mark_solved("c", "bc = q");
            cplx den = b.get("b") * b.get("c") * b.get("d") * b.get("e") * b.get("f");
            b.set("g", ipow(q, total(rect_limits(b, n)) + 2) / den);
            b.mark_solved("g", kACST);
        },
        [](const ParameterBinding& b, const EvalEnv& env) {
            const Context c = b.context(env.ctx);
            int n = geti(b, "n");
            V x = b.vec("x", sz(n));
            auto Ns = rect_limits(b, n);
            V P;
            for (const char* k : {"b", "c", "d", "e", "f", "g"}) P.push_back(b.get(k));
            auto r = acst_sides(x, Ns, P, c);
            ScaledComplex closed = dgs_rhs(x, Ns, P[2], P[3], P[4], P[5], c);
            Sides s = make_sides(r.lhs, closed);
            s.residual = worst({relative_residual(r.lhs, closed), relative_residual(r.rhs, closed)});
            return s;
        }};

    // TE with m = 0 against the AS1A closed form
    T["degen/TE-AS1A"] = {
        [](Sampler& s, ParameterBinding& b) {
            int n = geti(b, "n");
            draw_nomes(s, b, false);
            b.set_vec("x", s.params(sz(n + 1)));
            b.set_vec("a", s.params(sz(n + 2)));
        },
        [](ParameterBinding& b) {
            int n = geti(b, "n");
            b.set("y1", prod(b.vec("x", sz(n + 1))) * prod(b.vec("a", sz(n + 2))));
            b.mark_solved("y1", kTE);
        },
        [](const ParameterBinding& b, const EvalEnv& env) {
            const Context c = b.context(env.ctx);
            int n = geti(b, "n"), N = geti(b, "N");
            V x = b.vec("x", sz(n + 1)), a = b.vec("a", sz(n + 2));
            cplx y1 = b.get("y1");
            ScaledComplex L = te_side(x, a, {y1}, N, c), R = te_side({y1}, recip(a), x, N, c);
            ScaledComplex closed = as1a_rhs(a, x, y1, N, c);
            Sides s = make_sides(L, closed);
            s.residual = worst({relative_residual(L, closed), relative_residual(R, closed)});
            return s;
        }};

    // WT at n = 1 against the one-row Bailey transformation written with
    // ordinary theta shifted factorials
    T["degen/WT-BAILEY"] = {
        [](Sampler& s, ParameterBinding& b) {
            draw_nomes(s, b, true);
            for (const char* k : {"a", "b", "c", "d", "e", "f"}) b.set(k, s.param());
        },
        [](ParameterBinding& b) {
            int N = geti(b, "N");
            cplx a = b.get("a"), q = b.get("q");
            cplx den = b.get("b") * b.get("c") * b.get("d") * b.get("e") * b.get("f");
            b.set("g", a * a * a * ipow(q, N + 2) / den);
            b.mark_solved("g", kWT);
        },
        [](const ParameterBinding& b, const EvalEnv& env) {
            const Context c = b.context(env.ctx);
            const cplx q = c.q;
            int N = geti(b, "N");
            V P;
            for (const char* k : {"a", "b", "c", "d", "e", "f", "g"}) P.push_back(b.get(k));
            cplx a = P[0], bb = P[1], cc = P[2], d = P[3], e = P[4], f = P[5], g = P[6];
            cplx lam = a * a * q / (bb * cc * d), qN = ipow(q, -N);
            ScaledComplex L = one_row_vseries(a, {bb, cc, d, e, f, g, qN}, N, c);
            ScaledComplex pre = fac({a * q, a * q / (e * f), lam * q / e, lam * q / f}, N, c) /
                                dfac({lam * q, lam * q / (e * f), a * q / e, a * q / f}, N, c);
            ScaledComplex R = pre * one_row_vseries(lam, {lam * bb / a, lam * cc / a, lam * d / a, e, f, g, qN}, N, c);
            auto w = wt_sides(1, N, P, c);
            Sides s = make_sides(L, R);
            s.residual = worst({relative_residual(L, R), relative_residual(w.lhs, L), relative_residual(w.rhs, R)});
            return s;
        }};
}

}  // namespace

void register_series_behaviors(BehaviorTable& table) {
    add_series(table);
    add_degenerations(table);
}

}  // namespace ellhyp
