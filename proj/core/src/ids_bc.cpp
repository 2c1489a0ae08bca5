#include <algorithm>
#include <cmath>
#include <numeric>

#include "ellhyp/bc.hpp"
#include "ellhyp/errors.hpp"
#include "ellhyp/integrals.hpp"
#include "ellhyp/registry.hpp"
#include "ellhyp/series.hpp"
#include "ids_common.hpp"

namespace ellhyp {

using namespace ids;

namespace {

using Parts = std::vector<Partition>;

const char* kBal = "t^{2n-2} abcduv = pq";
const char* kDiff = "t^{n-1} abcd = p";
const char* kConv = "bcde = aq";
const char* kEric = "b b' d e = aq";
const char* kEricG = "cde = fg";
const char* kIter = "bcd = b'c'd'";
const char* kRedV = "v = t^{1-n}/b";
const char* kRedD = "d = pq/(t^{n-1} a c u)";
const char* kTerm = "q^N t^{n-1} ab = 1";
const char* kCauchy = "t^{2n-2} q^{2N-2} abcduv = p";

Partition pick(Sampler& s, const Parts& from) {
    return from[static_cast<std::size_t>(s.integer(0, static_cast<int>(from.size()) - 1))];
}

// the box without ∅ (listed last); single-term sums hold off the constraints
Parts nonempty_in_box(int N, int n) {
    Parts box = partitions_in_box(N, n);
    box.pop_back();
    return box;
}

// ν ⊂ μ ⊂ λ
Parts between(const Partition& lam, const Partition& nu) {
    Parts out;
    for (const auto& mu : contained_in(lam))
        if (mu.contains(nu)) out.push_back(mu);
    return out;
}

ScaledComplex binom(const Partition& l, const Partition& m, cplx a, cplx b, const Context& c, int n = 0) {
    return elliptic_binomial(l, m, a, b, c, n);
}

ScaledComplex pf(const V& zs, const Partition& l, const Context& c) { return pfac(zs, l, c); }
ScaledComplex pfd(const V& zs, const Partition& l, const Context& c) { return dpfac(zs, l, c); }

// magnitudes compared in the exponent so that tiny and huge values both work
double ratio(const ScaledComplex& num, const ScaledComplex& den) {
    if (num.is_zero()) return 0.0;
    return std::exp2(num.log2_abs() - den.log2_abs());
}

void set_params(ParameterBinding& b, Sampler& s, const std::vector<std::string>& names) {
    for (const auto& n : names) b.set(n, s.param());
}

BCParams bc_params(const ParameterBinding& b) {
    return {b.get("a"), b.get("b"), b.get("c"), b.get("d"), b.get("u"), b.get("v")};
}

// v from the balancing t^{2n-2} abcduv = pq
void solve_v(ParameterBinding& b) {
    int n = geti(b, "n");
    cplx t = b.get("t");
    b.set("v", b.get("p") * b.get("q") /
                   (ipow(t, 2 * n - 2) * b.get("a") * b.get("b") * b.get("c") * b.get("d") * b.get("u")));
    b.mark_solved("v", kBal);
}

void draw_biorth(Sampler& s, ParameterBinding& b, int box) {
    int n = geti(b, "n");
    draw_nomes(s, b, true);
    set_params(b, s, {"a", "b", "c", "d", "u"});
    b.set_vec("x", s.params(sz(n)));
    b.set_partition("lam", pick(s, nonempty_in_box(box, n)));
}

V t_delta(cplx z, int n, const Context& c) {
    V x;
    for (int i = 1; i <= n; ++i) x.push_back(z * ipow(c.t, n - i));
    return x;
}

// ---- interpolation functions ------------------------------------------------

void add_interpolation(BehaviorTable& T) {
    // R*_μ(a q^λ t^δ) = 0 for μ ⊄ λ, every pair in the (N^n) box
    T["bc/VANISHING"] = {
        [](Sampler& s, ParameterBinding& b) {
            draw_nomes(s, b, true);
            set_params(b, s, {"a", "b"});
        },
        {},
        [](const ParameterBinding& b, const EvalEnv& env) {
            const Context c = b.context(env.ctx);
            int n = geti(b, "n"), N = geti(b, "N");
            cplx a = b.get("a"), bb = b.get("b");
            Parts box = partitions_in_box(N, n);
            ScaledComplex zero, scale;
            for (const auto& lam : box) {
                V x = grid_point(a, lam, n, c);
                for (const auto& mu : box) {
                    ScaledComplex v = r_star(mu, x, a, bb, c);
                    ScaledComplex& slot = lam.contains(mu) ? scale : zero;
                    if (!v.is_zero() && (slot.is_zero() || v.log2_abs() > slot.log2_abs())) slot = v;
                }
            }
            Sides out = make_sides(zero, scale);
            out.residual = ratio(zero, scale);
            return out;
        }};

    // every permutation of x, plus x_1 -> 1/x_1 and x_2 -> p x_2
    T["bc/SYMMETRY-SN"] = {
        [](Sampler& s, ParameterBinding& b) {
            int n = geti(b, "n");
            draw_nomes(s, b, true);
            set_params(b, s, {"a", "b"});
            b.set_vec("x", s.params(sz(n)));
            b.set_partition("lam", pick(s, partitions_in_box(2, n)));
        },
        {},
        [](const ParameterBinding& b, const EvalEnv& env) {
            const Context c = b.context(env.ctx);
            int n = geti(b, "n");
            V x = b.vec("x", sz(n));
            Partition lam = b.partition("lam");
            cplx a = b.get("a"), bb = b.get("b");
            ScaledComplex base = r_star(lam, x, a, bb, c), other = base;
            double worst_r = 0.0;
            std::vector<int> perm(sz(n));
            std::iota(perm.begin(), perm.end(), 0);
            while (std::next_permutation(perm.begin(), perm.end())) {
                V y;
                for (int i : perm) y.push_back(x[sz(i)]);
                ScaledComplex v = r_star(lam, y, a, bb, c);
                double r = relative_residual(base, v);
                if (!(r <= worst_r)) {
                    worst_r = r;
                    other = v;
                }
            }
            V y = x;
            y[0] = 1.0 / y[0];
            if (n > 1) y[1] *= c.p;
            worst_r = worst({worst_r, relative_residual(base, r_star(lam, y, a, bb, c))});
            Sides out = make_sides(base, other);
            out.residual = worst_r;
            return out;
        }};

    T["bc/SYMMINUS"] = T["bc/SYMMETRY-SN"];
    T["bc/SYMMINUS"].eval = [](const ParameterBinding& b, const EvalEnv& env) {
        const Context c = b.context(env.ctx);
        int n = geti(b, "n");
        V x = b.vec("x", sz(n));
        cplx a = b.get("a"), bb = b.get("b");
        Partition lam = b.partition("lam");
        return make_sides(r_star(lam, x, a, bb, c), r_star(lam, scaled(x, -1.0), -a, -bb, c));
    };

    // (q,t) -> (1/q,1/t), a,b -> 1/a,1/b
    T["bc/SYMRECIPROCAL"] = T["bc/SYMMETRY-SN"];
    T["bc/SYMRECIPROCAL"].eval = [](const ParameterBinding& b, const EvalEnv& env) {
        const Context c = b.context(env.ctx);
        int n = geti(b, "n");
        V x = b.vec("x", sz(n));
        cplx a = b.get("a"), bb = b.get("b"), q = c.q, t = c.t;
        Partition lam = b.partition("lam");
        ScaledComplex pre = ScaledComplex(q * ipow(t, n - 1) * a / bb).pow(2 * lam.weight()) *
                            ScaledComplex(q).pow(4 * lam.conjugate().n_stat()) * ScaledComplex(t).pow(-4 * lam.n_stat());
        return make_sides(r_star(lam, x, a, bb, c), pre * r_star(lam, x, 1.0 / a, 1.0 / bb, c.with_qt(1.0 / q, 1.0 / t)));
    };

    T["bc/RECTANGLE"] = {
        [](Sampler& s, ParameterBinding& b) {
            draw_nomes(s, b, true);
            set_params(b, s, {"a", "b"});
            b.set_vec("x", s.params(sz(geti(b, "n"))));
        },
        {},
        [](const ParameterBinding& b, const EvalEnv& env) {
            const Context c = b.context(env.ctx);
            int n = geti(b, "n"), N = geti(b, "N");
            V x = b.vec("x", sz(n));
            cplx a = b.get("a"), bb = b.get("b"), pq = c.p * c.q;
            ScaledComplex rhs(1.0);
            for (cplx xi : x) rhs *= fac({a * xi, a / xi}, N, c) / dfac({pq * xi / bb, pq / (xi * bb)}, N, c);
            return make_sides(r_star(rectangle(N, n), x, a, bb, c), rhs);
        }};

    // x = z t^δ
    T["bc/PSPEC"] = {
        [](Sampler& s, ParameterBinding& b) {
            draw_nomes(s, b, true);
            set_params(b, s, {"a", "b", "z"});
            b.set_partition("lam", pick(s, partitions_in_box(2, geti(b, "n"))));
        },
        {},
        [](const ParameterBinding& b, const EvalEnv& env) {
            const Context c = b.context(env.ctx);
            int n = geti(b, "n");
            cplx a = b.get("a"), bb = b.get("b"), z = b.get("z"), pq = c.p * c.q, tn = ipow(c.t, n - 1);
            Partition lam = b.partition("lam");
            ScaledComplex rhs = pf({tn * a * z, a / z}, lam, c) / pfd({pq * tn * z / bb, pq / (bb * z)}, lam, c);
            return make_sides(r_star(lam, t_delta(z, n, c), a, bb, c), rhs);
        }};

    // D(a,b,c,d) R*_λ(·; a q^{1/2}, b q^{1/2}) = eigenvalue · R*_λ(·; a, b); int "branch" = 1 flips q^{1/2}
    T["bc/DIFFEQ"] = {
        [](Sampler& s, ParameterBinding& b) {
            int n = geti(b, "n");
            draw_nomes(s, b, true);
            set_params(b, s, {"a", "b", "c"});
            b.set_vec("x", s.params(sz(n)));
            b.set_partition("lam", pick(s, partitions_in_box(2, n)));
        },
        [](ParameterBinding& b) {
            int n = geti(b, "n");
            b.set("d", b.get("p") / (ipow(b.get("t"), n - 1) * b.get("a") * b.get("b") * b.get("c")));
            b.mark_solved("d", kDiff);
        },
        [](const ParameterBinding& b, const EvalEnv& env) {
            const Context c = b.context(env.ctx);
            int n = geti(b, "n");
            V x = b.vec("x", sz(n));
            cplx a = b.get("a"), bb = b.get("b"), cc = b.get("c"), d = b.get("d"), t = c.t;
            Partition lam = b.partition("lam");
            cplx sq = std::sqrt(c.q) * (b.get_int("branch", 0) == 1 ? -1.0 : 1.0);
            auto f = [&](const V& xs) { return r_star(lam, xs, a * sq, bb * sq, c); };
            ScaledComplex lhs = difference_operator(f, x, a, bb, cc, d, sq, c);
            ScaledComplex rhs = r_star(lam, x, a, bb, c);
            for (int i = 1; i <= n; ++i)
                rhs *= theta_condensed({a * bb * ipow(t, n - i), a * cc * ipow(c.q, lam(i)) * ipow(t, n - i),
                                        bb * cc * ipow(c.q, -lam(i)) * ipow(t, i - 1)},
                                       c);
            return make_sides(lhs, rhs);
        }};
}

// ---- binomial coefficients --------------------------------------------------

// min_gap > 0 draws (λ, μ) with |λ| - |μ| >= min_gap (falling back to 1 when the
// box has no such pair): with one or two terms the balanced sums are true for
// any parameters, so they would not exercise the constraint
void draw_pair(Sampler& s, ParameterBinding& b, bool interlaced, int min_gap = 0) {
    int n = geti(b, "n"), N = geti(b, "N");
    Parts box = nonempty_in_box(N, n);
    if (min_gap <= 0) {
        Partition lam = pick(s, box);
        b.set_partition("lam", lam);
        b.set_partition("mu", pick(s, interlaced ? interlaced_below(lam) : contained_in(lam)));
        return;
    }
    std::vector<std::pair<Partition, Partition>> pairs;
    for (int gap = min_gap; gap >= 1 && pairs.empty(); --gap)
        for (const auto& lam : box)
            for (const auto& mu : interlaced ? interlaced_below(lam) : contained_in(lam))
                if (lam.weight() - mu.weight() >= gap) pairs.emplace_back(lam, mu);
    const auto& pr = pairs[static_cast<std::size_t>(s.integer(0, static_cast<int>(pairs.size()) - 1))];
    b.set_partition("lam", pr.first);
    b.set_partition("mu", pr.second);
}

ScaledComplex conv_sum(const Partition& lam, const Partition& nu, cplx a, cplx b, cplx c, cplx d, cplx e,
                       const Context& ctx) {
    ScaledSum acc;
    for (const auto& mu : between(lam, nu))
        acc.add(pf({c / b, d, e, b * c * d * e}, mu, ctx) / pfd({b * d * e, c * e, c * d, 1.0 / b}, mu, ctx) *
                binom(lam, mu, a, b, ctx) * binom(mu, nu, a / b, c / b, ctx));
    return acc.value();
}

// the b ↔ b' symmetric sum with bb'de = aq, cde = fg
ScaledComplex eric(const Partition& lam, const Partition& nu, cplx a, cplx b, cplx bp, cplx c, cplx d, cplx e,
                   cplx f, cplx g, const Context& ctx, int n = 0) {
    ScaledComplex pre = pf({b, bp * e}, lam, ctx) / pfd({bp * d * e, b * d}, lam, ctx) *
                        pf({bp * d * e, b * f / c}, nu, ctx) / pfd({b / c, bp * d * e / f}, nu, ctx);
    ScaledSum acc;
    for (const auto& mu : between(lam, nu))
        acc.add(pf({c / b, d, e, b * bp * d * e, bp * g / c, bp * f / c}, mu, ctx) /
                pfd({b * bp * d * e / c, bp * e, bp * d, 1.0 / b, f, g}, mu, ctx) * binom(lam, mu, a, b, ctx, n) *
                binom(mu, nu, a / b, c / b, ctx, n));
    return pre * acc.value();
}

ScaledComplex iterated(const Partition& lam, const Partition& nu, cplx a, cplx b, cplx c, cplx d, cplx bp, cplx cp,
                       cplx dp, const Context& ctx) {
    const cplx q = ctx.q;
    ScaledSum acc;
    for (const auto& mu : between(lam, nu)) {
        V A{c, d, a * q / cp, a * q / dp}, B{cp / b, dp / b, a * q / (b * c), a * q / (b * d)};
        ScaledComplex term = pf(A, lam, ctx) / pfd(A, mu, ctx) * pf(B, mu, ctx) / pfd(B, nu, ctx);
        term *= pf({1.0 / b, a * q / b}, nu, ctx) / pfd({1.0 / b, a * q / (b * bp)}, mu, ctx);
        term *= pf({bp, a * q}, mu, ctx) / pfd({bp, a * q / b}, lam, ctx);
        term *= binom(lam, mu, a, b, ctx) * binom(mu, nu, a / b, bp, ctx);
        acc.add(term);
    }
    return acc.value();
}

// Σ_{μ ⊂ (N^n)} (c/b, d, e, bcde)_μ/(bde, ce, cd, 1/b)_μ binom_{[a,b]}((N^n), μ)
ScaledComplex rect_conv(int n, int N, cplx a, cplx b, cplx c, cplx d, cplx e, const Context& ctx) {
    Partition R = rectangle(N, n);
    ScaledSum acc;
    for (const auto& mu : partitions_in_box(N, n))
        acc.add(pf({c / b, d, e, b * c * d * e}, mu, ctx) / pfd({b * d * e, c * e, c * d, 1.0 / b}, mu, ctx) *
                binom(R, mu, a, b, ctx, n));
    return acc.value();
}

void add_binomial(BehaviorTable& T) {
    // coefficient with (q,t) against the conjugate partitions with [aqt, b] at (1/t, 1/q);
    // variant 1 uses [aq/t, b]
    T["bc/CONJSYM"] = {
        [](Sampler& s, ParameterBinding& b) {
            draw_nomes(s, b, true);
            set_params(b, s, {"a", "b"});
            draw_pair(s, b, false);
        },
        {},
        [](const ParameterBinding& b, const EvalEnv& env) {
            const Context c = b.context(env.ctx);
            cplx a = b.get("a"), bb = b.get("b"), q = c.q, t = c.t;
            Partition lam = b.partition("lam"), mu = b.partition("mu");
            cplx a2 = b.get_int("variant", 0) == 1 ? a * q / t : a * q * t;
            return make_sides(binom(lam, mu, a, bb, c),
                              binom(lam.conjugate(), mu.conjugate(), a2, bb, c.with_qt(1.0 / t, 1.0 / q)));
        }};

    T["bc/BINOMCONV"] = {
        [](Sampler& s, ParameterBinding& b) {
            draw_nomes(s, b, true);
            set_params(b, s, {"a", "b", "c", "d"});
            draw_pair(s, b, false, 2);
        },
        [](ParameterBinding& b) {
            b.set("e", b.get("a") * b.get("q") / (b.get("b") * b.get("c") * b.get("d")));
            b.mark_solved("e", kConv);
        },
        [](const ParameterBinding& b, const EvalEnv& env) {
            const Context c = b.context(env.ctx);
            cplx a = b.get("a"), bb = b.get("b"), cc = b.get("c"), d = b.get("d"), e = b.get("e");
            Partition lam = b.partition("lam"), nu = b.partition("mu");
            ScaledComplex rhs = pf({bb, cc * e, cc * d, bb * d * e}, lam, c) /
                                pfd({cc * d * e, bb * d, bb * e, cc}, lam, c) *
                                pf({1.0 / cc, bb * d, bb * e, cc * d * e}, nu, c) /
                                pfd({bb * cc * d * e, e, d, bb / cc}, nu, c) * conv_sum(lam, nu, a, bb, cc, d, e, c);
            return make_sides(binom(lam, nu, a, cc, c), rhs);
        }};

    // B[λ,μ] = binom_{[a,b]}, B'[μ,ν] = binom_{[a/b,1/b]} over the (N^n) box: B B' = I
    T["bc/ORTHOGONALITY"] = {
        [](Sampler& s, ParameterBinding& b) {
            draw_nomes(s, b, true);
            set_params(b, s, {"a", "b"});
        },
        {},
        [](const ParameterBinding& b, const EvalEnv& env) {
            const Context c = b.context(env.ctx);
            cplx a = b.get("a"), bb = b.get("b");
            Parts box = partitions_in_box(geti(b, "N"), geti(b, "n"));
            std::size_t k = box.size();
            std::vector<ScaledComplex> B(k * k), Bp(k * k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) {
                    B[i * k + j] = binom(box[i], box[j], a, bb, c);
                    Bp[i * k + j] = binom(box[i], box[j], a / bb, 1.0 / bb, c);
                }
            double err = 0.0;
            ScaledComplex diag_min(1.0), off_max;
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) {
                    ScaledSum acc;
                    for (std::size_t m = 0; m < k; ++m) acc.add(B[i * k + m] * Bp[m * k + j]);
                    cplx v = acc.value().to_complex();
                    err = worst({err, std::abs(v - (i == j ? 1.0 : 0.0))});
                    if (i != j && std::abs(v) > std::abs(off_max.to_complex())) off_max = ScaledComplex(v);
                    if (i == j && std::abs(v - 1.0) > std::abs(diag_min.to_complex() - 1.0)) diag_min = ScaledComplex(v);
                }
            Sides out = make_sides(diag_min, ScaledComplex(1.0));
            out.residual = err;
            out.diagnostics["max_offdiag"] = std::abs(off_max.to_complex());
            return out;
        }};

    T["bc/ERICSYM"] = {
        [](Sampler& s, ParameterBinding& b) {
            draw_nomes(s, b, true);
            set_params(b, s, {"a", "b", "c", "d", "e", "f"});
            draw_pair(s, b, false, 2);
        },
        [](ParameterBinding& b) {
            b.set("bp", b.get("a") * b.get("q") / (b.get("b") * b.get("d") * b.get("e")));
            b.set("g", b.get("c") * b.get("d") * b.get("e") / b.get("f"));
            b.mark_solved("bp", kEric);
            b.mark_solved("g", kEricG);
        },
        [](const ParameterBinding& b, const EvalEnv& env) {
            const Context c = b.context(env.ctx);
            cplx a = b.get("a"), bb = b.get("b"), bp = b.get("bp"), cc = b.get("c"), d = b.get("d"), e = b.get("e"),
                 f = b.get("f"), g = b.get("g");
            Partition lam = b.partition("lam"), nu = b.partition("mu");
            return make_sides(eric(lam, nu, a, bb, bp, cc, d, e, f, g, c), eric(lam, nu, a, bp, bb, cc, d, e, f, g, c));
        }};

    // invariance under (b,c,d) <-> (b',c',d') when bcd = b'c'd'
    T["bc/ITERATED"] = {
        [](Sampler& s, ParameterBinding& b) {
            draw_nomes(s, b, true);
            set_params(b, s, {"a", "b", "c", "d", "bp", "cp"});
            draw_pair(s, b, false, 2);
        },
        [](ParameterBinding& b) {
            b.set("dp", b.get("b") * b.get("c") * b.get("d") / (b.get("bp") * b.get("cp")));
            b.mark_solved("dp", kIter);
        },
        [](const ParameterBinding& b, const EvalEnv& env) {
            const Context c = b.context(env.ctx);
            cplx a = b.get("a"), bb = b.get("b"), cc = b.get("c"), d = b.get("d"), bp = b.get("bp"), cp = b.get("cp"),
                 dp = b.get("dp");
            Partition lam = b.partition("lam"), nu = b.partition("mu");
            return make_sides(iterated(lam, nu, a, bb, cc, d, bp, cp, dp, c),
                              iterated(lam, nu, a, bp, cp, dp, bb, cc, d, c));
        }};

    // c_{λμ}(z; a, b; T) as a binomial coefficient with second parameter B -> t.
    // At B = t the closed form is 0·∞, so it is evaluated at B = t(1±ε), t(1±2ε)
    // and Richardson-extrapolated.
    T["bc/BRANCHBINOM"] = {
        [](Sampler& s, ParameterBinding& b) {
            draw_nomes(s, b, true);
            set_params(b, s, {"a", "b", "z", "T"});
            draw_pair(s, b, true);
        },
        {},
        [](const ParameterBinding& b, const EvalEnv& env) {
            const Context c = b.context(env.ctx);
            cplx a = b.get("a"), bb = b.get("b"), z = b.get("z"), Tt = b.get("T"), t = c.t, pq = c.p * c.q;
            Partition lam = b.partition("lam"), mu = b.partition("mu");
            const Context cu = c.unguarded();
            auto f = [&](double eps) {
                cplx B = t * (1.0 + eps);
                return pf({a * Tt * z, a * Tt / z, pq * a / (bb * t), B}, lam, cu) /
                       pfd({a * Tt * z, a * Tt / z, pq * a / (bb * t), 1.0 / B}, mu, cu) *
                       pf({pq * z / (bb * t), pq / (z * bb * t), Tt, pq * a * Tt / bb}, mu, cu) /
                       pfd({pq * z / bb, pq / (z * bb), t * Tt, pq * a * Tt / (bb * t)}, lam, cu) *
                       binom(lam, mu, a * Tt / bb, B, cu);
            };
            const double eps = 1e-3;
            auto sym = [&](double e) { return (f(e) + f(-e)) * ScaledComplex(0.5); };
            ScaledComplex rhs = (sym(eps) * ScaledComplex(4.0) - sym(2 * eps)) * ScaledComplex(1.0 / 3.0);
            return make_sides(branching_coefficient(lam, mu, z, a, bb, Tt, c), rhs);
        }};

    // R*_λ(x; a, b) expanded in R*_μ(x; a', b)
    T["bc/CONNECTION"] = {
        [](Sampler& s, ParameterBinding& b) {
            int n = geti(b, "n");
            draw_nomes(s, b, true);
            set_params(b, s, {"a", "ap", "b"});
            b.set_vec("x", s.params(sz(n)));
            b.set_partition("lam", pick(s, partitions_in_box(2, n)));
        },
        {},
        [](const ParameterBinding& b, const EvalEnv& env) {
            const Context c = b.context(env.ctx);
            int n = geti(b, "n");
            V x = b.vec("x", sz(n));
            cplx a = b.get("a"), ap = b.get("ap"), bb = b.get("b"), pq = c.p * c.q, tn = ipow(c.t, n - 1);
            Partition lam = b.partition("lam");
            ScaledSum acc;
            for (const auto& mu : contained_in(lam))
                acc.add(binom(lam, mu, tn * a / bb, a / ap, c) * pf({a / ap, tn * a * ap}, lam, c) /
                        pfd({ap / a, tn * a * ap}, mu, c) * pf({pq * tn * a / bb, pq / (a * bb)}, mu, c) /
                        pfd({pq * tn * ap / bb, pq / (ap * bb)}, lam, c) * r_star(mu, x, ap, bb, c));
            return make_sides(r_star(lam, x, a, bb, c), acc.value());
        }};

    // BINOMCONV at λ = (N^n), ν = ∅: the sum, its closed form and the C_n
    // Jackson summation (series/W) with A = a/b, B = c/b, C = d, D = e
    T["bc/W-FROM-BINOM"] = {
        [](Sampler& s, ParameterBinding& b) {
            draw_nomes(s, b, true);
            set_params(b, s, {"a", "b", "c", "d"});
        },
        T["bc/BINOMCONV"].solve,
        [](const ParameterBinding& b, const EvalEnv& env) {
            const Context c = b.context(env.ctx);
            int n = geti(b, "n"), N = geti(b, "N");
            cplx a = b.get("a"), bb = b.get("b"), cc = b.get("c"), d = b.get("d"), e = b.get("e"), q = c.q;
            Partition R = rectangle(N, n);
            ScaledComplex sum = rect_conv(n, N, a, bb, cc, d, e, c);
            ScaledComplex closed = pf({cc * d * e, bb * d, bb * e, cc}, R, c) / pfd({bb, cc * e, cc * d, bb * d * e}, R, c);
            cplx A = a / bb, B = cc / bb, C = d, D = e;
            ScaledComplex W = pf({A * q, A * q / (B * C), A * q / (B * D), A * q / (C * D)}, R, c) /
                              pfd({A * q / B, A * q / C, A * q / D, A * q / (B * C * D)}, R, c);
            ScaledComplex V = v_series(n, A, {B, C, D, a * ipow(q, N) * ipow(c.t, 1 - n), ipow(q, -N)}, N, c);
            Sides out = make_sides(sum, W);
            out.residual =
                worst({relative_residual(sum, closed), relative_residual(sum, W), relative_residual(V, W)});
            return out;
        }};

    // the b <-> b' symmetric sum at λ = (N^n), ν = ∅ against its V-series form
    T["bc/RECT-BINOM"] = {
        [](Sampler& s, ParameterBinding& b) {
            draw_nomes(s, b, true);
            set_params(b, s, {"a", "b", "c", "d", "e", "f"});
        },
        T["bc/ERICSYM"].solve,
        [](const ParameterBinding& b, const EvalEnv& env) {
            const Context c = b.context(env.ctx);
            int n = geti(b, "n"), N = geti(b, "N");
            cplx a = b.get("a"), bb = b.get("b"), bp = b.get("bp"), cc = b.get("c"), d = b.get("d"), e = b.get("e"),
                 f = b.get("f"), g = b.get("g"), q = c.q;
            Partition R = rectangle(N, n), E;
            cplx tail = a * ipow(q, N) * ipow(c.t, 1 - n), qN = ipow(q, -N);
            ScaledComplex E1 = eric(R, E, a, bb, bp, cc, d, e, f, g, c, n);
            ScaledComplex E2 = eric(R, E, a, bp, bb, cc, d, e, f, g, c, n);
            ScaledComplex V1 = pf({bb, bp * e}, R, c) / pfd({bp * d * e, bb * d}, R, c) *
                               v_series(n, a / bb, {cc / bb, d, e, bp * g / cc, bp * f / cc, tail, qN}, N, c);
            ScaledComplex V2 = pf({bp, bb * e}, R, c) / pfd({bb * d * e, bp * d}, R, c) *
                               v_series(n, a / bp, {cc / bp, d, e, bb * g / cc, bb * f / cc, tail, qN}, N, c);
            Sides out = make_sides(E1, V1);
            out.residual = worst({relative_residual(E1, V1), relative_residual(E1, E2), relative_residual(E1, V2)});
            return out;
        }};
}

// ---- biorthogonal functions -------------------------------------------------

void add_biorthogonal(BehaviorTable& T) {
    // v = t^{1-n}/b collapses R̃_λ to R*_λ(x; b, u)
    T["bc/REDUCTION"] = {
        [](Sampler& s, ParameterBinding& b) {
            int n = geti(b, "n");
            draw_nomes(s, b, true);
            set_params(b, s, {"a", "b", "c", "u"});
            b.set_vec("x", s.params(sz(n)));
            b.set_partition("lam", pick(s, nonempty_in_box(2, n)));
        },
        [](ParameterBinding& b) {
            int n = geti(b, "n");
            cplx t = b.get("t");
            b.set("v", ipow(t, 1 - n) / b.get("b"));
            b.set("d", b.get("p") * b.get("q") / (ipow(t, n - 1) * b.get("a") * b.get("c") * b.get("u")));
            b.mark_solved("v", kRedV);
            b.mark_solved("d", kRedD);
        },
        [](const ParameterBinding& b, const EvalEnv& env) {
            const Context c = b.context(env.ctx);
            int n = geti(b, "n");
            BCParams P = bc_params(b);
            V x = b.vec("x", sz(n));
            Partition lam = b.partition("lam");
            cplx pq = c.p * c.q, tn = ipow(c.t, n - 1);
            ScaledComplex rhs = pf({pq / (P.a * P.u), pq * tn * P.a / P.u}, lam, c) /
                                pfd({P.b / P.a, tn * P.a * P.b}, lam, c) * r_star(lam, x, P.b, P.u, c);
            return make_sides(r_tilde(lam, x, P, c), rhs);
        }};

    // x = b t^δ
    T["bc/PSPEC-TILDE"] = {[](Sampler& s, ParameterBinding& b) { draw_biorth(s, b, 2); }, solve_v,
                           [](const ParameterBinding& b, const EvalEnv& env) {
                               const Context c = b.context(env.ctx);
                               int n = geti(b, "n");
                               BCParams P = bc_params(b);
                               Partition lam = b.partition("lam");
                               cplx pq = c.p * c.q, tn = ipow(c.t, n - 1);
                               ScaledComplex rhs =
                                   pf({tn * P.b * P.c, tn * P.b * P.d, 1.0 / (tn * P.b * P.v), pq * tn * P.a / P.u}, lam,
                                      c) /
                                   pfd({tn * P.a * P.c, tn * P.a * P.d, 1.0 / (tn * P.a * P.v), pq * tn * P.b / P.u},
                                       lam, c);
                               return make_sides(r_tilde(lam, t_delta(P.b, n, c), P, c), rhs);
                           }};

    T["bc/PARAMSYM"] = {[](Sampler& s, ParameterBinding& b) { draw_biorth(s, b, 2); }, solve_v,
                        [](const ParameterBinding& b, const EvalEnv& env) {
                            const Context c = b.context(env.ctx);
                            int n = geti(b, "n");
                            BCParams P = bc_params(b), Q = P;
                            std::swap(Q.a, Q.b);
                            V x = b.vec("x", sz(n));
                            Partition lam = b.partition("lam");
                            return make_sides(r_tilde(lam, x, P, c),
                                              r_tilde(lam, x, Q, c) * r_tilde(lam, t_delta(P.b, n, c), P, c));
                        }};

    // R̃_λ(a t^δ q^μ; a,b,c,d,u,v) = R̃_μ(â t^δ q^λ; â,b̂,ĉ,d̂,û,v̂), both roots â
    T["bc/EVALSYM"] = {
        [](Sampler& s, ParameterBinding& b) {
            draw_biorth(s, b, 2);
            b.set_partition("mu", pick(s, nonempty_in_box(2, geti(b, "n"))));
        },
        solve_v,
        [](const ParameterBinding& b, const EvalEnv& env) {
            const Context c = b.context(env.ctx);
            int n = geti(b, "n");
            BCParams P = bc_params(b);
            Partition lam = b.partition("lam"), mu = b.partition("mu");
            cplx ah = std::sqrt(P.a * P.b * P.c * P.d / (c.p * c.q));
            auto hat = [&](cplx r) {
                return BCParams{r, P.a * P.b / r, P.a * P.c / r, P.a * P.d / r, r * P.u / P.a, P.v * r / P.a};
            };
            ScaledComplex lhs = r_tilde(lam, grid_point(P.a, mu, n, c), P, c);
            ScaledComplex rhs = r_tilde(mu, grid_point(ah, lam, n, c), hat(ah), c);
            ScaledComplex rhs2 = r_tilde(mu, grid_point(-ah, lam, n, c), hat(-ah), c);
            Sides out = make_sides(lhs, rhs);
            out.residual = worst({relative_residual(lhs, rhs), relative_residual(lhs, rhs2)});
            return out;
        }};

    // D(a, u, b, p t^{1-n}/uab) on R̃ with (a,b,u) -> q^{1/2}(a,b,u), (c,d,v) -> q^{-1/2}(c,d,v)
    T["bc/TILDE-DIFFEQ"] = {
        [](Sampler& s, ParameterBinding& b) { draw_biorth(s, b, 2); }, solve_v,
        [](const ParameterBinding& b, const EvalEnv& env) {
            const Context c = b.context(env.ctx);
            int n = geti(b, "n");
            BCParams P = bc_params(b);
            V x = b.vec("x", sz(n));
            Partition lam = b.partition("lam");
            cplx t = c.t, sq = std::sqrt(c.q) * (b.get_int("branch", 0) == 1 ? -1.0 : 1.0);
            BCParams S{P.a * sq, P.b * sq, P.c / sq, P.d / sq, P.u * sq, P.v / sq};
            auto f = [&](const V& xs) { return r_tilde(lam, xs, S, c); };
            ScaledComplex lhs =
                difference_operator(f, x, P.a, P.u, P.b, c.p * ipow(t, 1 - n) / (P.u * P.a * P.b), sq, c);
            ScaledComplex rhs = r_tilde(lam, x, P, c);
            for (int i = 1; i <= n; ++i)
                rhs *= theta_condensed({P.a * P.b * ipow(t, n - i), P.a * P.u * ipow(t, n - i), P.b * P.u * ipow(t, n - i)}, c);
            return make_sides(lhs, rhs);
        }};

    // R̃_λ(x;…;p,t;q) R̃_μ(x;…;q,t;p) against the same product with λ ↔ μ and p ↔ q
    T["bc/TILDE-DOUBLE"] = {
        [](Sampler& s, ParameterBinding& b) {
            draw_biorth(s, b, 2);
            b.set_partition("mu", pick(s, partitions_in_box(2, geti(b, "n"))));
        },
        solve_v,
        [](const ParameterBinding& b, const EvalEnv& env) {
            const Context c = b.context(env.ctx);
            int n = geti(b, "n");
            BCParams P = bc_params(b);
            V x = b.vec("x", sz(n));
            Partition lam = b.partition("lam"), mu = b.partition("mu");
            const Context sw = c.with_pq(c.q, c.p);
            auto dbl = [&](const Partition& l, const Partition& m, const Context& base, const Context& swapped) {
                return r_tilde(l, x, P, swapped) * r_tilde(m, x, P, base);
            };
            return make_sides(dbl(lam, mu, c, sw), dbl(mu, lam, sw, c));
        }};

    // full (λ, ν) matrix over the (N^n) box with b = 1/(q^N t^{n-1} a)
    T["bc/DISCRETE-BIORTH"] = {
        [](Sampler& s, ParameterBinding& b) {
            draw_nomes(s, b, true);
            set_params(b, s, {"a", "c", "d", "u"});
        },
        [](ParameterBinding& b) {
            int n = geti(b, "n"), N = geti(b, "N");
            b.set("b", 1.0 / (ipow(b.get("q"), N) * ipow(b.get("t"), n - 1) * b.get("a")));
            b.mark_solved("b", kTerm);
            solve_v(b);
        },
        [](const ParameterBinding& b, const EvalEnv& env) {
            const Context c = b.context(env.ctx);
            int n = geti(b, "n"), N = geti(b, "N");
            BCParams P = bc_params(b), Q = P;
            std::swap(Q.u, Q.v);
            cplx t = c.t, tn = ipow(t, n - 1), pq = c.p * c.q;
            Parts box = partitions_in_box(N, n);
            std::size_t k = box.size();
            std::vector<ScaledComplex> w(k), R1(k * k), R2(k * k);
            for (std::size_t m = 0; m < k; ++m) {
                V xs = grid_point(P.a, box[m], n, c);
                w[m] = delta_lambda(tn * tn * P.a * P.a,
                                    {ipow(t, n), tn * P.a * P.c, tn * P.a * P.d, tn * P.a * P.u, tn * P.a * P.v,
                                     ipow(c.q, -N)},
                                    box[m], c);
                for (std::size_t l = 0; l < k; ++l) {
                    R1[l * k + m] = r_tilde(box[l], xs, P, c);
                    R2[l * k + m] = r_tilde(box[l], xs, Q, c);
                }
            }
            Partition RN = rectangle(N, n);
            ScaledComplex fac = pf({P.b / P.a, pq / (P.u * P.c), pq / (P.u * P.d), pq / (P.u * P.v)}, RN, c) /
                                pfd({pq * tn * P.a / P.u, tn * P.b * P.c, tn * P.b * P.d, tn * P.b * P.v}, RN, c);
            double res = 0.0;
            ScaledComplex lhs0, rhs0;
            for (std::size_t l = 0; l < k; ++l) {
                ScaledComplex diag =
                    fac / delta_lambda(1.0 / (P.u * P.v),
                                       {ipow(t, n), tn * P.a * P.b, tn * P.a * P.c, tn * P.a * P.d,
                                        1.0 / (tn * P.a * P.u), 1.0 / (tn * P.a * P.v)},
                                       box[l], c);
                for (std::size_t j = 0; j < k; ++j) {
                    ScaledSum acc;
                    for (std::size_t m = 0; m < k; ++m) acc.add(w[m] * R1[l * k + m] * R2[j * k + m]);
                    ScaledComplex v = acc.value();
                    res = worst({res, l == j ? relative_residual(v, diag) : ratio(v, diag)});
                    if (l == 0 && j == 0) {
                        lhs0 = v;
                        rhs0 = diag;
                    }
                }
            }
            Sides out = make_sides(lhs0, rhs0);
            out.residual = res;
            return out;
        }};

    // λ = μ = ν = ω = ∅: the continuous biorthogonality normalization, i.e. the
    // C_n type II integral in the variables a, b, c, d, u, v
    T["bc/CONT-BIORTH-0"] = {
        [](Sampler& s, ParameterBinding& b) {
            int n = geti(b, "n");
            b.set("p", s.nome());
            b.set("q", s.nome());
            cplx t = s.param(0.4, 0.7);
            b.set("t", t);
            cplx C = b.get("p") * b.get("q") / ipow(t, 2 * n - 2);
            for (const char* k : {"a", "b", "c", "d", "u"}) b.set(k, s.balanced(6, C));
        },
        solve_v,
        [](const ParameterBinding& b, const EvalEnv& env) {
            const Context c = b.context(env.ctx);
            int n = geti(b, "n");
            BCParams P = bc_params(b);
            V ts{P.a, P.b, P.c, P.d, P.u, P.v};
            Integrand f = integrand_j_c(n, ts, c.t);
            require_admissible(f, c, env.quad);
            IntegralValue iv = integrate_C(f, c, env.quad);
            ScaledComplex rhs(1.0);
            for (int m = 1; m <= n; ++m) {
                rhs *= elliptic_gamma(ipow(c.t, m), c) * elliptic_gamma_recip(c.t, c);
                for (std::size_t i = 0; i < ts.size(); ++i)
                    for (std::size_t j = i + 1; j < ts.size(); ++j) rhs *= elliptic_gamma(ipow(c.t, m - 1) * ts[i] * ts[j], c);
            }
            Sides out = make_sides(iv.value, rhs);
            out.diagnostics["M_final"] = iv.diag.M_final;
            out.diagnostics["pole_margin"] = iv.diag.pole_margin;
            return out;
        }};

    // dual Cauchy identity, with m ≡ N
    T["bc/CAUCHY"] = {
        [](Sampler& s, ParameterBinding& b) {
            draw_nomes(s, b, true);
            set_params(b, s, {"a", "b", "c", "d", "u"});
            b.set_vec("x", s.params(sz(geti(b, "n"))));
            b.set_vec("y", s.params(sz(geti(b, "N"))));
        },
        [](ParameterBinding& b) {
            int n = geti(b, "n"), N = geti(b, "N");
            b.set("v", b.get("p") / (b.get("a") * b.get("b") * b.get("c") * b.get("d") * b.get("u") *
                                     ipow(b.get("q"), 2 * N - 2) * ipow(b.get("t"), 2 * n - 2)));
            b.mark_solved("v", kCauchy);
        },
        [](const ParameterBinding& b, const EvalEnv& env) {
            const Context c = b.context(env.ctx);
            int n = geti(b, "n"), N = geti(b, "N");
            BCParams P = bc_params(b);
            V x = b.vec("x", sz(n)), y = b.vec("y", sz(N));
            cplx p = c.p, q = c.q, t = c.t, tn = ipow(t, n - 1);
            BCParams P1 = P, P2 = P;
            P1.u = ipow(q, N) * P.u;
            P1.v = ipow(q, N - 1) * P.v;
            P2.u = ipow(t, n) * P.u;
            P2.v = ipow(t, n - 1) * P.v;
            const Context swapped = c.with_qt(t, q);
            ScaledSum acc;
            for (const auto& lam : partitions_in_box(N, n)) {
                Partition lc = lam.conjugate();
                std::vector<int> hat;
                for (int k = 1; k <= N; ++k) hat.push_back(n - lc(N + 1 - k));
                ScaledComplex w = delta_lambda(ipow(q, 1 - 2 * N) / (P.u * P.v),
                                               {ipow(t, n), ipow(q, -N), ipow(q, 1 - N) / (tn * P.a * P.v), P.a / P.u},
                                               lam, c);
                acc.add(w * r_tilde(lam, x, P1, c) * r_tilde(Partition(hat), y, P2, swapped));
            }
            Partition RN = rectangle(N, n);
            cplx pq1 = p * ipow(q, 1 - N);
            ScaledComplex rhs = pf({P.a / P.u, pq1 / (P.a * P.u), pq1 / (P.b * P.u), pq1 / (P.c * P.u),
                                    pq1 / (P.d * P.u), p * ipow(q, 2 - 2 * N) / (P.u * P.v)},
                                   RN, c) /
                                pfd({tn * P.a * P.b, tn * P.a * P.c, tn * P.a * P.d, ipow(q, N - 1) * tn * P.a * P.v},
                                    RN, c);
            for (cplx xi : x)
                for (cplx yj : y) rhs *= th(xi * yj, c) * th(yj / xi, c);
            for (cplx xi : x) rhs /= dfac({P.u * xi, P.u / xi}, N, c);
            for (cplx yj : y) {
                rhs /= shifted_factorial_base(p / (P.u * yj), 1.0 / t, n, c);
                rhs /= shifted_factorial_base(yj / P.u, 1.0 / t, n, c);
            }
            return make_sides(acc.value(), rhs);
        }};
}

}  // namespace

void register_bc_behaviors(BehaviorTable& table) {
    add_interpolation(table);
    add_binomial(table);
    add_biorthogonal(table);
}

}  // namespace ellhyp
