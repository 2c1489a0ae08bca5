#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "ellhyp/elliptic.hpp"
#include "ellhyp/errors.hpp"
#include "ellhyp/integrals.hpp"
#include "oracles.hpp"

using namespace ellhyp;
using oracle::rel_err;

namespace {

Context nomes(cplx p, cplx q) {
    Context c;
    c.p = p;
    c.q = q;
    return c;
}

// five free parameters of modulus ~0.6, the sixth fixed by t_1..t_6 = pq
std::vector<cplx> balanced_six(std::mt19937_64& g, const Context& c) {
    std::uniform_real_distribution<double> r(0.55, 0.7), ph(0.0, 2 * std::numbers::pi);
    std::vector<cplx> t;
    cplx prod = 1.0;
    for (int i = 0; i < 5; ++i) {
        t.push_back(std::polar(r(g), ph(g)));
        prod *= t.back();
    }
    t.push_back(c.p * c.q / prod);
    return t;
}

const cplx two_pi_i(0.0, 2 * std::numbers::pi);

}  // namespace

TEST(Kappa, Constants) {
    Context c = nomes(0.0, 1e-300);
    EXPECT_LT(rel_err(kappa_C(1, c).to_complex(), 1.0 / (2.0 * two_pi_i)), 1e-15);
    Context d = nomes(cplx(0.2, 0.1), cplx(0.15, -0.2));
    EXPECT_EQ(kappa_A(1, d), kappa_C(1, d));
    cplx pp = oracle::qpoch(d.p, d.p), qq = oracle::qpoch(d.q, d.q);
    cplx direct = pp * pp * qq * qq / (8.0 * two_pi_i * two_pi_i);
    EXPECT_LT(rel_err(kappa_C(2, d).to_complex(), direct), 1e-14);
}

TEST(TorusQuadrature, ConstantIntegrand) {
    Integrand f;
    f.n = 2;
    QuadratureResult r = torus_integrate(f, nomes(0.1, 0.1));
    EXPECT_LT(rel_err(r.mean.to_complex(), 1.0), 1e-15);
}

TEST(TorusQuadrature, RankOneCTypeIAgainstGammaProduct) {
    std::mt19937_64 g(41);
    for (int trial = 0; trial < 3; ++trial) {
        Context c = nomes(std::polar(0.2, 0.3 * trial), std::polar(0.2, -0.5 * trial));
        std::vector<cplx> t = balanced_six(g, c);
        cplx closed = 1.0;
        for (std::size_t i = 0; i < t.size(); ++i)
            for (std::size_t j = i + 1; j < t.size(); ++j) closed *= oracle::gamma_log_series(t[i] * t[j], c.p, c.q);
        QuadratureOptions opt;
        opt.tol = 1e-10;
        EXPECT_LT(rel_err(i_c(1, t, c, opt).value.to_complex(), closed), 1e-6);
    }
}

TEST(TorusQuadrature, ThreadCountDoesNotChangeBits) {
    std::mt19937_64 g(42);
    Context c = nomes(0.15, cplx(0.1, 0.1));
    std::vector<cplx> t = balanced_six(g, c);
    t.insert(t.begin(), {cplx(0.6, 0.1), cplx(0.5, -0.3)});
    // eight parameters at n = 2 with the product pinned again
    t.back() *= c.p * c.q / (t[0] * t[1] * t[2] * t[3] * t[4] * t[5] * t[6] * t[7]);
    QuadratureOptions one, four;
    one.tol = four.tol = 1e-8;
    four.threads = 4;
    EXPECT_EQ(i_c(2, t, c, one).value, i_c(2, t, c, four).value);
}

TEST(TorusQuadrature, PoleOnTheTorusIsRejected) {
    Context c = nomes(0.1, 0.1);
    std::vector<cplx> t{0.995, 0.5, 0.6, 0.55, 0.6};
    cplx prod = 1.0;
    for (cplx x : t) prod *= x;
    t.push_back(c.p * c.q / prod);
    EXPECT_THROW(i_c(1, t, c), AdmissibilityError);
}

TEST(TorusQuadrature, ConvergenceDiagnostics) {
    std::mt19937_64 g(43);
    Context c = nomes(0.2, 0.2);
    std::vector<cplx> t = balanced_six(g, c);
    QuadratureOptions opt;
    opt.tol = 1e-10;
    IntegralValue v = i_c(1, t, c, opt);
    EXPECT_GT(v.diag.M_final, 0);
    EXPECT_GT(v.diag.pole_margin, opt.margin);
    EXPECT_LT(v.diag.last_change, opt.tol);
    // the observed geometric rate is no worse than the pole-distance prediction
    if (v.diag.observed_rate > 0) {
        EXPECT_LE(v.diag.observed_rate, v.diag.predicted_rate * 1.05);
    }
}
