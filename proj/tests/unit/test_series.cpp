#include <gtest/gtest.h>

#include <random>

#include "ellhyp/elliptic.hpp"
#include "ellhyp/errors.hpp"
#include "ellhyp/harness.hpp"
#include "ellhyp/series.hpp"
#include "oracles.hpp"

using namespace ellhyp;
using oracle::rel_err;

namespace {

Context nomes(cplx p, cplx q, cplx t) {
    Context c;
    c.p = p;
    c.q = q;
    c.t = t;
    return c;
}

}  // namespace

TEST(WeylDenominator, SmallCases) {
    Context c = nomes(0.2, 0.5, 0.5);
    const cplx x1(0.7, 0.2), x2(1.3, -0.4);
    EXPECT_LT(rel_err(delta_A({x1, x2}, c).to_complex(), x2 * oracle::theta(x1 / x2, 0.2)), 1e-14);
    EXPECT_LT(rel_err(delta_C({x1}, c).to_complex(), oracle::theta(x1 * x1, 0.2)), 1e-14);
}

TEST(WeylDenominator, MatchesDefiningProducts) {
    std::mt19937_64 g(31);
    std::uniform_real_distribution<double> r(0.6, 1.4), ph(0.0, 6.283185307179586);
    for (int n = 1; n <= 4; ++n) {
        std::vector<cplx> x;
        for (int i = 0; i < n; ++i) x.push_back(std::polar(r(g), ph(g)));
        const cplx p(0.15, 0.1);
        Context c = nomes(p, 0.5, 0.5);
        EXPECT_LT(rel_err(delta_A(x, c).to_complex(), oracle::delta_A(x, p)), 1e-13);
        EXPECT_LT(rel_err(delta_C(x, c).to_complex(), oracle::delta_C(x, p)), 1e-13);
    }
}

// the affine C_n positive-root product equals (p;p)^n x_2^{-1}..x_n^{1-n} Δ^C(x)
TEST(WeylDenominator, AffineRootProduct) {
    const cplx p(0.2, 0.05);
    const std::vector<cplx> x{cplx(0.8, 0.3), cplx(1.1, -0.2), cplx(0.9, 0.5)};
    const int n = 3, M = 60;
    cplx rhs = oracle::ipow(oracle::qpoch(p, p), n) * delta_C(x, nomes(p, 0.5, 0.5)).to_complex();
    for (int i = 0; i < n; ++i) rhs *= oracle::ipow(x[static_cast<std::size_t>(i)], -i);
    // the tail beyond m = M is below |p|^M times a modest constant
    EXPECT_LT(rel_err(oracle::affine_C_product(x, p, M), rhs), 1e-13);
}

TEST(LatticeSums, DomainsAndOrder) {
    std::vector<std::vector<int>> seen;
    auto rec = [&](const std::vector<int>& k) {
        seen.push_back(k);
        return ScaledComplex(1.0);
    };
    EXPECT_EQ(sum_rectangle({0, 0}, rec).to_complex(), 1.0);
    EXPECT_EQ(seen.front(), (std::vector<int>{0, 0}));
    seen.clear();
    EXPECT_EQ(sum_simplex(1, 3, rec).to_complex(), 3.0);
    seen.clear();
    EXPECT_EQ(sum_rectangle({2, 1}, rec).to_complex(), 6.0);
    ASSERT_EQ(seen.size(), 6u);
    EXPECT_TRUE(std::is_sorted(seen.begin(), seen.end()));
    EXPECT_EQ(sum_simplex(3, 3, [](const std::vector<int>&) { return ScaledComplex(1.0); }).to_complex(), 10.0);
}

TEST(VSeries, ZeroLengthIsOne) {
    Context c = nomes(0.1, 0.4, 0.3);
    EXPECT_EQ(v_series(2, 0.35, {0.5, 0.6, 0.7, 0.8, 0.9, 1.0}, 0, c).to_complex(), 1.0);
}

TEST(VSeries, OneRowAgainstDirectSum) {
    Context c = nomes(cplx(0.1, 0.05), cplx(0.4, 0.2), 0.3);
    const int N = 3;
    const cplx a(0.3, 0.1), qN = oracle::ipow(c.q, -N);
    const std::vector<cplx> bs{cplx(0.5, 0.2), cplx(0.6, -0.1), cplx(0.45, 0.3), cplx(0.7, 0.05), qN};
    cplx direct = 0.0;
    for (int k = 0; k <= N; ++k) {
        cplx term = oracle::theta(a * oracle::ipow(c.q, 2 * k), c.p) / oracle::theta(a, c.p) *
                    oracle::shifted(a, k, c.p, c.q) / oracle::shifted(c.q, k, c.p, c.q) * oracle::ipow(c.q, k);
        for (cplx b : bs) term *= oracle::shifted(b, k, c.p, c.q) / oracle::shifted(a * c.q / b, k, c.p, c.q);
        direct += term;
    }
    EXPECT_LT(rel_err(v_series(1, a, bs, N, c).to_complex(), direct), 1e-12);
}

TEST(VSeries, SumFormEqualsDeltaForm) {
    Context c = nomes(cplx(0.1, 0.05), cplx(0.4, 0.2), cplx(0.5, -0.1));
    const int n = 2, N = 2;
    const std::vector<cplx> bs{cplx(0.5, 0.2), cplx(0.6, -0.1), cplx(0.45, 0.3), cplx(0.7, 0.05),
                               oracle::ipow(c.q, -N)};
    const cplx a(0.3, 0.1);
    EXPECT_LT(relative_residual(v_series(n, a, bs, N, c), v_series_delta(n, a, bs, c)), 1e-12);
}

TEST(VSeries, RequiresTermination) {
    Context c = nomes(0.1, 0.4, 0.3);
    EXPECT_THROW(v_series(1, 0.3, {0.5, 0.6}, c), DomainError);
}

TEST(SeriesBinding, SolvedSymbolSatisfiesItsConstraint) {
    const Registry& reg = Registry::instance();
    const auto& d = reg.get("series/W");
    ParameterBinding b = sample_binding(reg, "series/W", 7, dims_for_seed(d, 7));
    ASSERT_EQ(b.solved().size(), 1u);
    EXPECT_EQ(b.solved()[0].symbol, "e");
    const int n = static_cast<int>(b.get_int("n")), N = static_cast<int>(b.get_int("N"));
    cplx lhs = b.get("b") * b.get("c") * b.get("d") * b.get("e") * oracle::ipow(b.get("t"), n - 1);
    cplx rhs = b.get("a") * b.get("a") * oracle::ipow(b.get("q"), N + 1);
    EXPECT_LT(rel_err(lhs, rhs), 1e-14);
}
