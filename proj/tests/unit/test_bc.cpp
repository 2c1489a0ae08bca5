#include <gtest/gtest.h>

#include "ellhyp/bc.hpp"
#include "ellhyp/elliptic.hpp"
#include "ellhyp/partition.hpp"
#include "oracles.hpp"

using namespace ellhyp;
using oracle::rel_err;

namespace {

Context ctx() {
    Context c;
    c.p = cplx(0.12, 0.05);
    c.q = cplx(0.45, 0.2);
    c.t = cplx(0.5, -0.15);
    return c;
}

cplx fac(cplx z, const Partition& lam, const Context& c) { return oracle::cell_factorial(z, lam, c.p, c.q, c.t); }

}  // namespace

TEST(Branching, TrivialCases) {
    Context c = ctx();
    EXPECT_EQ(branching_coefficient(Partition(), Partition(), 0.7, 0.3, 0.4, 0.5, c).to_complex(), 1.0);
    EXPECT_TRUE(branching_coefficient(Partition({1}), Partition({2}), 0.7, 0.3, 0.4, 0.5, c).is_zero());
}

TEST(Branching, EllipticAndInversionSymmetric) {
    Context c = ctx();
    const Partition lam({2, 1}), mu({1});
    const cplx z(0.8, 0.3), a(0.35, 0.1), b(0.4, -0.2), T = c.t * c.t;
    ScaledComplex base = branching_coefficient(lam, mu, z, a, b, T, c);
    EXPECT_LT(relative_residual(base, branching_coefficient(lam, mu, 1.0 / z, a, b, T, c)), 1e-12);
    EXPECT_LT(relative_residual(base, branching_coefficient(lam, mu, c.p * z, a, b, T, c)), 1e-12);
}

TEST(RStar, TrivialCases) {
    Context c = ctx();
    const std::vector<cplx> x{cplx(0.7, 0.2), cplx(1.1, -0.3)};
    EXPECT_EQ(r_star(Partition(), x, 0.3, 0.4, c).to_complex(), 1.0);
    EXPECT_TRUE(r_star(Partition({1, 1, 1}), x, 0.3, 0.4, c).is_zero());
}

TEST(RStar, RectangleFactorsOverVariables) {
    Context c = ctx();
    const std::vector<cplx> x{cplx(0.7, 0.2), cplx(1.1, -0.3)};
    const cplx a(0.35, 0.1), b(0.4, -0.2), pq = c.p * c.q;
    const int N = 2;
    cplx prod = 1.0;
    for (cplx xi : x)
        prod *= oracle::shifted(a * xi, N, c.p, c.q) * oracle::shifted(a / xi, N, c.p, c.q) /
                (oracle::shifted(pq * xi / b, N, c.p, c.q) * oracle::shifted(pq / (xi * b), N, c.p, c.q));
    EXPECT_LT(rel_err(r_star(rectangle(N, 2), x, a, b, c).to_complex(), prod), 1e-12);
}

TEST(RStar, PrincipalSpecialization) {
    Context c = ctx();
    const int n = 3;
    const Partition lam({2, 1});
    const cplx a(0.35, 0.1), b(0.4, -0.2), z(0.9, 0.3), pq = c.p * c.q, tn = oracle::ipow(c.t, n - 1);
    std::vector<cplx> x;
    for (int i = 1; i <= n; ++i) x.push_back(z * oracle::ipow(c.t, n - i));
    cplx closed = fac(tn * a * z, lam, c) * fac(a / z, lam, c) / (fac(pq * tn * z / b, lam, c) * fac(pq / (b * z), lam, c));
    EXPECT_LT(rel_err(r_star(lam, x, a, b, c).to_complex(), closed), 1e-12);
}

TEST(DifferenceOperator, ConstantFunctionAtRankOne) {
    Context c = ctx();
    const cplx x(0.8, 0.4), a(0.3, 0.1), b(0.5, 0.2), cc(0.6, -0.1), d(0.45, 0.3);
    auto one = [](const std::vector<cplx>&) { return ScaledComplex(1.0); };
    cplx expected = oracle::theta({a * x, b * x, cc * x, d * x}, c.p) / oracle::theta(x * x, c.p) +
                    oracle::theta({a / x, b / x, cc / x, d / x}, c.p) / oracle::theta(1.0 / (x * x), c.p);
    EXPECT_LT(rel_err(difference_operator(one, {x}, a, b, cc, d, std::sqrt(c.q), c).to_complex(), expected), 1e-13);
}

TEST(Binomial, EmptyLowerPartitionIsOne) {
    Context c = ctx();
    for (const auto& lam : partitions_in_box(2, 2))
        EXPECT_LT(rel_err(elliptic_binomial(lam, Partition(), 0.3, 0.45, c).to_complex(), 1.0), 1e-13) << lam.to_string();
}

TEST(Binomial, VanishesUnlessContained) {
    Context c = ctx();
    EXPECT_TRUE(elliptic_binomial(Partition({1}), Partition({2}), 0.3, 0.45, c).is_zero());
    EXPECT_TRUE(elliptic_binomial(Partition({2}), Partition({1, 1}), 0.3, 0.45, c).is_zero());
}

TEST(Binomial, DiagonalClosedForm) {
    Context c = ctx();
    const Partition lam({2, 1});
    const cplx a(0.35, 0.1), b(0.6, -0.2), pq = c.p * c.q;
    cplx closed = fac(1.0 / b, lam, c) * fac(pq * a / b, lam, c) / (fac(b, lam, c) * fac(pq * a, lam, c)) *
                  oracle::c_plus(a, lam, c.p, c.q, c.t) / oracle::c_plus(a / b, lam, c.p, c.q, c.t);
    EXPECT_LT(rel_err(elliptic_binomial(lam, lam, a, b, c).to_complex(), closed), 1e-11);
}

TEST(Binomial, IndependentOfWorkingRank) {
    Context c = ctx();
    const cplx a(0.35, 0.1), b(0.6, -0.2);
    for (const auto& [lam, mu] : {std::pair{Partition({2, 1}), Partition({1})}, std::pair{Partition({2, 2}), Partition({2})},
                                  std::pair{Partition({1, 1}), Partition({1})}}) {
        ScaledComplex low = elliptic_binomial(lam, mu, a, b, c, lam.length());
        ScaledComplex high = elliptic_binomial(lam, mu, a, b, c, lam.length() + 2);
        EXPECT_LT(relative_residual(low, high), 1e-11) << lam.to_string() << " " << mu.to_string();
    }
}

TEST(BiorthogonalFunction, EmptyPartitionIsOne) {
    Context c = ctx();
    BCParams P{0.3, 0.4, 0.5, 0.6, 0.7, 0.0};
    P.v = c.p * c.q / (P.a * P.b * P.c * P.d * P.u);
    EXPECT_LT(rel_err(r_tilde(Partition(), {cplx(0.8, 0.1)}, P, c).to_complex(), 1.0), 1e-14);
}

TEST(GridPoint, Components) {
    Context c = ctx();
    auto x = grid_point(0.3, Partition({2, 1}), 3, c);
    ASSERT_EQ(x.size(), 3u);
    EXPECT_LT(rel_err(x[0], 0.3 * c.q * c.q * c.t * c.t), 1e-15);
    EXPECT_LT(rel_err(x[1], 0.3 * c.q * c.t), 1e-15);
    EXPECT_LT(rel_err(x[2], 0.3), 1e-15);
}
