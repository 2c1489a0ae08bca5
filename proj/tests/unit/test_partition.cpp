#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "ellhyp/elliptic.hpp"
#include "ellhyp/partition.hpp"
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

Partition random_partition(std::mt19937_64& g, int max_len, int max_part) {
    std::uniform_int_distribution<int> len(0, max_len), part(1, max_part);
    std::vector<int> parts;
    for (int i = len(g); i > 0; --i) parts.push_back(part(g));
    std::sort(parts.rbegin(), parts.rend());
    return Partition(parts);
}

cplx draw(std::mt19937_64& g, double lo, double hi) {
    std::uniform_real_distribution<double> r(lo, hi), ph(0.0, 6.283185307179586);
    return std::polar(r(g), ph(g));
}

}  // namespace

TEST(Partition, ParseAndPrint) {
    EXPECT_EQ(Partition::parse("[3,1]").to_string(), "[3,1]");
    EXPECT_EQ(Partition::parse("[]").to_string(), "[]");
    EXPECT_EQ(Partition::parse("[2,2,0]"), Partition({2, 2}));
    EXPECT_ANY_THROW(Partition::parse("[1,2]"));
}

TEST(Partition, Conjugate) {
    EXPECT_EQ(Partition().conjugate(), Partition());
    EXPECT_EQ(Partition({2, 1}).conjugate(), Partition({2, 1}));
    EXPECT_EQ(Partition({3, 1}).conjugate(), Partition({2, 1, 1}));
    std::mt19937_64 g(21);
    for (int k = 0; k < 30; ++k) {
        Partition lam = random_partition(g, 5, 6);
        EXPECT_EQ(lam.conjugate().conjugate(), lam);
    }
}

TEST(Partition, NStatisticBothFormulas) {
    EXPECT_EQ(Partition().n_stat(), 0);
    EXPECT_EQ(Partition({2, 2}).n_stat(), 2);
    std::mt19937_64 g(22);
    for (int k = 0; k < 40; ++k) {
        Partition lam = random_partition(g, 5, 4);
        Partition lc = lam.conjugate();
        long long cols = 0;
        for (int j = 1; j <= lc.length(); ++j) cols += static_cast<long long>(lc(j)) * (lc(j) - 1) / 2;
        EXPECT_EQ(lam.n_stat(), cols) << lam.to_string();
    }
}

TEST(Partition, Interlacing) {
    EXPECT_TRUE(Partition().interlaces(Partition()));
    EXPECT_TRUE(Partition({3, 1}).interlaces(Partition({2, 1})));
    EXPECT_FALSE(Partition({3, 1}).interlaces(Partition({3, 2})));
    for (const auto& lam : partitions_in_box(3, 3))
        for (const auto& mu : interlaced_below(lam)) {
            EXPECT_TRUE(lam.interlaces(mu));
            EXPECT_TRUE(lam.contains(mu));
        }
}

TEST(Partition, BoxEnumeration) {
    // C(N + n, n) partitions in the box, each with l <= n and λ_1 <= N
    EXPECT_EQ(partitions_in_box(2, 2).size(), 6u);
    EXPECT_EQ(partitions_in_box(3, 2).size(), 10u);
    EXPECT_EQ(partitions_in_box(2, 3).size(), 10u);
    for (const auto& lam : partitions_in_box(2, 3)) {
        EXPECT_LE(lam.length(), 3);
        EXPECT_LE(lam(1), 2);
    }
    auto box = partitions_in_box(2, 2);
    EXPECT_EQ(box.front(), Partition({2, 2}));
    EXPECT_EQ(box.back(), Partition());
    EXPECT_EQ(rectangle(3, 2), Partition({3, 3}));
    EXPECT_EQ(contained_in(Partition({2, 1})).size(), 5u);
}

TEST(PartitionFactorial, CellFormEqualsRowForm) {
    std::mt19937_64 g(23);
    for (int k = 0; k < 25; ++k) {
        cplx p = draw(g, 0.05, 0.4), q = draw(g, 0.3, 0.9), t = draw(g, 0.3, 0.9), z = draw(g, 0.3, 2.0);
        Partition lam = random_partition(g, 4, 3);
        cplx lib = partition_factorial(z, lam, nomes(p, q, t)).to_complex();
        EXPECT_LT(rel_err(lib, oracle::cell_factorial(z, lam, p, q, t)), 1e-12) << lam.to_string();
        EXPECT_LT(rel_err(lib, oracle::row_factorial(z, lam, p, q, t)), 1e-12) << lam.to_string();
    }
}

TEST(PartitionFactorial, EmptyAndSingleRow) {
    Context c = nomes(0.2, 0.4, 0.3);
    EXPECT_EQ(partition_factorial(0.7, Partition(), c).to_complex(), 1.0);
    EXPECT_LT(relative_residual(partition_factorial(0.7, Partition({3}), c), shifted_factorial(0.7, 3, c)), 1e-15);
}

TEST(PartitionFactorial, QuasiPeriodicity) {
    std::mt19937_64 g(24);
    for (int trial = 0; trial < 20; ++trial) {
        cplx p = draw(g, 0.05, 0.4), q = draw(g, 0.3, 0.9), t = draw(g, 0.3, 0.9), z = draw(g, 0.4, 1.5);
        Partition lam = random_partition(g, 3, 3);
        Context c = nomes(p, q, t);
        for (int k : {1, 2}) {
            cplx base = oracle::ipow(-z, -lam.weight()) * oracle::ipow(q, -static_cast<int>(lam.conjugate().n_stat())) *
                        oracle::ipow(t, static_cast<int>(lam.n_stat()));
            cplx factor = oracle::ipow(base, k) * oracle::ipow(p, -(k * (k - 1) / 2) * lam.weight());
            ScaledComplex lhs = partition_factorial(oracle::ipow(p, k) * z, lam, c);
            ScaledComplex rhs = partition_factorial(z, lam, c) * factor;
            EXPECT_LT(relative_residual(lhs, rhs), 1e-11) << lam.to_string() << " k=" << k;
        }
    }
}

TEST(CellProducts, CMinusCPlus) {
    Context c = nomes(0.15, cplx(0.4, 0.2), cplx(0.6, -0.1));
    const cplx z(0.8, 0.3);
    EXPECT_EQ(c_minus(z, Partition(), c).to_complex(), 1.0);
    EXPECT_EQ(c_plus(z, Partition(), c).to_complex(), 1.0);
    EXPECT_LT(rel_err(c_minus(z, Partition({1}), c).to_complex(), oracle::theta(z, c.p)), 1e-14);
    // the single cell sits at q^{1} t^{0}
    EXPECT_LT(rel_err(c_plus(z, Partition({1}), c).to_complex(), oracle::theta(z * c.q, c.p)), 1e-14);
    for (const auto& lam : {Partition({2, 1}), Partition({3, 1, 1}), Partition({2, 2})}) {
        EXPECT_LT(rel_err(c_minus(z, lam, c).to_complex(), oracle::c_minus(z, lam, c.p, c.q, c.t)), 1e-13);
        EXPECT_LT(rel_err(c_plus(z, lam, c).to_complex(), oracle::c_plus(z, lam, c.p, c.q, c.t)), 1e-13);
    }
}

TEST(DeltaLambda, EmptyPartitionIsOne) {
    Context c = nomes(0.2, 0.5, 0.4);
    EXPECT_EQ(delta_lambda(0.3, {0.5, 0.6}, Partition(), c).to_complex(), 1.0);
}

TEST(DeltaLambda, CompactFormEqualsExplicitForm) {
    std::mt19937_64 g(25);
    for (int trial = 0; trial < 20; ++trial) {
        cplx p = draw(g, 0.05, 0.3), q = draw(g, 0.3, 0.8), t = draw(g, 0.3, 0.8), a = draw(g, 0.3, 0.8);
        std::vector<cplx> bs{draw(g, 0.3, 0.9), draw(g, 0.3, 0.9), draw(g, 0.3, 0.9)};
        Partition lam = random_partition(g, 3, 2);
        cplx lib = delta_lambda(a, bs, lam, nomes(p, q, t)).to_complex();
        int n = std::max(1, lam.length());
        EXPECT_LT(rel_err(lib, oracle::delta_explicit(a, bs, lam, n, p, q, t)), 1e-11) << lam.to_string();
        EXPECT_LT(rel_err(lib, oracle::delta_explicit(a, bs, lam, n + 2, p, q, t)), 1e-11) << lam.to_string();
    }
}
