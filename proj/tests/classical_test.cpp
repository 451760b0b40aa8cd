#include "qldpc/classical.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace qldpc;

namespace {
BinPoly P(const std::string& s) { return parse_bin_poly(s); }
} // namespace

TEST(Classical, CirculantExamples) {
    BinMat m = circulant(4, P("1+x^2"));
    const char* rows[4] = {"1010", "0101", "1010", "0101"};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) EXPECT_EQ(m.get(i, j), rows[i][j] == '1');

    BinMat m3 = circulant(3, P("1+x"));
    const char* rows3[3] = {"110", "011", "101"};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) EXPECT_EQ(m3.get(i, j), rows3[i][j] == '1');

    EXPECT_EQ(circulant(5, P("1")), BinMat::identity(5));
}

TEST(Classical, ParamsExamples) {
    ClassicalParams rep = classical_params(circulant(5, P("1+x")));
    EXPECT_EQ(rep.n, 5u);
    EXPECT_EQ(rep.k, 1u);
    EXPECT_EQ(rep.d, Dist::exact(5));

    ClassicalParams c1548 = classical_params(circulant(15, P("1+x^3+x^4")));
    EXPECT_EQ(c1548.k, 4u);
    EXPECT_EQ(c1548.d, Dist::exact(8));

    ClassicalParams c1557 = classical_params(circulant(15, P("1+x+x^3+x^5")));
    EXPECT_EQ(c1557.k, 5u);
    EXPECT_EQ(c1557.d, Dist::exact(7));

    ClassicalParams full = classical_params(BinMat::identity(4));
    EXPECT_EQ(full.k, 0u);
    EXPECT_TRUE(full.d.infinite);
}

TEST(Classical, KPlusRankIsN) {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 25; ++t) {
        std::size_t r = 1 + rng() % 8, n = 1 + rng() % 12;
        BinMat H(r, n);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (rng() & 1) H.set(i, j, true);
        ClassicalParams p = classical_params(H);
        EXPECT_EQ(p.k + rank(H), n);
    }
}

TEST(Classical, CyclicDimensionMatchesDegree) {
    // for ker circulant(n, h) with h | x^n-1: k = deg h
    std::mt19937_64 rng(77);
    int done = 0;
    for (std::size_t n : {3u, 5u, 7u, 9u, 15u, 21u}) {
        Factorization f = factor_xc_minus_1(n);
        for (int t = 0; t < 10; ++t) {
            BinPoly h = BinPoly::one();
            for (const auto& [p, m] : f.base)
                if (rng() & 1) h = h * p;
            if (h.degree() == 0) continue;
            ClassicalParams rep = classical_params(circulant(n, h));
            EXPECT_EQ(static_cast<long>(rep.k), h.degree()) << "n=" << n;
            ++done;
        }
    }
    EXPECT_GE(done, 50);
}

TEST(Classical, SubsetDistanceExamples) {
    // fully symmetric repetition-type code: single class, equals d
    BinMat h6 = circulant(6, P("1+x"));
    Dist d = subset_distance(h6, 2, P("1+x"), BlockAxis::Left);
    EXPECT_EQ(d, Dist::exact(6));

    // k = 0 code
    Dist dinf = subset_distance(BinMat::identity(6), 3, P("1+x"));
    EXPECT_TRUE(dinf.infinite);

    // composite proper divisor class (always empty): 1+x^3 = (1+x)(1+x+x^2)
    BinMat h12 = circulant(12, P("1+x"));
    Dist dempty = subset_distance(h12, 6, P("1+x^3"), BlockAxis::Left);
    EXPECT_TRUE(dempty.infinite);

    EXPECT_THROW(subset_distance(h6, 2, P("1+x+x^2")), std::invalid_argument);
}

TEST(Classical, SubsetDistanceMinOverClassesIsD) {
    std::mt19937_64 rng(4242);
    for (int t = 0; t < 20; ++t) {
        std::size_t c = 2 + rng() % 5;         // 2..6
        std::size_t blk = 1 + rng() % 3;       // block size
        std::size_t n = c * blk;
        BinMat H(1 + rng() % (n - 1 ? n - 1 : 1), n);
        for (std::size_t i = 0; i < H.rows(); ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (rng() % 3 == 0) H.set(i, j, true);
        ClassicalParams p = classical_params(H);
        if (p.k == 0 || p.k > 12) continue;
        Factorization fac = factor_xc_minus_1(c);
        std::size_t best = std::size_t(-1);
        for (const auto& [pa, mult] : fac.base) {
            BinPoly q = BinPoly::one();
            for (std::size_t m = 1; m <= mult; ++m) {
                q = q * pa;
                Dist dq = subset_distance(H, c, q, BlockAxis::Left);
                if (!dq.infinite) best = std::min(best, dq.hi);
            }
        }
        Dist dres = subset_distance(H, c, BinPoly::x_pow_minus_1(c), BlockAxis::Left);
        if (!dres.infinite) best = std::min(best, dres.hi);
        EXPECT_EQ(best, p.d.lo) << "c=" << c << " n=" << n;
    }
}

TEST(Classical, MinWeightOfRowspace) {
    EXPECT_TRUE(min_weight_of_rowspace(BinMat(2, 4)).infinite);
    BinMat g(2, 4);
    g.set(0, 0, true); g.set(0, 1, true);
    g.set(1, 1, true); g.set(1, 2, true); g.set(1, 3, true);
    EXPECT_EQ(min_weight_of_rowspace(g), Dist::exact(2));
}

TEST(Classical, RandomRegularLdpc) {
    BinMat m = random_regular_ldpc(2, 4, 8, 99);
    EXPECT_LE(m.rows(), 4u);
    EXPECT_EQ(m.cols(), 8u);
    EXPECT_EQ(rank(m), m.rows()); // full rank by construction
    for (std::size_t j = 0; j < m.cols(); ++j) {
        std::size_t w = 0;
        for (std::size_t i = 0; i < m.rows(); ++i) w += m.get(i, j);
        EXPECT_LE(w, 2u);
    }
    for (std::size_t i = 0; i < m.rows(); ++i) EXPECT_LE(m.row_weight(i), 4u);

    BinMat m2 = random_regular_ldpc(1, 2, 4, 5);
    EXPECT_EQ(m2.cols(), 4u);
    for (std::size_t i = 0; i < m2.rows(); ++i) EXPECT_LE(m2.row_weight(i), 2u);

    EXPECT_THROW(random_regular_ldpc(3, 3, 9, 1), LdpcShapeError);
    // determinism
    EXPECT_EQ(random_regular_ldpc(2, 4, 16, 7), random_regular_ldpc(2, 4, 16, 7));
}
