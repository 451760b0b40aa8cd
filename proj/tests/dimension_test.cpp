#include "qldpc/dimension.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

using namespace qldpc;

namespace {
BinPoly P(const std::string& s) { return parse_bin_poly(s); }

HyperbicycleSpec random_spec(std::mt19937_64& rng, std::size_t cmax = 6) {
    HyperbicycleSpec spec;
    spec.c = 1 + rng() % cmax;
    std::vector<std::size_t> chis;
    for (std::size_t x = 1; x <= spec.c; ++x)
        if (std::gcd(spec.c, x) == 1) chis.push_back(x);
    spec.chi = chis[rng() % chis.size()];
    std::size_t r1 = 1 + rng() % 3, n1 = 1 + rng() % 4;
    std::size_t r2 = 1 + rng() % 3, n2 = 1 + rng() % 4;
    for (std::size_t i = 0; i < spec.c; ++i) {
        BinMat ai(r1, n1), bi(r2, n2);
        if (rng() % 6) // occasionally leave a zero block
            for (std::size_t x = 0; x < r1; ++x)
                for (std::size_t y = 0; y < n1; ++y)
                    if (rng() & 1) ai.set(x, y, true);
        if (rng() % 6)
            for (std::size_t x = 0; x < r2; ++x)
                for (std::size_t y = 0; y < n2; ++y)
                    if (rng() & 1) bi.set(x, y, true);
        spec.a.push_back(ai);
        spec.b.push_back(bi);
    }
    return spec;
}
} // namespace

TEST(Dimension, SingleClassAtCEquals1) {
    HyperbicycleSpec spec;
    spec.c = 1;
    spec.chi = 1;
    spec.a = {circulant(3, P("1+x"))};
    spec.b = {circulant(3, P("1+x"))};
    SymmetryDecomp d = symmetry_decompose(spec);
    ASSERT_EQ(d.classes.size(), 2u); // (1+x) class + formal residual
    EXPECT_EQ(d.classes[0].k1, d.k1);
    EXPECT_EQ(d.classes[1].k1, 0u);
    EXPECT_EQ(d.k1, 1u);
}

TEST(Dimension, AllOnesKernelSitsInOnePlusXClass) {
    // c = 3, 1x1 blocks from 1+x on n = 3: kernel is all-ones
    HyperbicycleSpec spec;
    spec.c = 3;
    spec.chi = 1;
    BinPoly f = P("1+x");
    for (std::size_t i = 0; i < 3; ++i) {
        BinMat ai(1, 1), bi(1, 1);
        if (f.coeff(i)) ai.set(0, 0, true);
        if (f.coeff(i)) bi.set(0, 0, true);
        spec.a.push_back(ai);
        spec.b.push_back(bi);
    }
    SymmetryDecomp d = symmetry_decompose(spec);
    EXPECT_EQ(d.k1, 1u);
    for (const auto& cl : d.classes) {
        if (cl.base == P("1+x") && cl.power == 1)
            EXPECT_EQ(cl.k1, 1u);
        else
            EXPECT_EQ(cl.k1, 0u);
    }
}

TEST(Dimension, RepeatedInputsFullySymmetric) {
    HyperbicycleSpec spec = repeated_cyclic_inputs(P("1+x+x^2+x^4"), 7, P("1+x+x^2+x^4"), 7, 2, 1);
    SymmetryDecomp d = symmetry_decompose(spec);
    for (const auto& cl : d.classes)
        if (cl.base == P("1+x") && cl.power == 1) {
            EXPECT_EQ(cl.k1, d.k1);
            EXPECT_EQ(cl.k2, d.k2);
        }
    EXPECT_EQ(d.k1, 4u);
}

TEST(Dimension, CorpusKValues) {
    // [[450,98]]
    {
        HyperbicycleSpec spec = two_circulant_spec(P("1+x+x^3+x^7"), 15, P("1+x+x^3+x^7"), 15, 1, 1);
        CssCode code = hyperbicycle(spec);
        KReport rep = count_logical_qubits(code, spec);
        EXPECT_EQ(rep.k_rank, 98);
        EXPECT_EQ(*rep.k_class_sum, 98);
        EXPECT_EQ(*rep.k_symmetric_form, 98);
        EXPECT_FALSE(rep.mismatch);
    }
    // [[294,18]] (c = 3)
    {
        HyperbicycleSpec spec = two_circulant_spec(P("1+x+x^3"), 7, P("1+x+x^3"), 7, 3, 1);
        CssCode code = hyperbicycle(spec);
        KReport rep = count_logical_qubits(code, spec);
        EXPECT_EQ(rep.k_rank, 18);
        EXPECT_EQ(*rep.k_class_sum, 18);
        EXPECT_EQ(*rep.k_symmetric_form, 18);
    }
    // [[120,32]] for both chi (c = 15)
    for (std::size_t chi : {2u, 1u}) {
        HyperbicycleSpec spec = two_circulant_spec(P("1+x^2+x^8"), 2, P("1+x^2+x^8"), 2, 15, chi);
        CssCode code = hyperbicycle(spec);
        KReport rep = count_logical_qubits(code, spec);
        EXPECT_EQ(rep.k_rank, 32);
        EXPECT_EQ(*rep.k_class_sum, 32);
    }
    // [[126,8]] vs [[126,14]]: the chi twist changes K
    {
        HyperbicycleSpec s3 = two_circulant_spec(P("1+x+x^5"), 3, P("1+x+x^5"), 3, 7, 3);
        HyperbicycleSpec s1 = two_circulant_spec(P("1+x+x^5"), 3, P("1+x+x^5"), 3, 7, 1);
        EXPECT_EQ(count_logical_qubits(hyperbicycle(s3), s3).k_rank, 8);
        EXPECT_EQ(count_logical_qubits(hyperbicycle(s1), s1).k_rank, 14);
    }
}

TEST(Dimension, RankFormulaExamples) {
    // c = 1 toric inputs (n = 3): rank Gz = 9 - 1 = 8
    HyperbicycleSpec spec;
    spec.c = 1;
    spec.chi = 1;
    spec.a = {circulant(3, P("1+x"))};
    spec.b = {circulant(3, P("1+x"))};
    RankPrediction pred = rank_formula_check(spec);
    EXPECT_EQ(pred.rank_gz, 8u);
    CssCode code = hyperbicycle(spec);
    EXPECT_EQ(rank(code.gz), 8u);
    EXPECT_EQ(rank(code.gx), pred.rank_gx);

    // generalized bicycle [[10,2,3]]: rank Gx = rank Gz = 4
    HyperbicycleSpec gb;
    gb.c = 5;
    gb.chi = 1;
    BinPoly f1 = P("1+x^3"), f2 = P("x+x^2");
    for (std::size_t i = 0; i < 5; ++i) {
        BinMat ai(1, 1), bi(1, 1);
        if (f1.coeff(i)) ai.set(0, 0, true);
        if (f2.coeff(i)) bi.set(0, 0, true);
        gb.a.push_back(ai);
        gb.b.push_back(bi);
    }
    RankPrediction gpred = rank_formula_check(gb);
    EXPECT_EQ(gpred.rank_gx, 4u);
    EXPECT_EQ(gpred.rank_gz, 4u);
}

TEST(Dimension, PropertySuite) {
    std::mt19937_64 rng(2027);
    int zero_code_cases = 0;
    for (int t = 0; t < 40; ++t) {
        HyperbicycleSpec spec = random_spec(rng);
        CssCode code = hyperbicycle(spec);
        KReport rep = count_logical_qubits(code, spec);
        ASSERT_TRUE(rep.k_class_sum);
        EXPECT_EQ(*rep.k_class_sum, rep.k_rank) << "c=" << spec.c << " chi=" << spec.chi;
        EXPECT_EQ(*rep.k_symmetric_form, rep.k_rank);
        RankPrediction pred = rank_formula_check(spec);
        EXPECT_EQ(pred.rank_gx, rep.rank_gx);
        EXPECT_EQ(pred.rank_gz, rep.rank_gz);
        // per-class transposition identity and completeness
        const SymmetryDecomp& d = *rep.decomp;
        std::size_t tot1 = 0, tot2 = 0;
        for (std::size_t ci = 0; ci < d.classes.size(); ++ci) {
            const auto& cl = d.classes[ci];
            if (ci + 1 < d.classes.size()) { // prime-power classes
                EXPECT_EQ(static_cast<long>(cl.k1) - static_cast<long>(cl.kt1),
                          d.s1 * static_cast<long>(cl.k0));
                EXPECT_EQ(static_cast<long>(cl.k2) - static_cast<long>(cl.kt2),
                          d.s2 * static_cast<long>(cl.k0));
            }
            tot1 += cl.k1;
            tot2 += cl.k2;
        }
        EXPECT_EQ(tot1, d.k1);
        EXPECT_EQ(tot2, d.k2);
        // contrapositive of the non-empty-code consequence
        if (d.k1 == 0 && d.k2 == 0 && d.kt1 == 0 && d.kt2 == 0) {
            ++zero_code_cases;
            EXPECT_EQ(rep.k_rank, 0);
        }
    }
    // deterministic zero-kernel instance so the contrapositive is exercised
    HyperbicycleSpec zspec;
    zspec.c = 2;
    zspec.chi = 1;
    zspec.a = {BinMat::identity(2), BinMat(2, 2)};
    zspec.b = {BinMat::identity(2), BinMat(2, 2)};
    KReport zrep = count_logical_qubits(hyperbicycle(zspec), zspec);
    EXPECT_EQ(zrep.k_rank, 0);
    (void)zero_code_cases;
}

TEST(Dimension, NonCssK) {
    // [[289,81]]
    {
        BinPoly shifted = BinPoly::x_pow(4) * P("1+x+x^3+x^6+x^8+x^9");
        HyperbicycleSpec spec;
        spec.c = 1;
        spec.chi = 1;
        spec.a = {circulant(17, shifted)};
        spec.b = {circulant(17, shifted)};
        NonCssCode nc = noncss_hyperbicycle(spec);
        NonCssKReport rep = noncss_K(nc, spec);
        EXPECT_EQ(rep.k_rank, 81);
        EXPECT_EQ(rep.k_classes, 81);
        EXPECT_FALSE(rep.mismatch);
    }
    // [[5,1]] as a c = 5 one-bit-block spec
    {
        HyperbicycleSpec spec;
        spec.c = 5;
        spec.chi = 1;
        BinPoly f1 = P("x+x^4"), f2 = P("x^2+x^3");
        for (std::size_t i = 0; i < 5; ++i) {
            BinMat ai(1, 1), bi(1, 1);
            if (f1.coeff(i)) ai.set(0, 0, true);
            if (f2.coeff(i)) bi.set(0, 0, true);
            spec.a.push_back(ai);
            spec.b.push_back(bi);
        }
        NonCssCode nc = noncss_hyperbicycle(spec);
        EXPECT_EQ(nc.n, 5u);
        NonCssKReport rep = noncss_K(nc, spec);
        EXPECT_EQ(rep.k_rank, 1);
        EXPECT_EQ(rep.k_classes, 1);
    }
    // c = 2 repeated inputs: K = k1 k2
    {
        HyperbicycleSpec spec = repeated_cyclic_inputs(P("1+x^3"), 3, P("1+x^3"), 3, 2, 1);
        NonCssCode nc = noncss_hyperbicycle(spec);
        NonCssKReport rep = noncss_K(nc, spec);
        SymmetryDecomp d = symmetry_decompose(spec);
        EXPECT_EQ(rep.k_rank, static_cast<long>(d.k1 * d.k2));
        EXPECT_FALSE(rep.mismatch);
    }
}

TEST(Dimension, DivisibilityGuard) {
    // the class products are always divisible by k0 for genuine specs; the
    // guard is exercised through the public API on a healthy spec
    HyperbicycleSpec spec = two_circulant_spec(P("1+x+x^3"), 7, P("1+x+x^3"), 7, 3, 1);
    EXPECT_NO_THROW(count_logical_qubits(hyperbicycle(spec), spec));
}
