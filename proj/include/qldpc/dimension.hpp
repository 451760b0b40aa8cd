#pragma once

// Symmetry-class decomposition of the tiled codes and the independent
// logical-qubit counts: the unconditional rank count, the class-sum count,
// and its symmetric rewriting. The rank value is authoritative; the class
// counts are cross-checks of the decomposition bookkeeping.

#include "qldpc/classical.hpp"
#include "qldpc/construct.hpp"

#include <optional>

namespace qldpc {

struct DecompositionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SymmetryClass {
    BinPoly p;          // the class polynomial p_a^m (or x^c-1 for the residual)
    BinPoly base;       // p_a (equal to p for the residual class)
    std::size_t power = 1;
    std::size_t k0 = 0; // deg p_a; 1 for the residual class
    std::size_t k1 = 0, k2 = 0;   // class dims of ker H1 / ker H2
    std::size_t kt1 = 0, kt2 = 0; // class dims of ker ~H1 / ker ~H2
};

struct SymmetryDecomp {
    std::vector<SymmetryClass> classes; // prime powers first, residual last
    std::size_t k1 = 0, k2 = 0, kt1 = 0, kt2 = 0; // totals
    long s1 = 0, s2 = 0;                          // n_i - r_i
};

inline SymmetryDecomp symmetry_decompose(const HyperbicycleSpec& spec) {
    spec.validate();
    TiledMatrices t = tiled_matrices(spec);
    Factorization fac = factor_xc_minus_1(spec.c);
    ClassDims d1 = class_dims(t.h1, spec.c, BlockAxis::Left, fac);
    ClassDims d2 = class_dims(t.h2, spec.c, BlockAxis::Right, fac);
    ClassDims dt1 = class_dims(t.ht1, spec.c, BlockAxis::Left, fac);
    ClassDims dt2 = class_dims(t.ht2, spec.c, BlockAxis::Right, fac);

    SymmetryDecomp out;
    out.k1 = d1.k; out.k2 = d2.k; out.kt1 = dt1.k; out.kt2 = dt2.k;
    out.s1 = static_cast<long>(spec.n1()) - static_cast<long>(spec.r1());
    out.s2 = static_cast<long>(spec.n2()) - static_cast<long>(spec.r2());
    // Transposition dualizes the block-shift action, so the transposed
    // codes' class of the reciprocal polynomial is the partner of a given
    // class (indistinguishable when every factor is self-reciprocal).
    auto recip_index = [&](std::size_t i) {
        BinPoly rbase = d1.classes[i].base.reversed();
        for (std::size_t j = 0; j < d1.classes.size(); ++j)
            if (d1.classes[j].base == rbase && d1.classes[j].power == d1.classes[i].power)
                return j;
        throw std::logic_error("symmetry_decompose: reciprocal factor missing");
    };
    for (std::size_t i = 0; i < d1.classes.size(); ++i) {
        SymmetryClass c;
        c.base = d1.classes[i].base;
        c.power = d1.classes[i].power;
        c.p = BinPoly::one();
        for (std::size_t m = 0; m < c.power; ++m) c.p = c.p * c.base;
        c.k0 = d1.classes[i].k0;
        c.k1 = d1.classes[i].dim;
        c.k2 = d2.classes[i].dim;
        std::size_t j = recip_index(i);
        c.kt1 = dt1.classes[j].dim;
        c.kt2 = dt2.classes[j].dim;
        out.classes.push_back(std::move(c));
    }
    SymmetryClass resid;
    resid.p = BinPoly::x_pow_minus_1(spec.c);
    resid.base = resid.p;
    resid.k0 = 1;
    resid.k1 = d1.residual;
    resid.k2 = d2.residual;
    resid.kt1 = dt1.residual;
    resid.kt2 = dt2.residual;
    out.classes.push_back(std::move(resid));
    return out;
}

struct KReport {
    long k_rank = 0;
    std::optional<long> k_class_sum;  // 2 sum k1 k2 / k0 - k1 s2 - k2 s1
    std::optional<long> k_symmetric_form;   // sum (k1 kt2 + k2 kt1) / k0
    std::size_t rank_gx = 0, rank_gz = 0;
    std::optional<SymmetryDecomp> decomp;
    bool mismatch = false;
};

namespace detail {
inline long class_product_sum(const SymmetryDecomp& d,
                              std::size_t SymmetryClass::*x, std::size_t SymmetryClass::*y) {
    long sum = 0;
    for (const auto& c : d.classes) {
        std::size_t num = (c.*x) * (c.*y);
        if (c.k0 == 0) continue;
        if (num % c.k0 != 0)
            throw DecompositionError("class dimension product not divisible by k0");
        sum += static_cast<long>(num / c.k0);
    }
    return sum;
}
} // namespace detail

inline KReport count_logical_qubits(const CssCode& code,
                                    const std::optional<HyperbicycleSpec>& spec = std::nullopt) {
    KReport rep;
    rep.rank_gx = rank(code.gx);
    rep.rank_gz = rank(code.gz);
    rep.k_rank = static_cast<long>(code.n) - static_cast<long>(rep.rank_gx) -
                 static_cast<long>(rep.rank_gz);
    if (spec) {
        SymmetryDecomp d = symmetry_decompose(*spec);
        long sum12 = detail::class_product_sum(d, &SymmetryClass::k1, &SymmetryClass::k2);
        long sum1t2 = detail::class_product_sum(d, &SymmetryClass::k1, &SymmetryClass::kt2);
        long sum2t1 = detail::class_product_sum(d, &SymmetryClass::k2, &SymmetryClass::kt1);
        rep.k_class_sum = 2 * sum12 - static_cast<long>(d.k1) * d.s2 -
                                static_cast<long>(d.k2) * d.s1;
        rep.k_symmetric_form = sum1t2 + sum2t1;
        rep.decomp = std::move(d);
        rep.mismatch = (*rep.k_class_sum != rep.k_rank) ||
                       (*rep.k_symmetric_form != rep.k_rank);
    }
    return rep;
}

// Predicted generator ranks from the class sums, for comparison against the
// directly computed ranks.
struct RankPrediction {
    std::size_t rank_gx = 0, rank_gz = 0;
};

inline RankPrediction rank_formula_check(const HyperbicycleSpec& spec) {
    SymmetryDecomp d = symmetry_decompose(spec);
    long sum12 = detail::class_product_sum(d, &SymmetryClass::k1, &SymmetryClass::k2);
    long sumt12 = detail::class_product_sum(d, &SymmetryClass::kt1, &SymmetryClass::kt2);
    RankPrediction out;
    out.rank_gx = spec.r1() * spec.r2() * spec.c - static_cast<std::size_t>(sumt12);
    out.rank_gz = spec.n1() * spec.n2() * spec.c - static_cast<std::size_t>(sum12);
    return out;
}

// Logical count of the symmetric non-CSS reduction: K = sum k1 k2 / k0,
// cross-checked against N - rank H. Requires H1 = ~H1 and H2 = ~H2.
struct NonCssKReport {
    long k_rank = 0;
    long k_classes = 0;
    bool mismatch = false;
};

inline NonCssKReport noncss_K(const NonCssCode& code, const HyperbicycleSpec& spec) {
    TiledMatrices t = tiled_matrices(spec);
    if (!(t.h1 == t.ht1) || !(t.h2 == t.ht2))
        throw ConstructionError("noncss_K: requires H1 = ~H1 and H2 = ~H2");
    SymmetryDecomp d = symmetry_decompose(spec);
    NonCssKReport rep;
    rep.k_classes = detail::class_product_sum(d, &SymmetryClass::k1, &SymmetryClass::k2);
    rep.k_rank = static_cast<long>(code.n) - static_cast<long>(rank(code.h));
    rep.mismatch = rep.k_classes != rep.k_rank;
    return rep;
}

} // namespace qldpc
