#pragma once

// Classical binary code machinery: circulants, code parameters with honest
// distance intervals, block-symmetry subset distances, and random regular
// LDPC parity checks.

#include "qldpc/gf2.hpp"
#include "qldpc/lowweight.hpp"
#include "qldpc/poly.hpp"

#include <optional>
#include <random>

namespace qldpc {

// Distance value: an interval [lo, hi] with exactness derived, or infinity
// (the k = 0 convention).
struct Dist {
    bool infinite = false;
    std::size_t lo = 0, hi = 0;

    static Dist exact(std::size_t w) { return {false, w, w}; }
    static Dist interval(std::size_t lo, std::size_t hi) { return {false, lo, hi}; }
    static Dist inf() { return {true, 0, 0}; }

    bool is_exact() const { return !infinite && lo == hi; }

    std::string to_string() const {
        if (infinite) return "inf";
        if (is_exact()) return std::to_string(lo);
        return "[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
    }

    friend bool operator==(const Dist& a, const Dist& b) {
        if (a.infinite != b.infinite) return false;
        return a.infinite || (a.lo == b.lo && a.hi == b.hi);
    }
};

struct ClassicalParams {
    std::size_t n = 0;
    std::size_t k = 0;
    Dist d;
};

// n x n circulant of p: row 0 holds the coefficients of p mod x^n-1, each
// subsequent row is the cyclic right-shift of the previous one.
inline BinMat circulant(std::size_t n, const BinPoly& p) {
    BinPoly q = p.mod_xn_minus_1(n);
    BinMat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        if (q.coeff(i))
            for (std::size_t k = 0; k < n; ++k) m.set(k, (i + k) % n, true);
    return m;
}

namespace detail {

// min weight over all nonzero combinations of the given basis rows (2^k - 1
// codewords, Gray-code sweep)
inline std::pair<std::size_t, BinVec> min_weight_exhaustive(const BinMat& basis) {
    std::size_t k = basis.rows();
    BinVec acc(basis.cols());
    std::size_t best = basis.cols() + 1;
    BinVec best_vec(basis.cols());
    std::uint64_t gray = 0;
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << k); ++m) {
        std::uint64_t g = m ^ (m >> 1);
        std::uint64_t diff = g ^ gray;
        gray = g;
        acc.xor_with(basis.row(static_cast<std::size_t>(std::countr_zero(diff))));
        std::size_t w = acc.weight();
        if (w && w < best) {
            best = w;
            best_vec = acc;
        }
    }
    return {best, best_vec};
}

} // namespace detail

// Parameters of the code ker H. Exact distance by full codeword enumeration
// when k <= enum_cap; otherwise a proved lower bound from weight-capped
// enumeration and a sampled upper bound, reported as an interval.
inline ClassicalParams classical_params(const BinMat& H, std::size_t enum_cap = 26,
                                        std::uint64_t seed = 12345) {
    ClassicalParams out;
    out.n = H.cols();
    BinMat kb = kernel_basis(H);
    out.k = kb.rows();
    if (out.k == 0) {
        out.d = Dist::inf();
        return out;
    }
    if (out.k <= enum_cap) {
        out.d = Dist::exact(detail::min_weight_exhaustive(kb).first);
        return out;
    }
    // lower bound: weight-capped exhaustive scan
    LowWeightOutcome lw = low_weight_kernel_vector(H, H.cols(), MitmBudget{},
                                                   [](const BinVec&) { return true; });
    if (lw.hit) {
        out.d = Dist::exact(lw.hit->weight);
        return out;
    }
    // upper bound: random sums of kernel rows
    std::mt19937_64 rng(seed);
    std::size_t best = H.cols();
    for (int it = 0; it < 4000; ++it) {
        BinVec v(H.cols());
        std::size_t terms = 1 + rng() % 4;
        for (std::size_t t = 0; t < terms; ++t) v.xor_with(kb.row(rng() % kb.rows()));
        std::size_t w = v.weight();
        if (w && w < best) best = w;
    }
    out.d = Dist::interval(lw.clean_below, best);
    return out;
}

// min weight of the code spanned by the rows of G (the generator-matrix
// codes of the premise checks); infinity for the zero code
inline Dist min_weight_of_rowspace(const BinMat& G, std::size_t enum_cap = 26) {
    Rref R = rref(G);
    if (R.pivots.empty()) return Dist::inf();
    if (R.pivots.size() <= enum_cap)
        return Dist::exact(detail::min_weight_exhaustive(R.mat).first);
    BinMat H = kernel_basis(G); // rowspace(G) = ker(kernel_basis(G))
    LowWeightOutcome lw =
        low_weight_kernel_vector(H, G.cols(), MitmBudget{}, [](const BinVec&) { return true; });
    if (lw.hit) return Dist::exact(lw.hit->weight);
    std::size_t best = G.cols();
    for (std::size_t i = 0; i < R.mat.rows(); ++i) best = std::min(best, R.mat.row_weight(i));
    return Dist::interval(lw.clean_below, best);
}

// ---- block-symmetry machinery for quasicyclic codes ----

enum class BlockAxis { Left, Right }; // which Kronecker slot carries the c blocks

// q(I_1) (x) E_blk (Left) or E_blk (x) q(I_1) (Right); q(I_1) has row k set
// at column (k+i) mod c for every monomial x^i of q.
inline BinMat block_annihilator_op(std::size_t c, const BinPoly& q, BlockAxis axis,
                                   std::size_t blk) {
    BinMat qi(c, c);
    for (std::size_t i = 0; i < static_cast<std::size_t>(q.degree() + 1); ++i)
        if (q.coeff(i))
            for (std::size_t k = 0; k < c; ++k)
                qi.set(k, (k + i) % c, qi.get(k, (k + i) % c) ^ true);
    BinMat E = BinMat::identity(blk);
    return axis == BlockAxis::Left ? kron(qi, E) : kron(E, qi);
}

// dim(ker H  ∩  ker Op)
inline std::size_t intersection_kernel_dim(const BinMat& H, const BinMat& Op) {
    return H.cols() - rank(vstack(H, Op));
}

// Per-class dimensions of ker H under the block-shift symmetry: for each
// prime power p_a^m dividing x^c-1 the chain difference
// A(m) - A(m-1), A(m) = dim(ker H ∩ ker(p_a^m(I_1) (x) E)). The residual
// (assigned to the formal x^c-1 class) is k minus the chain total.
struct ClassDims {
    struct Entry {
        BinPoly base;       // irreducible p_a
        std::size_t power;  // m
        std::size_t k0;     // deg p_a
        std::size_t dim;    // k^(p_a^m)
    };
    std::vector<Entry> classes;
    std::size_t k = 0;
    std::size_t residual = 0; // formal x^c-1 class (k0 = 1)
};

inline ClassDims class_dims(const BinMat& H, std::size_t c, BlockAxis axis,
                            const Factorization& fac) {
    std::size_t blk = (axis == BlockAxis::Left ? H.cols() / c : H.cols() / c);
    if (H.cols() % c != 0) throw DimensionError("class_dims: columns not divisible by c");
    ClassDims out;
    out.k = H.cols() - rank(H);
    std::size_t total = 0;
    for (const auto& [pa, mult] : fac.base) {
        std::size_t prev = 0;
        BinPoly q = BinPoly::one();
        for (std::size_t m = 1; m <= mult; ++m) {
            q = q * pa;
            BinMat op = block_annihilator_op(c, q, axis, blk);
            std::size_t A = intersection_kernel_dim(H, op);
            out.classes.push_back({pa, m, static_cast<std::size_t>(pa.degree()), A - prev});
            total += A - prev;
            prev = A;
        }
    }
    out.residual = out.k - total;
    return out;
}

// Subset distance of Eq.-style symmetry classes: minimum weight over
// codewords that are exactly in the class of p, or contain one (i.e. lie
// outside the annihilated space entirely). Infinity when the exact class is
// empty. p must be a prime power dividing x^c-1, or x^c-1 itself (the
// no-symmetry class).
inline Dist subset_distance(const BinMat& H, std::size_t c, const BinPoly& p,
                            BlockAxis axis = BlockAxis::Left, std::size_t enum_cap = 26,
                            std::uint64_t seed = 12345) {
    if (H.cols() % c != 0) throw DimensionError("subset_distance: columns not divisible by c");
    std::size_t blk = H.cols() / c;
    BinPoly xc1 = BinPoly::x_pow_minus_1(c);
    if (!divides(p, xc1)) throw std::invalid_argument("subset_distance: p does not divide x^c-1");
    Factorization fac = factor_xc_minus_1(c);

    BinMat kb = kernel_basis(H);
    std::size_t k = kb.rows();
    if (k == 0) return Dist::inf();

    // identify p: prime power, the full x^c-1, or a composite proper divisor
    // (whose exact class is empty by the classification).
    std::optional<std::pair<BinPoly, std::size_t>> prime_power; // (base, m)
    for (const auto& [pa, mult] : fac.base) {
        BinPoly q = BinPoly::one();
        for (std::size_t m = 1; m <= mult; ++m) {
            q = q * pa;
            if (q == p) prime_power = {pa, m};
        }
    }
    bool is_full = (p == xc1) && !prime_power;
    if (!prime_power && !is_full) return Dist::inf();

    // annihilator operators
    std::vector<BinMat> top_ops; // p_a^{mult} per base, for the purity test
    for (const auto& [pa, mult] : fac.base) {
        BinPoly q = BinPoly::one();
        for (std::size_t m = 0; m < mult; ++m) q = q * pa;
        top_ops.push_back(block_annihilator_op(c, q, axis, blk));
    }
    std::optional<BinMat> op_p, op_lower;
    if (prime_power) {
        auto [pa, m] = *prime_power;
        BinPoly q = BinPoly::one();
        for (std::size_t i = 0; i < m; ++i) q = q * pa;
        op_p = block_annihilator_op(c, q, axis, blk);
        if (m > 1) op_lower = block_annihilator_op(c, poly_div(q, pa), axis, blk);
    }

    auto annihilated = [&](const BinMat& op, const BinVec& w) { return mat_vec(op, w).none(); };
    auto exact_class = [&](const BinVec& w) {
        if (prime_power)
            return annihilated(*op_p, w) && (!op_lower || !annihilated(*op_lower, w));
        // no-symmetry class: not a pure component of any base
        for (const auto& op : top_ops)
            if (annihilated(op, w)) return false;
        return true;
    };
    auto in_subset = [&](const BinVec& w) {
        if (exact_class(w)) return true;
        if (is_full) return false;              // the full class has no "outside"
        return !annihilated(*op_p, w);          // contains an exact-class part
    };

    // is the exact class nonempty?
    bool class_nonempty = false;
    if (prime_power) {
        ClassDims cd = class_dims(H, c, axis, fac);
        for (const auto& e : cd.classes)
            if (e.base == prime_power->first && e.power == prime_power->second && e.dim > 0)
                class_nonempty = true;
    } else {
        ClassDims cd = class_dims(H, c, axis, fac);
        class_nonempty = cd.residual > 0;
    }
    if (!class_nonempty) return Dist::inf();

    if (k <= enum_cap) {
        BinVec acc(H.cols());
        std::uint64_t gray = 0;
        std::size_t best = H.cols() + 1;
        for (std::uint64_t m = 1; m < (std::uint64_t{1} << k); ++m) {
            std::uint64_t g = m ^ (m >> 1);
            acc.xor_with(kb.row(static_cast<std::size_t>(std::countr_zero(g ^ gray))));
            gray = g;
            std::size_t w = acc.weight();
            if (w < best && in_subset(acc)) best = w;
        }
        return Dist::exact(best);
    }
    // sampled upper bound
    std::mt19937_64 rng(seed);
    std::size_t best = H.cols() + 1;
    for (int it = 0; it < 20000; ++it) {
        BinVec v(H.cols());
        std::size_t terms = 1 + rng() % 3;
        for (std::size_t t = 0; t < terms; ++t) v.xor_with(kb.row(rng() % k));
        if (v.any() && in_subset(v)) best = std::min(best, v.weight());
    }
    return Dist::interval(1, best);
}

// ---- random (h,v)-limited regular LDPC parity check ----

struct LdpcShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// column weight h, row weight v, h < v; returns a full-row-rank
// (h,v)-limited matrix built by permuted edge-stub matching with dependent
// rows removed. Deterministic for a given seed.
inline BinMat random_regular_ldpc(std::size_t h, std::size_t v, std::size_t n_cols,
                                  std::uint64_t seed) {
    if (h >= v) throw LdpcShapeError("random_regular_ldpc: requires h < v");
    if ((h * n_cols) % v != 0)
        throw LdpcShapeError("random_regular_ldpc: h*n_cols must be divisible by v");
    std::size_t n_rows = h * n_cols / v;
    if (n_rows == 0) throw LdpcShapeError("random_regular_ldpc: no rows");
    std::vector<std::size_t> stubs(h * n_cols);
    for (std::size_t e = 0; e < stubs.size(); ++e) stubs[e] = e / h; // column of each stub
    std::mt19937_64 rng(seed);
    std::shuffle(stubs.begin(), stubs.end(), rng);
    BinMat m(n_rows, n_cols);
    for (std::size_t e = 0; e < stubs.size(); ++e)
        m.set(e / v, stubs[e], true); // multi-edges collapse; weights stay limited
    // drop linearly dependent rows (keep the earliest independent set)
    RowBasis basis(n_cols);
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < n_rows; ++i)
        if (basis.insert(m.row(i))) keep.push_back(i);
    BinMat out(keep.size(), n_cols);
    for (std::size_t i = 0; i < keep.size(); ++i) out.set_row(i, m.row(keep[i]));
    return out;
}

} // namespace qldpc
