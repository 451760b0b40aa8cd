#pragma once

// Builders for the code families: hypergraph products, generalized bicycle
// codes, the block-cyclic two-sublattice ansatz that contains both, tensor
// product (Haah-type) codes, and the CSS <-> non-CSS doubling map.

#include "qldpc/classical.hpp"
#include "qldpc/gf2.hpp"
#include "qldpc/poly.hpp"

#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace qldpc {

struct ConstructionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Provenance {
    std::string family;
    std::vector<std::pair<std::string, std::string>> params;

    std::string to_string() const {
        std::string s = family;
        for (const auto& [k, v] : params) s += " " + k + "=" + v;
        return s;
    }
};

struct CssCode {
    BinMat gx, gz;
    std::size_t n = 0;
    Provenance provenance;

    CssCode() = default;
    CssCode(BinMat gx_, BinMat gz_, Provenance prov = {})
        : gx(std::move(gx_)), gz(std::move(gz_)), n(gx.cols()), provenance(std::move(prov)) {
        if (gz.cols() != n) throw ConstructionError("CssCode: column count mismatch");
        if (!mul(gx, transpose(gz)).is_zero())
            throw ConstructionError("CssCode: Gx Gz^T != 0");
    }

    std::size_t k_from_rank() const { return n - rank(gx) - rank(gz); }
};

struct NonCssCode {
    BinMat h; // (A | B), X part low columns
    std::size_t n = 0;
    Provenance provenance;

    NonCssCode() = default;
    NonCssCode(BinMat h_, Provenance prov = {})
        : h(std::move(h_)), n(h.cols() / 2), provenance(std::move(prov)) {
        if (h.cols() % 2 != 0) throw ConstructionError("NonCssCode: odd column count");
        BinMat A = x_part(), B = z_part();
        if (!add(mul(A, transpose(B)), mul(B, transpose(A))).is_zero())
            throw ConstructionError("NonCssCode: A B^T + B A^T != 0");
    }

    BinMat x_part() const {
        BinMat A(h.rows(), n);
        for (std::size_t i = 0; i < h.rows(); ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (h.get(i, j)) A.set(i, j, true);
        return A;
    }
    BinMat z_part() const {
        BinMat B(h.rows(), n);
        for (std::size_t i = 0; i < h.rows(); ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (h.get(i, n + j)) B.set(i, j, true);
        return B;
    }

    std::size_t k_from_rank() const { return n - rank(h); }
};

// ---- hypergraph product ----

inline CssCode hypergraph_product(const BinMat& h1, const BinMat& h2, Provenance prov = {}) {
    std::size_t r1 = h1.rows(), n1 = h1.cols(), r2 = h2.rows(), n2 = h2.cols();
    BinMat gx = hstack(kron(BinMat::identity(r2), h1), kron(h2, BinMat::identity(r1)));
    BinMat gz = hstack(kron(transpose(h2), BinMat::identity(n1)),
                       kron(BinMat::identity(n2), transpose(h1)));
    (void)r1;
    if (prov.family.empty()) prov.family = "hypergraph-product";
    return CssCode(std::move(gx), std::move(gz), std::move(prov));
}

// ---- generalized bicycle ----

inline CssCode generalized_bicycle(const BinPoly& f1, const BinPoly& f2, std::size_t n,
                                   Provenance prov = {}) {
    BinMat A = circulant(n, f1), B = circulant(n, f2);
    BinMat gx = hstack(A, B);
    BinMat gz = hstack(transpose(B), transpose(A));
    if (prov.family.empty()) {
        prov.family = "generalized-bicycle";
        prov.params = {{"f1", f1.to_string()}, {"f2", f2.to_string()}, {"n", std::to_string(n)}};
    }
    return CssCode(std::move(gx), std::move(gz), std::move(prov));
}

// Dimension of a generalized bicycle code by the cyclic additive canonical
// form: p = gcd(f1, x^n-1), r = gcd((x^n-1) f2 / p, x^n-1),
// K = 2 deg p + 2 deg r - 2n. The rank-based count is returned alongside.
struct BicycleK {
    long k_canonical = 0;
    long k_rank = 0;
    BinPoly p, r;
};

inline BicycleK bicycle_K(const BinPoly& f1, const BinPoly& f2, std::size_t n) {
    BicycleK out;
    BinPoly xn1 = BinPoly::x_pow_minus_1(n);
    BinPoly f1r = f1.mod_xn_minus_1(n), f2r = f2.mod_xn_minus_1(n);
    out.p = f1r.is_zero() ? xn1 : poly_gcd(f1r, xn1);
    BinPoly num = poly_div(xn1 * f2r, out.p);
    out.r = num.is_zero() ? xn1 : poly_gcd(num, xn1);
    out.k_canonical = 2 * out.p.degree() + 2 * out.r.degree() - 2 * static_cast<long>(n);
    CssCode code = generalized_bicycle(f1, f2, n);
    out.k_rank = static_cast<long>(code.k_from_rank());
    return out;
}

// ---- hyperbicycle ansatz ----

struct HyperbicycleSpec {
    std::vector<BinMat> a; // c blocks, r1 x n1
    std::vector<BinMat> b; // c blocks, r2 x n2
    std::size_t c = 0;
    std::size_t chi = 1;

    std::size_t r1() const { return a.at(0).rows(); }
    std::size_t n1() const { return a.at(0).cols(); }
    std::size_t r2() const { return b.at(0).rows(); }
    std::size_t n2() const { return b.at(0).cols(); }
    std::size_t block_length() const { return c * (r1() * n2() + r2() * n1()); }

    void validate() const {
        if (c == 0 || a.size() != c || b.size() != c)
            throw ConstructionError("HyperbicycleSpec: need exactly c blocks on each side");
        if (std::gcd(c, chi) != 1)
            throw CommensurateError(
                "HyperbicycleSpec: c and chi must be coprime (commensurate case unanalyzed)");
        for (const auto& m : a)
            if (m.rows() != r1() || m.cols() != n1())
                throw ConstructionError("HyperbicycleSpec: a blocks differ in shape");
        for (const auto& m : b)
            if (m.rows() != r2() || m.cols() != n2())
                throw ConstructionError("HyperbicycleSpec: b blocks differ in shape");
    }
};

// The four tiled matrices. The c-block cyclic layout with block rows shifted
// by chi lives in H1 (and mirrored in H2, whose block axis is the right
// Kronecker slot); the tilde matrices carry the transposed blocks with the
// twist on the opposite side, which is what makes chi > 1 a genuinely
// different pairing rather than a row permutation.
//   H1  = sum_i (S I_i)   (x) a_i          H2  = sum_i b_i   (x) (I_i S)
//   Ht1 = sum_i (S I_i^T) (x) a_i^T        Ht2 = sum_i b_i^T (x) (I_i^T S)
struct TiledMatrices {
    BinMat h1, h2, ht1, ht2;
};

inline TiledMatrices tiled_matrices(const HyperbicycleSpec& spec) {
    spec.validate();
    std::size_t c = spec.c;
    BinMat S = skew_perm(c, spec.chi);
    TiledMatrices t;
    t.h1 = BinMat(c * spec.r1(), c * spec.n1());
    t.h2 = BinMat(c * spec.r2(), c * spec.n2());
    t.ht1 = BinMat(c * spec.n1(), c * spec.r1());
    t.ht2 = BinMat(c * spec.n2(), c * spec.r2());
    bool first = true;
    for (std::size_t i = 0; i < c; ++i) {
        BinMat Ii = circshift_perm(c, i);
        BinMat SIi = mul(S, Ii);
        BinMat IiS = mul(Ii, S);
        BinMat SIiT = mul(S, transpose(Ii));
        BinMat IiTS = mul(transpose(Ii), S);
        BinMat term1 = kron(SIi, spec.a[i]);
        BinMat term2 = kron(spec.b[i], IiS);
        BinMat term3 = kron(SIiT, transpose(spec.a[i]));
        BinMat term4 = kron(transpose(spec.b[i]), IiTS);
        if (first) {
            t.h1 = term1; t.h2 = term2; t.ht1 = term3; t.ht2 = term4;
            first = false;
        } else {
            t.h1 = add(t.h1, term1);
            t.h2 = add(t.h2, term2);
            t.ht1 = add(t.ht1, term3);
            t.ht2 = add(t.ht2, term4);
        }
    }
    return t;
}

inline CssCode hyperbicycle(const HyperbicycleSpec& spec, Provenance prov = {}) {
    spec.validate();
    TiledMatrices t = tiled_matrices(spec);
    BinMat Ea = BinMat::identity(spec.r1());
    BinMat Eb = BinMat::identity(spec.r2());
    BinMat Eta = BinMat::identity(spec.n1());
    BinMat Etb = BinMat::identity(spec.n2());
    BinMat gx = hstack(kron(Eb, t.h1), kron(t.h2, Ea));
    BinMat gz = hstack(kron(t.ht2, Eta), kron(Etb, t.ht1));
    if (prov.family.empty()) {
        prov.family = "hyperbicycle";
        prov.params = {{"c", std::to_string(spec.c)}, {"chi", std::to_string(spec.chi)}};
    }
    return CssCode(std::move(gx), std::move(gz), std::move(prov));
}

// Splits the (n_small*c) x (n_small*c) circulant of p into c blocks a_i with
// sum_i I_i (x) a_i equal to the circulant: a_i[u][v] = p[(i n_small + v - u) mod c n_small].
inline std::vector<BinMat> circulant_split(std::size_t n_small, std::size_t c, const BinPoly& p) {
    std::size_t N = n_small * c;
    BinPoly q = p.mod_xn_minus_1(N);
    std::vector<BinMat> blocks(c, BinMat(n_small, n_small));
    for (std::size_t i = 0; i < c; ++i)
        for (std::size_t u = 0; u < n_small; ++u)
            for (std::size_t v = 0; v < n_small; ++v) {
                std::size_t idx = (i * n_small + v + N - (u % N)) % N;
                if (q.coeff(idx)) blocks[i].set(u, v, true);
            }
    return blocks;
}

// Spec whose H1^0 / H2^0 are the circulants of p1 / p2 split into c blocks
// (the two-circulant family; the rotated toric codes are p = 1+x).
inline HyperbicycleSpec two_circulant_spec(const BinPoly& p1, std::size_t n1, const BinPoly& p2,
                                           std::size_t n2, std::size_t c, std::size_t chi) {
    HyperbicycleSpec spec;
    spec.a = circulant_split(n1, c, p1);
    spec.b = circulant_split(n2, c, p2);
    spec.c = c;
    spec.chi = chi;
    spec.validate();
    return spec;
}

// Repeated-codeword inputs: check polynomials h_i dividing x^{n_i}-1 also
// divide x^{c n_i}-1, so the big circulants have block-symmetric kernels.
inline HyperbicycleSpec repeated_cyclic_inputs(const BinPoly& h1, std::size_t n1,
                                               const BinPoly& h2, std::size_t n2, std::size_t c,
                                               std::size_t chi) {
    if (!divides(h1, BinPoly::x_pow_minus_1(n1)))
        throw ConstructionError("repeated_cyclic_inputs: h1 does not divide x^n1-1");
    if (!divides(h2, BinPoly::x_pow_minus_1(n2)))
        throw ConstructionError("repeated_cyclic_inputs: h2 does not divide x^n2-1");
    return two_circulant_spec(h1, n1, h2, n2, c, chi);
}

// Single-term ansatz: a_{i_a} = a, b_{i_b} = a^T, all other blocks zero.
inline HyperbicycleSpec single_term_hyperbicycle(const BinMat& a, std::size_t i_a, std::size_t i_b,
                                                 std::size_t c, std::size_t chi) {
    if (i_a >= c || i_b >= c)
        throw ConstructionError("single_term_hyperbicycle: block index out of range");
    HyperbicycleSpec spec;
    spec.c = c;
    spec.chi = chi;
    spec.a.assign(c, BinMat(a.rows(), a.cols()));
    spec.b.assign(c, BinMat(a.cols(), a.rows()));
    spec.a[i_a] = a;
    spec.b[i_b] = transpose(a);
    spec.validate();
    return spec;
}

// ---- CSS <-> non-CSS doubling (the reversible two-sublattice mapping) ----

inline CssCode noncss_to_css(const NonCssCode& code) {
    BinMat A = code.x_part(), B = code.z_part();
    Provenance prov = code.provenance;
    prov.family = prov.family.empty() ? "css-double" : prov.family + ":css-double";
    return CssCode(hstack(A, B), hstack(B, A), std::move(prov));
}

inline NonCssCode css_to_noncss(const CssCode& code) {
    if (code.n % 2 != 0) throw ConstructionError("css_to_noncss: odd block length");
    std::size_t half = code.n / 2;
    BinMat A(code.gx.rows(), half), B(code.gx.rows(), half);
    for (std::size_t i = 0; i < code.gx.rows(); ++i)
        for (std::size_t j = 0; j < half; ++j) {
            if (code.gx.get(i, j)) A.set(i, j, true);
            if (code.gx.get(i, half + j)) B.set(i, j, true);
        }
    // require the exact (A,B)/(B,A) shape
    if (code.gz.rows() != code.gx.rows())
        throw ConstructionError("css_to_noncss: not of (A,B)/(B,A) shape");
    BinMat expect = hstack(B, A);
    if (!(code.gz == expect)) throw ConstructionError("css_to_noncss: not of (A,B)/(B,A) shape");
    Provenance prov = code.provenance;
    prov.family = prov.family.empty() ? "noncss-half" : prov.family + ":noncss-half";
    return NonCssCode(hstack(A, B), std::move(prov));
}

// Non-CSS form of a symmetric hyperbicycle (H1 = Ht1, H2 = Ht2):
// G = (E_b (x) H1 | H2 (x) E_a).
inline NonCssCode noncss_hyperbicycle(const HyperbicycleSpec& spec, Provenance prov = {}) {
    TiledMatrices t = tiled_matrices(spec);
    if (!(t.h1 == t.ht1) || !(t.h2 == t.ht2))
        throw ConstructionError("noncss_hyperbicycle: requires H1 = ~H1 and H2 = ~H2");
    BinMat A = kron(BinMat::identity(spec.r2()), t.h1);
    BinMat B = kron(t.h2, BinMat::identity(spec.r1()));
    if (prov.family.empty()) {
        prov.family = "noncss-hyperbicycle";
        prov.params = {{"c", std::to_string(spec.c)}, {"chi", std::to_string(spec.chi)}};
    }
    return NonCssCode(hstack(A, B), std::move(prov));
}

// Symmetric-circulant non-CSS bicycle: H = (A|B) with A, B symmetric
// circulants of f1, f2.
inline NonCssCode noncss_bicycle(const BinPoly& f1, const BinPoly& f2, std::size_t n,
                                 Provenance prov = {}) {
    BinMat A = circulant(n, f1), B = circulant(n, f2);
    if (!(A == transpose(A)) || !(B == transpose(B)))
        throw ConstructionError("noncss_bicycle: circulants must be symmetric");
    if (prov.family.empty()) {
        prov.family = "noncss-bicycle";
        prov.params = {{"f1", f1.to_string()}, {"f2", f2.to_string()}, {"n", std::to_string(n)}};
    }
    return NonCssCode(hstack(A, B), std::move(prov));
}

// ---- tensor-product two-sublattice codes (Haah family) ----

struct TwoSublatticePair {
    BinMat A, B;
    CssCode css(Provenance prov = {}) const {
        return CssCode(hstack(A, B), hstack(transpose(B), transpose(A)), std::move(prov));
    }
};

// The four cubic-code variants: A, B are mod-2 sums of triple Kronecker
// products of E = I_L and the circulant of 1+x.
inline TwoSublatticePair haah_code(int variant, std::size_t L) {
    if (L < 2) throw ConstructionError("haah_code: L must be >= 2");
    if (variant < 1 || variant > 4) throw ConstructionError("haah_code: variant must be 1..4");
    BinMat H = circulant(L, parse_bin_poly("1+x"));
    BinMat E = BinMat::identity(L);
    auto term = [&](const char* s) {
        BinMat m = kron(kron(s[0] == 'H' ? H : E, s[1] == 'H' ? H : E), s[2] == 'H' ? H : E);
        return m;
    };
    auto sum = [&](std::initializer_list<const char*> specs) {
        BinMat acc;
        bool first = true;
        for (const char* s : specs) {
            if (first) { acc = term(s); first = false; }
            else acc = add(acc, term(s));
        }
        return acc;
    };
    TwoSublatticePair p;
    switch (variant) {
        case 1:
            p.A = sum({"HEE", "EHE", "EEH"});
            p.B = sum({"HHE", "EHH", "HEH"});
            break;
        case 2:
            p.A = sum({"HEE", "EHE", "EHH", "HEH", "HHH"});
            p.B = sum({"EEH", "HHE", "EHH", "HEH"});
            break;
        case 3:
            p.A = sum({"HEE", "EHE", "EHH", "HEH", "HHH"});
            p.B = sum({"HEE", "EHE", "EEH", "HHE", "EHH", "HHH"});
            break;
        default:
            p.A = sum({"EHH", "HEH", "EHE"});
            p.B = sum({"HEE", "EEH", "EHH", "HHH"});
            break;
    }
    BinMat comm = add(mul(p.A, p.B), mul(p.B, p.A));
    if (!comm.is_zero()) throw ConstructionError("haah_code: A and B do not commute");
    return p;
}

inline CssCode haah_css(int variant, std::size_t L) {
    Provenance prov;
    prov.family = "haah";
    prov.params = {{"variant", std::to_string(variant)}, {"L", std::to_string(L)}};
    return haah_code(variant, L).css(std::move(prov));
}

} // namespace qldpc
