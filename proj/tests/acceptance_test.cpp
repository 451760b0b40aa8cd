// Acceptance suite: runs every verification criterion end to end against the
// built-in example corpus and prints one pass/fail line per check.

#include "qldpc/catalog.hpp"
#include "qldpc/report.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <numeric>
#include <random>

using namespace qldpc;

namespace {

BinPoly P(const std::string& s) { return parse_bin_poly(s); }

void line(const char* crit, const std::string& what, bool pass) {
    std::printf("[%s] %-42s %s\n", crit, what.c_str(), pass ? "PASS" : "FAIL");
    EXPECT_TRUE(pass) << crit << " " << what;
}

const CatalogEntry& entry(const std::string& name) {
    for (const auto& e : paper_catalog())
        if (e.name == name) return e;
    throw std::runtime_error("no catalog entry " + name);
}

DistanceResult run_distance(const std::string& name, std::size_t iters = 200,
                            std::size_t enum_cap = 0) {
    const CatalogEntry& e = entry(name);
    BuiltCode bc = build_catalog_code(e);
    DistanceOptions opt;
    opt.rand_iters = iters;
    opt.enum_weight_cap = enum_cap;
    opt.workers = 2;
    return bc.css ? css_distance(*bc.css, opt, bc.spec) : noncss_distance(*bc.noncss, opt, bc.spec);
}

} // namespace

// ---- A: exact N and K for the full corpus, rank and class-sum paths ----
TEST(Acceptance, A_CorpusNK) {
    for (const auto& e : paper_catalog()) {
        if (e.family == "haah") continue;
        CatalogVerifyResult r = verify_catalog_entry(e, false);
        std::string what = e.name + " [[" + std::to_string(e.expect_n) + "," +
                           std::to_string(e.expect_k) + "]]";
        line("A", what + " N,K by rank", r.nk_ok);
        line("A", what + " class-sum K path", r.k_paths_ok);
    }
}

// ---- B: exact distances proved by enumeration ----
TEST(Acceptance, B_ExactDistances) {
    struct Case {
        const char* name;
        std::size_t d;
    };
    for (const Case& c : {Case{"gb-rt-10-2-3", 3}, Case{"gb-rt-26-2-5", 5}, Case{"nc-rt-5-1-3", 3},
                          Case{"nc-rt-13-1-5", 5}, Case{"rt-40-2-6", 6}, Case{"gb-60-40-4", 4},
                          Case{"rm-36-18-2", 2}, Case{"hb-120-32-2", 2}, Case{"hb-120-32-4", 4}}) {
        DistanceResult r = run_distance(c.name);
        line("B", std::string(c.name) + " D=" + std::to_string(c.d),
             r.d.is_exact() && r.d.lo == c.d);
    }
    // derived toric code [[18,2,3]]
    BinMat h3 = circulant(3, P("1+x"));
    CssCode toric = hypergraph_product(h3, h3);
    DistanceResult rt = css_distance(toric);
    line("B", "[[18,2,3]] derived toric D=3", rt.d.is_exact() && rt.d.lo == 3);
}

// ---- C: distance brackets with verified witnesses ----
TEST(Acceptance, C_BracketsAndWitnesses) {
    auto witness_ok = [](const std::string& name, const DistanceResult& r) {
        if (!r.witness) return false;
        BuiltCode bc = build_catalog_code(entry(name));
        return bc.css ? verify_css_witness(*bc.css, *r.witness, r.witness_side)
                      : verify_noncss_witness(*bc.noncss, *r.witness);
    };

    {
        DistanceResult r = run_distance("hb-90-2-9", 300);
        line("C", "[[90,2,9]] clean to 6 and witness 9",
             r.d.lo == 7 && r.d.hi == 9 && witness_ok("hb-90-2-9", r));
    }
    {
        DistanceResult r = run_distance("hb-90-8-8");
        line("C", "[[90,8,8]] clean past 5, witness 8",
             r.d.lo > 5 && r.d.hi == 8 && witness_ok("hb-90-8-8", r));
    }
    {
        DistanceResult r = run_distance("hb-90-10-7");
        line("C", "[[90,10,7]] clean past 5, witness 7",
             r.d.lo > 5 && r.d.hi == 7 && witness_ok("hb-90-10-7", r));
    }
    {
        DistanceResult r = run_distance("hb-126-8-10");
        line("C", "[[126,8,10]] witness 10", r.d.hi == 10 && witness_ok("hb-126-8-10", r));
    }
    {
        DistanceResult r = run_distance("hb-126-14-6", 400);
        line("C", "[[126,14,6]] witness 6", r.d.hi == 6 && witness_ok("hb-126-14-6", r));
    }
    {
        DistanceResult r8 = run_distance("hb-180-16-8");
        DistanceResult r6 = run_distance("hb-180-16-6", 400);
        line("C", "[[180,16,8]] vs [[180,16,6]] chi improvement",
             r8.d.hi == 8 && r6.d.hi == 6 && witness_ok("hb-180-16-8", r8) &&
                 witness_ok("hb-180-16-6", r6));
    }
    {
        DistanceResult r = run_distance("nc-289-81-5");
        line("C", "[[289,81,5]] exact: clean to 4, witness 5",
             r.d.is_exact() && r.d.lo == 5 && witness_ok("nc-289-81-5", r));
    }
    {
        DistanceResult r = run_distance("hgp-450-98-5");
        line("C", "[[450,98,5]] clean past 3, witness 5",
             r.d.lo > 3 && r.d.hi == 5 && witness_ok("hgp-450-98-5", r));
    }
    {
        DistanceResult r = run_distance("hgp-toric-450-2-15");
        line("C", "[[450,2,15]] witness <= 15", r.d.hi <= 15 && witness_ok("hgp-toric-450-2-15", r));
    }
    {
        const CatalogEntry& e = entry("hb-294-18");
        BuiltCode bc = build_catalog_code(e);
        BoundsReport b = theoretical_bounds(*bc.spec);
        DistanceResult r = run_distance("hb-294-18");
        bool bracket = b.floor_lower == 4 && b.class_min_upper && *b.class_min_upper == 12;
        line("C", "[[294,18]] theorem bracket [4,12] reproduced", bracket);
        line("C", "[[294,18]] witness <= 12", r.d.hi <= 12 && witness_ok("hb-294-18", r));
    }
    {
        const CatalogEntry& e = entry("hb-900-50-14");
        BuiltCode bc = build_catalog_code(e);
        BoundsReport b = theoretical_bounds(*bc.spec);
        DistanceResult r = run_distance("hb-900-50-14");
        bool premises = b.repeated_even_applies && b.repeated_even_interval && b.repeated_even_interval->first == 14;
        line("C", "[[900,50,14]] theorem premises and (2/c)d lower", premises);
        line("C", "[[900,50,14]] witness <= 14", r.d.hi <= 14 && witness_ok("hb-900-50-14", r));
    }
    {
        const CatalogEntry& e = entry("rm-196-32-6");
        BuiltCode bc = build_catalog_code(e);
        BoundsReport b = theoretical_bounds(*bc.spec);
        bool c2exact = b.repeated_c2_applies && b.repeated_c2_exact && *b.repeated_c2_exact == 6 && b.c1.k == 4 &&
                    b.c1.d == Dist::exact(6);
        line("C", "[[196,32,6]] exact D=6 from the c=2 theorem", c2exact);
        AnalysisReport rep = analyze(bc);
        line("C", "[[196,32,6]] combined interval exact",
             rep.combined.is_exact() && rep.combined.lo == 6 && rep.crosscheck_ok);
    }
}

// ---- D: the doubling map on random stabilizer codes ----
TEST(Acceptance, D_DoublingSuite) {
    std::mt19937_64 rng(20130219);
    int count = 0, attempts = 0;
    bool all_ok = true;
    while (count < 200 && attempts < 4000) {
        ++attempts;
        std::size_t n = 2 + rng() % 11; // N <= 12
        std::size_t target_rows = 1 + rng() % n;
        std::vector<BinVec> rows;
        int guard = 0;
        while (rows.size() < target_rows && ++guard < 200) {
            BinVec r(2 * n);
            for (std::size_t j = 0; j < 2 * n; ++j)
                if (rng() & 1) r.set(j, true);
            if (!r.any()) continue;
            bool ok = true;
            for (const BinVec& s : rows) {
                std::size_t par = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    par ^= r.get(i) & s.get(n + i);
                    par ^= r.get(n + i) & s.get(i);
                }
                if (par) { ok = false; break; }
            }
            if (ok) rows.push_back(r);
        }
        if (rows.empty()) continue;
        BinMat h(rows.size(), 2 * n);
        for (std::size_t i = 0; i < rows.size(); ++i) h.set_row(i, rows[i]);
        NonCssCode nc(h);
        std::size_t K = nc.k_from_rank();
        if (K == 0) continue;
        DistanceResult rd = noncss_distance(nc);
        if (!rd.d.is_exact()) continue;
        std::size_t D = rd.d.lo;
        CssCode doubled = noncss_to_css(nc);
        bool okN = doubled.n == 2 * n;
        bool okK = doubled.k_from_rank() == 2 * K;
        DistanceResult rdd = css_distance(doubled);
        bool okD = rdd.d.is_exact() && D <= rdd.d.lo && rdd.d.lo <= 2 * D;
        all_ok = all_ok && okN && okK && okD;
        if (!(okN && okK && okD))
            std::printf("[D] failure at n=%zu K=%zu D=%zu -> K'=%zu D'=%zu\n", n, K, D,
                        doubled.k_from_rank(), rdd.d.lo);
        ++count;
    }
    line("D", "200 random codes: N'=2N, K'=2K, D<=D'<=2D (" + std::to_string(count) + " run)",
         all_ok && count == 200);
}

// ---- E: dimension theory on random block specs ----
TEST(Acceptance, E_DimensionSuite) {
    std::mt19937_64 rng(424243);
    bool all_ok = true;
    int zero_checked = 0;
    for (int t = 0; t < 100; ++t) {
        HyperbicycleSpec spec;
        spec.c = 1 + rng() % 6;
        std::vector<std::size_t> chis;
        for (std::size_t x = 1; x <= spec.c; ++x)
            if (std::gcd(spec.c, x) == 1) chis.push_back(x);
        spec.chi = chis[rng() % chis.size()];
        std::size_t r1 = 1 + rng() % 4, n1 = 1 + rng() % 5;
        std::size_t r2 = 1 + rng() % 4, n2 = 1 + rng() % 5;
        for (std::size_t i = 0; i < spec.c; ++i) {
            BinMat ai(r1, n1), bi(r2, n2);
            if (rng() % 5)
                for (std::size_t x = 0; x < r1; ++x)
                    for (std::size_t y = 0; y < n1; ++y)
                        if (rng() & 1) ai.set(x, y, true);
            if (rng() % 5)
                for (std::size_t x = 0; x < r2; ++x)
                    for (std::size_t y = 0; y < n2; ++y)
                        if (rng() & 1) bi.set(x, y, true);
            spec.a.push_back(ai);
            spec.b.push_back(bi);
        }
        CssCode code = hyperbicycle(spec);
        KReport rep = count_logical_qubits(code, spec);
        bool ok = !rep.mismatch;
        RankPrediction pred = rank_formula_check(spec);
        ok = ok && pred.rank_gx == rep.rank_gx && pred.rank_gz == rep.rank_gz;
        const SymmetryDecomp& d = *rep.decomp;
        std::size_t tot1 = 0, tot2 = 0;
        for (std::size_t ci = 0; ci < d.classes.size(); ++ci) {
            const auto& cl = d.classes[ci];
            if (ci + 1 < d.classes.size()) {
                ok = ok && static_cast<long>(cl.k1) - static_cast<long>(cl.kt1) ==
                               d.s1 * static_cast<long>(cl.k0);
                ok = ok && static_cast<long>(cl.k2) - static_cast<long>(cl.kt2) ==
                               d.s2 * static_cast<long>(cl.k0);
            }
            tot1 += cl.k1;
            tot2 += cl.k2;
        }
        ok = ok && tot1 == d.k1 && tot2 == d.k2;
        if (d.k1 == 0 && d.k2 == 0 && d.kt1 == 0 && d.kt2 == 0) {
            ok = ok && rep.k_rank == 0;
            ++zero_checked;
        }
        if (!ok) {
            all_ok = false;
            std::printf("[E] failure at c=%zu chi=%zu r1=%zu n1=%zu r2=%zu n2=%zu\n", spec.c,
                        spec.chi, r1, n1, r2, n2);
        }
    }
    // a guaranteed all-empty instance for the contrapositive
    HyperbicycleSpec zspec;
    zspec.c = 2;
    zspec.chi = 1;
    zspec.a = {BinMat::identity(3), BinMat(3, 3)};
    zspec.b = {BinMat::identity(3), BinMat(3, 3)};
    KReport zrep = count_logical_qubits(hyperbicycle(zspec), zspec);
    all_ok = all_ok && zrep.k_rank == 0;
    line("E", "100 random specs: K paths, per-class identity, ranks", all_ok);
    line("E", "empty-code contrapositive exercised", zrep.k_rank == 0);
    (void)zero_checked;
}

// ---- F: construction identities ----
TEST(Acceptance, F_ConstructionIdentities) {
    std::mt19937_64 rng(777);
    bool hp_ok = true;
    for (int t = 0; t < 10; ++t) {
        std::size_t r1 = 1 + rng() % 3, n1 = 1 + rng() % 3;
        std::size_t r2 = 1 + rng() % 3, n2 = 1 + rng() % 3;
        BinMat a(r1, n1), b(r2, n2);
        for (std::size_t i = 0; i < r1; ++i)
            for (std::size_t j = 0; j < n1; ++j)
                if (rng() & 1) a.set(i, j, true);
        for (std::size_t i = 0; i < r2; ++i)
            for (std::size_t j = 0; j < n2; ++j)
                if (rng() & 1) b.set(i, j, true);
        HyperbicycleSpec spec;
        spec.c = 1;
        spec.chi = 1;
        spec.a = {a};
        spec.b = {b};
        CssCode hb = hyperbicycle(spec);
        CssCode hp = hypergraph_product(a, b);
        hp_ok = hp_ok && hb.gx == hp.gx && hb.gz == hp.gz;
    }
    line("F", "c=1 block code == hypergraph product, bit for bit", hp_ok);

    bool gb_ok = true;
    for (int t = 0; t < 10; ++t) {
        std::size_t n = 2 + rng() % 9;
        BinPoly f1, f2;
        {
            std::vector<std::uint8_t> c1(n, 0), c2(n, 0);
            for (auto& x : c1) x = rng() & 1;
            for (auto& x : c2) x = rng() & 1;
            f1 = BinPoly(std::move(c1));
            f2 = BinPoly(std::move(c2));
        }
        CssCode gb = generalized_bicycle(f1, f2, n);
        CssCode hb = hyperbicycle(bicycle_spec(f1, f2, n));
        gb_ok = gb_ok && gb.gx == hb.gx && gb.gz == hb.gz;
    }
    line("F", "one-bit blocks == generalized bicycle, bit for bit", gb_ok);

    bool haah_ok = true;
    for (int v = 1; v <= 4; ++v)
        for (std::size_t L : {2u, 3u, 4u}) {
            TwoSublatticePair p = haah_code(v, L);
            haah_ok = haah_ok && add(mul(p.A, p.B), mul(p.B, p.A)).is_zero();
        }
    line("F", "all four tensor-product variants commute, L in {2,3,4}", haah_ok);

    bool comm_ok = true;
    for (const auto& e : paper_catalog()) {
        BuiltCode bc = build_catalog_code(e);
        if (bc.css) comm_ok = comm_ok && mul(bc.css->gx, transpose(bc.css->gz)).is_zero();
    }
    line("F", "Gx Gz^T == 0 for every corpus construction", comm_ok);
}

// ---- G: logical operator extraction over the corpus ----
TEST(Acceptance, G_LogicalOperators) {
    for (const auto& e : paper_catalog()) {
        BuiltCode bc = build_catalog_code(e);
        if (!bc.css || bc.css->k_from_rank() == 0) continue;
        LogicalOps ops = logical_operators(*bc.css, bc.spec);
        std::size_t K = bc.css->k_from_rank();
        bool ok = ops.xbar.rows() == K && ops.zbar.rows() == K;
        RowBasis rsx{rref(bc.css->gx).mat}, rsz{rref(bc.css->gz).mat};
        for (std::size_t i = 0; i < K && ok; ++i) {
            ok = ok && mat_vec(bc.css->gz, ops.xbar.row(i)).none();
            ok = ok && mat_vec(bc.css->gx, ops.zbar.row(i)).none();
            ok = ok && !rsx.contains(ops.xbar.row(i));
            ok = ok && !rsz.contains(ops.zbar.row(i));
        }
        for (std::size_t i = 0; i < K && ok; ++i)
            for (std::size_t j = 0; j < K && ok; ++j) {
                std::size_t par = 0;
                for (std::size_t t = 0; t < bc.css->n; ++t)
                    par ^= ops.xbar.get(i, t) & ops.zbar.get(j, t);
                ok = par == (i == j ? 1u : 0u);
            }
        line("G", e.name + " " + std::to_string(K) + " anticommuting pairs", ok);
    }
    // c-fold repetition of the closed-form rows on the repeated chi=1 code
    const CatalogEntry& e294 = entry("hb-294-18");
    BuiltCode bc = build_catalog_code(e294);
    LogicalOps ops = logical_operators(*bc.css, bc.spec);
    bool rep_ok = ops.closed_form;
    for (std::size_t i = 0; i < ops.xbar.rows() && rep_ok; ++i) {
        rep_ok = rep_ok && logical_row_repeats(*bc.spec, ops.xbar.row(i));
        rep_ok = rep_ok && logical_row_repeats(*bc.spec, ops.zbar.row(i));
    }
    line("G", "[[294,18]] c-fold repetition of closed-form rows", rep_ok);
}
