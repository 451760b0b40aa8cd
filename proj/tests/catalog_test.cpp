#include "qldpc/catalog.hpp"
#include "qldpc/report.hpp"

#include <gtest/gtest.h>

using namespace qldpc;

TEST(Catalog, EntriesReproduceNK) {
    for (const auto& e : paper_catalog()) {
        BuiltCode bc = build_catalog_code(e);
        EXPECT_EQ(bc.n(), e.expect_n) << e.name;
        EXPECT_EQ(bc.k(), e.expect_k) << e.name;
    }
}

TEST(Catalog, QuickTierIsSeedIndependent) {
    // no randomness on the N/K path: two different seeds, same outcomes
    for (const auto& e : paper_catalog()) {
        CatalogVerifyResult a = verify_catalog_entry(e, false, 1);
        CatalogVerifyResult b = verify_catalog_entry(e, false, 999);
        EXPECT_EQ(a.got_n, b.got_n);
        EXPECT_EQ(a.got_k, b.got_k);
        EXPECT_TRUE(a.ok());
        EXPECT_TRUE(b.ok());
    }
}

TEST(Catalog, CorruptedRecipeIsDetected) {
    // negative controls: a mutated recipe must trip the expectation checks
    CatalogEntry bad = paper_catalog().front(); // the [[10,2,3]] bicycle
    for (auto& [k, v] : bad.params)
        if (k == "n") v = "7"; // changes the block length
    CatalogVerifyResult r = verify_catalog_entry(bad, true, 12345);
    EXPECT_FALSE(r.ok());

    CatalogEntry bad2 = paper_catalog().front();
    bad2.expect_d = 4; // recipe and N,K intact; the distance check must trip
    CatalogVerifyResult r2 = verify_catalog_entry(bad2, true, 12345);
    EXPECT_TRUE(r2.nk_ok);
    EXPECT_FALSE(r2.distance_ok);
}

TEST(Catalog, AnalyzeReportRoundTrip) {
    CatalogEntry e = paper_catalog().front();
    BuiltCode bc = build_catalog_code(e);
    DistanceOptions opt;
    opt.rand_iters = 20;
    AnalysisReport rep1 = analyze(bc, opt);
    AnalysisReport rep2 = analyze(bc, opt);
    EXPECT_TRUE(rep1.crosscheck_ok);
    nlohmann::json j1 = report_to_json(rep1), j2 = report_to_json(rep2);
    j1.erase("timings");
    j2.erase("timings");
    EXPECT_EQ(j1, j2);
    EXPECT_EQ(j1["kReport"]["kRank"], 2);
    EXPECT_EQ(j1["distance"]["combined"]["lo"], 3);
}

TEST(Catalog, EmptyCodeReportNotApplicable) {
    BuiltCode bc;
    bc.css = generalized_bicycle(parse_bin_poly("1"), BinPoly::zero(), 3);
    AnalysisReport rep = analyze(bc);
    EXPECT_TRUE(rep.crosscheck_ok);
    EXPECT_FALSE(rep.distance.applicable);
    nlohmann::json j = report_to_json(rep);
    EXPECT_EQ(j["distance"]["applicable"], false);
    EXPECT_EQ(j["kReport"]["kRank"], 0);
}

TEST(Catalog, SpecJsonRoundTrip) {
    HyperbicycleSpec spec =
        two_circulant_spec(parse_bin_poly("1+x"), 3, parse_bin_poly("1+x"), 3, 5, 3);
    nlohmann::json j = spec_to_json(spec);
    HyperbicycleSpec back = spec_from_json(j);
    EXPECT_EQ(back.c, spec.c);
    EXPECT_EQ(back.chi, spec.chi);
    for (std::size_t i = 0; i < spec.c; ++i) {
        EXPECT_EQ(back.a[i], spec.a[i]);
        EXPECT_EQ(back.b[i], spec.b[i]);
    }
    // construct -> export -> import -> analyze agrees
    CssCode c1 = hyperbicycle(spec), c2 = hyperbicycle(back);
    EXPECT_EQ(c1.gx, c2.gx);
    EXPECT_EQ(c1.gz, c2.gz);
}

TEST(Catalog, LayoutRendering) {
    HyperbicycleSpec spec =
        two_circulant_spec(parse_bin_poly("1+x"), 3, parse_bin_poly("1+x"), 3, 5, 3);
    std::string txt = render_layout_txt(spec);
    EXPECT_NE(txt.find("c=5 chi=3"), std::string::npos);
    EXPECT_NE(txt.find("X"), std::string::npos);
    EXPECT_NE(txt.find("Z"), std::string::npos);
    std::string svg = render_layout_svg(spec);
    EXPECT_NE(svg.find("<svg"), std::string::npos);
    EXPECT_NE(svg.find("marker-end"), std::string::npos);

    // degenerate 1x1 block still renders
    HyperbicycleSpec tiny;
    tiny.c = 1;
    tiny.chi = 1;
    tiny.a = {circulant(2, parse_bin_poly("1+x"))};
    tiny.b = {circulant(2, parse_bin_poly("1+x"))};
    EXPECT_FALSE(render_layout_txt(tiny).empty());

    // non-square specs are refused
    HyperbicycleSpec rect;
    rect.c = 1;
    rect.chi = 1;
    rect.a = {BinMat(1, 2)};
    rect.b = {BinMat(1, 2)};
    EXPECT_THROW(render_layout_txt(rect), LayoutError);
}

TEST(Catalog, WitnessExportFormat) {
    BinVec v(6);
    v.set(1, true);
    v.set(4, true);
    std::string s = export_witness(v, 4, 2, "Z");
    EXPECT_NE(s.find("split=4+2"), std::string::npos);
    EXPECT_NE(s.find("010010"), std::string::npos);
}
