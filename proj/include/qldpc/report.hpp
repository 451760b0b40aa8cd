#pragma once

// Analysis reports (JSON) and the planar layout rendering of square-block
// specs. The report combines the rank/class logical counts, the distance
// interval with its evidence, and the theorem-style bounds; the analyze
// entry point flags any internal cross-check failure.

#include "qldpc/catalog.hpp"
#include "qldpc/construct.hpp"
#include "qldpc/dimension.hpp"
#include "qldpc/distance.hpp"

#include <json.hpp>

#include <chrono>
#include <sstream>

namespace qldpc {

inline constexpr const char* kToolVersion = "qldpc 0.1.0";
inline constexpr int kReportSchemaVersion = 1;

struct AnalysisReport {
    std::string provenance;
    std::size_t n = 0;
    KReport k;
    std::optional<NonCssKReport> k_noncss;
    DistanceResult distance;
    std::optional<BoundsReport> bounds;
    Dist combined; // distance interval after intersecting with the bounds
    bool crosscheck_ok = true;
    std::vector<std::string> crosscheck_failures;
    std::uint64_t seed = 0;
    double seconds = 0;
};

inline nlohmann::json dist_to_json(const Dist& d) {
    nlohmann::json j;
    if (d.infinite) {
        j["infinite"] = true;
    } else {
        j["lo"] = d.lo;
        j["hi"] = d.hi;
        j["exact"] = d.is_exact();
    }
    return j;
}

inline nlohmann::json kreport_to_json(const KReport& k) {
    nlohmann::json j;
    j["kRank"] = k.k_rank;
    if (k.k_class_sum) j["kTheorem3"] = *k.k_class_sum;
    if (k.k_symmetric_form) j["kSymmetricForm"] = *k.k_symmetric_form;
    j["rankGx"] = k.rank_gx;
    j["rankGz"] = k.rank_gz;
    j["mismatch"] = k.mismatch;
    if (k.decomp) {
        nlohmann::json classes = nlohmann::json::array();
        for (const auto& cl : k.decomp->classes) {
            nlohmann::json c;
            c["p"] = cl.p.to_string();
            c["k0"] = cl.k0;
            c["k1"] = cl.k1;
            c["k2"] = cl.k2;
            c["kt1"] = cl.kt1;
            c["kt2"] = cl.kt2;
            classes.push_back(std::move(c));
        }
        j["classes"] = std::move(classes);
    }
    return j;
}

inline nlohmann::json bounds_to_json(const BoundsReport& b) {
    nlohmann::json j;
    auto cp = [](const ClassicalParams& p) {
        nlohmann::json c;
        c["n"] = p.n;
        c["k"] = p.k;
        c["d"] = dist_to_json(p.d);
        return c;
    };
    j["tiled"] = {{"h1", cp(b.c1)}, {"h2", cp(b.c2)}, {"ht1", cp(b.ct1)}, {"ht2", cp(b.ct2)}};
    j["floorLower"] = b.floor_lower;
    nlohmann::json t5 = nlohmann::json::array();
    for (const auto& e : b.class_bounds) {
        nlohmann::json x;
        x["p"] = e.p.to_string();
        x["d1p"] = dist_to_json(e.d1p);
        x["d2p"] = dist_to_json(e.d2p);
        x["dt1p"] = dist_to_json(e.dt1p);
        x["dt2p"] = dist_to_json(e.dt2p);
        if (e.upper) x["upper"] = *e.upper;
        t5.push_back(std::move(x));
    }
    j["class_bounds"] = std::move(t5);
    if (b.class_min_upper) j["classMinUpper"] = *b.class_min_upper;
    j["squareBlocks"] = b.square_blocks;
    j["symmetricKernels"] = b.symmetric_kernels;
    j["sumCodeDistances"] = {dist_to_json(b.sum_a_dist), dist_to_json(b.sum_at_dist),
                             dist_to_json(b.sum_b_dist), dist_to_json(b.sum_bt_dist)};
    j["repeatedC2Applies"] = b.repeated_c2_applies;
    if (b.repeated_c2_exact) j["repeatedC2Exact"] = *b.repeated_c2_exact;
    j["repeatedEvenApplies"] = b.repeated_even_applies;
    if (b.repeated_even_interval) j["repeatedEvenInterval"] = {b.repeated_even_interval->first, b.repeated_even_interval->second};
    j["noncssRepeatedApplies"] = b.noncss_repeated_applies;
    if (b.noncss_repeated_lower) j["noncssRepeatedLower"] = *b.noncss_repeated_lower;
    j["noncssFloorLower"] = b.noncss_floor_lower;
    return j;
}

inline std::string vec_to_01(const BinVec& v) {
    std::string s(v.size(), '0');
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v.get(i)) s[i] = '1';
    return s;
}

inline nlohmann::json report_to_json(const AnalysisReport& r) {
    nlohmann::json j;
    j["schemaVersion"] = kReportSchemaVersion;
    j["toolVersion"] = kToolVersion;
    j["seed"] = r.seed;
    j["provenance"] = r.provenance;
    j["n"] = r.n;
    j["kReport"] = kreport_to_json(r.k);
    if (r.k_noncss) {
        j["kReport"]["kRank"] = r.k_noncss->k_rank;
        j["kReport"]["kClassSum"] = r.k_noncss->k_classes;
        j["kReport"]["mismatch"] = r.k_noncss->mismatch;
    }
    nlohmann::json d;
    d["applicable"] = r.distance.applicable;
    if (r.distance.applicable) {
        d["interval"] = dist_to_json(r.distance.d);
        d["combined"] = dist_to_json(r.combined);
        d["dxLo"] = r.distance.dx_lo;
        d["dzLo"] = r.distance.dz_lo;
        d["dxHi"] = r.distance.dx_hi;
        d["dzHi"] = r.distance.dz_hi;
        d["methods"] = r.distance.methods;
        if (r.distance.witness) {
            d["witness"] = vec_to_01(*r.distance.witness);
            d["witnessSide"] = r.distance.witness_side;
        }
    }
    j["distance"] = std::move(d);
    if (r.bounds) j["bounds"] = bounds_to_json(*r.bounds);
    j["crosscheckOk"] = r.crosscheck_ok;
    j["crosscheckFailures"] = r.crosscheck_failures;
    j["timings"] = {{"totalSeconds", r.seconds}};
    return j;
}

// full analysis of a built code: K by all available paths, distance with
// evidence, bounds, and cross-checks
inline AnalysisReport analyze(const BuiltCode& bc, const DistanceOptions& opt = {},
                              std::size_t classical_enum_cap = 26) {
    auto t0 = std::chrono::steady_clock::now();
    AnalysisReport rep;
    rep.seed = opt.seed;
    rep.n = bc.n();
    if (bc.css) {
        rep.provenance = bc.css->provenance.to_string();
        rep.k = count_logical_qubits(*bc.css, bc.spec);
        if (rep.k.mismatch) {
            rep.crosscheck_ok = false;
            rep.crosscheck_failures.push_back("class-sum K does not match rank K");
        }
        rep.distance = css_distance(*bc.css, opt, bc.spec);
        if (rep.distance.witness &&
            !verify_css_witness(*bc.css, *rep.distance.witness, rep.distance.witness_side)) {
            rep.crosscheck_ok = false;
            rep.crosscheck_failures.push_back("witness failed re-verification");
        }
    } else {
        rep.provenance = bc.noncss->provenance.to_string();
        rep.k.k_rank = static_cast<long>(bc.noncss->n) - static_cast<long>(rank(bc.noncss->h));
        if (bc.spec) {
            rep.k_noncss = noncss_K(*bc.noncss, *bc.spec);
            if (rep.k_noncss->mismatch) {
                rep.crosscheck_ok = false;
                rep.crosscheck_failures.push_back("class-sum K does not match rank K");
            }
        }
        rep.distance = noncss_distance(*bc.noncss, opt, bc.spec);
        if (rep.distance.witness && !verify_noncss_witness(*bc.noncss, *rep.distance.witness)) {
            rep.crosscheck_ok = false;
            rep.crosscheck_failures.push_back("witness failed re-verification");
        }
    }
    rep.combined = rep.distance.d;
    if (bc.spec && rep.distance.applicable) {
        rep.bounds = theoretical_bounds(*bc.spec, classical_enum_cap, opt.seed);
        std::size_t lo = rep.combined.lo, hi = rep.combined.hi;
        lo = std::max(lo, rep.bounds->floor_lower);
        if (rep.bounds->repeated_even_interval) lo = std::max(lo, rep.bounds->repeated_even_interval->first);
        if (bc.noncss) {
            lo = std::max(lo, rep.bounds->noncss_floor_lower);
            if (rep.bounds->noncss_repeated_lower && rep.bounds->noncss_repeated_applies)
                lo = std::max(lo, *rep.bounds->noncss_repeated_lower);
        }
        if (bc.css) {
            if (rep.bounds->class_min_upper) hi = std::min(hi, *rep.bounds->class_min_upper);
            if (rep.bounds->repeated_c2_applies && rep.bounds->repeated_c2_exact) {
                lo = std::max(lo, *rep.bounds->repeated_c2_exact);
                hi = std::min(hi, *rep.bounds->repeated_c2_exact);
            }
            if (rep.bounds->repeated_even_applies && rep.bounds->repeated_even_interval)
                hi = std::min(hi, rep.bounds->repeated_even_interval->second);
        }
        if (lo > hi) {
            rep.crosscheck_ok = false;
            rep.crosscheck_failures.push_back("bounds contradict the computed distance interval");
        } else {
            rep.combined = Dist::interval(lo, hi);
        }
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

// ---- witness export: dense01 vector with a sublattice-split header ----

inline std::string export_witness(const BinVec& v, std::size_t sub1, std::size_t sub2,
                                  const std::string& side) {
    std::ostringstream out;
    out << "# qldpc witness side=" << side << " split=" << sub1 << "+" << sub2 << "\n";
    out << vec_to_01(v) << "\n";
    return out.str();
}

// ---- spec JSON ----

inline nlohmann::json mat_to_json(const BinMat& m) {
    nlohmann::json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    std::vector<std::string> data;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::string s(m.cols(), '0');
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m.get(i, c)) s[c] = '1';
        data.push_back(std::move(s));
    }
    j["data"] = std::move(data);
    return j;
}

inline BinMat mat_from_json(const nlohmann::json& j) {
    std::size_t rows = j.at("rows"), cols = j.at("cols");
    BinMat m(rows, cols);
    const auto& data = j.at("data");
    if (data.size() != rows) throw std::runtime_error("spec json: row count mismatch");
    for (std::size_t i = 0; i < rows; ++i) {
        const std::string s = data[i];
        if (s.size() != cols) throw std::runtime_error("spec json: column count mismatch");
        for (std::size_t c = 0; c < cols; ++c)
            if (s[c] == '1') m.set(i, c, true);
    }
    return m;
}

inline nlohmann::json spec_to_json(const HyperbicycleSpec& spec) {
    nlohmann::json j;
    j["version"] = 1;
    j["c"] = spec.c;
    j["chi"] = spec.chi;
    nlohmann::json a = nlohmann::json::array(), b = nlohmann::json::array();
    for (const auto& m : spec.a) a.push_back(mat_to_json(m));
    for (const auto& m : spec.b) b.push_back(mat_to_json(m));
    j["a"] = std::move(a);
    j["b"] = std::move(b);
    return j;
}

inline HyperbicycleSpec spec_from_json(const nlohmann::json& j) {
    HyperbicycleSpec spec;
    spec.c = j.at("c");
    spec.chi = j.at("chi");
    for (const auto& m : j.at("a")) spec.a.push_back(mat_from_json(m));
    for (const auto& m : j.at("b")) spec.b.push_back(mat_from_json(m));
    spec.validate();
    return spec;
}

// ---- planar layout (square circulant-block specs) ----
// Two interleaved sublattices on a (c*n1) x n2 grid of unit cells, one
// stabilizer generator of each type, chi-shift arrows at the wrap boundary,
// and the one-qubit-per-logical shaded region.

struct LayoutError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void layout_geometry_check(const HyperbicycleSpec& spec) {
    if (spec.r1() != spec.n1() || spec.r2() != spec.n2())
        throw LayoutError("layout: only square circulant-block specs draw on one grid "
                          "(two separate rectangles are not implemented)");
}

inline std::string render_layout_txt(const HyperbicycleSpec& spec) {
    layout_geometry_check(spec);
    CssCode code = hyperbicycle(spec);
    std::size_t n1 = spec.n1(), n2 = spec.n2(), c = spec.c;
    std::size_t W = c * n1, H = n2;
    // char grid: sublattice 1 at (2x, 2y), sublattice 2 at (2x+1, 2y+1)
    std::size_t gw = 2 * W, gh = 2 * H;
    std::vector<std::string> g(gh, std::string(gw, ' '));
    SymmetryDecomp dec = symmetry_decompose(spec);
    std::size_t k1 = dec.k1, kt2 = dec.kt2, kt1 = dec.kt1, k2 = dec.k2;
    auto sub1_xy = [&](std::size_t rho2, std::size_t kap, std::size_t j) {
        return std::pair<std::size_t, std::size_t>(2 * (kap * n1 + j), 2 * rho2);
    };
    auto sub2_xy = [&](std::size_t v2, std::size_t kap, std::size_t rho1) {
        return std::pair<std::size_t, std::size_t>(2 * (kap * n1 + rho1) + 1, 2 * v2 + 1);
    };
    for (std::size_t rho2 = 0; rho2 < n2; ++rho2)
        for (std::size_t kap = 0; kap < c; ++kap)
            for (std::size_t j = 0; j < n1; ++j) {
                auto [x, y] = sub1_xy(rho2, kap, j);
                bool shaded = (kap * n1 + j) < k1 && rho2 < kt2;
                g[y][x] = shaded ? 'o' : '.';
            }
    for (std::size_t v2 = 0; v2 < n2; ++v2)
        for (std::size_t kap = 0; kap < c; ++kap)
            for (std::size_t rho1 = 0; rho1 < n1; ++rho1) {
                auto [x, y] = sub2_xy(v2, kap, rho1);
                bool shaded = (kap * n1 + rho1) < kt1 && v2 < k2;
                g[y][x] = shaded ? 'o' : ',';
            }
    // one stabilizer generator of each type: X from row 0 of Gx, Z from row 0 of Gz
    std::size_t nsub1 = n2 * c * n1;
    auto mark = [&](const BinMat& gen, char cx) {
        for (std::size_t t = 0; t < code.n; ++t) {
            if (!gen.get(0, t)) continue;
            std::size_t x, y;
            if (t < nsub1) {
                std::size_t rho2 = t / (c * n1), rem = t % (c * n1);
                std::tie(x, y) = sub1_xy(rho2, rem / n1, rem % n1);
            } else {
                std::size_t u = t - nsub1;
                std::size_t v2 = u / (c * n1), rem = u % (c * n1);
                std::tie(x, y) = sub2_xy(v2, rem / n1, rem % n1);
            }
            g[y][x] = (g[y][x] == 'X' || g[y][x] == 'Z' || g[y][x] == 'B') ? 'B' : cx;
        }
    };
    mark(code.gx, 'X');
    mark(code.gz, 'Z');

    std::ostringstream out;
    out << "block-cyclic layout: c=" << c << " chi=" << spec.chi << " blocks " << n1 << "x" << n2
        << "\n";
    out << "legend: . sublattice1  , sublattice2  o logical region  X/Z generator  B overlap\n";
    out << "wrap: left/right periodic; top/bottom glued with a shift of " << spec.chi
        << " blocks (" << spec.chi * n1 << " cells) ->\n";
    for (std::size_t y = 0; y < gh; ++y) out << g[y] << "\n";
    return out.str();
}

inline std::string render_layout_svg(const HyperbicycleSpec& spec) {
    layout_geometry_check(spec);
    CssCode code = hyperbicycle(spec);
    std::size_t n1 = spec.n1(), n2 = spec.n2(), c = spec.c;
    std::size_t W = c * n1, H = n2;
    const int cell = 24;
    std::ostringstream s;
    s << "<svg xmlns='http://www.w3.org/2000/svg' width='" << (W + 2) * cell << "' height='"
      << (H + 3) * cell << "'>\n";
    SymmetryDecomp dec = symmetry_decompose(spec);
    std::size_t nsub1 = n2 * c * n1;
    auto pos = [&](std::size_t t) {
        double x, y;
        if (t < nsub1) {
            std::size_t rho2 = t / (c * n1), rem = t % (c * n1);
            x = rem;
            y = rho2;
        } else {
            std::size_t u = t - nsub1;
            std::size_t v2 = u / (c * n1), rem = u % (c * n1);
            x = rem + 0.5;
            y = v2 + 0.5;
        }
        return std::pair<double, double>((x + 1) * cell, (y + 1) * cell);
    };
    // shaded logical region
    s << "<rect x='" << cell << "' y='" << cell << "' width='" << dec.k1 * cell << "' height='"
      << dec.kt2 * cell << "' fill='#dddddd'/>\n";
    // qubits
    for (std::size_t t = 0; t < code.n; ++t) {
        auto [x, y] = pos(t);
        s << "<circle cx='" << x << "' cy='" << y << "' r='4' fill='" << (t < nsub1 ? "#555" : "#aaa")
          << "'/>\n";
    }
    auto draw_gen = [&](const BinMat& gmat, const char* color, const char* cls) {
        for (std::size_t t = 0; t < code.n; ++t)
            if (gmat.get(0, t)) {
                auto [x, y] = pos(t);
                s << "<rect x='" << x - 7 << "' y='" << y - 7
                  << "' width='14' height='14' fill='none' stroke='" << color
                  << "' stroke-width='2' class='" << cls << "'/>\n";
            }
    };
    draw_gen(code.gx, "#cc2222", "x"); // X generator: red
    draw_gen(code.gz, "#2222cc", "z"); // Z generator: blue
    // overlap: green markers where both generators touch
    for (std::size_t t = 0; t < code.n; ++t)
        if (code.gx.get(0, t) && code.gz.get(0, t)) {
            auto [x, y] = pos(t);
            s << "<rect x='" << x - 9 << "' y='" << y - 9
              << "' width='18' height='18' fill='none' stroke='#22aa22' stroke-width='2'"
                 " class='overlap'/>\n";
        }
    // chi-shift arrows on the top boundary, one per block
    for (std::size_t b = 0; b < c; ++b) {
        double x0 = (b * n1 + 1) * cell, x1 = x0 + spec.chi * n1 * cell * 0.4;
        s << "<line x1='" << x0 << "' y1='" << cell / 2 << "' x2='" << x1 << "' y2='" << cell / 2
          << "' stroke='#333' stroke-width='1.5' marker-end='url(#a)'/>\n";
    }
    s << "<defs><marker id='a' markerWidth='8' markerHeight='8' refX='6' refY='3' orient='auto'>"
         "<path d='M0,0 L6,3 L0,6 z' fill='#333'/></marker></defs>\n";
    s << "<text x='" << cell << "' y='" << (H + 2) * cell << "' font-size='12'>c=" << c
      << " chi=" << spec.chi << " wrap shift " << spec.chi << " blocks</text>\n";
    s << "</svg>\n";
    return s.str();
}

} // namespace qldpc
