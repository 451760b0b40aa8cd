// Command-line front end: construct the code families, analyze parameters
// and distance, run the built-in example catalog, and emit layouts.

#include "qldpc/catalog.hpp"
#include "qldpc/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace fs = std::filesystem;
using namespace qldpc;

namespace {

std::size_t default_workers() {
    if (const char* env = std::getenv("QLDPC_WORKERS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<std::size_t>(v);
    }
    return 1;
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
}

BinMat read_matrix_file(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    if (path.extension() == ".alist") return read_alist(in);
    return read_dense01(in);
}

struct FamilyArgs {
    std::string family;
    std::string f1, f2, h;
    std::size_t n = 0, n1 = 0, c = 1, chi = 1;
    int variant = 1;
    std::size_t L = 2;
    std::string spec_file;
};

BuiltCode build_from_args(const FamilyArgs& fa) {
    if (!fa.spec_file.empty()) {
        std::ifstream in(fa.spec_file);
        if (!in) throw std::runtime_error("cannot read " + fa.spec_file);
        nlohmann::json j;
        in >> j;
        BuiltCode bc;
        HyperbicycleSpec spec = spec_from_json(j);
        Provenance prov;
        prov.family = "hyperbicycle";
        prov.params = {{"spec", fa.spec_file}};
        bc.css = hyperbicycle(spec, prov);
        bc.spec = std::move(spec);
        return bc;
    }
    CatalogEntry e;
    e.name = "cli";
    e.family = fa.family;
    if (fa.family == "generalized-bicycle" || fa.family == "noncss-bicycle")
        e.params = {{"f1", fa.f1}, {"f2", fa.f2}, {"n", std::to_string(fa.n)}};
    else if (fa.family == "two-circulant" || fa.family == "repeated")
        e.params = {{"h", fa.h},
                    {"n1", std::to_string(fa.n1)},
                    {"c", std::to_string(fa.c)},
                    {"chi", std::to_string(fa.chi)}};
    else if (fa.family == "hypergraph-product-circulant")
        e.params = {{"h", fa.h}, {"n", std::to_string(fa.n)}};
    else if (fa.family == "noncss-palindromic")
        e.params = {{"h", fa.h}, {"n", std::to_string(fa.n)}};
    else if (fa.family == "haah")
        e.params = {{"variant", std::to_string(fa.variant)}, {"L", std::to_string(fa.L)}};
    else
        throw std::runtime_error("unknown family: " + fa.family);
    return build_catalog_code(e);
}

void add_family_flags(CLI::App* cmd, FamilyArgs& fa) {
    cmd->add_option("--family", fa.family,
                    "generalized-bicycle | noncss-bicycle | two-circulant | repeated | "
                    "hypergraph-product-circulant | noncss-palindromic | haah | hyperbicycle");
    cmd->add_option("--f1", fa.f1, "first circulant polynomial, e.g. 1+x^3");
    cmd->add_option("--f2", fa.f2, "second circulant polynomial");
    cmd->add_option("--hpoly", fa.h, "check polynomial");
    cmd->add_option("--n", fa.n, "circulant size");
    cmd->add_option("--n1", fa.n1, "block size");
    cmd->add_option("--c", fa.c, "number of cyclic blocks");
    cmd->add_option("--chi", fa.chi, "boundary shift (coprime with c)");
    cmd->add_option("--variant", fa.variant, "tensor-product code variant 1..4");
    cmd->add_option("--L", fa.L, "tensor-product lattice size");
    cmd->add_option("--spec", fa.spec_file, "spec JSON file (family hyperbicycle)");
}

int cmd_construct(const FamilyArgs& fa, const std::string& outdir) {
    BuiltCode bc = build_from_args(fa);
    fs::path dir(outdir);
    fs::create_directories(dir);
    if (bc.css) {
        write_file(dir / "gx.dense01", write_dense01(bc.css->gx));
        write_file(dir / "gz.dense01", write_dense01(bc.css->gz));
        write_file(dir / "gx.alist", write_alist(bc.css->gx));
        write_file(dir / "gz.alist", write_alist(bc.css->gz));
    } else {
        write_file(dir / "h.dense01", write_dense01(bc.noncss->h));
        write_file(dir / "h.alist", write_alist(bc.noncss->h));
    }
    if (bc.spec) {
        std::ofstream out(dir / "spec.json");
        out << spec_to_json(*bc.spec).dump(2) << "\n";
    }
    std::cout << "family=" << (bc.css ? bc.css->provenance.family : bc.noncss->provenance.family)
              << " N=" << bc.n() << " K=" << bc.k() << "\n";
    return 0;
}

BuiltCode load_code(const FamilyArgs& fa, const std::string& gx_file, const std::string& gz_file,
                    const std::string& h_file) {
    if (!gx_file.empty()) {
        BuiltCode bc;
        bc.css = CssCode(read_matrix_file(gx_file), read_matrix_file(gz_file));
        return bc;
    }
    if (!h_file.empty()) {
        BuiltCode bc;
        bc.noncss = NonCssCode(read_matrix_file(h_file));
        return bc;
    }
    return build_from_args(fa);
}

int cmd_analyze(const FamilyArgs& fa, const std::string& gx_file, const std::string& gz_file,
                const std::string& h_file, const DistanceOptions& opt, const std::string& out,
                const std::string& witness_out) {
    BuiltCode bc = load_code(fa, gx_file, gz_file, h_file);
    AnalysisReport rep = analyze(bc, opt);
    nlohmann::json j = report_to_json(rep);
    if (!out.empty())
        write_file(out, j.dump(2) + "\n");
    else
        std::cout << j.dump(2) << "\n";
    if (!witness_out.empty() && rep.distance.witness) {
        std::size_t sub1 = bc.spec ? bc.spec->r2() * bc.spec->c * bc.spec->n1() : rep.n / 2;
        write_file(witness_out, export_witness(*rep.distance.witness, sub1,
                                               rep.distance.witness->size() - sub1,
                                               rep.distance.witness_side));
    }
    std::cout << "N=" << rep.n << " K=" << rep.k.k_rank;
    if (rep.distance.applicable)
        std::cout << " D=" << rep.combined.to_string();
    else
        std::cout << " D=n/a";
    std::cout << (rep.crosscheck_ok ? " crosschecks=ok" : " crosschecks=FAILED") << "\n";
    if (!rep.crosscheck_ok)
        for (const auto& f : rep.crosscheck_failures) std::cerr << "crosscheck: " << f << "\n";
    return rep.crosscheck_ok ? 0 : 2;
}

int cmd_classical(const std::string& h_file, const std::string& poly, std::size_t n,
                  std::size_t c, const std::string& class_poly, std::size_t enum_cap) {
    BinMat H = h_file.empty() ? circulant(n, parse_bin_poly(poly)) : read_matrix_file(h_file);
    ClassicalParams p = classical_params(H, enum_cap);
    std::cout << "[" << p.n << "," << p.k << "," << p.d.to_string() << "]\n";
    if (!class_poly.empty()) {
        Dist sd = subset_distance(H, c, parse_bin_poly(class_poly), BlockAxis::Left, enum_cap);
        std::cout << "subset distance for p=" << class_poly << ": " << sd.to_string() << "\n";
    }
    return 0;
}

int cmd_verify_paper(const std::string& tier, std::uint64_t seed, std::size_t workers) {
    bool full = tier == "full";
    bool all_ok = true;
    std::printf("%-22s %-14s %-6s %-6s %-10s %s\n", "name", "expected", "N", "K", "D", "status");
    for (const auto& e : paper_catalog()) {
        bool with_distance = full || e.quick_distance;
        CatalogVerifyResult r = verify_catalog_entry(e, with_distance, seed, workers);
        std::string expd = e.expect_d ? std::to_string(*e.expect_d)
                           : e.expect_d_range
                               ? "[" + std::to_string(e.expect_d_range->first) + "," +
                                     std::to_string(e.expect_d_range->second) + "]"
                               : "-";
        std::string expect = "[[" + std::to_string(e.expect_n) + "," + std::to_string(e.expect_k) +
                             (expd == "-" ? "" : "," + expd) + "]]";
        std::printf("%-22s %-14s %-6zu %-6ld %-10s %s\n", e.name.c_str(), expect.c_str(), r.got_n,
                    r.got_k, r.distance_checked ? r.got_d.to_string().c_str() : "-",
                    r.ok() ? "ok" : "MISMATCH");
        all_ok = all_ok && r.ok();
    }
    std::cout << (all_ok ? "all entries verified\n" : "MISMATCHES FOUND\n");
    return all_ok ? 0 : 1;
}

int cmd_catalog() {
    for (const auto& e : paper_catalog()) {
        std::string expd = e.expect_d ? std::to_string(*e.expect_d)
                           : e.expect_d_range
                               ? "[" + std::to_string(e.expect_d_range->first) + "," +
                                     std::to_string(e.expect_d_range->second) + "]"
                               : "?";
        std::cout << e.name << ": [[" << e.expect_n << "," << e.expect_k << "," << expd << "]] "
                  << e.family;
        for (const auto& [k, v] : e.params) std::cout << " " << k << "=" << v;
        std::cout << "\n";
    }
    return 0;
}

int cmd_layout(const FamilyArgs& fa, const std::string& out) {
    BuiltCode bc = build_from_args(fa);
    if (!bc.spec) throw LayoutError("layout: this family carries no block spec");
    std::string rendered;
    if (out.size() >= 4 && out.substr(out.size() - 4) == ".svg")
        rendered = render_layout_svg(*bc.spec);
    else
        rendered = render_layout_txt(*bc.spec);
    if (out.empty() || out == "-")
        std::cout << rendered;
    else
        write_file(out, rendered);
    return 0;
}

int cmd_export(const std::string& in, const std::string& format, const std::string& out) {
    BinMat m = read_matrix_file(in);
    std::string payload = format == "alist" ? write_alist(m) : write_dense01(m);
    if (out.empty() || out == "-")
        std::cout << payload;
    else
        write_file(out, payload);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"block-cyclic CSS/non-CSS code constructor and analyzer"};
    app.require_subcommand(1);

    FamilyArgs fa;
    std::string outdir = ".", out, witness_out, gx_file, gz_file, h_file;
    DistanceOptions opt;
    opt.workers = default_workers();
    std::string tier = "quick";
    std::string cl_h_file, cl_poly, class_poly, export_in, export_fmt = "dense01";
    std::size_t cl_n = 0, cl_c = 1, enum_cap = 26;

    CLI::App* c_construct = app.add_subcommand("construct", "build a code and write its matrices");
    add_family_flags(c_construct, fa);
    c_construct->add_option("--out", outdir, "output directory");

    CLI::App* c_analyze = app.add_subcommand("analyze", "full parameter and distance report");
    add_family_flags(c_analyze, fa);
    c_analyze->add_option("--gx", gx_file, "Gx matrix file (dense01 or alist)");
    c_analyze->add_option("--gz", gz_file, "Gz matrix file");
    c_analyze->add_option("--hmat", h_file, "non-CSS (A|B) matrix file");
    c_analyze->add_option("--distance-budget", opt.rand_iters, "randomized search iterations");
    c_analyze->add_option("--enum-cap", opt.enum_weight_cap, "enumeration weight cap (0 = auto)");
    c_analyze->add_option("--seed", opt.seed, "random seed");
    c_analyze->add_option("--workers", opt.workers, "worker threads");
    c_analyze->add_option("--out", out, "report JSON path (default stdout)");
    c_analyze->add_option("--witness-out", witness_out, "write the distance witness");

    CLI::App* c_distance = app.add_subcommand("distance", "distance interval only");
    add_family_flags(c_distance, fa);
    c_distance->add_option("--gx", gx_file, "Gx matrix file");
    c_distance->add_option("--gz", gz_file, "Gz matrix file");
    c_distance->add_option("--hmat", h_file, "non-CSS (A|B) matrix file");
    c_distance->add_option("--distance-budget", opt.rand_iters, "randomized search iterations");
    c_distance->add_option("--enum-cap", opt.enum_weight_cap, "enumeration weight cap (0 = auto)");
    c_distance->add_option("--seed", opt.seed, "random seed");
    c_distance->add_option("--workers", opt.workers, "worker threads");
    c_distance->add_option("--witness-out", witness_out, "write the distance witness");

    CLI::App* c_classical = app.add_subcommand("classical", "classical code parameters");
    c_classical->add_option("--hmat", cl_h_file, "parity check matrix file");
    c_classical->add_option("--poly", cl_poly, "circulant polynomial");
    c_classical->add_option("--n", cl_n, "circulant size");
    c_classical->add_option("--c", cl_c, "block count for subset distance");
    c_classical->add_option("--class-poly", class_poly, "symmetry class polynomial");
    c_classical->add_option("--enum-cap", enum_cap, "codeword enumeration cap (log2)");

    CLI::App* c_verify = app.add_subcommand("verify-paper", "run the built-in example catalog");
    c_verify->add_option("--tier", tier, "quick | full");
    c_verify->add_option("--seed", opt.seed, "random seed");
    c_verify->add_option("--workers", opt.workers, "worker threads");

    app.add_subcommand("catalog", "list the built-in example catalog");

    CLI::App* c_layout = app.add_subcommand("layout", "render the planar layout");
    add_family_flags(c_layout, fa);
    c_layout->add_option("--out", out, "output path (.svg or .txt; default stdout)");

    CLI::App* c_export = app.add_subcommand("export", "convert matrix files");
    c_export->add_option("--in", export_in, "input matrix (dense01 or .alist)")->required();
    c_export->add_option("--format", export_fmt, "dense01 | alist");
    c_export->add_option("--out", out, "output path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand("construct")) return cmd_construct(fa, outdir);
        if (app.got_subcommand("analyze"))
            return cmd_analyze(fa, gx_file, gz_file, h_file, opt, out, witness_out);
        if (app.got_subcommand("distance"))
            return cmd_analyze(fa, gx_file, gz_file, h_file, opt, "", witness_out);
        if (app.got_subcommand("classical"))
            return cmd_classical(cl_h_file, cl_poly, cl_n, cl_c, class_poly, enum_cap);
        if (app.got_subcommand("verify-paper")) return cmd_verify_paper(tier, opt.seed, opt.workers);
        if (app.got_subcommand("catalog")) return cmd_catalog();
        if (app.got_subcommand("layout")) return cmd_layout(fa, out);
        if (app.got_subcommand("export")) return cmd_export(export_in, export_fmt, out);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}
