#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pminor/digraph.hpp"
#include "pminor/equivalence.hpp"
#include "pminor/hlclan.hpp"
#include "pminor/io.hpp"
#include "pminor/minors.hpp"
#include "pminor/similarity.hpp"

using nlohmann::json;
using namespace pminor;

namespace {

constexpr const char* kFormatHelp =
    "Matrix files hold the dimension n followed by n*n whitespace-separated "
    "integers in row-major order; skew-symmetry is required. Example 2x2:\n"
    "  2\n  0 1\n  -1 0";

json minors_json(const SkewMatrix& a, std::size_t order) {
    MinorFingerprint fp = minors_of_order(a, order);
    json minors = json::array();
    for (const auto& [mask, value] : fp.values)
        minors.push_back(
            {{"subset", subset_to_json(VertexSubset(mask))},
             {"value", value.str()}});
    return json{{"n", a.dim()}, {"order", order}, {"minors", minors}};
}

int run_pm(const std::string& path, std::optional<std::size_t> order) {
    SkewMatrix a = read_skew_matrix_file(path);
    if (order) {
        std::cout << minors_json(a, *order).dump(2) << '\n';
        return 0;
    }
    json all = json::array();
    for (std::size_t k = 0; k <= a.dim(); ++k)
        all.push_back(minors_json(a, k));
    std::cout << json{{"n", a.dim()}, {"fingerprints", all}}.dump(2) << '\n';
    return 0;
}

int run_clans(const std::string& path) {
    SkewMatrix a = read_skew_matrix_file(path);
    HlClanList list = enumerate_hl_clans(a);
    json clans = json::array();
    for (VertexSubset x : list.clans)
        clans.push_back({{"subset", subset_to_json(x)},
                         {"trivial", HlClanList::trivial(x, list.n)}});
    std::cout << json{{"n", list.n}, {"clans", clans}}.dump(2) << '\n';
    return 0;
}

int run_invert(const std::string& path, const std::string& subset_csv,
               bool require_clan, const std::string& out_path) {
    SkewMatrix a = read_skew_matrix_file(path);
    VertexSubset x = subset_from_csv(subset_csv, a.dim());
    SkewMatrix r = require_clan ? invert_checked(a, x) : invert(a, x);
    if (out_path.empty()) {
        write_skew_matrix(std::cout, r);
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
        write_skew_matrix(out, r);
    }
    return 0;
}

int run_triples(const std::string& path_a, const std::string& path_b,
                bool as_json) {
    Orientation g1 = from_skew(read_skew_matrix_file(path_a));
    Orientation g2 = from_skew(read_skew_matrix_file(path_b));
    TripleScanResult scan = triples_hemimorphic(g1, g2);
    const std::size_t n = g1.dim();
    json triples = json::array();
    for (std::size_t i = 0; i + 2 < n; ++i)
        for (std::size_t j = i + 1; j + 1 < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                VertexSubset t = VertexSubset::of({i, j, k});
                TripleClass c1 = triple_class(g1, t);
                TripleClass c2 = triple_class(g2, t);
                std::string lhs = std::string(to_string(c1.shape)) + "/" +
                                  to_string(c1.kind);
                std::string rhs = std::string(to_string(c2.shape)) + "/" +
                                  to_string(c2.kind);
                if (as_json) {
                    triples.push_back({{"subset", subset_to_json(t)},
                                       {"lhs", lhs},
                                       {"rhs", rhs},
                                       {"equal", c1 == c2}});
                } else {
                    std::cout << '{';
                    auto idx = t.indices();
                    for (std::size_t p = 0; p < idx.size(); ++p)
                        std::cout << (p ? "," : "") << idx[p] + 1;
                    std::cout << "}: " << lhs << "  " << rhs
                              << (c1 == c2 ? "" : "  MISMATCH") << '\n';
                }
            }
    if (as_json) {
        json out{{"n", n}, {"triples", triples}};
        out["first_mismatch"] =
            scan.all_equal ? json(nullptr) : subset_to_json(scan.witness);
        std::cout << out.dump(2) << '\n';
    } else if (!scan.all_equal) {
        std::cout << "first mismatch: " << subset_to_json(scan.witness).dump()
                  << '\n';
    } else {
        std::cout << "all 3-subsets fall in equal classes\n";
    }
    return 0;
}

json witness_json(const SimilarityWitness& w) {
    json diag = json::array();
    for (const Rational& d : w.diagonal.entries) diag.push_back(d.str());
    return json{{"found", true},
                {"diagonal", diag},
                {"transposed", w.transposed}};
}

int run_similar(const std::string& path_a, const std::string& path_b,
                bool as_json) {
    SkewMatrix a = read_skew_matrix_file(path_a);
    SkewMatrix b = read_skew_matrix_file(path_b);
    SimilarityDecision d = find_similarity_up_to_transpose(a, b);
    if (d.witness) {
        std::cout << witness_json(*d.witness).dump(2) << '\n';
        return 0;
    }
    if (as_json) {
        json out{{"found", false}};
        if (d.pattern_mismatch)
            out["pattern_mismatch"] = {d.pattern_mismatch->first + 1,
                                       d.pattern_mismatch->second + 1};
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << "none\n";
    }
    return 0;
}

int run_loewy(const std::string& path) {
    SkewMatrix a = read_skew_matrix_file(path);
    LoewyResult r = loewy_condition(a);
    json out{{"holds", r.holds}};
    if (!r.holds) {
        out["failure"] = r.failure == LoewyResult::Failure::Reducible
                             ? "reducible"
                             : "low_rank_partition";
        out["witness"] = subset_to_json(r.witness);
    }
    std::cout << out.dump(2) << '\n';
    return 0;
}

json verdict_json(const EquivVerdict& v) {
    json out;
    switch (v.status) {
        case EquivVerdict::Status::Equivalent:
            out["status"] = "EQUIVALENT";
            out["certificate"] = certificate_to_json(*v.certificate);
            break;
        case EquivVerdict::Status::NotEquivalent: {
            out["status"] = "NOT_EQUIVALENT";
            out["witness"] = {{"subset", subset_to_json(v.witness->subset)},
                              {"minor_a", v.witness->lhs.str()},
                              {"minor_b", v.witness->rhs.str()}};
            break;
        }
        case EquivVerdict::Status::Undecided:
            out["status"] = "UNDECIDED";
            break;
    }
    if (!v.diagnostics.empty()) out["diagnostics"] = v.diagnostics;
    return out;
}

int run_equiv(const std::string& path_a, const std::string& path_b,
              std::uint64_t budget) {
    SkewMatrix a = read_skew_matrix_file(path_a);
    SkewMatrix b = read_skew_matrix_file(path_b);
    EquivVerdict v = decide_equivalence(a, b, SearchBudget{budget});
    std::cout << verdict_json(v).dump(2) << '\n';
    return v.status == EquivVerdict::Status::Undecided ? 2 : 0;
}

int run_verify(const std::string& path_a, const std::string& cert_path,
               const std::string& path_b) {
    SkewMatrix a = read_skew_matrix_file(path_a);
    SkewMatrix b = read_skew_matrix_file(path_b);
    std::ifstream in(cert_path);
    if (!in) throw std::runtime_error("cannot open '" + cert_path + "'");
    json j = json::parse(in);
    ReversalCertificate cert = certificate_from_json(j, a.dim());
    CertificateCheck check = verify_certificate(a, cert, b);
    json out{{"valid", check.ok}};
    if (!check.ok) {
        out["failing_step"] = check.failing_step;
        switch (check.reason) {
            case CertificateCheck::Why::NotAClan:
                out["reason"] = "step is not an HL-clan";
                break;
            case CertificateCheck::Why::Endpoint:
                out["reason"] = "final matrix differs from target";
                break;
            case CertificateCheck::Why::DimensionMismatch:
                out["reason"] = "dimension mismatch";
                break;
            default:
                break;
        }
    }
    std::cout << out.dump(2) << '\n';
    return 0;
}

json report_json(const ScanReport& r) {
    json counterexamples = json::array();
    for (const auto& [a, b] : r.counterexamples)
        counterexamples.push_back({{"a", to_text(a)}, {"b", to_text(b)}});
    json group_hist = json::object();
    for (const auto& [size, count] : r.group_size_histogram)
        group_hist[std::to_string(size)] = count;
    json orbit_hist = json::object();
    for (const auto& [size, count] : r.orbit_size_histogram)
        orbit_hist[std::to_string(size)] = count;
    return json{
        {"n", r.n},
        {"entries", r.entries == EntrySet::PlusMinusOne ? "pm1" : "pm01"},
        {"exhaustive", r.exhaustive},
        {"total", r.total},
        {"fingerprint_groups", r.fingerprint_groups},
        {"orbits", r.orbits},
        {"largest_group", r.largest_group},
        {"largest_orbit", r.largest_orbit},
        {"max_certificate_length", r.max_certificate_length},
        {"complete", r.complete},
        {"counterexamples", counterexamples},
        {"group_size_histogram", group_hist},
        {"orbit_size_histogram", orbit_hist}};
}

int run_scan(std::size_t n, const std::string& entries, bool exhaustive,
             std::uint64_t samples, std::uint64_t seed, std::uint64_t budget) {
    ScanOptions opt;
    opt.n = n;
    if (entries == "pm1")
        opt.entries = EntrySet::PlusMinusOne;
    else if (entries == "pm01")
        opt.entries = EntrySet::SignOrZero;
    else
        throw CLI::ValidationError("--entries must be pm1 or pm01");
    opt.exhaustive = exhaustive || samples == 0;
    opt.samples = samples;
    opt.seed = seed;
    opt.budget = SearchBudget{budget};
    ScanReport report = fingerprint_orbit_scan(opt);
    std::cout << report_json(report).dump(2) << '\n';
    return report.complete ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact tools for principal minors of skew-symmetric integer "
        "matrices: fingerprints, HL-clans, clan reversals, diagonal "
        "similarity and reversal-equivalence certificates."};
    app.footer(kFormatHelp);
    app.require_subcommand(1);

    std::string path_a, path_b, cert_path, subset_csv, out_path;
    std::optional<std::size_t> order;
    bool require_clan = false, as_json = false, exhaustive = false;
    std::uint64_t budget = 1'000'000, samples = 0, seed = 1;
    std::size_t scan_n = 4;
    std::string entries = "pm1";

    auto* pm = app.add_subcommand(
        "pm", "Print principal-minor fingerprints as JSON");
    pm->add_option("matrix", path_a, "matrix file")->required();
    pm->add_option("--order", order, "restrict to one order");

    auto* clans = app.add_subcommand(
        "clans", "List all HL-clans of a matrix as JSON");
    clans->add_option("matrix", path_a, "matrix file")->required();

    auto* inv = app.add_subcommand(
        "invert", "Negate the entries inside a subset and print the matrix");
    inv->add_option("matrix", path_a, "matrix file")->required();
    inv->add_option("--subset", subset_csv, "1-based indices, e.g. 1,3,4")
        ->required();
    inv->add_flag("--require-clan", require_clan,
                  "fail unless the subset is an HL-clan");
    inv->add_option("-o,--output", out_path, "write to a file instead");

    auto* triples = app.add_subcommand(
        "triples",
        "Classify every 3-subset of two orientations and report mismatches");
    triples->add_option("matrix_a", path_a, "matrix file")->required();
    triples->add_option("matrix_b", path_b, "matrix file")->required();
    triples->add_flag("--json", as_json, "JSON output");

    auto* similar = app.add_subcommand(
        "similar", "Search for a diagonal similarity up to transposition");
    similar->add_option("matrix_a", path_a, "matrix file")->required();
    similar->add_option("matrix_b", path_b, "matrix file")->required();
    similar->add_flag("--json", as_json, "JSON output also when none exists");

    auto* loewy = app.add_subcommand(
        "loewy", "Check irreducibility plus the bipartition rank condition");
    loewy->add_option("matrix", path_a, "matrix file")->required();

    auto* equiv = app.add_subcommand(
        "equiv",
        "Decide reversal equivalence of two {-1,0,1} matrices with nonzero "
        "first rows");
    equiv->add_option("matrix_a", path_a, "matrix file")->required();
    equiv->add_option("matrix_b", path_b, "matrix file")->required();
    equiv->add_option("--budget", budget, "search-state budget");

    auto* verify = app.add_subcommand(
        "verify", "Check a reversal certificate step by step");
    verify->add_option("matrix_a", path_a, "source matrix file")->required();
    verify->add_option("certificate", cert_path, "certificate JSON file")
        ->required();
    verify->add_option("matrix_b", path_b, "target matrix file")->required();

    auto* scan = app.add_subcommand(
        "scan",
        "Group matrices by fingerprint and verify each group is one orbit");
    scan->add_option("--n", scan_n, "dimension")->required();
    scan->add_option("--entries", entries, "pm1 or pm01");
    scan->add_flag("--exhaustive", exhaustive, "enumerate the whole space");
    scan->add_option("--samples", samples, "randomized sample count");
    scan->add_option("--seed", seed, "randomized mode RNG seed");
    scan->add_option("--budget", budget, "per-orbit search-state budget");

    CLI11_PARSE(app, argc, argv);

    try {
        if (pm->parsed()) return run_pm(path_a, order);
        if (clans->parsed()) return run_clans(path_a);
        if (inv->parsed())
            return run_invert(path_a, subset_csv, require_clan, out_path);
        if (triples->parsed()) return run_triples(path_a, path_b, as_json);
        if (similar->parsed()) return run_similar(path_a, path_b, as_json);
        if (loewy->parsed()) return run_loewy(path_a);
        if (equiv->parsed()) return run_equiv(path_a, path_b, budget);
        if (verify->parsed()) return run_verify(path_a, cert_path, path_b);
        if (scan->parsed())
            return run_scan(scan_n, entries, exhaustive, samples, seed,
                            budget);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
