// Command-line surface: generation, certification, analysis, sparsification,
// pattern detection and scaling sweeps with file-based, reproducible I/O.
//
// Exit codes: 0 success/verified, 2 usage or parse error, 3 property violated
// or witness found, 4 attempts exhausted.

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "hasse/analysis.hpp"
#include "hasse/errors.hpp"
#include "hasse/geometry.hpp"
#include "hasse/hasse_graph.hpp"
#include "hasse/json_io.hpp"
#include "hasse/manifest.hpp"
#include "hasse/patterns.hpp"
#include "hasse/sparsify.hpp"

namespace {

using namespace hasse;
using nlohmann::json;
using Clock = std::chrono::steady_clock;

double elapsed_s(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string girth_str(const std::optional<int>& g) { return g ? std::to_string(*g) : "inf"; }

IncidenceStructure load_structure(const std::string& path) {
    return structure_from_json(read_json_file(path));  // validates
}

OrderedGraph graph_from_json(const json& j) {
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    OrderedGraph g;
    g.graph = Graph(j.at("n").get<int>(), std::move(edges));
    if (j.contains("labels"))
        for (const auto& l : j.at("labels"))
            g.labels.emplace_back(l.at(0).get<int>(), l.at(1).get<int>());
    return g;
}

std::string default_report_path(const std::string& out) {
    std::filesystem::path p(out);
    std::filesystem::path stem = p;
    stem.replace_extension();
    return stem.string() + ".report.json";
}

void finish_manifest(RunManifest& m, const std::vector<std::string>& inputs,
                     const std::vector<std::string>& outputs, const std::string& anchor) {
    for (const auto& path : inputs) m.inputs.emplace_back(path, sha256_file(path));
    for (const auto& path : outputs) m.outputs.emplace_back(path, sha256_file(path));
    write_manifest(m, anchor);
}

struct ScanRow {
    int m = 0;
    std::int64_t n_part = 0;
    std::string girth_g, alpha_status, chi_status;
    int n = 0, edges = 0, alpha = 0, chi_lb = 0, chi_ub = 0, chi_incidence_lower = 0;
    std::uint64_t seed = 0;
    bool failed = false;
};

constexpr const char* kScanHeader =
    "m,N,n,edges,girth_g,alpha_status,alpha,chi_status,chi_lb,chi_ub,chi_incidence_lower,seed";

void write_scan_csv(const std::string& path, const std::vector<ScanRow>& rows) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << kScanHeader << "\n";
    for (const ScanRow& r : rows) {
        if (r.failed) {
            out << r.m << ',' << r.n_part << ",0,0,inf,failed,0,failed,0,0,0," << r.seed << "\n";
            continue;
        }
        out << r.m << ',' << r.n_part << ',' << r.n << ',' << r.edges << ',' << r.girth_g << ','
            << r.alpha_status << ',' << r.alpha << ',' << r.chi_status << ',' << r.chi_lb << ','
            << r.chi_ub << ',' << r.chi_incidence_lower << ',' << r.seed << "\n";
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

const char* status_str(SolveStatus s) { return s == SolveStatus::exact ? "exact" : "bounded"; }

int cmd_generate(std::int64_t m, const std::string& out) {
    const auto t0 = Clock::now();
    const IncidenceStructure s = standard_config(m);
    write_json_file(out, to_json(s));
    RunManifest man;
    man.command = "generate";
    man.params = {{"m", m}, {"out", out}};
    finish_manifest(man, {}, {out}, out);
    std::printf("generate: m=%lld points=%zu lines=%zu incidences=%zu -> %s (%.3fs)\n",
                static_cast<long long>(m), s.points.size(), s.lines.size(), s.incidences.size(),
                out.c_str(), elapsed_s(t0));
    return 0;
}

int cmd_verify(const std::string& in, bool as_graph) {
    const auto t0 = Clock::now();
    OrderedGraph g;
    if (as_graph) {
        g = graph_from_json(read_json_file(in));
    } else {
        g = build_hasse_graph(load_structure(in));
    }
    const auto cert = verify_no_monotone_cycle(g);
    if (!cert.pass) {
        std::printf("FAIL: monotone cycle witness: ");
        for (int v : cert.witness) std::printf("%d ", v);
        std::printf("\n");
        return 3;
    }
    const auto tri = is_triangle_free(g.graph);
    if (!tri.triangle_free) {
        std::printf("FAIL: triangle witness: %d %d %d\n", tri.witness[0], tri.witness[1],
                    tri.witness[2]);
        return 3;
    }
    const auto gr = girth(g.graph);
    std::printf("PASS: n=%d edges=%d monotone-cycle-free triangle-free girth=%s (%.3fs)\n",
                g.graph.num_vertices(), g.graph.num_edges(), girth_str(gr.girth).c_str(),
                elapsed_s(t0));
    return 0;
}

int cmd_analyze(const std::string& in, const std::string& out, std::uint64_t budget_nodes) {
    const auto t0 = Clock::now();
    const IncidenceStructure s = load_structure(in);
    SearchBudget budget;
    budget.max_nodes = budget_nodes;
    const AnalysisReport rep = analyze_structure(s, budget);
    write_json_file(out, to_json(rep));
    RunManifest man;
    man.command = "analyze";
    man.params = {{"in", in}, {"out", out}, {"budget", budget_nodes}};
    finish_manifest(man, {in}, {out}, out);
    std::printf(
        "analyze: n=%d edges=%d girth=%s alpha=%s[%d,%d] chi=%s[%d,%d] chi_incidence_lower=%d "
        "-> %s (%.3fs)\n",
        rep.n, rep.edges, girth_str(rep.girth).c_str(), status_str(rep.alpha.status),
        rep.alpha.lower, rep.alpha.upper, status_str(rep.chi.status), rep.chi.lower, rep.chi.upper,
        rep.chi_incidence_lower, out.c_str(), elapsed_s(t0));
    return 0;
}

int cmd_sparsify(const std::string& in, const std::string& out, std::string report_path,
                 const SparsifyParams& params, bool q_given) {
    const auto t0 = Clock::now();
    const IncidenceStructure s = load_structure(in);
    if (report_path.empty()) report_path = default_report_path(out);
    try {
        auto [result, report] = sparsify(s, params);
        write_json_file(out, to_json(result));
        write_json_file(report_path, to_json(report));
        RunManifest man;
        man.command = "sparsify";
        man.params = {{"in", in},
                      {"out", out},
                      {"report", report_path},
                      {"k", params.k},
                      {"seed", params.seed},
                      {"c_q", params.c_q},
                      {"max_attempts", params.max_attempts},
                      {"strict_event_a", params.strict_event_a}};
        if (q_given) man.params["q"] = *params.q;
        finish_manifest(man, {in}, {out, report_path}, out);
        std::printf(
            "sparsify: attempts=%d n0=%d incidences=%d girth_b=%s girth_g=%s -> %s (%.3fs)\n",
            report.attempts, report.n0, report.incidences, girth_str(report.girth_b).c_str(),
            girth_str(report.girth_g).c_str(), out.c_str(), elapsed_s(t0));
        return 0;
    } catch (const AttemptsExhausted& e) {
        std::fprintf(stderr, "sparsify: %s\n", e.what());
        for (const auto& r : e.reasons) std::fprintf(stderr, "  attempt failed: %s\n", r.c_str());
        return 4;
    }
}

int cmd_detect(const std::string& in, const std::string& pattern, int k,
               std::uint64_t budget_nodes) {
    const IncidenceStructure s = load_structure(in);
    json out;
    bool found = false;
    if (pattern == "grid") {
        SearchBudget budget;
        budget.max_nodes = budget_nodes;
        const auto res = find_grid(s, k, budget);
        found = res.witness.has_value();
        out = {{"pattern", "grid"}, {"k", k}, {"exhaustive", res.exhaustive}};
        if (res.witness) out["witness"] = to_json(*res.witness);
        if (!res.exhaustive)
            std::fprintf(stderr, "detect: grid search budget-limited; absence not certified\n");
    } else {
        const auto res = find_fan(s, k);
        found = res.witness.has_value();
        out = {{"pattern", "fan"}, {"k", k}, {"exhaustive", res.exhaustive}};
        if (res.witness) out["witness"] = to_json(*res.witness);
    }
    std::fputs(canonical_dump(out).c_str(), stdout);
    return found ? 3 : 0;
}

int cmd_scan(const std::string& m_range, std::optional<int> k, const std::vector<std::uint64_t>& seeds,
             const std::string& out, std::uint64_t budget_nodes) {
    const auto t0 = Clock::now();
    const auto dots = m_range.find("..");
    if (dots == std::string::npos) throw CLI::ValidationError("--m-range expects A..B");
    const int m_lo = std::stoi(m_range.substr(0, dots));
    const int m_hi = std::stoi(m_range.substr(dots + 2));

    std::vector<ScanRow> rows;
    for (int m = m_lo; m <= m_hi; ++m) {
        const IncidenceStructure base = standard_config(m);
        const std::vector<std::uint64_t> row_seeds = k ? seeds : std::vector<std::uint64_t>{0};
        for (std::uint64_t seed : row_seeds) {
            ScanRow row;
            row.m = m;
            row.seed = seed;
            IncidenceStructure s = base;
            if (k) {
                SparsifyParams p;
                p.k = *k;
                p.seed = seed;
                try {
                    s = sparsify(base, p).first;
                } catch (const AttemptsExhausted&) {
                    row.failed = true;
                    row.n_part = static_cast<std::int64_t>(base.points.size());
                    rows.push_back(row);
                    continue;
                }
            }
            row.n_part = static_cast<std::int64_t>(s.points.size());
            SearchBudget budget;
            budget.max_nodes = budget_nodes;
            const AnalysisReport rep = analyze_structure(s, budget);
            row.n = rep.n;
            row.edges = rep.edges;
            row.girth_g = girth_str(rep.girth);
            row.alpha_status = status_str(rep.alpha.status);
            row.alpha = rep.alpha.lower;
            row.chi_status = status_str(rep.chi.status);
            row.chi_lb = rep.chi.lower;
            row.chi_ub = rep.chi.upper;
            row.chi_incidence_lower = rep.chi_incidence_lower;
            rows.push_back(row);
        }
    }
    write_scan_csv(out, rows);
    RunManifest man;
    man.command = "scan";
    man.params = {{"m_range", m_range}, {"seeds", seeds}, {"out", out}, {"budget", budget_nodes}};
    if (k) man.params["k"] = *k;
    finish_manifest(man, {}, {out}, out);
    std::printf("scan: %zu rows -> %s (%.3fs)\n", rows.size(), out.c_str(), elapsed_s(t0));
    return 0;
}

int cmd_baseline(int n, const std::string& out, const std::string& graph_out,
                 std::uint64_t budget_nodes) {
    const auto t0 = Clock::now();
    const OrderedGraph g = shift_graph(n);
    const auto cert = verify_no_monotone_cycle(g);
    if (!cert.pass) {
        std::printf("FAIL: shift graph has a monotone cycle\n");
        return 3;
    }
    SearchBudget budget;
    budget.max_nodes = budget_nodes;
    const AnalysisReport rep = analyze_graph(g.graph, budget, 0);
    write_json_file(out, to_json(rep));
    std::vector<std::string> outputs{out};
    if (!graph_out.empty()) {
        write_json_file(graph_out, to_json(g));
        outputs.push_back(graph_out);
    }
    RunManifest man;
    man.command = "baseline";
    man.params = {{"n", n}, {"out", out}, {"budget", budget_nodes}};
    if (!graph_out.empty()) man.params["graph_out"] = graph_out;
    finish_manifest(man, {}, outputs, out);
    std::printf("baseline: n=%d vertices=%d chi=%s[%d,%d] -> %s (%.3fs)\n", n,
                rep.n, status_str(rep.chi.status), rep.chi.lower, rep.chi.upper, out.c_str(),
                elapsed_s(t0));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"point-line incidence Hasse diagram toolkit"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "write a standard configuration");
    std::int64_t gen_m = 0;
    std::string gen_out;
    gen->add_option("-m,--m", gen_m, "grid parameter (N = m^3)")->required();
    gen->add_option("-o,--out", gen_out, "output structure JSON")->required();

    // verify
    auto* ver = app.add_subcommand("verify", "certify the Hasse properties of a structure");
    std::string ver_in;
    bool ver_graph = false;
    ver->add_option("-i,--in", ver_in, "input JSON")->required();
    ver->add_flag("--graph", ver_graph, "input is an ordered graph, not a structure");

    // analyze
    auto* ana = app.add_subcommand("analyze", "full structural/chromatic report");
    std::string ana_in, ana_out;
    std::uint64_t ana_budget = 10'000'000;
    ana->add_option("-i,--in", ana_in, "input structure JSON")->required();
    ana->add_option("-o,--out", ana_out, "output report JSON")->required();
    ana->add_option("--budget", ana_budget, "search node budget");

    // sparsify
    auto* spa = app.add_subcommand("sparsify", "high-girth sparsification pipeline");
    std::string spa_in, spa_out, spa_report;
    SparsifyParams spa_params;
    double spa_q = -1.0;
    spa->add_option("-i,--in", spa_in, "input structure JSON")->required();
    spa->add_option("-o,--out", spa_out, "output structure JSON")->required();
    spa->add_option("--report", spa_report, "output report JSON (default: <out>.report.json)");
    spa->add_option("--k", spa_params.k, "target Hasse girth (>= 5)")->required();
    spa->add_option("--seed", spa_params.seed, "RNG seed");
    spa->add_option("--c-q", spa_params.c_q, "multiplier on the default q");
    spa->add_option("--q", spa_q, "explicit sampling probability");
    spa->add_option("--max-attempts", spa_params.max_attempts, "retry cap");
    spa->add_flag("--strict-event-a", spa_params.strict_event_a, "gate attempts on event A");

    // detect
    auto* det = app.add_subcommand("detect", "grid / fan pattern detector");
    std::string det_in, det_pattern;
    int det_k = 2;
    std::uint64_t det_budget = 10'000'000;
    det->add_option("-i,--in", det_in, "input structure JSON")->required();
    det->add_option("--pattern", det_pattern, "grid or fan")
        ->required()
        ->check(CLI::IsMember({"grid", "fan"}));
    det->add_option("--k", det_k, "pattern size")->required();
    det->add_option("--budget", det_budget, "grid search node budget");

    // scan
    auto* scn = app.add_subcommand("scan", "sweep m values, one CSV row per instance");
    std::string scn_range, scn_out;
    int scn_k = 0;
    bool scn_has_k = false;
    std::vector<std::uint64_t> scn_seeds{1};
    std::uint64_t scn_budget = 10'000'000;
    scn->add_option("--m-range", scn_range, "inclusive range A..B")->required();
    scn->add_option("--k", scn_k, "sparsify each instance to Hasse girth k")
        ->each([&](const std::string&) { scn_has_k = true; });
    scn->add_option("--seeds", scn_seeds, "seeds for sparsified rows")->delimiter(',');
    scn->add_option("-o,--out", scn_out, "output CSV")->required();
    scn->add_option("--budget", scn_budget, "search node budget per row");

    // baseline
    auto* base = app.add_subcommand("baseline", "shift-graph baseline: generate and analyze");
    int base_n = 8;
    std::string base_out, base_graph_out;
    std::uint64_t base_budget = 10'000'000;
    base->add_option("--n", base_n, "shift graph order (>= 2)")->required();
    base->add_option("-o,--out", base_out, "output report JSON")->required();
    base->add_option("--graph-out", base_graph_out, "also write the ordered graph JSON");
    base->add_option("--budget", base_budget, "search node budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (*gen) return cmd_generate(gen_m, gen_out);
        if (*ver) return cmd_verify(ver_in, ver_graph);
        if (*ana) return cmd_analyze(ana_in, ana_out, ana_budget);
        if (*spa) {
            if (spa_q > 0) spa_params.q = spa_q;
            return cmd_sparsify(spa_in, spa_out, spa_report, spa_params, spa_q > 0);
        }
        if (*det) return cmd_detect(det_in, det_pattern, det_k, det_budget);
        if (*scn)
            return cmd_scan(scn_range, scn_has_k ? std::optional<int>(scn_k) : std::nullopt,
                            scn_seeds, scn_out, scn_budget);
        if (*base) return cmd_baseline(base_n, base_out, base_graph_out, base_budget);
    } catch (const AttemptsExhausted& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 4;
    } catch (const nlohmann::json::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::overflow_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::runtime_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
