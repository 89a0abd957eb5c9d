#include "linhyp/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>

#include "linhyp/config_search.hpp"
#include "linhyp/family_json.hpp"
#include "linhyp/generators.hpp"
#include "linhyp/oracles.hpp"
#include "linhyp/report_io.hpp"
#include "linhyp/verdict.hpp"

namespace linhyp::cli {

namespace {

struct Context {
    std::ostream& out;
    std::ostream& err;
    bool quiet = false;

    void progress(const std::string& line) const {
        if (!quiet) err << line << '\n';
    }
};

// Writes text to path, or to out when path is empty.
bool emit(const Context& ctx, const std::string& text, const std::string& path) {
    if (path.empty()) {
        ctx.out << text;
        return true;
    }
    std::ofstream file(path);
    if (!file) {
        ctx.err << "error: cannot write " << path << '\n';
        return false;
    }
    file << text;
    return static_cast<bool>(file);
}

struct GenArgs {
    std::string kind;
    std::size_t delta = 0;
    std::size_t nu = 0;
    std::size_t n = 0;
    std::size_t edges = 0;
    std::uint64_t seed = 0;
    std::string out;
};

int cmd_gen(const Context& ctx, const GenArgs& a) {
    Family f;
    if (a.kind == "sunflower") {
        if (a.delta == 0 || a.nu == 0) throw std::invalid_argument("sunflower needs --delta >= 1 and --nu >= 1");
        f = sunflower_family(a.delta, a.nu);
    } else if (a.kind == "steiner") {
        f = steiner_triple_system(a.n);
    } else if (a.kind == "graph-lift") {
        if (a.delta == 0 || a.nu == 0) throw std::invalid_argument("graph-lift needs --delta >= 1 and --nu >= 1");
        f = graph_lift(chvatal_hanson_graph(a.delta, a.nu));
    } else if (a.kind == "extremal-graph") {
        if (a.delta == 0 || a.nu == 0) throw std::invalid_argument("extremal-graph needs --delta >= 1 and --nu >= 1");
        f = chvatal_hanson_graph(a.delta, a.nu).to_family();
    } else {
        if (a.n == 0) throw std::invalid_argument("random needs --n >= 1");
        f = random_linear_family(a.n, a.edges, a.seed);
    }
    if (!emit(ctx, to_json(f) + "\n", a.out)) return kBadInput;
    ctx.progress("generated " + std::to_string(f.size()) + " edges on " + std::to_string(f.n()) + " vertices");
    return kOk;
}

int cmd_analyze(const Context& ctx, const std::string& path, bool json, bool lenient) {
    const auto f = read_family_file(path, lenient ? ReadMode::lenient : ReadMode::strict);
    ctx.out << (json ? analysis_to_json(f) : analysis_to_text(f));
    return kOk;
}

struct VerifyArgs {
    std::string path;
    std::string out;
    bool csv = false;
    bool lenient = false;
    bool all_matchings = false;
};

int cmd_verify(const Context& ctx, const VerifyArgs& a) {
    const auto f = read_family_file(a.path, a.lenient ? ReadMode::lenient : ReadMode::strict);
    if (a.all_matchings && f.size() > oracle::kOracleMaxEdges)
        throw std::invalid_argument("--all-matchings supports at most " + std::to_string(oracle::kOracleMaxEdges) +
                                    " edges");
    const auto report = evaluate(f, {a.all_matchings});
    const auto text = a.csv ? report_to_csv(f, report) : report_to_json(f, report);
    if (!emit(ctx, text, a.out)) return kBadInput;

    std::size_t tight = 0, violated = 0, applicable = 0;
    for (const auto& r : report.records) {
        if (r.applicable) ++applicable;
        if (r.verdict == Verdict::tight) ++tight;
        if (r.verdict == Verdict::violated) {
            ++violated;
            ctx.progress("violated: " + r.id + " (" + to_string(r.left) + " > " + to_string(r.right) + ")");
        }
    }
    ctx.progress(std::to_string(applicable) + " applicable records, " + std::to_string(tight) + " tight, " +
                 std::to_string(violated) + " violated");
    return violated ? kFailed : kOk;
}

struct SweepArgs {
    std::size_t max_vertices = 0;
    std::size_t max_edges = 0;
    std::size_t jobs = 1;
    bool labeled = false;
    bool no_oracle = false;
    bool csv = false;
    std::string out;
};

int cmd_sweep(const Context& ctx, const SweepArgs& a) {
    if (a.jobs == 0) throw std::invalid_argument("--jobs must be at least 1");
    SweepOptions opts;
    opts.max_vertices = a.max_vertices;
    opts.max_edges = a.max_edges;
    opts.isomorphism_rejection = !a.labeled;
    opts.oracle_checks = !a.no_oracle;
    opts.jobs = a.jobs;
    opts.keep_rows = a.csv;
    const auto start = std::chrono::steady_clock::now();
    const auto report = sweep(opts);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!emit(ctx, a.csv ? sweep_to_csv(report) : sweep_to_json(report), a.out)) return kBadInput;

    ctx.progress(std::to_string(report.families) + " families, " + std::to_string(report.violation_count()) +
                 " violations, oracle mismatches nu=" + std::to_string(report.nu_mismatches) +
                 " s_f=" + std::to_string(report.sf_mismatches) + ", " + std::to_string(secs) + " s");
    for (const auto& [id, st] : report.stats)
        if (st.violated) ctx.progress("  " + id + ": " + std::to_string(st.violated) + " violations");
    return report.violation_count() == 0 && report.oracles_agree() ? kOk : kFailed;
}

int cmd_check_config(const Context& ctx, const std::string& prop, std::uint64_t budget, bool json) {
    if (prop == "d2ab-unique") {
        const auto r = search_unique_8_config();
        const bool listed = r.classes.size() == 1 && r.classes[0] == pair_configuration_key(listed_eight_edge_configuration());
        if (json) {
            ctx.out << unique8_to_json(r);
        } else {
            ctx.out << r.candidates << " candidates, " << r.linear_candidates << " linear, " << r.survivors
                    << " without an augmenting set\n";
            ctx.out << r.classes.size() << " surviving class" << (r.classes.size() == 1 ? "" : "es") << '\n';
            for (const auto& c : r.classes) ctx.out << "  " << edges_to_json(c) << '\n';
            ctx.out << (listed ? "matches the listed configuration\n" : "does not match the listed configuration\n");
        }
        return listed ? kOk : kFailed;
    }
    ctx.progress("searching (7,7,7) configurations with budget " + std::to_string(budget));
    const auto r = search_sevens(budget);
    if (json) {
        ctx.out << sevens_to_json(r, budget);
    } else {
        ctx.out << "status " << to_string(r.status) << '\n';
        ctx.out << r.selection_classes << " selection classes, " << r.classes_finished << " finished, " << r.nodes
                << " nodes\n";
        ctx.out << r.survivors << " surviving configurations\n";
        if (r.status == Sevens::Status::budget_exceeded) ctx.out << "frontier " << r.frontier << " classes\n";
        for (const auto& e : r.survivor_examples) ctx.out << "  " << edges_to_json(e) << '\n';
    }
    if (r.status == Sevens::Status::budget_exceeded) return kBudget;
    return r.survivors == 0 ? kOk : kFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact toolkit for linear 3-uniform hypergraphs", "linhyp"};
    app.require_subcommand(1);
    app.fallthrough();
    bool quiet = false;
    app.add_flag("-q,--quiet", quiet, "Suppress progress on stderr");

    GenArgs gen;
    auto* g = app.add_subcommand("gen", "Write a generated family as JSON");
    g->add_option("kind", gen.kind, "Generator")
        ->required()
        ->check(CLI::IsMember({"sunflower", "steiner", "graph-lift", "extremal-graph", "random"}));
    g->add_option("--delta", gen.delta, "Maximum degree");
    g->add_option("--nu", gen.nu, "Matching number");
    g->add_option("--n", gen.n, "Number of vertices");
    g->add_option("--edges", gen.edges, "Target edge count (random)");
    g->add_option("--seed", gen.seed, "Seed (random)");
    g->add_option("--out", gen.out, "Output file (default stdout)");

    std::string analyze_path;
    bool analyze_json = false, analyze_lenient = false;
    auto* an = app.add_subcommand("analyze", "Structural summary of a family");
    an->add_option("path", analyze_path, "Family JSON file")->required();
    an->add_flag("--json", analyze_json, "JSON output");
    an->add_flag("--lenient", analyze_lenient, "Sort and deduplicate input");

    VerifyArgs verify;
    auto* v = app.add_subcommand("verify", "Evaluate every bound on a family");
    v->add_option("path", verify.path, "Family JSON file")->required();
    v->add_option("--out", verify.out, "Report file (default stdout)");
    v->add_flag("--csv", verify.csv, "CSV instead of JSON");
    v->add_flag("--lenient", verify.lenient, "Sort and deduplicate input");
    v->add_flag("--all-matchings", verify.all_matchings, "Check every maximum matching (small families)");

    SweepArgs sw;
    auto* s = app.add_subcommand("sweep", "Evaluate every bound on all small linear triple systems");
    s->add_option("--max-vertices", sw.max_vertices, "Vertex bound")->required();
    s->add_option("--max-edges", sw.max_edges, "Edge bound")->required();
    s->add_option("--jobs", sw.jobs, "Worker threads");
    s->add_flag("--labeled", sw.labeled, "Visit every labeled family instead of one per isomorphism class");
    s->add_flag("--no-oracle", sw.no_oracle, "Skip the brute-force oracle cross-checks");
    s->add_flag("--csv", sw.csv, "One CSV row per family and bound");
    s->add_option("--out", sw.out, "Report file (default stdout)");

    std::string prop;
    std::uint64_t budget = 100'000'000;
    bool config_json = false;
    auto* c = app.add_subcommand("check-config", "Run a finite configuration search");
    c->add_option("--prop", prop, "Search to run")->required()->check(CLI::IsMember({"d2ab-unique", "remark777"}));
    c->add_option("--budget", budget, "Node budget for remark777");
    c->add_flag("--json", config_json, "JSON output");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kBadInput;
    }

    const Context ctx{out, err, quiet};
    try {
        if (*g) return cmd_gen(ctx, gen);
        if (*an) return cmd_analyze(ctx, analyze_path, analyze_json, analyze_lenient);
        if (*v) return cmd_verify(ctx, verify);
        if (*s) return cmd_sweep(ctx, sw);
        return cmd_check_config(ctx, prop, budget, config_json);
    } catch (const FormatError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
    }
    return kBadInput;
}

}  // namespace linhyp::cli
