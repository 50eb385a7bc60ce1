// absx: compute, build, enumerate and verify for the ABS index.
#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "absx/absx.hpp"
#include "absx/report.hpp"

namespace {

using namespace absx;

constexpr int kExitOk = 0;
constexpr int kExitFinding = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), {}};
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write '" + path + "'");
    out << text;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::string item;
    std::stringstream ss(text);
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError("bad integer list '" + text + "'");
        }
    }
    return out;
}

// ---------------------------------------------------------------- compute

struct ComputeArgs {
    std::string input;
    std::string format = "auto";
};

// Edge lists start with a digit; graph6 lines never do.
std::vector<Graph> parse_graphs(const std::string& text, const std::string& format) {
    std::size_t first = 0;
    while (first < text.size() && std::isspace(static_cast<unsigned char>(text[first]))) ++first;
    if (first == text.size()) throw ParseError("empty input");
    const bool edge_list =
        format == "edgelist" || (format == "auto" && std::isdigit(static_cast<unsigned char>(text[first])));
    if (edge_list) return {from_edge_list(text)};
    std::vector<Graph> out;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        out.push_back(from_graph6(line));
    }
    return out;
}

int run_compute(const ComputeArgs& a) {
    for (const Graph& g : parse_graphs(read_input(a.input), a.format)) std::printf("%s\n", format12(abs_index(g)).c_str());
    return kExitOk;
}

// ---------------------------------------------------------------- build

struct BuildArgs {
    std::string family;
    int n = 0, p = 0, k = 0, r = 0, a = 0, b = 0, x = 0, y = 0, kappa = 0;
    std::string parts;
    bool unchecked = false;
    std::string format = "graph6";
    bool closed_form = false;
};

int run_build(const BuildArgs& a) {
    Graph g(1);
    std::optional<double> closed;
    const std::string& f = a.family;
    if (f == "path") {
        g = build_path(a.n);
    } else if (f == "cycle") {
        g = build_cycle(a.n);
    } else if (f == "complete") {
        g = build_complete(a.n);
        closed = a.n >= 2 ? abs_multipartite_closed(PartSizes(std::vector<int>(a.n, 1))) : 0.0;
    } else if (f == "complete-bipartite") {
        g = build_complete_bipartite(a.a, a.b);
        closed = abs_multipartite_closed(PartSizes{a.a, a.b});
    } else if (f == "knp") {
        g = build_knp(a.n, a.p);
        closed = abs_knp_closed(a.n, a.p);
    } else if (f == "multipartite") {
        const PartSizes parts(parse_int_list(a.parts));
        g = build_complete_multipartite(parts);
        closed = abs_multipartite_closed(parts);
    } else if (f == "turan") {
        g = build_turan(a.n, a.k);
        closed = abs_multipartite_closed(turan_parts(a.n, a.k));
    } else if (f == "kr-join") {
        const PartSizes parts = a.parts.empty() ? turan_parts(a.n - a.r, a.k) : PartSizes(parse_int_list(a.parts));
        g = build_kr_join_multipartite(a.r, parts);
        closed = abs_kr_join_closed(a.r, parts);
    } else if (f == "sixpart") {
        const std::vector<int> v = parse_int_list(a.parts);
        if (v.size() != 6) throw UsageError("sixpart needs --parts with six sizes");
        const SixPart s{{v[0], v[1], v[2], v[3], v[4], v[5]}};
        const ShapeCheck check = a.unchecked ? ShapeCheck::kUnchecked : ShapeCheck::kStrict;
        g = build_sixpart(s, check);
        closed = abs_sixpart_closed(s, check);
    } else if (f == "kappa-xy") {
        g = build_kappa_xy(a.x, a.y, a.kappa);
        closed = abs_kappa_xy_closed(a.x, a.y, a.kappa);
    } else {
        throw UsageError("unknown family '" + f + "'");
    }
    std::cout << (a.format == "edgelist" ? to_edge_list(g) : to_graph6(g) + "\n");
    if (a.closed_form) {
        if (!closed) throw UsageError("family '" + f + "' has no closed form");
        std::printf("closed-form %s\n", format12(*closed).c_str());
    }
    return kExitOk;
}

// ---------------------------------------------------------------- filters

struct FilterArgs {
    int p = -1;
    int k = 2;
    int r = -1;
    int kappa = -1;
};

std::optional<ClassConstraint> filter_from(const FilterArgs& f) {
    const int given = (f.p >= 0) + (f.r >= 0) + (f.kappa >= 0);
    if (given > 1) throw UsageError("give at most one of --p, --r, --kappa");
    if (f.p >= 0) return CutVertices{f.p};
    if (f.r >= 0) return KPartiteness{f.k, f.r};
    if (f.kappa >= 0) return BipartiteConnectivity{f.kappa};
    return std::nullopt;
}

// ---------------------------------------------------------------- enumerate

struct EnumerateArgs {
    int n = 0;
    bool bipartite = false;
    bool count_only = false;
    int workers = 0;
    FilterArgs filter;
};

int run_enumerate(const EnumerateArgs& a) {
    EnumSpec spec{a.n, a.bipartite ? EnumMode::kConnectedBipartite : EnumMode::kConnected, filter_from(a.filter)};
    const auto classes = enumerate_classes(spec, EnumOptions{a.workers});
    if (a.count_only) {
        std::printf("%zu\n", classes.size());
        return kExitOk;
    }
    std::string out;
    for (const auto& c : classes) out += to_graph6(c.graph) + '\n';
    std::cout << out;
    return kExitOk;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
    std::string cls;
    int n = 0, n_min = 0, n_max = 0;
    int p = -1, k = 2, r = -1, kappa = -1;
    bool all = false;
    std::string out;
    std::string format = "json";
    int workers = 0;
    double tol = kTieTolerance;
    bool timing = false;
};

std::vector<ClassConstraint> constraints_for(const VerifyArgs& a, int n) {
    std::vector<ClassConstraint> cs;
    if (a.cls == "cut-vertices") {
        if (a.all) {
            for (int p = 0; p <= std::max(0, n - 2); ++p) cs.push_back(CutVertices{p});
        } else {
            if (a.p < 0) throw UsageError("cut-vertices needs --p or --all-p");
            cs.push_back(CutVertices{a.p});
        }
    } else if (a.cls == "k-partiteness") {
        if (a.all) {
            for (int r = 1; r <= n - a.k; ++r) cs.push_back(KPartiteness{a.k, r});
        } else {
            if (a.r < 0) throw UsageError("k-partiteness needs --r or --all-r");
            cs.push_back(KPartiteness{a.k, a.r});
        }
    } else if (a.cls == "bipartite-kappa") {
        if (a.all) {
            for (int kappa = 1; 2 * kappa <= n; ++kappa) cs.push_back(BipartiteConnectivity{kappa});
        } else {
            if (a.kappa < 0) throw UsageError("bipartite-kappa needs --kappa or --all-kappa");
            cs.push_back(BipartiteConnectivity{a.kappa});
        }
    } else {
        throw UsageError("unknown class '" + a.cls + "' (cut-vertices, k-partiteness, bipartite-kappa)");
    }
    return cs;
}

std::pair<int, int> order_range(int n, int n_min, int n_max) {
    if (n > 0) return {n, n};
    if (n_min > 0 && n_max >= n_min) return {n_min, n_max};
    throw UsageError("give --n or both --n-min and --n-max");
}

std::string render(const std::vector<ExtremalReport>& reports, const std::string& format, bool timing) {
    if (format == "csv") return extremal_reports_csv(reports);
    if (format == "markdown") return extremal_reports_markdown(reports);
    return extremal_reports_json(reports, timing);
}

int run_verify(const VerifyArgs& a) {
    if (!(a.tol > 0)) throw UsageError("--tol must be positive");
    const auto [lo, hi] = order_range(a.n, a.n_min, a.n_max);
    std::vector<ExtremalReport> reports;
    for (int n = lo; n <= hi; ++n) {
        const auto cs = constraints_for(a, n);
        auto batch = verify_extremal_batch(cs, n, VerifyOptions{a.workers, a.tol});
        for (auto& r : batch) reports.push_back(std::move(r));
    }
    write_output(a.out, render(reports, a.format, a.timing));
    if (!a.out.empty() && a.out != "-") std::cout << extremal_reports_markdown(reports);
    if (a.timing) {
        double total = 0.0;
        for (const auto& r : reports) total = std::max(total, r.elapsed_seconds);
        std::fprintf(stderr, "elapsed %.3fs\n", total);
    }
    for (const auto& r : reports)
        if (r.verdict == Verdict::kRefuted) return kExitFinding;
    return kExitOk;
}

// ---------------------------------------------------------------- lemma-check

struct LemmaArgs {
    std::string id;
    LemmaGrid grid;
    std::string out;
    std::string format = "json";
};

int run_lemma_check(const LemmaArgs& a) {
    std::vector<std::string> ids;
    if (a.id == "all") {
        ids = lemma_ids();
    } else {
        const auto& known = lemma_ids();
        if (std::find(known.begin(), known.end(), a.id) == known.end())
            throw UsageError("unknown lemma id '" + a.id + "'");
        ids.push_back(a.id);
    }
    std::vector<LemmaCheck> checks;
    for (const auto& id : ids) checks.push_back(run_lemma(id, a.grid));
    std::string text;
    if (a.format == "csv") text = lemma_checks_csv(checks);
    else if (a.format == "markdown") text = lemma_checks_markdown(checks);
    else text = lemma_checks_json(checks);
    write_output(a.out, text);
    if (!a.out.empty() && a.out != "-") std::cout << lemma_checks_markdown(checks);
    for (const auto& c : checks)
        if (c.verdict == LemmaVerdict::kFail || c.finding_count > 0) return kExitFinding;
    return kExitOk;
}

// ---------------------------------------------------------------- table

struct TableArgs {
    std::string cls;
    int n_min = 0, n_max = 0;
    int k = 2;
    std::string format = "markdown";
};

int run_table(const TableArgs& a) {
    if (a.n_min < 1 || a.n_max < a.n_min || a.n_max > kMaxOrder) throw UsageError("need 1 <= --n-min <= --n-max <= 64");
    const bool csv = a.format == "csv";
    std::string out = csv ? "class,n,extremal_graph,abs\n" : "| Class | n | Extremal graph | ABS |\n|---|---|---|---|\n";
    for (int n = a.n_min; n <= a.n_max; ++n) {
        VerifyArgs va;
        va.cls = a.cls;
        va.k = a.k;
        va.all = true;
        for (const auto& c : constraints_for(va, n)) {
            const auto pred = predict_extremal(c, n);
            if (!pred) continue;
            if (csv)
                out += '"' + describe(c) + "\"," + std::to_string(n) + ',' + pred->family + ',' +
                       format12(pred->closed_form) + '\n';
            else
                out += "| " + describe(c) + " | " + std::to_string(n) + " | " + pred->family + " | " +
                       format12(pred->closed_form) + " |\n";
        }
    }
    std::cout << out;
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ABS index: compute, build extremal families, enumerate, verify"};
    app.require_subcommand(1);

    ComputeArgs compute;
    auto* c = app.add_subcommand("compute", "Print ABS of each input graph (edge list or graph6)");
    c->add_option("input", compute.input, "Input file, '-' or omitted for stdin");
    c->add_option("--format", compute.format, "auto | edgelist | graph6")->check(CLI::IsMember({"auto", "edgelist", "graph6"}));

    BuildArgs build;
    auto* b = app.add_subcommand("build", "Build a family member");
    b->add_option("family", build.family,
                  "path | cycle | complete | complete-bipartite | knp | multipartite | turan | kr-join | sixpart | kappa-xy")
        ->required();
    b->add_option("--n", build.n);
    b->add_option("--p", build.p);
    b->add_option("--k", build.k);
    b->add_option("--r", build.r);
    b->add_option("--a", build.a);
    b->add_option("--b", build.b);
    b->add_option("--x", build.x);
    b->add_option("--y", build.y);
    b->add_option("--kappa", build.kappa);
    b->add_option("--parts", build.parts, "Comma-separated part sizes");
    b->add_flag("--unchecked", build.unchecked, "Skip the six-part shape check");
    b->add_option("--format", build.format, "graph6 | edgelist")->check(CLI::IsMember({"graph6", "edgelist"}));
    b->add_flag("--closed-form", build.closed_form, "Also print the closed-form ABS");

    EnumerateArgs en;
    auto* e = app.add_subcommand("enumerate", "Stream one graph6 line per isomorphism class");
    e->add_option("--n", en.n)->required();
    e->add_flag("--bipartite", en.bipartite);
    e->add_flag("--count", en.count_only);
    e->add_option("--workers", en.workers)->check(CLI::NonNegativeNumber);
    e->add_option("--p", en.filter.p, "Filter: exactly p cut-vertices");
    e->add_option("--k", en.filter.k, "Parts for the --r filter");
    e->add_option("--r", en.filter.r, "Filter: vertex k-partiteness r");
    e->add_option("--kappa", en.filter.kappa, "Filter: bipartite with connectivity kappa");

    VerifyArgs ver;
    auto* v = app.add_subcommand("verify", "Exhaustively find ABS maximizers of a class");
    v->add_option("class", ver.cls, "cut-vertices | k-partiteness | bipartite-kappa")->required();
    v->add_option("--n", ver.n);
    v->add_option("--n-min", ver.n_min);
    v->add_option("--n-max", ver.n_max);
    v->add_option("--p", ver.p);
    v->add_option("--k", ver.k);
    v->add_option("--r", ver.r);
    v->add_option("--kappa", ver.kappa);
    v->add_flag("--all-p,--all-r,--all-kappa", ver.all, "Every feasible parameter value");
    v->add_option("--out", ver.out, "Report file (summary table goes to stdout)");
    v->add_option("--format", ver.format, "json | csv | markdown")->check(CLI::IsMember({"json", "csv", "markdown"}));
    v->add_option("--workers", ver.workers)->check(CLI::PositiveNumber);
    v->add_option("--tol", ver.tol, "Tie tolerance");
    v->add_flag("--timing", ver.timing, "Include elapsed seconds");

    LemmaArgs lem;
    auto* l = app.add_subcommand("lemma-check", "Check the proof inequalities on a parameter grid");
    l->add_option("id", lem.id, "Lemma id or 'all'")->required();
    l->add_option("--n-max", lem.grid.n_max);
    l->add_option("--k-max", lem.grid.k_max);
    l->add_option("--r-max", lem.grid.r_max);
    l->add_option("--graph-check-n-max", lem.grid.graph_check_n_max);
    l->add_option("--tol", lem.grid.tolerance);
    l->add_option("--out", lem.out);
    l->add_option("--format", lem.format, "json | csv | markdown")->check(CLI::IsMember({"json", "csv", "markdown"}));

    TableArgs tab;
    auto* t = app.add_subcommand("table", "Predicted extremal graphs and their ABS");
    t->add_option("class", tab.cls, "cut-vertices | k-partiteness | bipartite-kappa")->required();
    t->add_option("--n-min", tab.n_min)->required();
    t->add_option("--n-max", tab.n_max)->required();
    t->add_option("--k", tab.k);
    t->add_option("--format", tab.format, "markdown | csv")->check(CLI::IsMember({"markdown", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& ex) {
        return app.exit(ex);
    } catch (const CLI::CallForAllHelp& ex) {
        return app.exit(ex);
    } catch (const CLI::ParseError& ex) {
        app.exit(ex);
        return kExitUsage;
    }

    try {
        if (*c) return run_compute(compute);
        if (*b) return run_build(build);
        if (*e) return run_enumerate(en);
        if (*v) return run_verify(ver);
        if (*l) return run_lemma_check(lem);
        if (*t) return run_table(tab);
    } catch (const EnvelopeError& ex) {
        std::fprintf(stderr, "refused: %s\n", ex.what());
        return kExitUsage;
    } catch (const ParseError& ex) {
        std::fprintf(stderr, "parse error: %s\n", ex.what());
        return kExitUsage;
    } catch (const PreconditionError& ex) {
        std::fprintf(stderr, "invalid parameters: %s\n", ex.what());
        return kExitUsage;
    } catch (const UsageError& ex) {
        std::fprintf(stderr, "usage: %s\n", ex.what());
        return kExitUsage;
    }
    return kExitUsage;
}
