#pragma once

#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "srd/certificate.hpp"
#include "srd/constructions.hpp"
#include "srd/dot.hpp"
#include "srd/errors.hpp"
#include "srd/exact_solver.hpp"
#include "srd/formulas.hpp"
#include "srd/graph.hpp"
#include "srd/labeling.hpp"
#include "srd/ladder_dp.hpp"

namespace srd::cli {

// Exit-code contract: 0 success, 1 input/parameter error, 2 verification
// failure, 3 theorem-check discrepancy.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitDisagree = 3;

namespace detail_cli {

inline Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw srd::ParseError("cannot open graph file: " + path);
    return read_edge_list(in);
}

inline Labeling load_labeling_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw srd::ParseError("cannot open labeling file: " + path);
    return read_labeling(in);
}

struct GraphSource {
    std::string family_name;
    int n = 0;
    std::string in_path;

    bool has_family() const { return !family_name.empty(); }

    FamilySpec spec() const {
        auto f = parse_family(family_name);
        if (!f) throw InvalidParameterError("unknown family: " + family_name);
        FamilySpec s{*f, n};
        check_family_spec(s);
        return s;
    }

    Graph load() const {
        if (has_family() && !in_path.empty())
            throw InvalidParameterError("give either --family/--n or --in, not both");
        if (has_family()) return family_graph(spec());
        if (!in_path.empty()) return load_graph_file(in_path);
        throw InvalidParameterError("no graph given; use --family FAMILY --n N or --in FILE");
    }
};

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path);
}

inline bool is_ladder_coordinate_family(const std::optional<FamilySpec>& f) {
    return f && (f->family == Family::ladder || f->family == Family::circular_ladder ||
                 f->family == Family::ladder_complement ||
                 f->family == Family::circular_ladder_complement);
}

inline std::string labeling_csv(const Labeling& l) {
    std::ostringstream os;
    for (int v = 0; v < l.size(); ++v) {
        if (v) os << ",";
        os << static_cast<int>(l[v]);
    }
    return os.str();
}

inline void print_certificate(const Certificate& c, bool porcelain, bool labeling_to_file,
                              std::ostream& out) {
    if (porcelain) {
        if (c.family) {
            out << "family " << family_name(c.family->family) << "\n";
            out << "n " << c.family->n << "\n";
        }
        out << "hash " << c.graph_hash << "\n";
        out << "method " << solve_method_name(c.method) << "\n";
        out << "weight " << c.weight << "\n";
        out << "optimal " << (c.claimed_optimal ? 1 : 0) << "\n";
        out << "nodes " << c.stats.nodes << "\n";
        out << "elapsed_ms " << c.stats.elapsed_ms << "\n";
        out << "labeling " << labeling_csv(c.labeling) << "\n";
        return;
    }
    out << "graph: " << c.graph_desc << "\n";
    out << "hash: " << c.graph_hash << "\n";
    out << "method: " << solve_method_name(c.method) << "\n";
    out << "weight: " << c.weight << "\n";
    out << "optimal: " << (c.claimed_optimal ? "yes" : "no") << "\n";
    out << "nodes: " << c.stats.nodes << "\n";
    out << "elapsed-ms: " << c.stats.elapsed_ms << "\n";
    if (c.labeling.size() <= 128) {
        out << "labeling:\n";
        for (int v = 0; v < c.labeling.size(); ++v)
            out << "  " << v << " " << static_cast<int>(c.labeling[v]) << "\n";
        if (is_ladder_coordinate_family(c.family))
            out << "coordinates: " << coordinate_string(c.labeling) << "\n";
    } else {
        out << "labeling: (" << c.labeling.size() << " vertices, suppressed; use --out FILE)\n";
    }
    if (labeling_to_file) out << "labeling-written: yes\n";
}

} // namespace detail_cli

// ---------------------------------------------------------------------------
// gen
// ---------------------------------------------------------------------------

inline int cmd_gen(const detail_cli::GraphSource& source, const std::string& out_path,
                   std::ostream& out, std::ostream&) {
    const Graph g = family_graph(source.spec());
    const std::string text = to_edge_list_string(g);
    if (out_path.empty()) out << text;
    else detail_cli::write_text_file(out_path, text);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// solve
// ---------------------------------------------------------------------------

inline int cmd_solve(const detail_cli::GraphSource& source, const std::string& method,
                     bool deterministic, int workers, int cap, bool porcelain,
                     const std::string& out_path, std::ostream& out, std::ostream& err) {
    std::string m = method.empty() ? "auto" : method;
    std::optional<FamilySpec> spec;
    if (source.has_family()) spec = source.spec();

    const bool dp_family =
        spec && (spec->family == Family::ladder || spec->family == Family::circular_ladder);
    if (m == "auto") m = dp_family ? "dp" : "bb";

    Certificate cert;
    if (m == "dp") {
        if (!dp_family) {
            err << "error: --method dp requires --family ladder or circular-ladder\n";
            return kExitUsage;
        }
        cert = spec->family == Family::ladder ? solve_ladder_dp(spec->n)
                                              : solve_circular_ladder_dp(spec->n);
    } else if (m == "exhaustive") {
        ExhaustiveOptions opts;
        if (cap > 0) opts.max_vertices = cap;
        cert = solve_exhaustive(source.load(), opts);
    } else if (m == "bb") {
        BranchBoundOptions opts;
        if (cap > 0) opts.max_vertices = cap;
        opts.workers = deterministic ? 1 : std::max(1, workers);
        cert = solve_branch_bound(source.load(), opts);
    } else {
        err << "error: unknown method '" << m << "' (use auto|exhaustive|bb|dp)\n";
        return kExitUsage;
    }

    if (!out_path.empty()) detail_cli::write_text_file(out_path, to_labeling_string(cert.labeling));
    detail_cli::print_certificate(cert, porcelain, !out_path.empty(), out);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// construct
// ---------------------------------------------------------------------------

inline int cmd_construct(const detail_cli::GraphSource& source, bool porcelain,
                         const std::string& out_path, std::ostream& out, std::ostream&) {
    const FamilySpec spec = source.spec();
    const Labeling labeling = construct_labeling(spec);
    const Graph g = family_graph(spec);
    const ValidationReport report = validate(g, labeling);
    const FormulaResult formula = gamma_formula(spec);

    Certificate cert;
    cert.graph_desc = graph_description(g);
    cert.family = spec;
    cert.graph_hash = graph_content_hash(g);
    cert.weight = weight(labeling);
    cert.labeling = labeling;
    cert.method = SolveMethod::construction;
    cert.claimed_optimal = formula.covered() && *formula.value == cert.weight;

    if (!out_path.empty()) detail_cli::write_text_file(out_path, to_labeling_string(labeling));
    detail_cli::print_certificate(cert, porcelain, !out_path.empty(), out);
    if (porcelain) {
        out << "valid " << (report.valid ? 1 : 0) << "\n";
        if (formula.covered()) out << "formula " << *formula.value << "\n";
    } else {
        out << "valid: " << (report.valid ? "yes" : "NO") << "\n";
        if (formula.covered())
            out << "formula: " << *formula.value << " ("
                << formula_source_name(*formula.source) << ")\n";
    }

    if (!report.valid || (formula.covered() && *formula.value != cert.weight)) {
        out << "discrepancy: construction for " << family_name(spec.family) << " n=" << spec.n
            << " does not certify the cataloged value\n";
        return kExitInvalid;
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

inline int cmd_verify(const detail_cli::GraphSource& source, const std::string& labeling_path,
                      bool porcelain, std::ostream& out, std::ostream&) {
    const Graph g = source.load();
    const Labeling l = detail_cli::load_labeling_file(labeling_path);
    const ValidationReport report = validate(g, l); // length mismatch throws -> exit 1

    if (porcelain) {
        out << "valid " << (report.valid ? 1 : 0) << "\n";
        out << "weight " << weight(l) << "\n";
        out << "cond1_violations";
        for (int v : report.cond1_violations) out << " " << v;
        out << "\n";
        out << "cond2_violations";
        for (int v : report.cond2_violations) out << " " << v;
        out << "\n";
    } else {
        out << "valid: " << (report.valid ? "yes" : "NO") << "\n";
        out << "weight: " << weight(l) << "\n";
        if (!report.cond1_violations.empty()) {
            out << "condition-1 violations (closed neighborhood sum < 1):\n";
            for (int v : report.cond1_violations)
                out << "  vertex " << v << ": sum "
                    << report.closed_sums[static_cast<std::size_t>(v)] << "\n";
        }
        if (!report.cond2_violations.empty()) {
            out << "condition-2 violations (-1 vertex with no +2 neighbor):\n";
            for (int v : report.cond2_violations) out << "  vertex " << v << "\n";
        }
    }
    return report.valid ? kExitOk : kExitInvalid;
}

// ---------------------------------------------------------------------------
// bounds
// ---------------------------------------------------------------------------

inline int cmd_bounds(const detail_cli::GraphSource& source, std::ostream& out, std::ostream&) {
    const Graph g = source.load();
    out << "graph: " << graph_description(g) << "\n";
    const Rational degree_bound = lower_bound_degree(g);
    out << "degree-bound: " << degree_bound.str() << " (ceiling " << degree_bound.ceil() << ")\n";
    const auto size_bound = lower_bound_size(g);
    if (size_bound)
        out << "size-bound: " << size_bound->str() << " (ceiling " << size_bound->ceil() << ")\n";
    else
        out << "size-bound: inapplicable (graph has an isolated vertex)\n";
    out << "trivial-upper: " << g.vertex_count() << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------
// table
// ---------------------------------------------------------------------------

namespace detail_cli {

// Exact value policy for the table: the dp engines handle the two ladder
// families at any n; everything else goes through branch and bound up to 14
// vertices and is left blank beyond that.
inline std::optional<int> table_exact(const FamilySpec& spec) {
    if (spec.family == Family::ladder) return solve_ladder_dp(spec.n).weight;
    if (spec.family == Family::circular_ladder) return solve_circular_ladder_dp(spec.n).weight;
    const Graph g = family_graph(spec);
    if (g.vertex_count() > 14) return std::nullopt;
    return solve_branch_bound(g).weight;
}

inline const char* table_exact_method(const FamilySpec& spec) {
    if (spec.family == Family::ladder || spec.family == Family::circular_ladder) return "dp";
    return "bb";
}

} // namespace detail_cli

inline int cmd_table(const std::string& family_str, int from, int to, bool check, bool porcelain,
                     std::ostream& out, std::ostream& err) {
    auto fam = parse_family(family_str);
    if (!fam) {
        err << "error: unknown family: " << family_str << "\n";
        return kExitUsage;
    }
    if (from > to) {
        err << "error: empty range " << from << ".." << to << "\n";
        return kExitUsage;
    }
    if (from < family_min_n(*fam)) {
        err << "error: " << family_str << " requires n >= " << family_min_n(*fam) << "\n";
        return kExitUsage;
    }

    bool any_disagree = false;
    if (!porcelain)
        out << "  n  formula  source       construction  valid  exact  method  agree\n";
    for (int n = from; n <= to; ++n) {
        const FamilySpec spec{*fam, n};
        const FormulaResult formula = gamma_formula(spec);

        std::optional<int> construction_weight;
        bool construction_valid = false;
        bool construction_applicable = family_has_construction(*fam);
        if (construction_applicable) {
            try {
                const Labeling l = construct_labeling(spec);
                construction_weight = weight(l);
                construction_valid = is_valid_srdf(family_graph(spec), l);
            } catch (const InvalidParameterError&) {
                construction_applicable = false;
            } catch (const ExcludedCaseError&) {
                construction_applicable = false;
            }
        }

        const std::optional<int> exact = detail_cli::table_exact(spec);

        bool row_agrees = true;
        if (construction_weight) {
            if (!construction_valid) row_agrees = false;
            if (formula.covered() && *formula.value != *construction_weight) row_agrees = false;
        }
        if (exact && formula.covered() && *formula.value != *exact) row_agrees = false;
        if (exact && construction_weight && *construction_weight != *exact) row_agrees = false;
        if (!row_agrees) any_disagree = true;

        if (porcelain) {
            out << "row " << n;
            out << " formula " << (formula.covered() ? std::to_string(*formula.value) : "-");
            out << " construction "
                << (construction_weight ? std::to_string(*construction_weight) : "-");
            out << " valid " << (construction_weight ? (construction_valid ? "1" : "0") : "-");
            out << " exact " << (exact ? std::to_string(*exact) : "-");
            out << " agree " << (row_agrees ? 1 : 0) << "\n";
        } else {
            out << std::setw(3) << n;
            out << std::setw(9) << (formula.covered() ? std::to_string(*formula.value) : "-");
            out << "  " << std::left << std::setw(12)
                << (formula.covered() ? formula_source_name(*formula.source) : "-") << std::right;
            out << std::setw(13)
                << (construction_weight ? std::to_string(*construction_weight) : "-");
            out << std::setw(7) << (construction_weight ? (construction_valid ? "yes" : "NO") : "-");
            out << std::setw(7) << (exact ? std::to_string(*exact) : "-");
            out << "  " << std::left << std::setw(6)
                << (exact ? detail_cli::table_exact_method(spec) : "-") << std::right;
            out << "  " << (row_agrees ? "yes" : "NO") << "\n";
        }
    }
    if (check && any_disagree) {
        out << "check: DISAGREEMENT found\n";
        return kExitDisagree;
    }
    if (check) out << "check: all rows agree\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------
// dot
// ---------------------------------------------------------------------------

inline int cmd_dot(const detail_cli::GraphSource& source, const std::string& labeling_path,
                   const std::string& out_path, std::ostream& out, std::ostream&) {
    const Graph g = source.load();
    std::optional<Labeling> labeling;
    if (!labeling_path.empty()) {
        labeling = detail_cli::load_labeling_file(labeling_path);
        if (labeling->size() != g.vertex_count())
            throw InvalidParameterError("labeling size does not match graph");
    }
    std::ostringstream os;
    write_dot(g, labeling, os);
    if (out_path.empty()) out << os.str();
    else detail_cli::write_text_file(out_path, os.str());
    return kExitOk;
}

// ---------------------------------------------------------------------------
// argument parsing and dispatch
// ---------------------------------------------------------------------------

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"signed Roman domination toolkit for ladder-style graph families"};
    app.require_subcommand(1);

    detail_cli::GraphSource source;
    std::string out_path, method, labeling_path;
    bool deterministic = false, porcelain = false, check = false;
    int workers = 1, cap = 0, from = 0, to = 0;

    auto add_family = [&](CLI::App* cmd, bool required) {
        auto* f = cmd->add_option("--family", source.family_name,
                                  "family: path|cycle|complete|ladder|circular-ladder|"
                                  "ladder-complement|circular-ladder-complement");
        auto* n = cmd->add_option("--n", source.n, "family parameter n");
        n->needs(f);
        f->needs(n);
        if (required) f->required();
    };

    auto* gen = app.add_subcommand("gen", "generate a family graph as an edge-list file");
    add_family(gen, true);
    gen->add_option("--out", out_path, "output file (default stdout)");

    auto* solve = app.add_subcommand("solve", "compute gamma_SR exactly with a certificate");
    add_family(solve, false);
    solve->add_option("--in", source.in_path, "edge-list file");
    solve->add_option("--method", method, "auto|exhaustive|bb|dp (default auto)");
    solve->add_flag("--deterministic", deterministic, "single worker, canonical witness");
    solve->add_option("--workers", workers, "branch-and-bound worker threads");
    solve->add_option("--cap", cap, "override the engine vertex cap");
    solve->add_flag("--porcelain", porcelain, "machine-readable output");
    solve->add_option("--out", out_path, "write the witness labeling to a file");

    auto* construct = app.add_subcommand("construct", "emit the closed-form labeling certificate");
    add_family(construct, true);
    construct->add_flag("--porcelain", porcelain, "machine-readable output");
    construct->add_option("--out", out_path, "write the labeling to a file");

    auto* verify = app.add_subcommand("verify", "check a labeling file against a graph");
    add_family(verify, false);
    verify->add_option("--in", source.in_path, "edge-list file");
    verify->add_option("--labeling", labeling_path, "labeling file")->required();
    verify->add_flag("--porcelain", porcelain, "machine-readable output");

    auto* bounds = app.add_subcommand("bounds", "print the general lower bounds");
    add_family(bounds, false);
    bounds->add_option("--in", source.in_path, "edge-list file");

    auto* table = app.add_subcommand("table", "formula / construction / exact comparison table");
    std::string table_family;
    table->add_option("--family", table_family, "family tag")->required();
    table->add_option("--from", from, "first n")->required();
    table->add_option("--to", to, "last n")->required();
    table->add_flag("--check", check, "exit 3 if any row disagrees");
    table->add_flag("--porcelain", porcelain, "machine-readable output");

    auto* dot = app.add_subcommand("dot", "emit DOT text, optionally styled by a labeling");
    add_family(dot, false);
    dot->add_option("--in", source.in_path, "edge-list file");
    dot->add_option("--labeling", labeling_path, "labeling file");
    dot->add_option("--out", out_path, "output file (default stdout)");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::Success& e) {
        out << app.help();
        (void)e;
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (gen->parsed()) return cmd_gen(source, out_path, out, err);
        if (solve->parsed())
            return cmd_solve(source, method, deterministic, workers, cap, porcelain, out_path,
                             out, err);
        if (construct->parsed()) return cmd_construct(source, porcelain, out_path, out, err);
        if (verify->parsed()) return cmd_verify(source, labeling_path, porcelain, out, err);
        if (bounds->parsed()) return cmd_bounds(source, out, err);
        if (table->parsed()) return cmd_table(table_family, from, to, check, porcelain, out, err);
        if (dot->parsed()) return cmd_dot(source, labeling_path, out_path, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    err << "error: no command given\n";
    return kExitUsage;
}

} // namespace srd::cli
