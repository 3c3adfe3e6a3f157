// evciso — eigenvector-centrality screening for graph isomorphism.
//
// Subcommands:
//   gen       seeded Erdős–Rényi suite generation
//   evc       per-vertex eigenvector centrality of one graph
//   check     staged pipeline + exact confirmation for a pair of graphs
//   simulate  pairwise screening experiment over random suites
//
// Exit codes: 0 success (or isomorphic for `check`), 1 not isomorphic,
//             2 usage/input error, 3 computation error (non-convergence).

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "evciso/exact_matcher.hpp"
#include "evciso/experiment.hpp"
#include "evciso/generator.hpp"
#include "evciso/invariant_filter.hpp"

namespace {

constexpr int kExitNotIsomorphic = 1;
constexpr int kExitUsage = 2;
constexpr int kExitComputation = 3;

std::string format_value(double v, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", precision, v);
    return buf;
}

std::string format_sequence(const std::vector<double>& values, int precision) {
    std::string out = "[";
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) out += ", ";
        out += format_value(values[i], precision);
    }
    return out + "]";
}

std::string format_ints(const std::vector<int>& values) {
    std::string out = "[";
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(values[i]);
    }
    return out + "]";
}

struct GenOptions {
    int n = 10;
    double p = 0.5;
    int count = 1;
    std::uint64_t seed = evciso::kDefaultMasterSeed;
    std::string out_dir;
};

int run_gen(const GenOptions& opt) {
    const std::vector<evciso::Graph> graphs =
        evciso::suite(opt.n, opt.p, opt.count, opt.seed);
    if (opt.out_dir.empty()) {
        for (const auto& g : graphs) std::cout << evciso::render_edge_list(g);
        return 0;
    }
    std::filesystem::create_directories(opt.out_dir);
    for (size_t k = 0; k < graphs.size(); ++k) {
        char name[32];
        std::snprintf(name, sizeof name, "graph_%05zu.txt", k);
        evciso::write_graph_file(
            graphs[k], (std::filesystem::path(opt.out_dir) / name).string());
    }
    std::cout << "wrote " << graphs.size() << " graph(s) to " << opt.out_dir
              << "\n";
    return 0;
}

struct EvcOptions {
    std::string input;
    double tol = 1e-10;
    int max_iters = 1000;
    int precision = 5;
};

int run_evc(const EvcOptions& opt) {
    const evciso::Graph g = evciso::read_graph_file(opt.input);
    evciso::ConvergenceConfig cfg;
    cfg.norm_tolerance = opt.tol;
    cfg.vector_tolerance = opt.tol;
    cfg.max_iterations = opt.max_iters;
    const evciso::EvcResult r = evciso::power_iteration(g, cfg);

    std::cout << "vertices: " << g.vertex_count() << "  edges: " << g.edge_count()
              << "\n";
    for (size_t v = 0; v < r.values.size(); ++v)
        std::cout << "evc[" << v << "] = " << format_value(r.values[v], opt.precision)
                  << "\n";
    std::cout << "sorted sequence: "
              << format_sequence(evciso::evc_sequence(r), opt.precision) << "\n";
    std::cout << "spectral radius: " << format_value(r.spectral_radius, opt.precision)
              << "\n";
    std::cout << "iterations: " << r.iterations << "\n";
    std::cout << "used_shift: " << (r.used_shift ? "true" : "false") << "\n";
    return 0;
}

struct CheckOptions {
    std::string file_a;
    std::string file_b;
    bool filter_only = false;
    double tol = 1e-6;
    int precision = 5;
};

void print_mapping(const evciso::CandidateMapping& mapping) {
    std::cout << "candidate mapping (" << mapping.classes.size() << " class"
              << (mapping.classes.size() == 1 ? "" : "es") << ", "
              << (mapping.unique ? "unique bijection" : "not unique") << "):\n";
    for (const auto& cls : mapping.classes)
        std::cout << "  " << format_ints(cls.left) << " <-> "
                  << format_ints(cls.right) << "\n";
}

int run_check(const CheckOptions& opt) {
    using Kind = evciso::FilterVerdict::Kind;
    const evciso::Graph a = evciso::read_graph_file(opt.file_a);
    const evciso::Graph b = evciso::read_graph_file(opt.file_b);

    std::cout << "counts: n=" << a.vertex_count() << " m=" << a.edge_count()
              << " | n=" << b.vertex_count() << " m=" << b.edge_count() << "\n";
    evciso::SignatureCache cache({a, b});
    const evciso::FilterVerdict verdict = evciso::compare(cache, 0, 1, opt.tol);

    if (verdict.kind != Kind::RejectedByCounts) {
        std::cout << "degree_seq: " << format_ints(cache.basic(0).degree_seq)
                  << " | " << format_ints(cache.basic(1).degree_seq) << "\n";
    }
    if (verdict.kind != Kind::RejectedByCounts &&
        verdict.kind != Kind::RejectedByDegreeSeq &&
        verdict.kind != Kind::TriviallyIsomorphic) {
        std::cout << "evc_seq: "
                  << format_sequence(cache.full(0).evc_seq, opt.precision) << " | "
                  << format_sequence(cache.full(1).evc_seq, opt.precision) << "\n";
    }
    std::cout << "verdict: " << evciso::to_string(verdict.kind) << "\n";
    if (verdict.mapping) print_mapping(*verdict.mapping);

    if (verdict.rejected()) return kExitNotIsomorphic;
    if (opt.filter_only) return 0;

    const evciso::MatchResult match =
        verdict.mapping
            ? evciso::is_isomorphic_within_classes(a, b, *verdict.mapping)
            : evciso::is_isomorphic(a, b, evciso::Refinement::Degree);
    if (match.isomorphic) {
        std::cout << "exact match: isomorphic (nodes explored: "
                  << match.nodes_explored << ")\n";
        std::cout << "witness: " << format_ints(*match.witness) << "\n";
        return 0;
    }
    std::cout << "exact match: not isomorphic (nodes explored: "
              << match.nodes_explored << ")\n";
    return kExitNotIsomorphic;
}

struct SimulateOptions {
    evciso::ExperimentConfig cfg;
    std::string format = "json";
    std::string out;
};

int run_simulate(const SimulateOptions& opt) {
    const evciso::ExperimentReport report = evciso::run_full_experiment(opt.cfg);
    evciso::ReportFormat format = evciso::ReportFormat::Json;
    if (opt.format == "table") format = evciso::ReportFormat::Table;
    if (opt.format == "csv") format = evciso::ReportFormat::Csv;
    const std::string text = evciso::render_report(report, format);
    if (opt.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream file(opt.out, std::ios::binary);
        if (!file) throw std::runtime_error("cannot write file: " + opt.out);
        file << text;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Graph-isomorphism screening via eigenvector-centrality sequences"};
    app.require_subcommand(1);

    GenOptions gen;
    CLI::App* gen_cmd = app.add_subcommand("gen", "Generate seeded G(n, p) graphs");
    gen_cmd->add_option("--n", gen.n, "Vertex count")->capture_default_str();
    gen_cmd->add_option("--p", gen.p, "Edge probability")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    gen_cmd->add_option("--count", gen.count, "Number of graphs")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    gen_cmd->add_option("--seed", gen.seed, "Master seed")->capture_default_str();
    gen_cmd->add_option("--out-dir", gen.out_dir,
                        "Directory for graph_00000.txt ... (stdout if omitted)");

    EvcOptions evc;
    CLI::App* evc_cmd =
        app.add_subcommand("evc", "Eigenvector centrality of one graph");
    evc_cmd->add_option("--input", evc.input, "Edge-list file")->required();
    evc_cmd->add_option("--tol", evc.tol, "Convergence tolerance (norm and vector)")
        ->capture_default_str();
    evc_cmd->add_option("--max-iters", evc.max_iters, "Iteration cap per run")
        ->capture_default_str();
    evc_cmd->add_option("--precision", evc.precision, "Printed decimal places")
        ->capture_default_str();

    CheckOptions check;
    CLI::App* check_cmd =
        app.add_subcommand("check", "Screen a pair of graphs for isomorphism");
    check_cmd->add_option("a", check.file_a, "First edge-list file")->required();
    check_cmd->add_option("b", check.file_b, "Second edge-list file")->required();
    check_cmd->add_flag("--filter-only", check.filter_only,
                        "Stop after the invariant pipeline (skip exact matching)");
    check_cmd->add_option("--tol", check.tol, "EVC sequence comparison tolerance")
        ->capture_default_str();
    check_cmd->add_option("--precision", check.precision, "Printed decimal places")
        ->capture_default_str();

    SimulateOptions sim;
    CLI::App* sim_cmd =
        app.add_subcommand("simulate", "Pairwise screening over random suites");
    sim_cmd->add_option("--n", sim.cfg.n, "Vertex count")->capture_default_str();
    sim_cmd->add_option("--p-list", sim.cfg.p_list, "Edge probabilities (ascending)")
        ->capture_default_str();
    sim_cmd->add_option("--suite-size", sim.cfg.suite_size, "Graphs per suite")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    sim_cmd->add_option("--seed", sim.cfg.master_seed, "Master seed")
        ->capture_default_str();
    sim_cmd->add_option("--format", sim.format, "json, table, or csv")
        ->check(CLI::IsMember({"json", "table", "csv"}))
        ->capture_default_str();
    sim_cmd->add_option("--tol", sim.cfg.sequence_tolerance,
                        "EVC sequence comparison tolerance")
        ->capture_default_str();
    sim_cmd->add_flag("--confirm-all-degree", sim.cfg.confirm_all_degree,
                      "Also confirm degree-flagged pairs the EVC stage rejected");
    sim_cmd->add_option("--jobs", sim.cfg.jobs, "Worker threads")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    bool no_timing = false;
    sim_cmd->add_flag("--no-timing", no_timing,
                      "Report wall_time as 0 so output is byte-comparable across runs");
    sim_cmd->add_option("--fp-dir", sim.cfg.counterexample_dir,
                        "Directory for false-positive pair dumps (empty disables)")
        ->capture_default_str();
    sim_cmd->add_option("--out", sim.out, "Write the report here instead of stdout");

    try {
        app.parse(argc, argv);
        sim.cfg.record_timing = !no_timing;
        if (gen_cmd->parsed()) return run_gen(gen);
        if (evc_cmd->parsed()) return run_evc(evc);
        if (check_cmd->parsed()) return run_check(check);
        return run_simulate(sim);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    } catch (const evciso::ConvergenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitComputation;
    } catch (const evciso::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::logic_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitComputation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
