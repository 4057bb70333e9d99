// Command-line front end: graph construction, analysis, matrix export,
// rank/rate reports and BER simulation.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ildpc/codec.hpp"
#include "ildpc/gf2.hpp"
#include "ildpc/graph_stats.hpp"
#include "ildpc/incidence.hpp"
#include "ildpc/parity_check.hpp"
#include "ildpc/sim.hpp"
#include "json.hpp"

namespace {

using namespace ildpc;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw std::runtime_error("cannot read " + path);
    return ss.str();
}

// Complete output lands via rename; a failed run leaves no partial file.
void write_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string());
        out << content;
        out.flush();
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw std::runtime_error("cannot move output into place at " + path + ": " + ec.message());
    }
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        write_atomic(out_path, content);
}

struct GraphArgs {
    std::string family;
    int base = 0;
    int restrict_r = 0;
    std::string restrict_x;
    std::string component = "all";
    std::string spec_path;
};

void add_graph_options(CLI::App* cmd, GraphArgs& args, bool allow_spec_file = true) {
    cmd->add_option("--family", args.family, "graph family (field or ring)")
        ->check(CLI::IsMember({"field", "ring"}));
    cmd->add_option("--base", args.base, "q (prime power) or n (>= 2)");
    cmd->add_option("--restrict-r", args.restrict_r,
                    "restrict lines to the first r x-values in canonical order");
    cmd->add_option("--restrict-x", args.restrict_x,
                    "restrict lines to an explicit comma-separated x list");
    cmd->add_option("--component", args.component, "component selection after restriction")
        ->check(CLI::IsMember({"all", "largest"}))
        ->capture_default_str();
    if (allow_spec_file)
        cmd->add_option("--spec", args.spec_path, "load the graph spec from a JSON document");
}

GraphSpec resolve_spec(const GraphArgs& args) {
    if (!args.spec_path.empty()) {
        if (!args.family.empty() || args.base != 0)
            throw std::invalid_argument("--spec cannot be combined with --family/--base");
        return graph_spec_from_json(read_file(args.spec_path));
    }
    if (args.family.empty()) throw std::invalid_argument("--family is required");
    if (args.base == 0) throw std::invalid_argument("--base is required");

    GraphSpec spec;
    spec.family = args.family == "field" ? Family::field : Family::ring;
    spec.base = args.base;
    if (spec.family == Family::field) {
        if (!is_prime_power(args.base))
            throw std::invalid_argument("--base must be a prime power for --family field");
    } else if (args.base < 2) {
        throw std::invalid_argument("--base must be >= 2 for --family ring");
    }

    if (args.restrict_r > 0 && !args.restrict_x.empty())
        throw std::invalid_argument("--restrict-r and --restrict-x are mutually exclusive");
    const int big = args.base * args.base;
    if (args.restrict_r > 0) {
        if (args.restrict_r > big)
            throw std::invalid_argument("--restrict-r exceeds the x-domain size");
        std::vector<int> xs(static_cast<std::size_t>(args.restrict_r));
        for (int i = 0; i < args.restrict_r; ++i) xs[static_cast<std::size_t>(i)] = i;
        spec.restriction = std::move(xs);
    } else if (!args.restrict_x.empty()) {
        std::vector<int> xs;
        std::stringstream ss(args.restrict_x);
        std::string token;
        while (std::getline(ss, token, ',')) {
            if (token.empty()) throw std::invalid_argument("--restrict-x has an empty entry");
            try {
                xs.push_back(std::stoi(token));
            } catch (const std::exception&) {
                throw std::invalid_argument("--restrict-x has a malformed entry: " + token);
            }
        }
        spec.restriction = std::move(xs);
    }
    spec.component = args.component == "largest" ? ComponentSelection::largest
                                                 : ComponentSelection::all;
    return spec;
}

ParityCheckMatrix matrix_from(const GraphArgs& graph_args, const std::string& code_path) {
    if (!code_path.empty()) {
        if (!graph_args.family.empty() || graph_args.base != 0 || !graph_args.spec_path.empty())
            throw std::invalid_argument("--code cannot be combined with graph flags");
        return import_alist(read_file(code_path));
    }
    return ParityCheckMatrix::from_graph(IncidenceGraph::build(resolve_spec(graph_args)));
}

std::string matrix_to_json(const ParityCheckMatrix& H) {
    nlohmann::json doc;
    doc["rows"] = H.rows();
    doc["cols"] = H.cols();
    auto& support = doc["row_support"] = nlohmann::json::array();
    for (std::size_t i = 0; i < H.rows(); ++i) support.push_back(H.row(i));
    return doc.dump(2) + "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"LDPC codes from bipartite point-line incidence graphs"};
    app.require_subcommand(1);

    // construct
    auto* construct = app.add_subcommand("construct", "emit a graph spec document");
    GraphArgs construct_args;
    std::string construct_out;
    add_graph_options(construct, construct_args, /*allow_spec_file=*/false);
    construct->add_option("--out", construct_out, "output path (default: stdout)");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "census, bi-degree, density and girth");
    GraphArgs analyze_args;
    std::string analyze_out, analyze_girth = "none", analyze_format = "text";
    std::size_t analyze_roots = 64;
    add_graph_options(analyze, analyze_args);
    analyze->add_option("--girth", analyze_girth, "girth computation: none, exact or sampled")
        ->check(CLI::IsMember({"none", "exact", "sampled"}))
        ->capture_default_str();
    analyze->add_option("--girth-roots", analyze_roots, "BFS roots for --girth sampled")
        ->capture_default_str();
    analyze->add_option("--format", analyze_format, "report format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    analyze->add_option("--out", analyze_out, "output path (default: stdout)");

    // export
    auto* exp = app.add_subcommand("export", "emit the parity-check matrix");
    GraphArgs export_args;
    std::string export_out, export_format = "alist";
    add_graph_options(exp, export_args);
    exp->add_option("--format", export_format, "matrix format")
        ->check(CLI::IsMember({"alist", "json"}))
        ->capture_default_str();
    exp->add_option("--out", export_out, "output path (default: stdout)");

    // rank
    auto* rank = app.add_subcommand("rank", "GF(2) rank of the parity-check matrix");
    GraphArgs rank_args;
    std::string rank_code, rank_out;
    add_graph_options(rank, rank_args);
    rank->add_option("--code", rank_code, "read the matrix from an alist file");
    rank->add_option("--out", rank_out, "output path (default: stdout)");

    // rate
    auto* rate = app.add_subcommand("rate", "design and true code rates");
    GraphArgs rate_args;
    std::string rate_code, rate_out;
    add_graph_options(rate, rate_args);
    rate->add_option("--code", rate_code, "read the matrix from an alist file");
    rate->add_option("--out", rate_out, "output path (default: stdout)");

    // simulate
    auto* simulate = app.add_subcommand("simulate", "Monte-Carlo BER/FER sweep (CSV)");
    GraphArgs sim_args;
    std::string sim_code, sim_out, sim_ebn0, sim_decoder = "spa", sim_source = "random";
    std::size_t sim_uncoded_n = 0;
    SweepConfig sweep;
    add_graph_options(simulate, sim_args);
    simulate->add_option("--code", sim_code, "read the matrix from an alist file");
    simulate->add_option("--uncoded-n", sim_uncoded_n,
                         "uncoded BPSK baseline with the given block length");
    simulate->add_option("--ebn0", sim_ebn0, "Eb/N0 grid in dB, start:step:stop")->required();
    simulate->add_option("--decoder", sim_decoder, "decoding algorithm")
        ->check(CLI::IsMember({"spa", "minsum"}))
        ->capture_default_str();
    simulate->add_option("--max-iter", sweep.decoder.max_iter, "decoder iteration cap")
        ->capture_default_str();
    simulate->add_option("--normalization", sweep.decoder.normalization, "min-sum scale factor")
        ->capture_default_str();
    simulate->add_option("--clip", sweep.decoder.clip, "LLR magnitude bound")
        ->capture_default_str();
    simulate->add_option("--max-frames", sweep.max_frames, "frame cap per point")
        ->capture_default_str();
    simulate->add_option("--min-bit-errors", sweep.min_bit_errors,
                         "stop a point after this many bit errors (0 = never)")
        ->capture_default_str();
    simulate->add_option("--seed", sweep.seed, "64-bit reproducibility seed")
        ->capture_default_str();
    simulate->add_option("--threads", sweep.threads, "worker threads (0 = hardware)")
        ->capture_default_str();
    simulate->add_option("--message-source", sim_source, "message bits per frame")
        ->check(CLI::IsMember({"random", "all_zero"}))
        ->capture_default_str();
    simulate->add_option("--out", sim_out, "output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    if (construct->parsed()) {
        const GraphSpec spec = resolve_spec(construct_args);
        IncidenceGraph::build(spec);  // validates restriction members and budget
        emit(construct_out, graph_spec_to_json(spec));
        return 0;
    }
    if (analyze->parsed()) {
        const IncidenceGraph g = IncidenceGraph::build(resolve_spec(analyze_args));
        GirthMode mode = GirthMode::none;
        if (analyze_girth == "exact") mode = GirthMode::exact;
        if (analyze_girth == "sampled") mode = GirthMode::sampled;
        const GraphStats stats = analyze_graph(g, mode, analyze_roots);
        emit(analyze_out, analyze_format == "json" ? stats_to_json(stats) : stats_to_text(stats));
        return 0;
    }
    if (exp->parsed()) {
        const auto H = matrix_from(export_args, "");
        emit(export_out, export_format == "alist" ? export_alist(H) : matrix_to_json(H));
        return 0;
    }
    if (rank->parsed()) {
        const auto H = matrix_from(rank_args, rank_code);
        std::string out = "rows: " + std::to_string(H.rows()) + "\ncols: " +
                          std::to_string(H.cols()) + "\nrank: " + std::to_string(gf2_rank(H)) +
                          "\n";
        emit(rank_out, out);
        return 0;
    }
    if (rate->parsed()) {
        std::optional<double> design;
        if (rate_code.empty()) design = design_rate_of(resolve_spec(rate_args));
        const auto H = matrix_from(rate_args, rate_code);
        emit(rate_out, code_spec_to_text(rate_report(H, design)));
        return 0;
    }
    if (simulate->parsed()) {
        sweep.ebn0_grid_db = parse_ebn0_grid(sim_ebn0);
        sweep.algorithm =
            sim_decoder == "minsum" ? DecoderAlgorithm::min_sum : DecoderAlgorithm::sum_product;
        sweep.message_source =
            sim_source == "all_zero" ? MessageSource::all_zero : MessageSource::random;
        if (sim_uncoded_n > 0 &&
            (!sim_code.empty() || !sim_args.family.empty() || !sim_args.spec_path.empty()))
            throw std::invalid_argument("--uncoded-n cannot be combined with a code source");
        CodeInstance code = sim_uncoded_n > 0
                                ? CodeInstance::uncoded(sim_uncoded_n)
                                : CodeInstance::from_parity_check(matrix_from(sim_args, sim_code));
        const auto points = run_sweep(code, sweep);
        emit(sim_out, emit_csv(points));
        return 0;
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
