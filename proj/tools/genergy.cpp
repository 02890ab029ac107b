// genergy: graph energy, Randic-type lower bounds, weight optimization, and
// exhaustive verification sweeps over small graphs.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "genergy/graph.hpp"
#include "genergy/indices.hpp"
#include "genergy/report.hpp"
#include "genergy/spectral.hpp"
#include "genergy/subgraph_search.hpp"
#include "genergy/weights.hpp"

namespace {

using namespace genergy;

std::string read_all(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DomainError("cannot open output file '" + path + "'");
    out << content;
}

// graph6 inputs hold one graph per line; edge-list inputs hold one graph per
// document. Lines starting with '>' (header lines in common graph6 corpora)
// are skipped.
std::vector<Graph> read_graphs(const std::string& path, const std::string& format) {
    const std::string text = read_all(path);
    std::vector<Graph> graphs;
    if (format == "edges") {
        graphs.push_back(from_edge_list(text));
        return graphs;
    }
    if (format != "graph6") throw DomainError("unknown format '" + format + "'");
    std::istringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '>') continue;
        graphs.push_back(graph6_decode(line));
    }
    if (graphs.empty()) throw DomainError("no graphs in input");
    return graphs;
}

std::vector<long> parse_params(const std::string& csv) {
    std::vector<long> out;
    std::istringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        long v;
        if (!detail::parse_int(tok, v)) throw DomainError("bad family parameter '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

struct CommonInput {
    std::string input = "-";
    std::string format = "graph6";

    void attach(CLI::App* cmd) {
        cmd->add_option("--input", input, "input file, '-' for stdin (default)");
        cmd->add_option("--format", format, "input format: graph6 | edges")
            ->check(CLI::IsMember({"graph6", "edges"}));
    }
};

int cmd_energy(const CommonInput& in, bool json) {
    for (const auto& g : read_graphs(in.input, in.format)) {
        const double e = energy(g);
        if (json) {
            std::cout << "{\"graph6\": \"" << graph6_encode(g) << "\", \"n\": " << g.vertex_count()
                      << ", \"m\": " << g.edge_count() << ", \"energy\": " << format_double(e)
                      << "}\n";
        } else {
            std::cout << graph6_encode(g) << "\t" << format_double(e) << "\n";
        }
    }
    return 0;
}

int cmd_report(const CommonInput& in, const ReportOptions& opt, bool json) {
    bool all_ok = true;
    for (const auto& g : read_graphs(in.input, in.format)) {
        const BoundReport r = make_report(g, opt);
        all_ok = all_ok && r.all_pass();
        std::cout << (json ? report_to_json(r, opt) + "\n" : report_to_text(r));
    }
    return all_ok ? 0 : 1;
}

int cmd_sweep(const SweepOptions& opt, const std::string& csv_path, bool json) {
    SweepOptions run = opt;
    run.per_graph_rows = !csv_path.empty();
    const SweepSummary sum = sweep(run);
    if (!csv_path.empty()) {
        write_file(csv_path, sum.csv);
        if (!sum.violations.empty())
            write_file(csv_path + ".violations.csv", violations_to_csv(sum.violations));
    }
    std::cout << (json ? summary_to_json(sum) + "\n" : summary_to_text(sum));
    if (!json)
        for (size_t i = 0; i < sum.violations.size() && i < 20; ++i) {
            const auto& v = sum.violations[i];
            std::cout << "violation: " << v.graph6 << " " << v.check << " bound "
                      << format_double(v.lhs) << " vs energy " << format_double(v.rhs) << "\n";
        }
    return sum.ok() ? 0 : 1;
}

int cmd_optimize(const CommonInput& in, double tol, int max_iters,
                 const std::string& eval_weights, bool json) {
    const auto graphs = read_graphs(in.input, in.format);
    for (const auto& g : graphs) {
        if (!eval_weights.empty()) {
            // replay: evaluate a stored weight map instead of optimizing
            const auto doc = nlohmann::json::parse(read_all(eval_weights));
            EdgeWeights w = EdgeWeights::zeros(g);
            for (const auto& [key, val] : doc.items()) {
                const auto arrow = key.find("->");
                if (arrow == std::string::npos)
                    throw DomainError("weights file: bad key '" + key + "'");
                const int from = std::stoi(key.substr(0, arrow));
                const int to = std::stoi(key.substr(arrow + 2));
                const int e = g.edge_index(from, to);
                if (e < 0)
                    throw DomainError("weights file: edge " + key + " not in graph");
                w.w[static_cast<size_t>(e)][g.edge(e).u == from ? 0 : 1] = val.get<double>();
            }
            const double b = bound_value(g, w);
            if (json)
                std::cout << "{\"graph6\": \"" << graph6_encode(g)
                          << "\", \"bound\": " << format_double(b)
                          << ", \"weights\": " << weights_to_json(g, w) << "}\n";
            else
                std::cout << graph6_encode(g) << "\tbound " << format_double(b) << "\n";
            continue;
        }
        const OptimizeResult res = optimize_weights(g, tol, max_iters);
        if (json) {
            std::cout << "{\"graph6\": \"" << graph6_encode(g)
                      << "\", \"bound\": " << format_double(res.bound)
                      << ", \"converged\": " << (res.converged ? "true" : "false")
                      << ", \"iterations\": " << res.iterations
                      << ", \"weights\": " << weights_to_json(g, res.weights) << "}\n";
        } else {
            std::cout << graph6_encode(g) << "\tbound " << format_double(res.bound) << "\t"
                      << (res.converged ? "converged" : "NOT converged") << " after "
                      << res.iterations << " iterations\n";
        }
    }
    return 0;
}

int cmd_search(const CommonInput& in, int edge_cap, bool greedy, int restarts,
               std::uint64_t seed, int workers, bool json) {
    for (const auto& g : read_graphs(in.input, in.format)) {
        const SubgraphSearchResult res = greedy ? greedy_subgraph(g, restarts, seed)
                                                : max_randic_subgraph(g, edge_cap, workers);
        const auto comps = classify_components(g, res.subset);
        bool all_reg_or_bip = true;
        for (const auto& c : comps)
            if (!c.is_regular && !c.is_bipartite) all_reg_or_bip = false;
        if (json) {
            std::cout << "{\"graph6\": \"" << graph6_encode(g) << "\", \"engine\": \""
                      << (greedy ? "greedy" : "exhaustive") << "\", \"mask\": \""
                      << detail::hex_mask(res.subset.mask)
                      << "\", \"randic\": " << format_double(res.value)
                      << ", \"bound\": " << format_double(2.0 * res.value)
                      << ", \"components\": " << comps.size()
                      << ", \"all_regular_or_bipartite\": " << (all_reg_or_bip ? "true" : "false")
                      << "}\n";
        } else {
            std::cout << graph6_encode(g) << "\tmask " << detail::hex_mask(res.subset.mask)
                      << "\tR(H*) " << format_double(res.value) << "\tbound "
                      << format_double(2.0 * res.value) << "\t" << comps.size() << " component(s), "
                      << (all_reg_or_bip ? "all regular-or-bipartite"
                                         : "NOT all regular-or-bipartite")
                      << "\n";
        }
    }
    return 0;
}

int cmd_family(const std::string& kind, const std::string& params, const std::string& format) {
    const auto p = parse_params(params);
    const Graph g = family(parse_family_kind(kind), p);
    if (format == "edges")
        std::cout << to_edge_list(g);
    else
        std::cout << graph6_encode(g) << "\n";
    return 0;
}

int cmd_classify(int n_max, const std::string& csv_path, int workers, bool json) {
    const MaximizerTable table = classify_maximizers(n_max, workers);
    if (!csv_path.empty()) {
        std::string csv = "graph6,best_mask_hex,R_value,all_components_regular_or_bipartite\n";
        for (const auto& row : table.rows)
            csv += row.graph6 + "," + detail::hex_mask(row.best_mask) + "," +
                   format_double(row.value) + "," + (row.all_regular_or_bipartite ? "1" : "0") +
                   "\n";
        write_file(csv_path, csv);
    }
    if (json) {
        std::cout << "{\"n_max\": " << n_max << ", \"graphs\": " << table.rows.size()
                  << ", \"counterexamples\": " << table.counterexamples.size() << "}\n";
    } else {
        std::cout << "classified " << table.rows.size() << " connected graphs up to n=" << n_max
                  << ": " << table.counterexamples.size() << " counterexample(s)\n";
        for (const auto& g6 : table.counterexamples) std::cout << "counterexample: " << g6 << "\n";
    }
    return table.counterexamples.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph energy bounds: spectra, Randic indices, edge-weight optimization"};
    app.require_subcommand(1);

    CommonInput in_energy, in_report, in_opt, in_search;
    bool json_energy = false, json_report = false, json_sweep = false, json_opt = false,
         json_search = false, json_classify = false;

    auto* energy_cmd = app.add_subcommand("energy", "graph energy of each input graph");
    in_energy.attach(energy_cmd);
    energy_cmd->add_flag("--json", json_energy, "one JSON object per graph");

    auto* report_cmd = app.add_subcommand("report", "full bound report per input graph");
    in_report.attach(report_cmd);
    ReportOptions ropt;
    bool report_no_opt = false;
    report_cmd->add_flag("--json", json_report, "one JSON object per graph");
    report_cmd->add_option("--edge-cap", ropt.edge_cap, "exhaustive engine cap (edges)");
    report_cmd->add_option("--tol", ropt.opt_tol, "optimizer convergence tolerance");
    report_cmd->add_option("--max-iters", ropt.opt_max_iters, "optimizer iteration cap");
    report_cmd->add_flag("--no-optimize", report_no_opt, "skip the weight optimizer");
    report_cmd->add_option("--restarts", ropt.greedy_restarts, "greedy engine random restarts");
    report_cmd->add_option("--seed", ropt.seed, "seed for randomized greedy restarts");
    report_cmd->add_option("--workers", ropt.workers, "worker threads for the exhaustive engine");

    auto* sweep_cmd = app.add_subcommand("sweep", "verify all inequalities over all graphs on n vertices");
    SweepOptions sopt;
    std::string sweep_csv;
    bool sweep_no_opt = false, sweep_no_exhaustive = false;
    sweep_cmd->add_option("--n", sopt.n, "vertex count (1..8)")->required();
    sweep_cmd->add_flag("--connected", sopt.connected_only, "connected graphs only");
    sweep_cmd->add_option("--csv", sweep_csv, "write per-graph rows to this file");
    sweep_cmd->add_flag("--json", json_sweep, "summary as JSON");
    sweep_cmd->add_option("--tol", sopt.opt_tol, "optimizer convergence tolerance");
    sweep_cmd->add_option("--max-iters", sopt.opt_max_iters, "optimizer iteration cap");
    sweep_cmd->add_option("--edge-cap", sopt.edge_cap, "exhaustive engine cap (edges)");
    sweep_cmd->add_flag("--no-optimize", sweep_no_opt, "skip the weight optimizer");
    sweep_cmd->add_flag("--no-exhaustive", sweep_no_exhaustive, "skip the exhaustive subgraph engine");
    sweep_cmd->add_option("--workers", sopt.workers, "worker threads (default: GENERGY_WORKERS or cores)");

    auto* opt_cmd = app.add_subcommand("optimize", "maximize the weighted edge bound");
    in_opt.attach(opt_cmd);
    double opt_tol = 1e-8;
    int opt_iters = 10000;
    std::string eval_weights;
    opt_cmd->add_flag("--json", json_opt, "JSON output including the weight map");
    opt_cmd->add_option("--tol", opt_tol, "convergence tolerance");
    opt_cmd->add_option("--max-iters", opt_iters, "iteration cap");
    opt_cmd->add_option("--eval-weights", eval_weights,
                        "skip optimization; evaluate the bound of this stored weight map");

    auto* search_cmd = app.add_subcommand("search", "maximum-Randic spanning subgraph");
    in_search.attach(search_cmd);
    int search_cap = 24, search_restarts = 0, search_workers = 0;
    std::uint64_t search_seed = 0;
    bool search_greedy = false;
    search_cmd->add_option("--edge-cap", search_cap, "exhaustive engine cap (edges)");
    search_cmd->add_flag("--greedy", search_greedy, "use the greedy engine");
    search_cmd->add_option("--restarts", search_restarts, "greedy random restarts");
    search_cmd->add_option("--seed", search_seed, "seed for randomized greedy restarts");
    search_cmd->add_option("--workers", search_workers, "worker threads for the exhaustive engine");
    search_cmd->add_flag("--json", json_search, "JSON output");

    auto* family_cmd = app.add_subcommand("family", "generate a named graph family member");
    std::string fam_kind, fam_params, fam_format = "graph6";
    family_cmd->add_option("--kind", fam_kind,
                           "path | cycle | star | complete_bipartite | dandelion")
        ->required();
    family_cmd->add_option("--params", fam_params, "comma-separated parameters, e.g. 4 or 2,3")
        ->required();
    family_cmd->add_option("--format", fam_format, "output format: graph6 | edges")
        ->check(CLI::IsMember({"graph6", "edges"}));

    auto* classify_cmd =
        app.add_subcommand("classify", "classify maximal-Randic subgraphs over all connected graphs");
    int classify_n = 5, classify_workers = 0;
    std::string classify_csv;
    classify_cmd->add_option("--n-max", classify_n, "largest vertex count (1..7)")->required();
    classify_cmd->add_option("--csv", classify_csv, "write the classification table to this file");
    classify_cmd->add_option("--workers", classify_workers, "worker threads");
    classify_cmd->add_flag("--json", json_classify, "summary as JSON");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(energy_cmd)) return cmd_energy(in_energy, json_energy);
        if (app.got_subcommand(report_cmd)) {
            ropt.run_optimizer = !report_no_opt;
            return cmd_report(in_report, ropt, json_report);
        }
        if (app.got_subcommand(sweep_cmd)) {
            sopt.run_optimizer = !sweep_no_opt;
            sopt.exhaustive_subgraphs = !sweep_no_exhaustive;
            return cmd_sweep(sopt, sweep_csv, json_sweep);
        }
        if (app.got_subcommand(opt_cmd))
            return cmd_optimize(in_opt, opt_tol, opt_iters, eval_weights, json_opt);
        if (app.got_subcommand(search_cmd))
            return cmd_search(in_search, search_cap, search_greedy, search_restarts, search_seed,
                              search_workers, json_search);
        if (app.got_subcommand(family_cmd)) return cmd_family(fam_kind, fam_params, fam_format);
        if (app.got_subcommand(classify_cmd))
            return cmd_classify(classify_n, classify_csv, classify_workers, json_classify);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
