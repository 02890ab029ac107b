#pragma once

// Bound reports for single graphs and verification sweeps over all labeled
// graphs of a given order. All float output uses 12 significant digits so
// byte-identical runs are reproducible.

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "genergy/graph.hpp"
#include "genergy/indices.hpp"
#include "genergy/parallel.hpp"
#include "genergy/spectral.hpp"
#include "genergy/subgraph_search.hpp"
#include "genergy/weights.hpp"

namespace genergy {

inline constexpr double kVerifyTol = 1e-9;      // slack for every energy inequality
inline constexpr double kEqualityTol = 1e-6;    // |energy - bound| treated as equality

struct ReportOptions {
    int edge_cap = 24;        // exhaustive subgraph engine cap; greedy beyond
    int greedy_restarts = 0;
    std::uint64_t seed = 0;
    bool run_optimizer = true;
    double opt_tol = 1e-8;
    int opt_max_iters = 10000;
    int workers = 1;
};

struct BoundReport {
    std::string graph6;
    int n = 0;
    int m = 0;
    double energy = 0.0;
    std::vector<double> vertex_energies;
    double min_edge_product = std::numeric_limits<double>::quiet_NaN();  // NaN when m = 0
    double randic_bound = 0.0;                 // 2R(G)
    double matching_bound = 0.0;               // 2 mu(G)
    std::optional<double> sqrt_tree_bound;     // 2 sqrt(n-1), connected graphs only
    double subgraph_bound = 0.0;               // best 2R(H) found
    std::string subgraph_engine;               // "exhaustive" or "greedy"
    std::uint64_t subgraph_mask = 0;
    std::optional<double> optimized_bound;     // absent when the optimizer is off
    bool optimizer_converged = false;
    int optimizer_iterations = 0;

    // Verdicts are recomputed from the stored values on each call.
    bool verdict_edge_product() const {
        return m == 0 || min_edge_product >= 1.0 - kVerifyTol;
    }
    bool verdict_randic() const { return randic_bound <= energy + kVerifyTol; }
    bool verdict_matching() const { return matching_bound <= energy + kVerifyTol; }
    bool verdict_sqrt_tree() const {
        return !sqrt_tree_bound || *sqrt_tree_bound <= energy + kVerifyTol;
    }
    bool verdict_subgraph() const { return subgraph_bound <= energy + kVerifyTol; }
    bool verdict_optimized() const {
        return !optimized_bound || *optimized_bound <= energy + kVerifyTol;
    }
    bool all_pass() const {
        return verdict_edge_product() && verdict_randic() && verdict_matching() &&
               verdict_sqrt_tree() && verdict_subgraph() && verdict_optimized();
    }
};

inline BoundReport make_report(const Graph& g, const ReportOptions& opt = {}) {
    BoundReport r;
    r.graph6 = graph6_encode(g);
    r.n = g.vertex_count();
    r.m = g.edge_count();
    const Spectrum s = eigendecompose(g);
    r.energy = energy(s);
    r.vertex_energies = vertex_energies(s);
    if (r.m > 0) r.min_edge_product = edge_energy_products(g, s).min_product;
    r.randic_bound = 2.0 * randic(g);
    r.matching_bound = 2.0 * matching_number(g);
    if (is_connected(g)) r.sqrt_tree_bound = 2.0 * std::sqrt(static_cast<double>(r.n) - 1.0);
    if (r.m <= opt.edge_cap) {
        auto res = max_randic_subgraph(g, opt.edge_cap, opt.workers);
        r.subgraph_bound = 2.0 * res.value;
        r.subgraph_engine = "exhaustive";
        r.subgraph_mask = res.subset.mask;
    } else {
        auto res = greedy_subgraph(g, opt.greedy_restarts, opt.seed);
        r.subgraph_bound = 2.0 * res.value;
        r.subgraph_engine = "greedy";
        r.subgraph_mask = res.subset.mask;
    }
    if (opt.run_optimizer) {
        if (r.m == 0) {
            r.optimized_bound = 0.0;
            r.optimizer_converged = true;
        } else {
            auto res = optimize_weights(g, opt.opt_tol, opt.opt_max_iters);
            r.optimized_bound = res.bound;
            r.optimizer_converged = res.converged;
            r.optimizer_iterations = res.iterations;
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// Serialization.
// ---------------------------------------------------------------------------

namespace detail {

inline std::string json_num(double x) {
    if (std::isnan(x)) return "null";
    return format_double(x);
}

inline std::string json_opt(const std::optional<double>& x) {
    return x ? format_double(*x) : "null";
}

inline std::string json_bool(bool b) { return b ? "true" : "false"; }

inline std::string hex_mask(std::uint64_t mask) {
    char buf[24];
    std::snprintf(buf, sizeof(buf), "0x%llx", static_cast<unsigned long long>(mask));
    return buf;
}

}  // namespace detail

inline std::string report_to_json(const BoundReport& r, const ReportOptions& opt = {}) {
    std::string out;
    out += "{\"graph6\": \"" + r.graph6 + "\"";
    out += ", \"n\": " + std::to_string(r.n);
    out += ", \"m\": " + std::to_string(r.m);
    out += ", \"energy\": " + format_double(r.energy);
    out += ", \"vertex_energies\": [";
    for (size_t i = 0; i < r.vertex_energies.size(); ++i) {
        if (i > 0) out += ", ";
        out += format_double(r.vertex_energies[i]);
    }
    out += "]";
    out += ", \"min_edge_product\": " + detail::json_num(r.min_edge_product);
    out += ", \"bounds\": {";
    out += "\"randic\": " + format_double(r.randic_bound);
    out += ", \"matching\": " + format_double(r.matching_bound);
    out += ", \"sqrt_tree\": " + detail::json_opt(r.sqrt_tree_bound);
    out += ", \"subgraph_randic\": " + format_double(r.subgraph_bound);
    out += ", \"optimized\": " + detail::json_opt(r.optimized_bound);
    out += "}";
    out += ", \"verdicts\": {";
    out += "\"edge_product\": " + detail::json_bool(r.verdict_edge_product());
    out += ", \"randic\": " + detail::json_bool(r.verdict_randic());
    out += ", \"matching\": " + detail::json_bool(r.verdict_matching());
    out += ", \"sqrt_tree\": " +
           (r.sqrt_tree_bound ? detail::json_bool(r.verdict_sqrt_tree()) : std::string("null"));
    out += ", \"subgraph_randic\": " + detail::json_bool(r.verdict_subgraph());
    out += ", \"optimized\": " +
           (r.optimized_bound ? detail::json_bool(r.verdict_optimized()) : std::string("null"));
    out += "}";
    out += ", \"slacks\": {";
    out += "\"randic\": " + format_double(r.energy - r.randic_bound);
    out += ", \"matching\": " + format_double(r.energy - r.matching_bound);
    out += ", \"sqrt_tree\": " +
           (r.sqrt_tree_bound ? format_double(r.energy - *r.sqrt_tree_bound) : std::string("null"));
    out += ", \"subgraph_randic\": " + format_double(r.energy - r.subgraph_bound);
    out += ", \"optimized\": " +
           (r.optimized_bound ? format_double(r.energy - *r.optimized_bound) : std::string("null"));
    out += "}";
    out += ", \"engine_meta\": {";
    out += "\"subgraph_engine\": \"" + r.subgraph_engine + "\"";
    out += ", \"subgraph_mask\": \"" + detail::hex_mask(r.subgraph_mask) + "\"";
    out += ", \"optimizer_converged\": " + detail::json_bool(r.optimizer_converged);
    out += ", \"optimizer_iterations\": " + std::to_string(r.optimizer_iterations);
    out += ", \"edge_cap\": " + std::to_string(opt.edge_cap);
    out += ", \"tol\": " + format_double(opt.opt_tol);
    out += ", \"max_iters\": " + std::to_string(opt.opt_max_iters);
    out += "}}";
    return out;
}

inline std::string report_to_text(const BoundReport& r) {
    std::ostringstream os;
    auto line = [&](const std::string& name, double bound, bool pass, bool applicable = true) {
        if (!applicable) {
            os << "  " << name << ": n/a\n";
            return;
        }
        os << "  " << name << ": " << format_double(bound) << "  slack "
           << format_double(r.energy - bound) << "  [" << (pass ? "ok" : "VIOLATED") << "]\n";
    };
    os << "graph " << r.graph6 << "  n=" << r.n << " m=" << r.m << "\n";
    os << "energy = " << format_double(r.energy) << "\n";
    os << "vertex energies =";
    for (double v : r.vertex_energies) os << " " << format_double(v);
    os << "\n";
    if (r.m > 0)
        os << "min edge energy product = " << format_double(r.min_edge_product) << "  ["
           << (r.verdict_edge_product() ? "ok" : "VIOLATED") << "]\n";
    os << "lower bounds on energy:\n";
    line("2R(G)", r.randic_bound, r.verdict_randic());
    line("2mu(G)", r.matching_bound, r.verdict_matching());
    line("2sqrt(n-1)", r.sqrt_tree_bound.value_or(0.0), r.verdict_sqrt_tree(),
         r.sqrt_tree_bound.has_value());
    line("2R(H*) [" + (r.subgraph_engine.empty() ? std::string("none") : r.subgraph_engine) +
             ", mask " + detail::hex_mask(r.subgraph_mask) + "]",
         r.subgraph_bound, r.verdict_subgraph());
    line(std::string("optimized") + (r.optimizer_converged ? "" : " (not converged)"),
         r.optimized_bound.value_or(0.0), r.verdict_optimized(), r.optimized_bound.has_value());
    return os.str();
}

// ---------------------------------------------------------------------------
// Sweeps.
// ---------------------------------------------------------------------------

struct SweepOptions {
    int n = 4;
    bool connected_only = false;
    bool exhaustive_subgraphs = true;  // requires n <= 7
    bool run_optimizer = true;
    double opt_tol = 1e-8;
    int opt_max_iters = 10000;
    int edge_cap = 24;
    int workers = 0;  // 0 = default
    bool per_graph_rows = false;
};

struct SweepViolation {
    std::uint64_t graph_mask = 0;
    std::string graph6;
    std::string check;
    double lhs = 0.0;  // bound (or 1 for the edge-product check)
    double rhs = 0.0;  // energy (or the product)
};

struct SweepSummary {
    int n = 0;
    std::uint64_t graphs = 0;
    std::uint64_t equality_cases = 0;  // |energy - 2R| <= 1e-6
    double min_product_slack = std::numeric_limits<double>::infinity();
    double min_randic_slack = std::numeric_limits<double>::infinity();
    double min_matching_slack = std::numeric_limits<double>::infinity();
    double min_tree_slack = std::numeric_limits<double>::infinity();
    double min_subgraph_slack = std::numeric_limits<double>::infinity();
    double min_optimizer_slack = std::numeric_limits<double>::infinity();
    std::vector<SweepViolation> violations;
    std::string csv;  // per-graph rows (header included) when requested

    bool ok() const { return violations.empty(); }
};

namespace detail {

struct SweepShard {
    SweepSummary sum;
    std::string csv;
};

inline void sweep_graph(const Graph& g, std::uint64_t mask, const SweepOptions& opt,
                        SweepShard& shard) {
    auto& sum = shard.sum;
    ++sum.graphs;
    const std::string g6 = graph6_encode(g);
    auto violation = [&](const std::string& check, double lhs, double rhs) {
        sum.violations.push_back({mask, g6, check, lhs, rhs});
    };

    const Spectrum s = eigendecompose(g);
    const double e = energy(s);
    const bool connected = is_connected(g);
    const bool biclique_union = is_complete_bipartite_union(g);

    double min_product = std::numeric_limits<double>::quiet_NaN();
    if (g.edge_count() > 0) {
        min_product = edge_energy_products(g, s).min_product;
        sum.min_product_slack = std::min(sum.min_product_slack, min_product - 1.0);
        if (min_product < 1.0 - kVerifyTol)
            violation("edge_product>=1", 1.0, min_product);
    }

    const double r2 = 2.0 * randic(g);
    sum.min_randic_slack = std::min(sum.min_randic_slack, e - r2);
    if (r2 > e + kVerifyTol) violation("energy>=2R", r2, e);
    const bool equality = std::abs(e - r2) <= kEqualityTol;
    if (equality) ++sum.equality_cases;
    if (equality != biclique_union)
        violation(equality ? "equality_without_biclique_structure"
                           : "biclique_structure_without_equality",
                  r2, e);

    const double mu2 = 2.0 * matching_number(g);
    sum.min_matching_slack = std::min(sum.min_matching_slack, e - mu2);
    if (mu2 > e + kVerifyTol) violation("energy>=2mu", mu2, e);

    double tree2 = std::numeric_limits<double>::quiet_NaN();
    if (connected) {
        tree2 = 2.0 * std::sqrt(static_cast<double>(g.vertex_count()) - 1.0);
        sum.min_tree_slack = std::min(sum.min_tree_slack, e - tree2);
        if (tree2 > e + kVerifyTol) violation("energy>=2sqrt(n-1)", tree2, e);
    }

    double sub2 = std::numeric_limits<double>::quiet_NaN();
    if (opt.exhaustive_subgraphs) {
        auto res = max_randic_subgraph(g, opt.edge_cap, 1);
        sub2 = 2.0 * res.value;
        sum.min_subgraph_slack = std::min(sum.min_subgraph_slack, e - sub2);
        if (sub2 > e + kVerifyTol) violation("energy>=2R(H*)", sub2, e);
    }

    double opt2 = std::numeric_limits<double>::quiet_NaN();
    if (opt.run_optimizer && g.edge_count() > 0) {
        auto res = optimize_weights(g, opt.opt_tol, opt.opt_max_iters);
        opt2 = res.bound;
        sum.min_optimizer_slack = std::min(sum.min_optimizer_slack, e - opt2);
        if (opt2 > e + kVerifyTol) violation("energy>=optimized_bound", opt2, e);
        const bool opt_equality = std::abs(e - opt2) <= kEqualityTol;
        if (opt_equality != biclique_union)
            violation(opt_equality ? "optimizer_equality_without_biclique_structure"
                                   : "biclique_structure_without_optimizer_equality",
                      opt2, e);
    }

    if (opt.per_graph_rows) {
        std::ostringstream row;
        row << mask << "," << g6 << "," << g.vertex_count() << "," << g.edge_count() << ","
            << format_double(e) << "," << json_num(min_product) << "," << format_double(r2) << ","
            << format_double(mu2) << "," << (connected ? format_double(tree2) : "") << ","
            << (opt.exhaustive_subgraphs ? format_double(sub2) : "") << ","
            << (opt.run_optimizer && g.edge_count() > 0 ? format_double(opt2) : "") << ","
            << (biclique_union ? 1 : 0) << "\n";
        shard.csv += row.str();
    }
}

inline void merge_shard(SweepSummary& sum, SweepShard& shard) {
    sum.graphs += shard.sum.graphs;
    sum.equality_cases += shard.sum.equality_cases;
    sum.min_product_slack = std::min(sum.min_product_slack, shard.sum.min_product_slack);
    sum.min_randic_slack = std::min(sum.min_randic_slack, shard.sum.min_randic_slack);
    sum.min_matching_slack = std::min(sum.min_matching_slack, shard.sum.min_matching_slack);
    sum.min_tree_slack = std::min(sum.min_tree_slack, shard.sum.min_tree_slack);
    sum.min_subgraph_slack = std::min(sum.min_subgraph_slack, shard.sum.min_subgraph_slack);
    sum.min_optimizer_slack = std::min(sum.min_optimizer_slack, shard.sum.min_optimizer_slack);
    for (auto& v : shard.sum.violations) sum.violations.push_back(std::move(v));
    sum.csv += shard.csv;
}

}  // namespace detail

inline const char* kSweepCsvHeader =
    "graph_index,graph6,n,m,energy,min_edge_product,randic2,matching2,sqrt_tree2,"
    "subgraph_randic2,optimized_bound,is_biclique_union\n";

// Verify every inequality over all labeled graphs on n vertices. Workers
// split the mask range; results are merged in mask order, so the summary and
// CSV are identical for any worker count.
inline SweepSummary sweep(const SweepOptions& opt) {
    if (opt.n < 1 || opt.n > kEnumMaxVertices)
        throw DomainError("sweep: n must be in [1," + std::to_string(kEnumMaxVertices) + "]");
    if (opt.exhaustive_subgraphs && opt.n > 7)
        throw DomainError("sweep: exhaustive subgraph engine requires n <= 7");
    const std::uint64_t total = graph_count(opt.n);
    const int workers = opt.workers > 0 ? opt.workers : default_worker_count();
    std::vector<detail::SweepShard> shards(static_cast<size_t>(workers));
    const int used = parallel_ranges(total, workers, [&](int c, std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            Graph g = graph_from_mask(opt.n, mask);
            if (opt.connected_only && !is_connected(g)) continue;
            detail::sweep_graph(g, mask, opt, shards[static_cast<size_t>(c)]);
        }
    });
    SweepSummary sum;
    sum.n = opt.n;
    if (opt.per_graph_rows) sum.csv = kSweepCsvHeader;
    for (int c = 0; c < used; ++c) detail::merge_shard(sum, shards[static_cast<size_t>(c)]);
    return sum;
}

inline std::string violations_to_csv(const std::vector<SweepViolation>& violations) {
    std::string out = "graph_index,graph6,check,bound,energy\n";
    for (const auto& v : violations) {
        out += std::to_string(v.graph_mask) + "," + v.graph6 + "," + v.check + "," +
               format_double(v.lhs) + "," + format_double(v.rhs) + "\n";
    }
    return out;
}

inline std::string summary_to_text(const SweepSummary& s) {
    std::ostringstream os;
    auto slack = [&](const char* name, double v) {
        os << "  min slack " << name << ": ";
        if (std::isinf(v))
            os << "n/a\n";
        else
            os << format_double(v) << "\n";
    };
    os << "sweep n=" << s.n << ": " << s.graphs << " graphs, " << s.violations.size()
       << " violations, " << s.equality_cases << " equality cases\n";
    slack("edge_product", s.min_product_slack);
    slack("randic", s.min_randic_slack);
    slack("matching", s.min_matching_slack);
    slack("sqrt_tree", s.min_tree_slack);
    slack("subgraph_randic", s.min_subgraph_slack);
    slack("optimized", s.min_optimizer_slack);
    return os.str();
}

inline std::string summary_to_json(const SweepSummary& s) {
    auto num = [](double v) {
        return std::isinf(v) ? std::string("null") : format_double(v);
    };
    std::string out = "{\"n\": " + std::to_string(s.n);
    out += ", \"graphs\": " + std::to_string(s.graphs);
    out += ", \"violations\": " + std::to_string(s.violations.size());
    out += ", \"equality_cases\": " + std::to_string(s.equality_cases);
    out += ", \"min_slacks\": {";
    out += "\"edge_product\": " + num(s.min_product_slack);
    out += ", \"randic\": " + num(s.min_randic_slack);
    out += ", \"matching\": " + num(s.min_matching_slack);
    out += ", \"sqrt_tree\": " + num(s.min_tree_slack);
    out += ", \"subgraph_randic\": " + num(s.min_subgraph_slack);
    out += ", \"optimized\": " + num(s.min_optimizer_slack);
    out += "}}";
    return out;
}

}  // namespace genergy
