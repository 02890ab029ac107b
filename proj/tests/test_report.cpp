#include <catch2/catch.hpp>

#include <cmath>
#include <set>

#include <json.hpp>

#include "genergy/report.hpp"

using namespace genergy;

TEST_CASE("report on P4 reproduces the worked example") {
    ReportOptions opt;
    const BoundReport r = make_report(make_path(4), opt);
    CHECK(r.graph6 == "Ch");
    CHECK(r.n == 4);
    CHECK(r.m == 3);
    CHECK(r.energy == Approx(2.0 * std::sqrt(5.0)).margin(1e-9));
    CHECK(r.randic_bound == Approx(1.0 + 2.0 * std::sqrt(2.0)).margin(1e-9));
    CHECK(r.subgraph_bound == Approx(4.0).margin(1e-9));
    CHECK(r.matching_bound == 4.0);
    REQUIRE(r.sqrt_tree_bound.has_value());
    CHECK(*r.sqrt_tree_bound == Approx(2.0 * std::sqrt(3.0)).margin(1e-12));
    CHECK(r.min_edge_product == Approx(1.2).margin(1e-9));
    CHECK(r.subgraph_engine == "exhaustive");
    CHECK(r.subgraph_mask == 0b101);
    REQUIRE(r.optimized_bound.has_value());
    CHECK(r.energy >= 4.0);  // the subgraph bound beats 2R(G) here
    CHECK(r.all_pass());
}

TEST_CASE("report on D3 shows the weighted bound beating both randic bounds") {
    ReportOptions opt;
    opt.opt_tol = 1e-10;
    const BoundReport r = make_report(make_dandelion(3), opt);
    CHECK(r.energy == Approx(4.0 * std::sqrt(2.0) + 2.0 * std::sqrt(5.0)).margin(1e-8));
    CHECK(r.randic_bound == Approx(2.0 * dandelion_randic_closed_form(3)).margin(1e-9));
    CHECK(r.subgraph_bound ==
          Approx(2.0 * (2.0 * std::sqrt(2.0) + std::sqrt(3.0))).margin(1e-9));
    REQUIRE(r.optimized_bound.has_value());
    CHECK(r.optimizer_converged);
    CHECK(*r.optimized_bound == Approx(2.0 * std::sqrt(21.0)).margin(1e-5));
    CHECK(*r.optimized_bound > r.randic_bound);
    CHECK(*r.optimized_bound > r.subgraph_bound);
    CHECK(r.all_pass());
}

TEST_CASE("report on K1 is vacuous but well-formed") {
    const BoundReport r = make_report(make_path(1));
    CHECK(r.energy == 0.0);
    CHECK(r.randic_bound == 0.0);
    CHECK(r.matching_bound == 0.0);
    CHECK(r.subgraph_bound == 0.0);
    REQUIRE(r.sqrt_tree_bound.has_value());
    CHECK(*r.sqrt_tree_bound == 0.0);
    CHECK(std::isnan(r.min_edge_product));
    CHECK(r.all_pass());
}

TEST_CASE("report JSON carries the fixed schema") {
    ReportOptions opt;
    const std::string json = report_to_json(make_report(make_path(4), opt), opt);
    CHECK(json == report_to_json(make_report(make_path(4), opt), opt));  // byte deterministic

    const auto doc = nlohmann::json::parse(json);
    const std::set<std::string> top{"graph6", "n",        "m",      "energy", "vertex_energies",
                                    "min_edge_product",   "bounds", "verdicts", "slacks",
                                    "engine_meta"};
    std::set<std::string> got;
    for (const auto& [k, v] : doc.items()) got.insert(k);
    CHECK(got == top);

    const std::set<std::string> bound_keys{"randic", "matching", "sqrt_tree", "subgraph_randic",
                                           "optimized"};
    std::set<std::string> got_bounds;
    for (const auto& [k, v] : doc["bounds"].items()) got_bounds.insert(k);
    CHECK(got_bounds == bound_keys);

    CHECK(doc["graph6"] == "Ch");
    CHECK(doc["n"] == 4);
    CHECK(doc["vertex_energies"].size() == 4);
    CHECK(doc["verdicts"]["randic"] == true);
    CHECK(doc["engine_meta"]["subgraph_engine"] == "exhaustive");
    CHECK(doc["engine_meta"]["subgraph_mask"] == "0x5");

    // nulls where a bound does not apply
    const auto k1 = nlohmann::json::parse(report_to_json(make_report(make_path(1))));
    CHECK(k1["min_edge_product"].is_null());
    const Graph two_k2 = Graph::from_edges(4, {{0, 1}, {2, 3}});
    const auto disc = nlohmann::json::parse(report_to_json(make_report(two_k2)));
    CHECK(disc["bounds"]["sqrt_tree"].is_null());
    CHECK(disc["verdicts"]["sqrt_tree"].is_null());

    ReportOptions no_opt;
    no_opt.run_optimizer = false;
    const auto plain = nlohmann::json::parse(report_to_json(make_report(make_path(3), no_opt), no_opt));
    CHECK(plain["bounds"]["optimized"].is_null());
}

TEST_CASE("report text output is stable and readable") {
    const std::string text = report_to_text(make_report(make_path(4)));
    CHECK(text.find("energy = 4.472135955") != std::string::npos);
    CHECK(text.find("2R(G)") != std::string::npos);
    CHECK(text.find("VIOLATED") == std::string::npos);
}

TEST_CASE("sweep over all graphs on four vertices is violation free") {
    SweepOptions opt;
    opt.n = 4;
    opt.workers = 2;
    const SweepSummary sum = sweep(opt);
    CHECK(sum.graphs == 64);
    CHECK(sum.ok());
    CHECK(sum.violations.empty());
    CHECK(sum.min_randic_slack >= -1e-9);
    CHECK(sum.min_product_slack >= -1e-9);

    // equality cases are exactly the complete-bipartite unions
    std::uint64_t biclique_unions = 0;
    enumerate_graphs(4, false, [&](std::uint64_t, const Graph& g) {
        if (is_complete_bipartite_union(g)) ++biclique_unions;
    });
    CHECK(sum.equality_cases == biclique_unions);
}

TEST_CASE("full sweep over all graphs on six vertices", "[slow]") {
    SweepOptions opt;
    opt.n = 6;
    const SweepSummary sum = sweep(opt);
    CHECK(sum.graphs == 32768);
    CHECK(sum.ok());
    CHECK(sum.min_randic_slack >= -1e-9);
    CHECK(sum.min_optimizer_slack >= -1e-9);
    std::uint64_t biclique_unions = 0;
    enumerate_graphs(6, false, [&](std::uint64_t, const Graph& g) {
        if (is_complete_bipartite_union(g)) ++biclique_unions;
    });
    CHECK(sum.equality_cases == biclique_unions);
}

TEST_CASE("sweep restricted to connected graphs") {
    SweepOptions opt;
    opt.n = 4;
    opt.connected_only = true;
    opt.workers = 2;
    const SweepSummary sum = sweep(opt);
    CHECK(sum.graphs == 38);
    CHECK(sum.ok());
}

TEST_CASE("sweep on a single vertex is vacuous") {
    SweepOptions opt;
    opt.n = 1;
    const SweepSummary sum = sweep(opt);
    CHECK(sum.graphs == 1);
    CHECK(sum.ok());
    CHECK(std::isinf(sum.min_product_slack));
}

TEST_CASE("sweep rejects unsupported sizes") {
    SweepOptions opt;
    opt.n = 8;
    CHECK_THROWS_AS(sweep(opt), DomainError);  // exhaustive engine beyond n=7
    opt.exhaustive_subgraphs = false;
    opt.n = 9;
    CHECK_THROWS_AS(sweep(opt), DomainError);
}

TEST_CASE("sweep CSV rows are emitted per graph and match the worker count") {
    SweepOptions opt;
    opt.n = 3;
    opt.per_graph_rows = true;
    opt.workers = 1;
    const SweepSummary one = sweep(opt);
    opt.workers = 3;
    const SweepSummary three = sweep(opt);
    CHECK(one.csv == three.csv);  // byte deterministic across worker counts
    CHECK(one.csv.rfind("graph_index,graph6,n,m,energy", 0) == 0);
    CHECK(std::count(one.csv.begin(), one.csv.end(), '\n') == 1 + 8);

    CHECK(violations_to_csv({}) == "graph_index,graph6,check,bound,energy\n");
}

TEST_CASE("sweep summary serializations are deterministic") {
    SweepOptions opt;
    opt.n = 3;
    const SweepSummary sum = sweep(opt);
    CHECK(summary_to_json(sum) == summary_to_json(sweep(opt)));
    const auto doc = nlohmann::json::parse(summary_to_json(sum));
    CHECK(doc["graphs"] == 8);
    CHECK(doc["violations"] == 0);
    CHECK(doc["min_slacks"].contains("subgraph_randic"));
    CHECK(summary_to_text(sum).find("8 graphs, 0 violations") != std::string::npos);
}
