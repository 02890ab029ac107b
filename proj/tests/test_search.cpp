#include <catch2/catch.hpp>

#include <cmath>

#include "genergy/indices.hpp"
#include "genergy/spectral.hpp"
#include "genergy/subgraph_search.hpp"

using namespace genergy;

namespace {

// independent oracle: plain loop over all subsets, fresh Randic evaluation
// per mask, ties to the lexicographically least subset
struct BruteBest {
    double value = -1.0;
    std::uint64_t mask = 0;
};

bool lex_less(std::uint64_t a, std::uint64_t b) {
    while (a != 0 && b != 0) {
        const int ia = std::countr_zero(a), ib = std::countr_zero(b);
        if (ia != ib) return ia < ib;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

BruteBest brute_force_max_randic(const Graph& g) {
    const int m = g.edge_count();
    REQUIRE(m <= 14);
    BruteBest best;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        const double r = randic_subgraph(g, EdgeSubset{mask});
        if (r > best.value + 1e-12) {
            best.value = r;
            best.mask = mask;
        } else if (r >= best.value - 1e-12) {
            if (r > best.value) best.value = r;
            if (lex_less(mask, best.mask)) best.mask = mask;
        }
    }
    return best;
}

}  // namespace

TEST_CASE("exhaustive search fixtures") {
    const auto p4 = max_randic_subgraph(make_path(4));
    CHECK(p4.value == 2.0);
    CHECK(p4.subset.mask == 0b101);  // the two end edges
    CHECK(p4.subsets_scanned == 8);

    const Graph k23 = make_complete_bipartite(2, 3);
    const auto kb = max_randic_subgraph(k23);
    CHECK(kb.value == Approx(std::sqrt(6.0)).margin(1e-12));
    CHECK(kb.subset == EdgeSubset::all(k23));

    // D2's maximum is the S4 + P3 star forest; the lex-least of the two
    // symmetric maximizers keeps the hub edge (0,1)
    const auto d2 = max_randic_subgraph(make_dandelion(2));
    CHECK(d2.value == Approx(std::sqrt(2.0) + std::sqrt(3.0)).margin(1e-12));
    CHECK(d2.subset.mask == 0x3d);

    const Graph edgeless = Graph::from_edges(3, {});
    const auto none = max_randic_subgraph(edgeless);
    CHECK(none.value == 0.0);
    CHECK(none.subset.mask == 0);
}

TEST_CASE("exhaustive search matches the brute-force oracle") {
    for (int n = 1; n <= 4; ++n)
        enumerate_graphs(n, false, [&](std::uint64_t, const Graph& g) {
            const auto fast = max_randic_subgraph(g);
            const auto brute = brute_force_max_randic(g);
            CHECK(fast.value == Approx(brute.value).margin(1e-12));
            CHECK(fast.subset.mask == brute.mask);
        });
    // a denser sample: connected graphs on 5 vertices
    enumerate_graphs(5, true, [&](std::uint64_t mask, const Graph& g) {
        if (mask % 7 != 0) return;
        const auto fast = max_randic_subgraph(g);
        const auto brute = brute_force_max_randic(g);
        CHECK(fast.value == Approx(brute.value).margin(1e-12));
        CHECK(fast.subset.mask == brute.mask);
    });
}

TEST_CASE("exhaustive search respects the edge cap") {
    std::vector<Edge> edges;
    for (int u = 0; u < 8; ++u)
        for (int v = u + 1; v < 8; ++v) edges.push_back({u, v});
    const Graph k8 = Graph::from_edges(8, edges);  // 28 edges
    CHECK_THROWS_AS(max_randic_subgraph(k8), DomainError);
    CHECK_THROWS_WITH(max_randic_subgraph(k8), Catch::Contains("greedy"));
}

TEST_CASE("parallel search agrees with the sequential scan") {
    const Graph c20 = make_cycle(20);
    const auto seq = max_randic_subgraph(c20, 24, 1);
    const auto par = max_randic_subgraph(c20, 24, 3);
    CHECK(seq.value == par.value);
    CHECK(seq.subset.mask == par.subset.mask);
    CHECK(seq.value == Approx(10.0).margin(1e-12));  // full 2-regular graph Randic value n/2
    CHECK(seq.subset == EdgeSubset::all(c20));
}

TEST_CASE("greedy search reaches known optima") {
    CHECK(greedy_subgraph(make_path(4)).value == 2.0);
    CHECK(greedy_subgraph(make_cycle(6)).value == Approx(3.0).margin(1e-12));
    const auto d3_greedy = greedy_subgraph(make_dandelion(3));
    const auto d3_exact = max_randic_subgraph(make_dandelion(3));
    CHECK(d3_exact.value == Approx(2.0 * std::sqrt(2.0) + std::sqrt(3.0)).margin(1e-12));
    CHECK(d3_greedy.value == Approx(d3_exact.value).margin(1e-12));
}

TEST_CASE("greedy value never exceeds the exhaustive maximum") {
    enumerate_graphs(5, true, [&](std::uint64_t, const Graph& g) {
        const auto greedy = greedy_subgraph(g);
        const auto exact = max_randic_subgraph(g);
        CHECK(greedy.value <= exact.value + 1e-12);
        CHECK(greedy.value >= randic(g) - 1e-12);
        CHECK(greedy.value >= static_cast<double>(matching_number(g)) - 1e-12);
    });
}

TEST_CASE("greedy restarts are deterministic under a fixed seed") {
    const Graph d4 = make_dandelion(4);
    const auto a = greedy_subgraph(d4, 8, 42);
    const auto b = greedy_subgraph(d4, 8, 42);
    CHECK(a.value == b.value);
    CHECK(a.subset.mask == b.subset.mask);
    CHECK(a.value >= greedy_subgraph(d4).value - 1e-12);
}

TEST_CASE("maximizer classification over small connected graphs") {
    const MaximizerTable table = classify_maximizers(4, 2);
    CHECK(table.rows.size() == 1 + 1 + 4 + 38);
    CHECK(table.counterexamples.empty());
    for (const auto& row : table.rows) CHECK(row.all_regular_or_bipartite);

    // graphs with a perfect matching reach the n/2 ceiling exactly
    CHECK(max_randic_subgraph(make_cycle(4)).value == 2.0);
    CHECK(max_randic_subgraph(make_cycle(6)).value == 3.0);
    const Graph k4 = graph_from_mask(4, 0b111111);
    CHECK(max_randic_subgraph(k4).value == 2.0);

    CHECK_THROWS_AS(classify_maximizers(0), DomainError);
    CHECK_THROWS_AS(classify_maximizers(8), DomainError);
}
