#include <catch2/catch.hpp>

#include <set>

#include "genergy/graph.hpp"

using namespace genergy;

TEST_CASE("edge list parsing builds canonical graphs") {
    const Graph p4 = from_edge_list("4\n0 1\n1 2\n2 3");
    CHECK(p4.vertex_count() == 4);
    CHECK(p4.edge_count() == 3);
    CHECK(p4.adjacent(0, 1));
    CHECK(p4.adjacent(1, 2));
    CHECK(p4.adjacent(2, 3));
    CHECK_FALSE(p4.adjacent(0, 2));

    const Graph k1 = from_edge_list("1");
    CHECK(k1.vertex_count() == 1);
    CHECK(k1.edge_count() == 0);

    // comments, blank lines, reversed orientation
    const Graph g = from_edge_list("# fixture\n3\n\n2 0\n# trailing comment\n1 2\n");
    CHECK(g.edge_count() == 2);
    CHECK(g.edge(0) == Edge{0, 2});
    CHECK(g.edge(1) == Edge{1, 2});
}

TEST_CASE("edge list parse errors name the offending line") {
    CHECK_THROWS_AS(from_edge_list("3\n0 1\n0 1"), ParseError);
    CHECK_THROWS_WITH(from_edge_list("3\n0 1\n0 1"), Catch::Contains("line 3") &&
                                                         Catch::Contains("duplicate"));
    CHECK_THROWS_WITH(from_edge_list("3\n0 1\n1 0"), Catch::Contains("duplicate"));
    CHECK_THROWS_WITH(from_edge_list("3\n1 1"), Catch::Contains("line 2") &&
                                                    Catch::Contains("self-loop"));
    CHECK_THROWS_WITH(from_edge_list("3\n0 7"), Catch::Contains("out of range"));
    CHECK_THROWS_WITH(from_edge_list("3\n0"), Catch::Contains("expected 'u v'"));
    CHECK_THROWS_WITH(from_edge_list("3\nx y"), Catch::Contains("line 2"));
    CHECK_THROWS_AS(from_edge_list("# only comments\n"), ParseError);
    CHECK_THROWS_AS(from_edge_list("-2\n"), ParseError);
}

TEST_CASE("edge list round trip") {
    const Graph g = make_dandelion(2);
    CHECK(from_edge_list(to_edge_list(g)) == g);
}

TEST_CASE("graph construction rejects invalid edges") {
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), ValidationError);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), ValidationError);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), ValidationError);
    CHECK_THROWS_AS(Graph::from_edges(-1, {}), DomainError);
}

TEST_CASE("graph6 decodes hand-checked fixtures") {
    const Graph k2 = graph6_decode("A_");
    CHECK(k2.vertex_count() == 2);
    CHECK(k2.edge_count() == 1);
    CHECK(k2.adjacent(0, 1));

    CHECK(graph6_encode(make_path(1)) == "@");
    CHECK(graph6_encode(make_path(4)) == "Ch");
    CHECK(graph6_decode("Ch") == make_path(4));

    const Graph empty = graph6_decode("?");
    CHECK(empty.vertex_count() == 0);
}

TEST_CASE("graph6 rejects malformed lines") {
    CHECK_THROWS_AS(graph6_decode(""), FormatError);
    CHECK_THROWS_AS(graph6_decode("C"), FormatError);     // body missing
    CHECK_THROWS_AS(graph6_decode("Chh"), FormatError);   // body too long
    CHECK_THROWS_AS(graph6_decode("A_ "), FormatError);   // space is out of range
    CHECK_THROWS_AS(graph6_decode(std::string(1, '\x20')), FormatError);
    CHECK_THROWS_AS(graph6_decode("B`"), FormatError);    // nonzero padding for n=3
    CHECK_THROWS_AS(graph6_decode("~??@"), FormatError);  // non-canonical long form
    CHECK_THROWS_AS(graph6_decode("~~"), FormatError);
}

TEST_CASE("graph6 round trip is the identity on small graphs") {
    for (int n = 1; n <= 4; ++n) {
        enumerate_graphs(n, false, [&](std::uint64_t, const Graph& g) {
            const std::string line = graph6_encode(g);
            CHECK(graph6_decode(line) == g);
            CHECK(graph6_encode(graph6_decode(line)) == line);
        });
    }
    // strided sample of larger orders
    for (int n = 5; n <= 7; ++n) {
        const std::uint64_t total = graph_count(n);
        for (std::uint64_t mask = 0; mask < total; mask += total / 97 + 1) {
            const Graph g = graph_from_mask(n, mask);
            CHECK(graph6_decode(graph6_encode(g)) == g);
        }
    }
}

TEST_CASE("family generators match their definitions") {
    const Graph p4 = make_path(4);
    REQUIRE(p4.edge_count() == 3);
    CHECK(p4.edge(0) == Edge{0, 1});
    CHECK(p4.edge(1) == Edge{1, 2});
    CHECK(p4.edge(2) == Edge{2, 3});

    const Graph kb = make_complete_bipartite(2, 3);
    CHECK(kb.vertex_count() == 5);
    CHECK(kb.edge_count() == 6);
    CHECK_FALSE(kb.adjacent(0, 1));
    CHECK_FALSE(kb.adjacent(2, 3));
    CHECK(kb.adjacent(0, 2));

    const Graph star = make_star(5);
    CHECK(star.vertex_count() == 5);
    CHECK(star.degree(0) == 4);

    const Graph c5 = make_cycle(5);
    CHECK(c5.edge_count() == 5);
    for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);
}

TEST_CASE("dandelion generator: hub, spokes, two leaves per spoke") {
    const Graph d3 = make_dandelion(3);
    REQUIRE(d3.vertex_count() == 10);
    REQUIRE(d3.edge_count() == 9);
    CHECK(d3.degree(0) == 3);
    for (int s = 1; s <= 3; ++s) {
        CHECK(d3.degree(s) == 3);
        CHECK(d3.adjacent(0, s));
        CHECK(d3.adjacent(s, 3 + s));
        CHECK(d3.adjacent(s, 6 + s));
    }
    for (int l = 4; l <= 9; ++l) CHECK(d3.degree(l) == 1);

    for (int n = 1; n <= 6; ++n) {
        const Graph d = make_dandelion(n);
        CHECK(d.vertex_count() == 3 * n + 1);
        CHECK(d.edge_count() == 3 * n);
        std::multiset<int> degs;
        for (int v = 0; v < d.vertex_count(); ++v) degs.insert(d.degree(v));
        std::multiset<int> want{n};
        for (int i = 0; i < n; ++i) want.insert(3);
        for (int i = 0; i < 2 * n; ++i) want.insert(1);
        CHECK(degs == want);
    }
}

TEST_CASE("family parameter validation") {
    CHECK_THROWS_AS(make_path(0), DomainError);
    CHECK_THROWS_AS(make_cycle(2), DomainError);
    CHECK_THROWS_AS(make_star(0), DomainError);
    CHECK_THROWS_AS(make_complete_bipartite(0, 3), DomainError);
    CHECK_THROWS_AS(make_dandelion(0), DomainError);
    const long params[] = {2, 3};
    CHECK(family(parse_family_kind("complete_bipartite"), params) ==
          make_complete_bipartite(2, 3));
    CHECK_THROWS_AS(parse_family_kind("hypercube"), DomainError);
    const long one[] = {4};
    CHECK_THROWS_AS(family(FamilyKind::complete_bipartite, one), DomainError);
}

TEST_CASE("enumeration yields every labeled graph exactly once") {
    CHECK(graph_count(2) == 2);
    CHECK(graph_count(4) == 64);

    std::uint64_t count = 0;
    enumerate_graphs(2, false, [&](std::uint64_t, const Graph&) { ++count; });
    CHECK(count == 2);

    count = 0;
    enumerate_graphs(3, true, [&](std::uint64_t, const Graph&) { ++count; });
    CHECK(count == 4);  // three labelings of P3 plus K3

    std::set<std::string> seen;
    enumerate_graphs(4, false, [&](std::uint64_t, const Graph& g) {
        seen.insert(graph6_encode(g));
        int degree_sum = 0;
        for (int v = 0; v < g.vertex_count(); ++v) degree_sum += g.degree(v);
        CHECK(degree_sum == 2 * g.edge_count());
        CHECK(std::is_sorted(g.edges().begin(), g.edges().end()));
    });
    CHECK(seen.size() == 64);

    CHECK_THROWS_AS(graph_count(0), DomainError);
    CHECK_THROWS_AS(graph_count(9), DomainError);
    CHECK_THROWS_AS(graph_from_mask(3, 0xFF), DomainError);
}

TEST_CASE("connectivity") {
    CHECK(is_connected(make_path(1)));
    CHECK(is_connected(make_path(7)));
    CHECK_FALSE(is_connected(Graph::from_edges(4, {{0, 1}, {2, 3}})));
    CHECK_FALSE(is_connected(Graph::from_edges(2, {})));
}

TEST_CASE("component classification over subsets") {
    const Graph p4 = make_path(4);
    const auto comps = classify_components(p4, EdgeSubset::of(p4, {0, 2}));
    REQUIRE(comps.size() == 2);
    for (const auto& c : comps) {
        CHECK(c.vertices.size() == 2);
        CHECK(c.edge_count == 1);
        CHECK(c.is_regular);
        CHECK(c.is_bipartite);
    }

    const Graph k3 = make_cycle(3);
    const auto tri = classify_components(k3, EdgeSubset::all(k3));
    REQUIRE(tri.size() == 1);
    CHECK(tri[0].is_regular);
    CHECK_FALSE(tri[0].is_bipartite);

    // D2's star-forest subgraph: one S4, one P3; bipartite, not regular
    const Graph d2 = make_dandelion(2);
    EdgeSubset h;
    for (auto [u, v] : {std::pair{0, 1}, {1, 3}, {1, 5}, {2, 4}, {2, 6}})
        h.mask |= std::uint64_t{1} << d2.edge_index(u, v);
    const auto parts = classify_components(d2, h);
    REQUIRE(parts.size() == 2);
    for (const auto& c : parts) {
        CHECK(c.is_bipartite);
        CHECK_FALSE(c.is_regular);
    }

    CHECK(classify_components(p4, EdgeSubset::none()).empty());
    CHECK_THROWS_AS(classify_components(p4, EdgeSubset{0xFF}), ValidationError);
}

TEST_CASE("complete bipartite union detection") {
    CHECK(is_complete_bipartite_union(disjoint_union(make_star(5), make_complete_bipartite(2, 2))));
    CHECK(is_complete_bipartite_union(make_complete_bipartite(3, 4)));
    CHECK(is_complete_bipartite_union(Graph::from_edges(3, {})));  // edgeless
    CHECK(is_complete_bipartite_union(disjoint_union(make_complete_bipartite(1, 1),
                                                     Graph::from_edges(2, {}))));
    CHECK_FALSE(is_complete_bipartite_union(make_cycle(3)));
    CHECK_FALSE(is_complete_bipartite_union(make_path(4)));
    CHECK_FALSE(is_complete_bipartite_union(make_cycle(6)));  // bipartite but not complete
}

TEST_CASE("spanning tree witness") {
    const Graph c5 = make_cycle(5);
    const EdgeSubset t = spanning_tree(c5);
    CHECK(t.count() == 4);
    const auto comps = classify_components(c5, t);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].vertices.size() == 5);
    CHECK_THROWS_AS(spanning_tree(Graph::from_edges(4, {{0, 1}, {2, 3}})), DomainError);
}

TEST_CASE("edge subset capacity guard") {
    std::vector<Edge> edges;
    for (int u = 0; u < 13; ++u)
        for (int v = u + 1; v < 13; ++v) edges.push_back({u, v});
    const Graph k13 = Graph::from_edges(13, edges);  // 78 edges
    CHECK_THROWS_AS(EdgeSubset::all(k13), DomainError);
}
