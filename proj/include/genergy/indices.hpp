#pragma once

// Randic index of a graph and of spanning subgraphs, exact maximum matching,
// and closed-form values for the generated families.

#include <bit>
#include <cmath>
#include <string_view>
#include <vector>

#include "genergy/graph.hpp"

namespace genergy {

// R(G) = sum over edges of 1/sqrt(deg(u) deg(v)).
inline double randic(const Graph& g) {
    double r = 0.0;
    for (const auto& [u, v] : g.edges())
        r += 1.0 / std::sqrt(static_cast<double>(g.degree(u)) * g.degree(v));
    return r;
}

// Randic index of the spanning subgraph H selected by `h`; degrees are taken
// within H. Both endpoints of a kept edge have deg_H >= 1, so the terms are
// always finite.
inline double randic_subgraph(const Graph& g, EdgeSubset h) {
    validate_subset(g, h);
    std::vector<int> deg(static_cast<size_t>(g.vertex_count()), 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        if (!h.contains(e)) continue;
        ++deg[static_cast<size_t>(g.edge(e).u)];
        ++deg[static_cast<size_t>(g.edge(e).v)];
    }
    double r = 0.0;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (!h.contains(e)) continue;
        const auto& [u, v] = g.edge(e);
        r += 1.0 / std::sqrt(static_cast<double>(deg[static_cast<size_t>(u)]) *
                             deg[static_cast<size_t>(v)]);
    }
    return r;
}

namespace detail {

inline constexpr int kMatchingMaxVertices = 64;

// Branch and bound over the lowest active vertex: either match it with one
// of its active neighbors or leave it unmatched. Prune with the remaining
// vertex count; seed with a greedy matching.
struct MatchingSearch {
    const Graph& g;
    std::vector<std::uint64_t> nbr;
    int best = 0;
    std::vector<int> best_edges, cur_edges;

    explicit MatchingSearch(const Graph& graph) : g(graph) {
        const int n = g.vertex_count();
        nbr.assign(static_cast<size_t>(n), 0);
        for (const auto& [u, v] : g.edges()) {
            nbr[static_cast<size_t>(u)] |= std::uint64_t{1} << v;
            nbr[static_cast<size_t>(v)] |= std::uint64_t{1} << u;
        }
    }

    void run() {
        const int n = g.vertex_count();
        std::uint64_t used = 0;
        for (int e = 0; e < g.edge_count(); ++e) {
            const auto& [u, v] = g.edge(e);
            const std::uint64_t uv = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
            if (used & uv) continue;
            used |= uv;
            best_edges.push_back(e);
        }
        best = static_cast<int>(best_edges.size());
        const std::uint64_t all =
            n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
        dfs(all, 0);
    }

    void dfs(std::uint64_t active, int matched) {
        int v = -1;
        while (active != 0) {
            int cand = std::countr_zero(active);
            if (nbr[static_cast<size_t>(cand)] & active) {
                v = cand;
                break;
            }
            active &= active - 1;  // never matchable again
        }
        if (v < 0) {
            if (matched > best) {
                best = matched;
                best_edges = cur_edges;
            }
            return;
        }
        if (matched + std::popcount(active) / 2 <= best) return;
        std::uint64_t cands = nbr[static_cast<size_t>(v)] & active;
        while (cands != 0) {
            const int w = std::countr_zero(cands);
            cands &= cands - 1;
            cur_edges.push_back(g.edge_index(v, w));
            dfs(active & ~(std::uint64_t{1} << v) & ~(std::uint64_t{1} << w), matched + 1);
            cur_edges.pop_back();
        }
        dfs(active & ~(std::uint64_t{1} << v), matched);
    }
};

}  // namespace detail

// Exact matching number, n <= 64.
inline int matching_number(const Graph& g) {
    if (g.vertex_count() > detail::kMatchingMaxVertices)
        throw DomainError("matching_number: supports at most 64 vertices");
    detail::MatchingSearch search(g);
    search.run();
    return search.best;
}

// One maximum matching as an edge subset (deterministic witness).
inline EdgeSubset maximum_matching(const Graph& g) {
    if (g.vertex_count() > detail::kMatchingMaxVertices)
        throw DomainError("maximum_matching: supports at most 64 vertices");
    EdgeSubset::check_capacity(g);
    detail::MatchingSearch search(g);
    search.run();
    EdgeSubset s;
    for (int e : search.best_edges) s.mask |= std::uint64_t{1} << e;
    return s;
}

// ---------------------------------------------------------------------------
// Closed forms used as oracles against computed values.
// ---------------------------------------------------------------------------

inline double path_randic_closed_form(long n) {
    if (n < 3) throw DomainError("path_randic_closed_form: need n >= 3");
    return (static_cast<double>(n) - 3.0 + 2.0 * std::sqrt(2.0)) / 2.0;
}

inline double star_randic_closed_form(long n) {
    if (n < 1) throw DomainError("star_randic_closed_form: need n >= 1");
    return std::sqrt(static_cast<double>(n) - 1.0);
}

inline double dandelion_randic_closed_form(long n) {
    if (n < 1) throw DomainError("dandelion_randic_closed_form: need n >= 1");
    return (std::sqrt(static_cast<double>(n)) + 2.0 * static_cast<double>(n)) / std::sqrt(3.0);
}

inline double dandelion_energy_closed_form(long n) {
    if (n < 1) throw DomainError("dandelion_energy_closed_form: need n >= 1");
    return 2.0 * (static_cast<double>(n) - 1.0) * std::sqrt(2.0) +
           2.0 * std::sqrt(static_cast<double>(n) + 2.0);
}

// R of the (n-1) P_3 + S_4 star forest inside D_n.
inline double dandelion_subgraph_randic_closed_form(long n) {
    if (n < 2) throw DomainError("dandelion_subgraph_randic_closed_form: need n >= 2");
    return (static_cast<double>(n) - 1.0) * std::sqrt(2.0) + std::sqrt(3.0);
}

inline double dandelion_weight_bound_closed_form(long n) {
    if (n < 1) throw DomainError("dandelion_weight_bound_closed_form: need n >= 1");
    return 2.0 * std::sqrt(2.0 * static_cast<double>(n) * n + static_cast<double>(n));
}

inline double biclique_energy_closed_form(long a, long b) {
    if (a < 1 || b < 1) throw DomainError("biclique_energy_closed_form: need a,b >= 1");
    return 2.0 * std::sqrt(static_cast<double>(a) * b);
}

inline double odd_path_bound_closed_form(long n) {
    if (n < 3 || n % 2 == 0) throw DomainError("odd_path_bound_closed_form: need odd n >= 3");
    return std::sqrt(static_cast<double>(n) * n - 1.0);
}

inline double closed_form(std::string_view name, std::span<const long> params) {
    auto want = [&](size_t k) {
        if (params.size() != k)
            throw DomainError("closed_form: expected " + std::to_string(k) + " parameter(s)");
    };
    if (name == "path-randic") { want(1); return path_randic_closed_form(params[0]); }
    if (name == "star-randic") { want(1); return star_randic_closed_form(params[0]); }
    if (name == "dandelion-randic") { want(1); return dandelion_randic_closed_form(params[0]); }
    if (name == "dandelion-energy") { want(1); return dandelion_energy_closed_form(params[0]); }
    if (name == "dandelion-subgraph-randic") {
        want(1);
        return dandelion_subgraph_randic_closed_form(params[0]);
    }
    if (name == "dandelion-weight-bound") {
        want(1);
        return dandelion_weight_bound_closed_form(params[0]);
    }
    if (name == "biclique-energy") { want(2); return biclique_energy_closed_form(params[0], params[1]); }
    if (name == "odd-path-bound") { want(1); return odd_path_bound_closed_form(params[0]); }
    throw DomainError("closed_form: unknown family '" + std::string(name) + "'");
}

}  // namespace genergy
