#pragma once

// Search for spanning subgraphs maximizing the Randic index: exhaustive
// enumeration of all 2^m edge subsets in Gray-code order with incremental
// degree/value updates, a deterministic greedy fallback for larger graphs,
// and the maximizer classification table over enumerated small graphs.

#include <bit>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "genergy/graph.hpp"
#include "genergy/indices.hpp"
#include "genergy/parallel.hpp"

namespace genergy {

namespace detail {

// Subsets ordered by sorted element lists; a proper prefix precedes its
// extensions. Used to break exact ties deterministically.
inline bool subset_lex_less(std::uint64_t a, std::uint64_t b) {
    while (a != 0 && b != 0) {
        const int ia = std::countr_zero(a);
        const int ib = std::countr_zero(b);
        if (ia != ib) return ia < ib;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

// Incremental Randic value of the current edge subset. flip() toggles one
// edge and repairs the contributions of every kept edge incident to its
// endpoints.
struct RandicScan {
    const Graph& g;
    std::vector<std::vector<std::pair<int, int>>> inc;  // per vertex: (edge, other)
    std::vector<int> deg;
    std::uint64_t mask = 0;
    double value = 0.0;

    explicit RandicScan(const Graph& graph) : g(graph) {
        inc.assign(static_cast<size_t>(g.vertex_count()), {});
        for (int e = 0; e < g.edge_count(); ++e) {
            const auto& [u, v] = g.edge(e);
            inc[static_cast<size_t>(u)].emplace_back(e, v);
            inc[static_cast<size_t>(v)].emplace_back(e, u);
        }
        deg.assign(static_cast<size_t>(g.vertex_count()), 0);
    }

    double term(int a, int b) const {
        return 1.0 / std::sqrt(static_cast<double>(deg[static_cast<size_t>(a)]) *
                               deg[static_cast<size_t>(b)]);
    }

    void side_terms(int vertex, int skip_edge, double sign) {
        for (const auto& [e, other] : inc[static_cast<size_t>(vertex)]) {
            if (e == skip_edge || !((mask >> e) & 1)) continue;
            value += sign * term(vertex, other);
        }
    }

    void flip(int e) {
        const auto& [u, v] = g.edge(e);
        const bool adding = !((mask >> e) & 1);
        if (!adding) {
            value -= term(u, v);
            mask ^= std::uint64_t{1} << e;
        }
        side_terms(u, e, -1.0);
        side_terms(v, e, -1.0);
        const int d = adding ? 1 : -1;
        deg[static_cast<size_t>(u)] += d;
        deg[static_cast<size_t>(v)] += d;
        side_terms(u, e, +1.0);
        side_terms(v, e, +1.0);
        if (adding) {
            mask ^= std::uint64_t{1} << e;
            value += term(u, v);
        }
    }

    // Canonical from-scratch evaluation in edge-index order; also resets the
    // incremental accumulator so drift cannot build up over long scans.
    double resync() {
        std::fill(deg.begin(), deg.end(), 0);
        for (int e = 0; e < g.edge_count(); ++e)
            if ((mask >> e) & 1) {
                ++deg[static_cast<size_t>(g.edge(e).u)];
                ++deg[static_cast<size_t>(g.edge(e).v)];
            }
        double r = 0.0;
        for (int e = 0; e < g.edge_count(); ++e)
            if ((mask >> e) & 1) r += term(g.edge(e).u, g.edge(e).v);
        value = r;
        return r;
    }

    void set_mask(std::uint64_t m) {
        mask = m;
        resync();
    }
};

struct BestSubset {
    double value = -1.0;
    std::uint64_t mask = 0;

    // Exact ties (within 1e-12) resolve to the lexicographically least mask.
    void offer(double v, std::uint64_t m) {
        constexpr double kTie = 1e-12;
        if (v > value + kTie) {
            value = v;
            mask = m;
        } else if (v >= value - kTie) {
            if (v > value) value = v;
            if (subset_lex_less(m, mask)) mask = m;
        }
    }
    void merge(const BestSubset& o) {
        if (o.value >= 0.0) offer(o.value, o.mask);
    }
};

// Scan Gray-code positions [lo, hi): position k selects mask k ^ (k >> 1),
// and consecutive positions differ in bit countr_zero(k).
inline BestSubset scan_range(const Graph& g, std::uint64_t lo, std::uint64_t hi) {
    RandicScan scan(g);
    scan.set_mask(lo ^ (lo >> 1));
    BestSubset best;
    best.offer(scan.resync(), scan.mask);
    for (std::uint64_t k = lo + 1; k < hi; ++k) {
        scan.flip(std::countr_zero(k));
        if ((k & 0xFFFF) == 0) scan.resync();
        if (scan.value >= best.value - 1e-6) best.offer(scan.resync(), scan.mask);
    }
    return best;
}

}  // namespace detail

struct SubgraphSearchResult {
    EdgeSubset subset;
    double value = 0.0;  // R(H)
    std::uint64_t subsets_scanned = 0;
};

// Maximum of randic_subgraph over all 2^m spanning subgraphs. Deterministic:
// among maximizers the lexicographically least edge subset is returned.
// workers = 0 picks the default; small searches stay on one thread.
inline SubgraphSearchResult max_randic_subgraph(const Graph& g, int edge_cap = 24,
                                                int workers = 0) {
    const int m = g.edge_count();
    if (m > edge_cap)
        throw DomainError("max_randic_subgraph: " + std::to_string(m) + " edges exceed cap " +
                          std::to_string(edge_cap) +
                          "; use the greedy engine for graphs this large");
    const std::uint64_t total = std::uint64_t{1} << m;
    detail::BestSubset best;
    if (total < (std::uint64_t{1} << 18) || workers == 1) {
        best = detail::scan_range(g, 0, total);
    } else {
        if (workers <= 0) workers = default_worker_count();
        std::vector<detail::BestSubset> local(static_cast<size_t>(workers));
        const int used = parallel_ranges(total, workers, [&](int c, std::uint64_t lo, std::uint64_t hi) {
            local[static_cast<size_t>(c)] = detail::scan_range(g, lo, hi);
        });
        for (int c = 0; c < used; ++c) best.merge(local[static_cast<size_t>(c)]);
    }
    return {EdgeSubset{best.mask}, best.value, total};
}

// Deterministic local search: best single-edge flip until no flip improves,
// seeded from the full graph and from one maximum matching; optional random
// restarts add seeded starting subsets.
inline SubgraphSearchResult greedy_subgraph(const Graph& g, int restarts = 0,
                                            std::uint64_t seed = 0) {
    EdgeSubset::check_capacity(g);
    const int m = g.edge_count();
    const std::uint64_t full = EdgeSubset::all(g).mask;

    detail::RandicScan scan(g);
    auto local_search = [&](std::uint64_t start) {
        scan.set_mask(start);
        double cur = scan.value;
        while (true) {
            int best_e = -1;
            double best_v = cur;
            for (int e = 0; e < m; ++e) {
                scan.flip(e);
                const double v = scan.value;
                scan.flip(e);
                if (v > best_v + 1e-12) {
                    best_v = v;
                    best_e = e;
                }
            }
            if (best_e < 0) break;
            scan.flip(best_e);
            cur = scan.resync();
        }
        return detail::BestSubset{scan.resync(), scan.mask};
    };

    detail::BestSubset best;
    std::uint64_t scanned = 0;
    auto run_from = [&](std::uint64_t start) {
        best.merge(local_search(start));
        ++scanned;
    };
    run_from(full);
    run_from(maximum_matching(g).mask);
    std::mt19937_64 rng(seed);
    for (int r = 0; r < restarts; ++r) run_from(rng() & full);
    return {EdgeSubset{best.mask}, best.value, scanned};
}

struct MaximizerRow {
    std::uint64_t graph_mask = 0;  // enumeration index
    std::string graph6;
    std::uint64_t best_mask = 0;
    double value = 0.0;
    bool all_regular_or_bipartite = false;
};

struct MaximizerTable {
    std::vector<MaximizerRow> rows;
    std::vector<std::string> counterexamples;  // graph6 of rows violating the claim
};

// For every connected graph on up to n_max vertices, find a maximum-Randic
// spanning subgraph and check that each of its components is regular or
// bipartite. Labeled enumeration, so rows repeat up to isomorphism.
inline MaximizerTable classify_maximizers(int n_max, int workers = 0) {
    if (n_max < 1 || n_max > 7)
        throw DomainError("classify_maximizers: n_max must be in [1,7]");
    if (workers <= 0) workers = default_worker_count();
    MaximizerTable table;
    for (int n = 1; n <= n_max; ++n) {
        const std::uint64_t total = graph_count(n);
        std::vector<std::vector<MaximizerRow>> local(static_cast<size_t>(workers));
        const int used = parallel_ranges(total, workers, [&](int c, std::uint64_t lo, std::uint64_t hi) {
            for (std::uint64_t mask = lo; mask < hi; ++mask) {
                Graph g = graph_from_mask(n, mask);
                if (!is_connected(g)) continue;
                auto res = max_randic_subgraph(g, 24, 1);
                MaximizerRow row;
                row.graph_mask = mask;
                row.graph6 = graph6_encode(g);
                row.best_mask = res.subset.mask;
                row.value = res.value;
                row.all_regular_or_bipartite = true;
                for (const auto& comp : classify_components(g, res.subset))
                    if (!comp.is_regular && !comp.is_bipartite)
                        row.all_regular_or_bipartite = false;
                local[static_cast<size_t>(c)].push_back(std::move(row));
            }
        });
        for (int c = 0; c < used; ++c)
            for (auto& row : local[static_cast<size_t>(c)]) {
                if (!row.all_regular_or_bipartite) table.counterexamples.push_back(row.graph6);
                table.rows.push_back(std::move(row));
            }
    }
    return table;
}

}  // namespace genergy
