#pragma once

// Oriented edge weights p_i^j and the weighted lower bound on graph energy
//
//     bound(G, p) = 2 * sum over edges (i,j) of sqrt(p_i^j * p_j^i)
//
// subject to 0 <= p <= 1 and, per vertex i, sum_{j in N(i)} p_i^j <= 1.
// Includes the named weight schemes and a projected-gradient maximizer.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "genergy/graph.hpp"
#include "genergy/indices.hpp"

namespace genergy {

// For host edge e = (u,v) with u < v, w[e][0] holds p_u^v and w[e][1] holds
// p_v^u. Vertices with no edges carry no weights.
struct EdgeWeights {
    std::vector<std::array<double, 2>> w;

    static EdgeWeights zeros(const Graph& g) {
        EdgeWeights ew;
        ew.w.assign(static_cast<size_t>(g.edge_count()), {0.0, 0.0});
        return ew;
    }

    double from(const Graph& g, int e, int vertex) const {
        return w[static_cast<size_t>(e)][g.edge(e).u == vertex ? 0 : 1];
    }
};

// (edge index, slot in EdgeWeights, other endpoint) for each oriented
// incidence leaving `vertex`.
struct VertexIncidence {
    int edge;
    int slot;
    int other;
};

inline std::vector<std::vector<VertexIncidence>> incidence_table(const Graph& g) {
    std::vector<std::vector<VertexIncidence>> inc(static_cast<size_t>(g.vertex_count()));
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& [u, v] = g.edge(e);
        inc[static_cast<size_t>(u)].push_back({e, 0, v});
        inc[static_cast<size_t>(v)].push_back({e, 1, u});
    }
    return inc;
}

inline constexpr double kRowSumSlack = 1e-12;

inline std::vector<double> weight_row_sums(const Graph& g, const EdgeWeights& w) {
    std::vector<double> sums(static_cast<size_t>(g.vertex_count()), 0.0);
    for (int e = 0; e < g.edge_count(); ++e) {
        sums[static_cast<size_t>(g.edge(e).u)] += w.w[static_cast<size_t>(e)][0];
        sums[static_cast<size_t>(g.edge(e).v)] += w.w[static_cast<size_t>(e)][1];
    }
    return sums;
}

inline void validate_weights(const Graph& g, const EdgeWeights& w) {
    if (w.w.size() != static_cast<size_t>(g.edge_count()))
        throw ValidationError("weights: expected one entry per edge");
    for (int e = 0; e < g.edge_count(); ++e)
        for (int s = 0; s < 2; ++s) {
            const double p = w.w[static_cast<size_t>(e)][static_cast<size_t>(s)];
            if (!(p >= 0.0 && p <= 1.0 + kRowSumSlack))
                throw ValidationError("weights: edge (" + std::to_string(g.edge(e).u) + "," +
                                      std::to_string(g.edge(e).v) + ") has weight " +
                                      std::to_string(p) + " outside [0,1]");
        }
    const auto sums = weight_row_sums(g, w);
    for (int i = 0; i < g.vertex_count(); ++i)
        if (sums[static_cast<size_t>(i)] > 1.0 + kRowSumSlack)
            throw ValidationError("weights: vertex " + std::to_string(i) + " row sum " +
                                  std::to_string(sums[static_cast<size_t>(i)]) + " exceeds 1");
}

// Vertices whose row sum sits at 1 within `tol` (the strict-equality mode of
// the weight constraints). Isolated vertices report false.
inline std::vector<bool> rows_at_equality(const Graph& g, const EdgeWeights& w,
                                          double tol = 1e-9) {
    const auto sums = weight_row_sums(g, w);
    std::vector<bool> eq(static_cast<size_t>(g.vertex_count()), false);
    for (int i = 0; i < g.vertex_count(); ++i)
        eq[static_cast<size_t>(i)] = g.degree(i) > 0 &&
                                     std::abs(sums[static_cast<size_t>(i)] - 1.0) <= tol;
    return eq;
}

inline double bound_value(const Graph& g, const EdgeWeights& w) {
    validate_weights(g, w);
    double f = 0.0;
    for (const auto& pq : w.w) f += std::sqrt(pq[0] * pq[1]);
    return 2.0 * f;
}

// p_i^j = 1/deg(i); the bound becomes 2R(G).
inline EdgeWeights degree_weights(const Graph& g) {
    EdgeWeights ew = EdgeWeights::zeros(g);
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& [u, v] = g.edge(e);
        ew.w[static_cast<size_t>(e)][0] = 1.0 / g.degree(u);
        ew.w[static_cast<size_t>(e)][1] = 1.0 / g.degree(v);
    }
    return ew;
}

// p_i^j = 1/deg_H(i) on edges of H, 0 elsewhere; the bound becomes 2R(H).
inline EdgeWeights subgraph_weights(const Graph& g, EdgeSubset h) {
    validate_subset(g, h);
    std::vector<int> deg(static_cast<size_t>(g.vertex_count()), 0);
    for (int e = 0; e < g.edge_count(); ++e)
        if (h.contains(e)) {
            ++deg[static_cast<size_t>(g.edge(e).u)];
            ++deg[static_cast<size_t>(g.edge(e).v)];
        }
    EdgeWeights ew = EdgeWeights::zeros(g);
    for (int e = 0; e < g.edge_count(); ++e) {
        if (!h.contains(e)) continue;
        const auto& [u, v] = g.edge(e);
        ew.w[static_cast<size_t>(e)][0] = 1.0 / deg[static_cast<size_t>(u)];
        ew.w[static_cast<size_t>(e)][1] = 1.0 / deg[static_cast<size_t>(v)];
    }
    return ew;
}

// Weights for the odd path P_n (1-based vertices v_1..v_n, edge i joining
// v_i and v_{i+1}):
//
//   p_i^{i+1} = (n-i)/(n-1) for odd i,  i/(n+1)     for even i
//   p_i^{i-1} = (i-1)/(n-1) for odd i,  (n+1-i)/(n+1) for even i
//
// Interior row sums are exactly 1, the end vertices send weight 1 to their
// single neighbor, and the bound telescopes to sqrt(n^2 - 1).
inline EdgeWeights odd_path_weights(int n) {
    if (n < 3 || n % 2 == 0)
        throw DomainError("odd_path_weights: need odd n >= 3 (even paths have a perfect matching)");
    const Graph p = make_path(n);
    EdgeWeights ew = EdgeWeights::zeros(p);
    const double dn1 = static_cast<double>(n) - 1.0;
    const double dp1 = static_cast<double>(n) + 1.0;
    for (int i = 1; i <= n - 1; ++i) {  // edge i joins v_i, v_{i+1}; index i-1
        const size_t e = static_cast<size_t>(i - 1);
        ew.w[e][0] = (i % 2 == 1) ? (static_cast<double>(n - i)) / dn1
                                  : static_cast<double>(i) / dp1;
        const int j = i + 1;  // reverse direction evaluated at vertex j
        ew.w[e][1] = (j % 2 == 1) ? (static_cast<double>(j - 1)) / dn1
                                  : (static_cast<double>(n + 1 - j)) / dp1;
    }
    return ew;
}

// Weights for the dandelion D_n (0-based: hub 0, spokes s=1..n, leaves n+s
// and 2n+s): spokes send 1/(2n+1) to the hub and n/(2n+1) to each leaf, the
// hub sends 1/n to each spoke, leaves send 1 to their spoke. Every row sums
// to 1 and the bound evaluates to 2*sqrt(2n^2+n).
inline EdgeWeights dandelion_weights(int n) {
    if (n < 1) throw DomainError("dandelion_weights: need n >= 1");
    const Graph d = make_dandelion(n);
    EdgeWeights ew = EdgeWeights::zeros(d);
    const double hub_out = 1.0 / static_cast<double>(n);
    const double spoke_to_hub = 1.0 / (2.0 * n + 1.0);
    const double spoke_to_leaf = static_cast<double>(n) / (2.0 * n + 1.0);
    auto assign = [&](int u, int v, double p_uv, double p_vu) {
        const int e = d.edge_index(u, v);
        const int slot_uv = d.edge(e).u == u ? 0 : 1;
        ew.w[static_cast<size_t>(e)][static_cast<size_t>(slot_uv)] = p_uv;
        ew.w[static_cast<size_t>(e)][static_cast<size_t>(1 - slot_uv)] = p_vu;
    };
    for (int s = 1; s <= n; ++s) {
        assign(0, s, hub_out, spoke_to_hub);
        assign(s, n + s, spoke_to_leaf, 1.0);
        assign(s, 2 * n + s, spoke_to_leaf, 1.0);
    }
    return ew;
}

// ---------------------------------------------------------------------------
// Weight maximization (projected gradient ascent).
// ---------------------------------------------------------------------------

namespace detail {

// Euclidean projection of v onto the probability simplex {x >= 0, sum x = 1}.
inline void project_to_simplex(std::vector<double>& v) {
    if (v.empty()) return;
    if (v.size() == 1) {
        v[0] = 1.0;
        return;
    }
    std::vector<double> u = v;
    std::sort(u.begin(), u.end(), std::greater<>());
    double cum = 0.0, tau = 0.0;
    for (size_t j = 0; j < u.size(); ++j) {
        cum += u[j];
        const double t = (cum - 1.0) / static_cast<double>(j + 1);
        if (u[j] - t > 0.0) tau = t;
    }
    for (double& x : v) x = std::max(x - tau, 0.0);
}

}  // namespace detail

struct OptimizeResult {
    EdgeWeights weights;
    double bound = 0.0;  // 2 * objective at the final iterate
    bool converged = false;
    int iterations = 0;
    std::vector<double> trace;  // bound value per accepted iterate, nondecreasing
};

// Maximize sum over edges of sqrt(p_i^j p_j^i) over the per-vertex simplices.
// Ascent direction d(p_i^j) = 0.5*sqrt(p_j^i / p_i^j) with the denominator
// clamped at 1e-12; each vertex row is projected back onto {x>=0, sum=1}
// (the objective is nondecreasing in every coordinate, so the sum=1 face is
// where maxima live). Backtracking halves the step until the objective stops
// decreasing. Stops when successive bound values differ by less than `tol`.
inline OptimizeResult optimize_weights(const Graph& g, double tol = 1e-8, int max_iters = 10000,
                                       const EdgeWeights* warm_start = nullptr) {
    if (g.edge_count() == 0) throw DomainError("optimize_weights: graph has no edges");
    if (!(tol > 0.0)) throw DomainError("optimize_weights: tol must be positive");
    constexpr double kGradClamp = 1e-12;

    EdgeWeights w = warm_start ? *warm_start : degree_weights(g);
    validate_weights(g, w);
    const auto inc = incidence_table(g);

    auto objective = [&](const EdgeWeights& ew) {
        double f = 0.0;
        for (const auto& pq : ew.w) f += std::sqrt(pq[0] * pq[1]);
        return f;
    };
    auto project_rows = [&](EdgeWeights& ew) {
        std::vector<double> row;
        for (int i = 0; i < g.vertex_count(); ++i) {
            const auto& slots = inc[static_cast<size_t>(i)];
            if (slots.empty()) continue;
            row.clear();
            for (const auto& s : slots)
                row.push_back(ew.w[static_cast<size_t>(s.edge)][static_cast<size_t>(s.slot)]);
            detail::project_to_simplex(row);
            for (size_t k = 0; k < slots.size(); ++k)
                ew.w[static_cast<size_t>(slots[k].edge)][static_cast<size_t>(slots[k].slot)] =
                    row[k];
        }
    };

    OptimizeResult res;
    double f = objective(w);
    res.trace.push_back(2.0 * f);

    EdgeWeights grad = EdgeWeights::zeros(g);
    for (int iter = 1; iter <= max_iters; ++iter) {
        res.iterations = iter;
        for (size_t e = 0; e < w.w.size(); ++e) {
            const double p = w.w[e][0], q = w.w[e][1];
            grad.w[e][0] = 0.5 * std::sqrt(q / std::max(p, kGradClamp));
            grad.w[e][1] = 0.5 * std::sqrt(p / std::max(q, kGradClamp));
        }
        double step = 1.0;
        EdgeWeights cand = w;
        double f_cand;
        while (true) {
            for (size_t e = 0; e < w.w.size(); ++e) {
                cand.w[e][0] = w.w[e][0] + step * grad.w[e][0];
                cand.w[e][1] = w.w[e][1] + step * grad.w[e][1];
            }
            project_rows(cand);
            f_cand = objective(cand);
            if (f_cand >= f) break;
            step *= 0.5;
            if (step < 1e-16) {  // no usable step; stay put
                cand = w;
                f_cand = f;
                break;
            }
        }
        const double delta = 2.0 * (f_cand - f);
        w = cand;
        f = f_cand;
        res.trace.push_back(2.0 * f);
        if (delta < tol) {
            res.converged = true;
            break;
        }
    }

    res.weights = std::move(w);
    res.bound = 2.0 * f;
    return res;
}

// ---------------------------------------------------------------------------
// JSON serialization: {"i->j": p_i^j, ...} in host edge order, forward then
// reverse, 12 significant digits.
// ---------------------------------------------------------------------------

inline std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

inline std::string weights_to_json(const Graph& g, const EdgeWeights& w) {
    std::string out = "{";
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& [u, v] = g.edge(e);
        if (e > 0) out += ", ";
        out += "\"" + std::to_string(u) + "->" + std::to_string(v) +
               "\": " + format_double(w.w[static_cast<size_t>(e)][0]);
        out += ", \"" + std::to_string(v) + "->" + std::to_string(u) +
               "\": " + format_double(w.w[static_cast<size_t>(e)][1]);
    }
    out += "}";
    return out;
}

}  // namespace genergy
