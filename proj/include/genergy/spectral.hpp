#pragma once

// Dense symmetric eigendecomposition of adjacency matrices and the spectral
// quantities built on it: graph energy, per-vertex energies, and the
// products E(i)E(j) over edges.

#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "genergy/graph.hpp"

namespace genergy {

// Eigendecomposition A = U diag(lambda) U^T of the adjacency matrix.
// Eigenvalues ascending; basis stored row-major with u(i,k) the i-th
// component of the k-th eigenvector.
struct Spectrum {
    int n = 0;
    std::vector<double> eigenvalues;
    std::vector<double> basis;

    double u(int i, int k) const { return basis[static_cast<size_t>(i) * n + k]; }
};

struct JacobiOptions {
    double off_tol = 1e-12;  // convergence: max |a_pq|, p < q
    int max_sweeps = 100;
};

// Cyclic Jacobi rotations over the dense symmetric matrix. Deterministic:
// fixed row-major sweep order, rotations applied whenever the pivot is
// nonzero. Small dense inputs only.
inline Spectrum eigendecompose(const Graph& g, const JacobiOptions& opt = {}) {
    const int n = g.vertex_count();
    Spectrum s;
    s.n = n;
    if (n == 0) return s;

    std::vector<double> a(static_cast<size_t>(n) * n, 0.0);
    std::vector<double> v(static_cast<size_t>(n) * n, 0.0);
    for (const auto& [p, q] : g.edges())
        a[static_cast<size_t>(p) * n + q] = a[static_cast<size_t>(q) * n + p] = 1.0;
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i) * n + i] = 1.0;

    auto off_max = [&] {
        double m = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q)
                m = std::max(m, std::abs(a[static_cast<size_t>(p) * n + q]));
        return m;
    };

    bool converged = n == 1;
    for (int sweep = 0; sweep < opt.max_sweeps && !converged; ++sweep) {
        if (off_max() < opt.off_tol) {
            converged = true;
            break;
        }
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a[static_cast<size_t>(p) * n + q];
                if (apq == 0.0) continue;
                const double app = a[static_cast<size_t>(p) * n + p];
                const double aqq = a[static_cast<size_t>(q) * n + q];
                const double theta = (aqq - app) / (2.0 * apq);
                double t;
                if (std::abs(theta) > 1e150) {
                    t = 1.0 / (2.0 * theta);
                } else {
                    t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                    if (theta < 0.0) t = -t;
                }
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double sn = t * c;
                const double tau = sn / (1.0 + c);

                a[static_cast<size_t>(p) * n + p] = app - t * apq;
                a[static_cast<size_t>(q) * n + q] = aqq + t * apq;
                a[static_cast<size_t>(p) * n + q] = 0.0;
                a[static_cast<size_t>(q) * n + p] = 0.0;
                for (int j = 0; j < n; ++j) {
                    if (j == p || j == q) continue;
                    const double ajp = a[static_cast<size_t>(j) * n + p];
                    const double ajq = a[static_cast<size_t>(j) * n + q];
                    a[static_cast<size_t>(j) * n + p] = ajp - sn * (ajq + tau * ajp);
                    a[static_cast<size_t>(p) * n + j] = a[static_cast<size_t>(j) * n + p];
                    a[static_cast<size_t>(j) * n + q] = ajq + sn * (ajp - tau * ajq);
                    a[static_cast<size_t>(q) * n + j] = a[static_cast<size_t>(j) * n + q];
                }
                for (int i = 0; i < n; ++i) {
                    const double vip = v[static_cast<size_t>(i) * n + p];
                    const double viq = v[static_cast<size_t>(i) * n + q];
                    v[static_cast<size_t>(i) * n + p] = vip - sn * (viq + tau * vip);
                    v[static_cast<size_t>(i) * n + q] = viq + sn * (vip - tau * viq);
                }
            }
        }
    }
    if (!converged && off_max() >= opt.off_tol)
        throw NumericError("eigendecompose: no convergence in " +
                           std::to_string(opt.max_sweeps) +
                           " sweeps, off-diagonal residual " + std::to_string(off_max()));

    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        return a[static_cast<size_t>(x) * n + x] < a[static_cast<size_t>(y) * n + y];
    });
    s.eigenvalues.resize(static_cast<size_t>(n));
    s.basis.resize(static_cast<size_t>(n) * n);
    for (int k = 0; k < n; ++k) {
        s.eigenvalues[static_cast<size_t>(k)] = a[static_cast<size_t>(order[k]) * n + order[k]];
        for (int i = 0; i < n; ++i)
            s.basis[static_cast<size_t>(i) * n + k] = v[static_cast<size_t>(i) * n + order[k]];
    }
    return s;
}

// E(G) = sum of |eigenvalues|.
inline double energy(const Spectrum& s) {
    double e = 0.0;
    for (double l : s.eigenvalues) e += std::abs(l);
    return e;
}

inline double energy(const Graph& g) { return energy(eigendecompose(g)); }

// E(i) = sum_k u(i,k)^2 |lambda_k|; entries sum to E(G).
inline std::vector<double> vertex_energies(const Spectrum& s) {
    std::vector<double> ve(static_cast<size_t>(s.n), 0.0);
    for (int i = 0; i < s.n; ++i) {
        double acc = 0.0;
        for (int k = 0; k < s.n; ++k) {
            const double uik = s.u(i, k);
            acc += uik * uik * std::abs(s.eigenvalues[static_cast<size_t>(k)]);
        }
        ve[static_cast<size_t>(i)] = acc;
    }
    return ve;
}

struct EdgeEnergyProducts {
    std::vector<double> products;  // one per edge, host edge order
    double min_product = std::numeric_limits<double>::quiet_NaN();
    int min_edge = -1;
};

inline EdgeEnergyProducts edge_energy_products(const Graph& g, const Spectrum& s) {
    if (s.n != g.vertex_count())
        throw ValidationError("edge_energy_products: spectrum does not match graph");
    const auto ve = vertex_energies(s);
    EdgeEnergyProducts out;
    out.products.reserve(static_cast<size_t>(g.edge_count()));
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& [u, v] = g.edge(e);
        const double p = ve[static_cast<size_t>(u)] * ve[static_cast<size_t>(v)];
        out.products.push_back(p);
        if (out.min_edge < 0 || p < out.min_product) {
            out.min_product = p;
            out.min_edge = e;
        }
    }
    return out;
}

// max over edges of |E(i)E(j) - 1|; 0 for edgeless graphs. Vanishes exactly
// when every component is complete bipartite.
inline double equality_gap(const Graph& g, const Spectrum& s) {
    const auto prods = edge_energy_products(g, s);
    double gap = 0.0;
    for (double p : prods.products) gap = std::max(gap, std::abs(p - 1.0));
    return gap;
}

inline double equality_gap(const Graph& g) { return equality_gap(g, eigendecompose(g)); }

}  // namespace genergy
