#pragma once

// Immutable simple undirected graphs: construction, edge-list and graph6 I/O,
// family generators, labeled small-graph enumeration, and component
// classification. Vertices are 0-based; edges are stored as (u, v) with
// u < v, sorted lexicographically.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace genergy {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// Malformed edge-list input; message names the offending line.
struct ParseError : Error {
    using Error::Error;
};
// Invalid graph6 data.
struct FormatError : Error {
    using Error::Error;
};
// Parameter outside an operation's supported range.
struct DomainError : Error {
    using Error::Error;
};
// A value object violates its invariants (bad mask, bad weights, ...).
struct ValidationError : Error {
    using Error::Error;
};
// Numerical routine failed to converge.
struct NumericError : Error {
    using Error::Error;
};

struct Edge {
    int u = 0;
    int v = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

class Graph {
public:
    Graph() = default;

    // Build from an explicit edge list. Pairs may come in any order and
    // orientation; self-loops and duplicates are rejected, not dropped.
    static Graph from_edges(int n, std::vector<Edge> edges) {
        if (n < 0) throw DomainError("graph: negative vertex count");
        if (n > kMaxVertices)
            throw DomainError("graph: vertex count " + std::to_string(n) +
                              " exceeds supported size " + std::to_string(kMaxVertices));
        for (auto& e : edges) {
            if (e.u == e.v)
                throw ValidationError("graph: self-loop at vertex " + std::to_string(e.u));
            if (e.u > e.v) std::swap(e.u, e.v);
            if (e.u < 0 || e.v >= n)
                throw ValidationError("graph: edge (" + std::to_string(e.u) + "," +
                                      std::to_string(e.v) + ") out of range for n=" +
                                      std::to_string(n));
        }
        std::sort(edges.begin(), edges.end());
        auto dup = std::adjacent_find(edges.begin(), edges.end());
        if (dup != edges.end())
            throw ValidationError("graph: duplicate edge (" + std::to_string(dup->u) + "," +
                                  std::to_string(dup->v) + ")");
        return Graph(n, std::move(edges));
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    std::span<const Edge> edges() const { return edges_; }
    const Edge& edge(int e) const { return edges_[static_cast<size_t>(e)]; }

    bool adjacent(int u, int v) const { return adj_[static_cast<size_t>(u) * n_ + v] != 0; }
    int degree(int v) const { return static_cast<int>(nbrs_[static_cast<size_t>(v)].size()); }
    const std::vector<int>& neighbors(int v) const { return nbrs_[static_cast<size_t>(v)]; }

    // Index of edge (u,v) in the sorted edge list, or -1 if absent.
    int edge_index(int u, int v) const {
        if (u > v) std::swap(u, v);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
        if (it == edges_.end() || !(*it == Edge{u, v})) return -1;
        return static_cast<int>(it - edges_.begin());
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

    static constexpr int kMaxVertices = 4096;

private:
    Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
        adj_.assign(static_cast<size_t>(n_) * n_, 0);
        nbrs_.assign(static_cast<size_t>(n_), {});
        for (const auto& [u, v] : edges_) {
            adj_[static_cast<size_t>(u) * n_ + v] = 1;
            adj_[static_cast<size_t>(v) * n_ + u] = 1;
            nbrs_[static_cast<size_t>(u)].push_back(v);
            nbrs_[static_cast<size_t>(v)].push_back(u);
        }
        for (auto& nb : nbrs_) std::sort(nb.begin(), nb.end());
    }

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<uint8_t> adj_;
    std::vector<std::vector<int>> nbrs_;
};

// Spanning subgraph selected by one bit per host-graph edge index. The host
// keeps its full vertex set; bits at or above the host edge count must be 0.
// Desk-scale representation: hosts with more than 64 edges are unsupported.
struct EdgeSubset {
    std::uint64_t mask = 0;

    bool contains(int e) const { return (mask >> e) & 1u; }
    int count() const { return std::popcount(mask); }

    static EdgeSubset none() { return {}; }
    static EdgeSubset all(const Graph& g) {
        check_capacity(g);
        const int m = g.edge_count();
        return {m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1};
    }
    static EdgeSubset of(const Graph& g, std::initializer_list<int> edge_indices) {
        check_capacity(g);
        EdgeSubset s;
        for (int e : edge_indices) {
            if (e < 0 || e >= g.edge_count())
                throw ValidationError("edge subset: index " + std::to_string(e) + " out of range");
            s.mask |= std::uint64_t{1} << e;
        }
        return s;
    }

    static void check_capacity(const Graph& g) {
        if (g.edge_count() > 64)
            throw DomainError("edge subset: host graph has more than 64 edges");
    }
    friend bool operator==(const EdgeSubset&, const EdgeSubset&) = default;
};

// Throws unless `h` is a well-formed subset mask for `g`.
inline void validate_subset(const Graph& g, EdgeSubset h) {
    EdgeSubset::check_capacity(g);
    const int m = g.edge_count();
    if (m < 64 && (h.mask >> m) != 0)
        throw ValidationError("edge subset: mask has bits beyond edge count");
}

// ---------------------------------------------------------------------------
// Edge-list text format.
//
//   # comment lines start with '#'
//   n              <- mandatory first data line: vertex count
//   u v            <- one edge per line, 0-based
// ---------------------------------------------------------------------------

namespace detail {

inline bool parse_int(std::string_view tok, long& out) {
    if (tok.empty()) return false;
    char* end = nullptr;
    std::string buf(tok);
    out = std::strtol(buf.c_str(), &end, 10);
    return end && *end == '\0';
}

inline std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> toks;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) toks.push_back(line.substr(i, j - i));
        i = j;
    }
    return toks;
}

}  // namespace detail

inline Graph from_edge_list(std::string_view text) {
    long n = -1;
    std::vector<Edge> edges;
    std::vector<std::pair<int, int>> seen;
    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        auto toks = detail::split_ws(line);
        if (toks.empty() || toks[0].front() == '#') continue;
        const std::string where = "edge list line " + std::to_string(line_no) + ": ";
        if (n < 0) {
            if (toks.size() != 1 || !detail::parse_int(toks[0], n) || n < 0)
                throw ParseError(where + "expected vertex count");
            continue;
        }
        long u, v;
        if (toks.size() != 2 || !detail::parse_int(toks[0], u) || !detail::parse_int(toks[1], v))
            throw ParseError(where + "expected 'u v'");
        if (u == v) throw ParseError(where + "self-loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError(where + "vertex index out of range [0," + std::to_string(n) + ")");
        int lo = static_cast<int>(u), hi = static_cast<int>(v);
        if (lo > hi) std::swap(lo, hi);
        if (std::find(seen.begin(), seen.end(), std::pair{lo, hi}) != seen.end())
            throw ParseError(where + "duplicate edge " + std::to_string(lo) + " " +
                             std::to_string(hi));
        seen.emplace_back(lo, hi);
        edges.push_back({lo, hi});
    }
    if (n < 0) throw ParseError("edge list: missing vertex count line");
    return Graph::from_edges(static_cast<int>(n), std::move(edges));
}

inline std::string to_edge_list(const Graph& g) {
    std::string out = std::to_string(g.vertex_count());
    out.push_back('\n');
    for (const auto& [u, v] : g.edges()) {
        out += std::to_string(u);
        out.push_back(' ');
        out += std::to_string(v);
        out.push_back('\n');
    }
    return out;
}

// ---------------------------------------------------------------------------
// graph6: printable encoding of the upper adjacency triangle, bits ordered
// x(0,1), x(0,2), x(1,2), x(0,3), ... packed 6 per byte (MSB first), each
// byte offset by 63. Header is n+63 for n <= 62, otherwise 126 followed by
// three 6-bit digits of n.
// ---------------------------------------------------------------------------

inline std::string graph6_encode(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    } else {
        throw DomainError("graph6: vertex count too large to encode");
    }
    int acc = 0, nbits = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.adjacent(row, col) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

inline Graph graph6_decode(std::string_view line) {
    if (line.empty()) throw FormatError("graph6: empty input");
    for (size_t i = 0; i < line.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(line[i]);
        if (c < 63 || c > 126)
            throw FormatError("graph6: byte out of range at position " + std::to_string(i));
    }
    long n;
    size_t pos;
    if (line[0] == 126) {
        if (line.size() < 4) throw FormatError("graph6: truncated vertex count");
        if (line[1] == 126) throw FormatError("graph6: vertex count beyond supported range");
        n = (static_cast<long>(line[1] - 63) << 12) | (static_cast<long>(line[2] - 63) << 6) |
            static_cast<long>(line[3] - 63);
        if (n < 63) throw FormatError("graph6: non-canonical long-form vertex count");
        pos = 4;
    } else {
        n = line[0] - 63;
        pos = 1;
    }
    const long nbits = n * (n - 1) / 2;
    const size_t need = static_cast<size_t>((nbits + 5) / 6);
    if (line.size() - pos != need)
        throw FormatError("graph6: body holds " + std::to_string(line.size() - pos) +
                          " bytes, expected " + std::to_string(need));
    std::vector<Edge> edges;
    long bit = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row, ++bit) {
            int byte = line[pos + static_cast<size_t>(bit / 6)] - 63;
            if ((byte >> (5 - bit % 6)) & 1) edges.push_back({row, col});
        }
    }
    // padding bits must be zero or the line is not a canonical encoding
    for (long b = nbits; b < static_cast<long>(need) * 6; ++b) {
        int byte = line[pos + static_cast<size_t>(b / 6)] - 63;
        if ((byte >> (5 - b % 6)) & 1) throw FormatError("graph6: nonzero padding bits");
    }
    return Graph::from_edges(static_cast<int>(n), std::move(edges));
}

// ---------------------------------------------------------------------------
// Family generators.
// ---------------------------------------------------------------------------

inline Graph make_path(int n) {
    if (n < 1) throw DomainError("path: need n >= 1");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return Graph::from_edges(n, std::move(e));
}

inline Graph make_cycle(int n) {
    if (n < 3) throw DomainError("cycle: need n >= 3");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    e.push_back({0, n - 1});
    return Graph::from_edges(n, std::move(e));
}

// Star S_n on n vertices total: center 0 plus n-1 leaves.
inline Graph make_star(int n) {
    if (n < 1) throw DomainError("star: need n >= 1");
    std::vector<Edge> e;
    for (int i = 1; i < n; ++i) e.push_back({0, i});
    return Graph::from_edges(n, std::move(e));
}

inline Graph make_complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw DomainError("complete_bipartite: need a,b >= 1");
    std::vector<Edge> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.push_back({i, a + j});
    return Graph::from_edges(a + b, std::move(e));
}

// Dandelion D_n on 3n+1 vertices: hub 0 adjacent to spokes 1..n, and each
// spoke s adjacent to its two leaves n+s and 2n+s.
inline Graph make_dandelion(int n) {
    if (n < 1) throw DomainError("dandelion: need n >= 1");
    std::vector<Edge> e;
    for (int s = 1; s <= n; ++s) {
        e.push_back({0, s});
        e.push_back({s, n + s});
        e.push_back({s, 2 * n + s});
    }
    return Graph::from_edges(3 * n + 1, std::move(e));
}

enum class FamilyKind { path, cycle, star, complete_bipartite, dandelion };

inline FamilyKind parse_family_kind(std::string_view name) {
    if (name == "path") return FamilyKind::path;
    if (name == "cycle") return FamilyKind::cycle;
    if (name == "star") return FamilyKind::star;
    if (name == "complete_bipartite") return FamilyKind::complete_bipartite;
    if (name == "dandelion") return FamilyKind::dandelion;
    throw DomainError("unknown family kind '" + std::string(name) + "'");
}

inline Graph family(FamilyKind kind, std::span<const long> params) {
    auto want = [&](size_t k) {
        if (params.size() != k)
            throw DomainError("family: expected " + std::to_string(k) + " parameter(s)");
    };
    switch (kind) {
        case FamilyKind::path: want(1); return make_path(static_cast<int>(params[0]));
        case FamilyKind::cycle: want(1); return make_cycle(static_cast<int>(params[0]));
        case FamilyKind::star: want(1); return make_star(static_cast<int>(params[0]));
        case FamilyKind::complete_bipartite:
            want(2);
            return make_complete_bipartite(static_cast<int>(params[0]), static_cast<int>(params[1]));
        case FamilyKind::dandelion: want(1); return make_dandelion(static_cast<int>(params[0]));
    }
    throw DomainError("family: unknown kind");
}

// Disjoint union, vertices of `b` shifted after those of `a`.
inline Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> e(a.edges().begin(), a.edges().end());
    const int off = a.vertex_count();
    for (const auto& [u, v] : b.edges()) e.push_back({u + off, v + off});
    return Graph::from_edges(a.vertex_count() + b.vertex_count(), std::move(e));
}

// ---------------------------------------------------------------------------
// Labeled enumeration over upper-triangle bitmasks. Bit k of the mask selects
// the k-th pair in row-major order (0,1), (0,2), ..., (n-2,n-1), matching the
// generated graph's sorted edge indices. No isomorphism reduction.
// ---------------------------------------------------------------------------

inline constexpr int kEnumMaxVertices = 8;

inline std::uint64_t graph_count(int n) {
    if (n < 1 || n > kEnumMaxVertices)
        throw DomainError("enumerate: n must be in [1," + std::to_string(kEnumMaxVertices) + "]");
    return std::uint64_t{1} << (n * (n - 1) / 2);
}

inline Graph graph_from_mask(int n, std::uint64_t mask) {
    if (n < 1 || n > kEnumMaxVertices)
        throw DomainError("enumerate: n must be in [1," + std::to_string(kEnumMaxVertices) + "]");
    if (n < kEnumMaxVertices && (mask >> (n * (n - 1) / 2)) != 0)
        throw DomainError("enumerate: mask has bits beyond the upper triangle");
    std::vector<Edge> e;
    int k = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++k)
            if ((mask >> k) & 1) e.push_back({u, v});
    return Graph::from_edges(n, std::move(e));
}

inline bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<int> stack{0};
    std::vector<char> seen(static_cast<size_t>(n), 0);
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v))
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == n;
}

template <class Fn>
inline void enumerate_graphs(int n, bool connected_only, Fn&& fn) {
    const std::uint64_t total = graph_count(n);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        Graph g = graph_from_mask(n, mask);
        if (connected_only && !is_connected(g)) continue;
        fn(mask, g);
    }
}

// ---------------------------------------------------------------------------
// Component classification.
// ---------------------------------------------------------------------------

struct ComponentInfo {
    std::vector<int> vertices;  // ascending
    int edge_count = 0;
    bool is_regular = false;
    bool is_bipartite = false;
    // bipartition class sizes when bipartite, else {0,0}
    std::array<int, 2> side_sizes{0, 0};
};

namespace detail {

// Walk components of the graph induced by `keep_edge`, skipping isolated
// vertices. `keep_edge(e)` decides whether host edge e is present.
template <class Pred>
inline std::vector<ComponentInfo> walk_components(const Graph& g, Pred&& keep_edge) {
    const int n = g.vertex_count();
    std::vector<std::vector<std::pair<int, int>>> inc(static_cast<size_t>(n));  // (nbr, edge)
    for (int e = 0; e < g.edge_count(); ++e) {
        if (!keep_edge(e)) continue;
        const auto& [u, v] = g.edge(e);
        inc[static_cast<size_t>(u)].emplace_back(v, e);
        inc[static_cast<size_t>(v)].emplace_back(u, e);
    }
    std::vector<ComponentInfo> comps;
    std::vector<int> color(static_cast<size_t>(n), -1);  // -1 unvisited, else 0/1
    for (int s = 0; s < n; ++s) {
        if (color[static_cast<size_t>(s)] != -1 || inc[static_cast<size_t>(s)].empty()) continue;
        ComponentInfo c;
        c.is_bipartite = true;
        std::vector<int> queue{s};
        color[static_cast<size_t>(s)] = 0;
        size_t head = 0;
        while (head < queue.size()) {
            int v = queue[head++];
            c.vertices.push_back(v);
            for (auto [w, e] : inc[static_cast<size_t>(v)]) {
                ++c.edge_count;  // counted from both sides, halved below
                if (color[static_cast<size_t>(w)] == -1) {
                    color[static_cast<size_t>(w)] = 1 - color[static_cast<size_t>(v)];
                    queue.push_back(w);
                } else if (color[static_cast<size_t>(w)] == color[static_cast<size_t>(v)]) {
                    c.is_bipartite = false;
                }
            }
        }
        c.edge_count /= 2;
        std::sort(c.vertices.begin(), c.vertices.end());
        size_t d0 = inc[static_cast<size_t>(c.vertices[0])].size();
        c.is_regular = std::all_of(c.vertices.begin(), c.vertices.end(), [&](int v) {
            return inc[static_cast<size_t>(v)].size() == d0;
        });
        if (c.is_bipartite) {
            for (int v : c.vertices) ++c.side_sizes[static_cast<size_t>(color[static_cast<size_t>(v)])];
        }
        comps.push_back(std::move(c));
    }
    return comps;
}

}  // namespace detail

// Components of the spanning subgraph selected by `h`, isolated vertices
// ignored. Regularity and bipartiteness are per component.
inline std::vector<ComponentInfo> classify_components(const Graph& g, EdgeSubset h) {
    validate_subset(g, h);
    return detail::walk_components(g, [&](int e) { return h.contains(e); });
}

inline std::vector<ComponentInfo> classify_components(const Graph& g) {
    return detail::walk_components(g, [](int) { return true; });
}

// True iff every component that has an edge is a complete bipartite graph.
// Isolated vertices are allowed.
inline bool is_complete_bipartite_union(const Graph& g) {
    for (const auto& c : detail::walk_components(g, [](int) { return true; })) {
        if (!c.is_bipartite) return false;
        if (static_cast<long>(c.edge_count) !=
            static_cast<long>(c.side_sizes[0]) * c.side_sizes[1])
            return false;
    }
    return true;
}

// BFS tree from vertex 0; requires a connected host.
inline EdgeSubset spanning_tree(const Graph& g) {
    EdgeSubset::check_capacity(g);
    if (!is_connected(g)) throw DomainError("spanning_tree: graph is not connected");
    EdgeSubset t;
    const int n = g.vertex_count();
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<int> queue{0};
    if (n > 0) seen[0] = 1;
    size_t head = 0;
    while (head < queue.size()) {
        int v = queue[head++];
        for (int w : g.neighbors(v)) {
            if (seen[static_cast<size_t>(w)]) continue;
            seen[static_cast<size_t>(w)] = 1;
            t.mask |= std::uint64_t{1} << g.edge_index(v, w);
            queue.push_back(w);
        }
    }
    return t;
}

}  // namespace genergy
