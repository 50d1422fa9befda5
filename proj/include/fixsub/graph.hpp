#ifndef FIXSUB_GRAPH_HPP
#define FIXSUB_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fixsub/perm.hpp"

namespace fixsub {

using Edge = std::pair<int, int>; // always stored with first < second

/// Finite simple undirected graph on vertices 0..n-1.
///
/// Adjacency is kept as one 64-bit row mask per vertex, so graphs are capped
/// at 64 vertices (desk scale). The edge list is kept sorted for
/// deterministic iteration. Instances are immutable once built.
class Graph {
public:
    static constexpr int max_vertices = 64;

    Graph() = default;

    explicit Graph(int n, std::vector<Edge> edges = {}) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
        if (n < 1 || n > max_vertices)
            throw std::invalid_argument("Graph: vertex count must be in [1, 64]");
        for (auto& [u, v] : edges) {
            if (u > v) std::swap(u, v);
            if (u == v) throw std::invalid_argument("Graph: loop edge");
            if (u < 0 || v >= n) throw std::invalid_argument("Graph: edge endpoint out of range");
            if (adj_[u] >> v & 1) throw std::invalid_argument("Graph: duplicate edge");
            adj_[u] |= 1ULL << v;
            adj_[v] |= 1ULL << u;
        }
        std::sort(edges.begin(), edges.end());
        edges_ = std::move(edges);
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool adjacent(int u, int v) const { return adj_[u] >> v & 1; }
    std::uint64_t row(int v) const { return adj_[v]; }
    int degree(int v) const { return __builtin_popcountll(adj_[v]); }

    std::vector<int> degree_sequence() const {
        std::vector<int> d(n_);
        for (int v = 0; v < n_; ++v) d[v] = degree(v);
        std::sort(d.begin(), d.end());
        return d;
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }
    bool operator!=(const Graph& o) const { return !(*this == o); }
    bool operator<(const Graph& o) const {
        if (n_ != o.n_) return n_ < o.n_;
        return adj_ < o.adj_;
    }

    /// Image of the graph under a vertex relabeling.
    Graph relabel(const Perm& p) const {
        if (p.degree() != n_) throw std::invalid_argument("relabel: degree mismatch");
        std::vector<Edge> es;
        es.reserve(edges_.size());
        for (auto [u, v] : edges_) es.emplace_back(p(u), p(v));
        return Graph(n_, std::move(es));
    }

    bool is_connected() const {
        std::uint64_t seen = 1, frontier = 1;
        while (frontier) {
            std::uint64_t next = 0;
            for (std::uint64_t f = frontier; f;) {
                const int v = __builtin_ctzll(f);
                f &= f - 1;
                next |= adj_[v];
            }
            frontier = next & ~seen;
            seen |= next;
        }
        return seen == full_mask();
    }

    std::uint64_t full_mask() const {
        return n_ == 64 ? ~0ULL : (1ULL << n_) - 1;
    }

private:
    int n_ = 0;
    std::vector<std::uint64_t> adj_;
    std::vector<Edge> edges_;
};

/// Spanning subgraph of a host graph: same vertex set, a subset of its edges.
class SpanningSubgraph {
public:
    SpanningSubgraph(const Graph& host, std::vector<Edge> edges)
        : host_(host), sub_(host.vertex_count(), std::move(edges)) {
        for (auto [u, v] : sub_.edges())
            if (!host_.adjacent(u, v))
                throw std::invalid_argument("SpanningSubgraph: edge not in host");
    }

    const Graph& host() const { return host_; }
    const Graph& graph() const { return sub_; } // the subgraph, as a standalone Graph
    int vertex_count() const { return sub_.vertex_count(); }
    const std::vector<Edge>& edges() const { return sub_.edges(); }

private:
    Graph host_;
    Graph sub_;
};

// ---------------------------------------------------------------------------
// Family constructors
// ---------------------------------------------------------------------------

inline Graph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("make_cycle: need n >= 3");
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(es));
}

inline Graph make_complete(int n) {
    if (n < 1) throw std::invalid_argument("make_complete: need n >= 1");
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
    return Graph(n, std::move(es));
}

/// K_{a,b} with parts {0..a-1} and {a..a+b-1}.
inline Graph make_complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("make_complete_bipartite: need a,b >= 1");
    std::vector<Edge> es;
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) es.emplace_back(u, v);
    return Graph(a + b, std::move(es));
}

/// Circulant graph on Z_n: i ~ j iff (i - j) mod n lies in D. The set is
/// closed under negation mod n before use, so C7(1,2) may be given as {1,2}
/// or as {1,2,5,6}; 0 is rejected (no loops).
inline Graph make_circulant(int n, const std::set<int>& differences) {
    if (n < 1) throw std::invalid_argument("make_circulant: need n >= 1");
    std::set<int> d;
    for (int raw : differences) {
        int r = raw % n;
        if (r < 0) r += n;
        if (r == 0) throw std::invalid_argument("make_circulant: 0 not allowed in difference set");
        d.insert(r);
        d.insert(n - r);
    }
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int r : d) {
            const int j = (i + r) % n;
            if (i < j) es.emplace_back(i, j);
        }
    return Graph(n, std::move(es));
}

/// Generalized Petersen graph G(n,k): outer rim a_i -> labels 0..n-1,
/// inner vertices b_i -> labels n..2n-1, with spokes a_i b_i and inner
/// edges b_i b_{i+k}. Requires 1 <= k < n/2.
inline Graph make_generalized_petersen(int n, int k) {
    if (n < 3) throw std::invalid_argument("make_generalized_petersen: need n >= 3");
    if (k < 1 || 2 * k >= n)
        throw std::invalid_argument("make_generalized_petersen: need 1 <= k < n/2");
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) {
        es.emplace_back(i, (i + 1) % n);         // rim
        es.emplace_back(i, n + i);               // spoke
        es.emplace_back(n + i, n + (i + k) % n); // inner
    }
    return Graph(2 * n, std::move(es));
}

/// Cycle 0..n-1 plus chords {i, i + chords[i mod len]} (LCF notation).
/// The result must be simple and cubic.
inline Graph make_lcf(int n, const std::vector<int>& chords) {
    if (n < 4 || n % 2 != 0) throw std::invalid_argument("make_lcf: need even n >= 4");
    if (chords.empty() || n % static_cast<int>(chords.size()) != 0)
        throw std::invalid_argument("make_lcf: chord pattern length must divide n");
    std::vector<Edge> es;
    std::set<Edge> chord_set;
    const int len = static_cast<int>(chords.size());
    std::vector<int> chord_deg(n, 0);
    for (int i = 0; i < n; ++i) {
        int j = (i + chords[i % len]) % n;
        if (j < 0) j += n;
        if (j == i) throw std::invalid_argument("make_lcf: chord offset 0 mod n");
        const Edge e{std::min(i, j), std::max(i, j)};
        const int dist = (j - i + n) % n;
        if (dist == 1 || dist == n - 1)
            throw std::invalid_argument("make_lcf: chord duplicates a cycle edge");
        if (chord_set.count(e)) continue; // the partner endpoint names the same chord
        if (chord_deg[e.first] == 1 || chord_deg[e.second] == 1)
            throw std::invalid_argument("make_lcf: vertex degree would exceed 3");
        chord_set.insert(e);
        ++chord_deg[e.first];
        ++chord_deg[e.second];
    }
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    es.insert(es.end(), chord_set.begin(), chord_set.end());
    Graph g(n, std::move(es));
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != 3) throw std::invalid_argument("make_lcf: result not cubic");
    return g;
}

/// The Heawood graph (6-cage) in its standard LCF presentation [5,-5]^7.
inline Graph heawood() { return make_lcf(14, {5, -5}); }

/// Tutte's 8-cage (Tutte-Coxeter graph), LCF [-13,-9,7,-7,9,13]^5.
inline Graph tutte_8cage() { return make_lcf(30, {-13, -9, 7, -7, 9, 13}); }

/// Line graph: one vertex per edge of g, adjacent iff the edges share an endpoint.
inline Graph line_graph(const Graph& g) {
    const auto& es = g.edges();
    const int m = static_cast<int>(es.size());
    if (m < 1 || m > Graph::max_vertices)
        throw std::invalid_argument("line_graph: edge count out of [1, 64]");
    std::vector<Edge> les;
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            const auto [u1, v1] = es[a];
            const auto [u2, v2] = es[b];
            if (u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2) les.emplace_back(a, b);
        }
    return Graph(m, std::move(les));
}

/// Length of a shortest cycle; std::nullopt for forests.
inline std::optional<int> girth(const Graph& g) {
    const int n = g.vertex_count();
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(n), parent(n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        dist[s] = 0;
        std::vector<int> queue{s};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int u = queue[head];
            if (2 * dist[u] >= best) break;
            for (std::uint64_t r = g.row(u); r;) {
                const int v = __builtin_ctzll(r);
                r &= r - 1;
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if (v != parent[u]) {
                    best = std::min(best, dist[u] + dist[v] + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

// ---------------------------------------------------------------------------
// Plain edge-list format: first line "n m", then m lines "u v" with u < v.
// ---------------------------------------------------------------------------

inline void write_edge_list(const Graph& g, std::ostream& os) {
    os << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
}

inline Graph read_edge_list(std::istream& is) {
    int n, m;
    if (!(is >> n >> m)) throw std::invalid_argument("edge list: missing \"n m\" header");
    if (n < 1 || n > Graph::max_vertices || m < 0)
        throw std::invalid_argument("edge list: bad header values");
    std::vector<Edge> es;
    for (int i = 0; i < m; ++i) {
        int u, v;
        if (!(is >> u >> v)) throw std::invalid_argument("edge list: truncated");
        if (u < 0 || v <= u || v >= n) throw std::invalid_argument("edge list: need 0 <= u < v < n");
        es.emplace_back(u, v);
    }
    return Graph(n, std::move(es));
}

inline Graph read_edge_list(const std::string& text) {
    std::istringstream is(text);
    return read_edge_list(is);
}

} // namespace fixsub

#endif // FIXSUB_GRAPH_HPP
