#ifndef FIXSUB_HAMILTON_HPP
#define FIXSUB_HAMILTON_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fixsub/graph.hpp"
#include "fixsub/perm.hpp"

namespace fixsub {

/// A spanning cycle, stored as its canonical cyclic vertex order: rotated so
/// the smallest vertex (always 0) comes first, direction chosen so the second
/// vertex is smaller than the last.
class HamCycle {
public:
    HamCycle(const Graph& host, std::vector<int> order) : order_(std::move(order)) {
        const int n = host.vertex_count();
        if (static_cast<int>(order_.size()) != n)
            throw std::invalid_argument("HamCycle: order must list every vertex once");
        std::vector<bool> seen(n, false);
        for (int v : order_) {
            if (v < 0 || v >= n || seen[v]) throw std::invalid_argument("HamCycle: not a permutation of V");
            seen[v] = true;
        }
        for (int i = 0; i < n; ++i)
            if (!host.adjacent(order_[i], order_[(i + 1) % n]))
                throw std::invalid_argument("HamCycle: consecutive vertices not adjacent in host");
        canonicalize();
    }

    int length() const { return static_cast<int>(order_.size()); }
    const std::vector<int>& order() const { return order_; }

    std::vector<Edge> edges() const {
        const int n = length();
        std::vector<Edge> es;
        es.reserve(n);
        for (int i = 0; i < n; ++i) {
            const int u = order_[i], v = order_[(i + 1) % n];
            es.emplace_back(std::min(u, v), std::max(u, v));
        }
        std::sort(es.begin(), es.end());
        return es;
    }

    std::vector<std::uint64_t> edge_rows() const {
        const int n = length();
        std::vector<std::uint64_t> rows(n, 0);
        for (int i = 0; i < n; ++i) {
            const int u = order_[i], v = order_[(i + 1) % n];
            rows[u] |= 1ULL << v;
            rows[v] |= 1ULL << u;
        }
        return rows;
    }

    SpanningSubgraph as_spanning_subgraph(const Graph& host) const {
        return SpanningSubgraph(host, edges());
    }

    bool contains_edge(int u, int v) const {
        const int n = length();
        for (int i = 0; i < n; ++i) {
            const int a = order_[i], b = order_[(i + 1) % n];
            if ((a == u && b == v) || (a == v && b == u)) return true;
        }
        return false;
    }

    /// Image under a vertex permutation, re-canonicalized.
    HamCycle relabel(const Graph& host, const Perm& p) const {
        std::vector<int> img;
        img.reserve(order_.size());
        for (int v : order_) img.push_back(p(v));
        return HamCycle(host, std::move(img));
    }

    /// Serialized canonical vertex sequence "v0 v1 ... v(n-1)".
    std::string to_string() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < order_.size(); ++i) {
            if (i) os << ' ';
            os << order_[i];
        }
        return os.str();
    }

    bool operator==(const HamCycle& o) const { return order_ == o.order_; }
    bool operator<(const HamCycle& o) const { return order_ < o.order_; }

private:
    void canonicalize() {
        const int n = length();
        int zero = 0;
        while (order_[zero] != 0) ++zero;
        std::rotate(order_.begin(), order_.begin() + zero, order_.end());
        if (n >= 3 && order_[1] > order_[n - 1])
            std::reverse(order_.begin() + 1, order_.end());
    }

    std::vector<int> order_;
};

namespace detail {

/// Backtracking enumeration rooted at vertex 0, reversed orientation cut by
/// requiring second vertex < last vertex. Prunes on stranded vertices (an
/// unvisited vertex with fewer than two usable neighbours) and, every
/// `connectivity_stride` levels, on disconnection of the unvisited region.
class HamiltonSearch {
public:
    HamiltonSearch(const Graph& g, int connectivity_stride, bool count_only, bool stop_at_first)
        : g_(g), n_(g.vertex_count()), stride_(std::max(1, connectivity_stride)),
          count_only_(count_only), stop_at_first_(stop_at_first) {}

    void run() {
        if (n_ < 3 || !g_.is_connected()) return;
        path_.reserve(n_);
        path_.push_back(0);
        visited_ = 1;
        extend(0, 1);
    }

    long count = 0;
    std::vector<std::vector<int>> cycles;

private:
    bool viable(int current) const {
        const std::uint64_t unvisited = g_.full_mask() & ~visited_;
        const std::uint64_t usable = unvisited | (1ULL << current) | 1ULL;
        for (std::uint64_t rest = unvisited; rest;) {
            const int v = __builtin_ctzll(rest);
            rest &= rest - 1;
            if (__builtin_popcountll(g_.row(v) & usable) < 2) return false;
        }
        // Start vertex still needs a closing edge besides path_[1].
        if ((g_.row(0) & (unvisited | (1ULL << current))) == 0) return false;
        return true;
    }

    bool connected_remainder(int current) const {
        const std::uint64_t region = (g_.full_mask() & ~visited_) | (1ULL << current) | 1ULL;
        std::uint64_t seen = 1ULL << current, frontier = seen;
        while (frontier) {
            std::uint64_t next = 0;
            for (std::uint64_t f = frontier; f;) {
                const int v = __builtin_ctzll(f);
                f &= f - 1;
                next |= g_.row(v) & region;
            }
            frontier = next & ~seen;
            seen |= next;
        }
        return seen == region;
    }

    void extend(int current, int depth) {
        if (depth == n_) {
            if (g_.adjacent(current, 0) && path_[1] < path_[n_ - 1]) {
                ++count;
                if (!count_only_) cycles.push_back(path_);
                if (stop_at_first_) done_ = true;
            }
            return;
        }
        if (!viable(current)) return;
        if (depth % stride_ == 0 && !connected_remainder(current)) return;
        for (std::uint64_t cand = g_.row(current) & ~visited_; cand && !done_;) {
            const int w = __builtin_ctzll(cand);
            cand &= cand - 1;
            visited_ |= 1ULL << w;
            path_.push_back(w);
            extend(w, depth + 1);
            path_.pop_back();
            visited_ &= ~(1ULL << w);
        }
    }

    const Graph& g_;
    int n_;
    int stride_;
    bool count_only_;
    bool stop_at_first_;
    bool done_ = false;
    std::uint64_t visited_ = 0;
    std::vector<int> path_;
};

} // namespace detail

/// Every Hamiltonian cycle of g, each exactly once, in deterministic
/// (canonical-sequence) order. Empty for non-Hamiltonian g.
/// `connectivity_stride` is a performance knob only; results are identical
/// for every setting.
inline std::vector<HamCycle> enumerate_hamiltonian_cycles(const Graph& g, int connectivity_stride = 1) {
    detail::HamiltonSearch search(g, connectivity_stride, false, false);
    search.run();
    std::vector<HamCycle> out;
    out.reserve(search.cycles.size());
    for (auto& order : search.cycles) out.emplace_back(g, std::move(order));
    std::sort(out.begin(), out.end());
    for (std::size_t i = 1; i < out.size(); ++i)
        if (out[i] == out[i - 1]) throw std::logic_error("enumerate_hamiltonian_cycles: duplicate cycle");
    return out;
}

inline long count_hamiltonian_cycles(const Graph& g, int connectivity_stride = 1) {
    detail::HamiltonSearch search(g, connectivity_stride, true, false);
    search.run();
    return search.count;
}

inline bool is_hamiltonian(const Graph& g) {
    detail::HamiltonSearch search(g, 1, true, true);
    search.run();
    return search.count > 0;
}

/// Number of edges of a longest path contained in both cycles; n when the
/// cycles coincide, 0 when they are edge-disjoint.
inline int longest_common_path(const HamCycle& c1, const HamCycle& c2) {
    if (c1.length() != c2.length())
        throw std::invalid_argument("longest_common_path: host mismatch");
    const int n = c1.length();
    auto r1 = c1.edge_rows(), r2 = c2.edge_rows();
    std::vector<std::uint64_t> common(n);
    for (int v = 0; v < n; ++v) common[v] = r1[v] & r2[v];
    if (common == r1) return n;

    // Common subgraph of two distinct spanning cycles is a disjoint union of
    // paths; walk each path from one of its endpoints.
    int best = 0;
    std::vector<bool> used(n, false);
    for (int s = 0; s < n; ++s) {
        if (used[s] || __builtin_popcountll(common[s]) != 1) continue;
        int len = 0, prev = -1, cur = s;
        used[cur] = true;
        for (;;) {
            std::uint64_t next_mask = common[cur] & ~(prev >= 0 ? 1ULL << prev : 0ULL);
            if (!next_mask) break;
            prev = cur;
            cur = __builtin_ctzll(next_mask);
            used[cur] = true;
            ++len;
        }
        best = std::max(best, len);
    }
    return best;
}

/// Histogram of longest-common-path lengths p(c0, c) over all Hamiltonian
/// cycles c0 of g (including c itself, which contributes the key n).
inline std::map<int, long> p_distribution(const Graph& g, const HamCycle& c) {
    std::map<int, long> hist;
    for (const HamCycle& c0 : enumerate_hamiltonian_cycles(g)) ++hist[longest_common_path(c0, c)];
    return hist;
}

} // namespace fixsub

#endif // FIXSUB_HAMILTON_HPP
