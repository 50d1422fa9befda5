#ifndef FIXSUB_AUTOMORPHISM_HPP
#define FIXSUB_AUTOMORPHISM_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "fixsub/graph.hpp"
#include "fixsub/group.hpp"
#include "fixsub/perm.hpp"

namespace fixsub {
namespace detail {

/// Backtracking search over the equitable-partition refinement tree.
///
/// Each node holds an ordered partition of the vertices. The partition is
/// refined until equitable (all vertices in a cell have equal neighbour
/// counts into every cell); a non-singleton target cell is then split by
/// individualizing each of its vertices in turn. Discrete partitions are
/// leaves: they induce a labeling, and the lexicographically least relabeled
/// adjacency matrix over all leaves is the canonical form. Two leaves with
/// equal relabeled matrices differ by an automorphism; discovered
/// automorphisms prune sibling branches that lie in the same orbit of the
/// prefix-point-stabilizer, which also keeps highly symmetric graphs (K_n,
/// cages) from exploding the tree.
class RefinementSearch {
public:
    struct Result {
        std::vector<Perm> generators; // automorphisms found (generate A(G))
        Perm canon;                   // old vertex -> canonical position
        std::vector<std::uint64_t> canon_rows;
    };

    static Result run(const Graph& g) {
        RefinementSearch s(g);
        Cells root{std::vector<int>(static_cast<std::size_t>(g.vertex_count()))};
        std::iota(root[0].begin(), root[0].end(), 0);
        s.refine(root);
        std::vector<int> prefix;
        s.explore(root, prefix);
        Result r;
        r.generators = std::move(s.auts_);
        r.canon = std::move(s.best_perm_);
        r.canon_rows = std::move(s.best_rows_);
        return r;
    }

private:
    using Cells = std::vector<std::vector<int>>;

    explicit RefinementSearch(const Graph& g) : g_(g), n_(g.vertex_count()) {}

    static std::uint64_t cell_mask(const std::vector<int>& cell) {
        std::uint64_t m = 0;
        for (int v : cell) m |= 1ULL << v;
        return m;
    }

    // Applies the first available split: subcells ordered by neighbour count
    // into the splitter cell, vertex order within a subcell preserved.
    bool try_split(Cells& cells) const {
        for (std::size_t s = 0; s < cells.size(); ++s) {
            const std::uint64_t smask = cell_mask(cells[s]);
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (cells[c].size() <= 1) continue;
                int counts[Graph::max_vertices + 1] = {};
                for (int v : cells[c]) ++counts[__builtin_popcountll(g_.row(v) & smask)];
                int distinct = 0;
                for (int k = 0; k <= n_; ++k) distinct += counts[k] > 0;
                if (distinct <= 1) continue;
                Cells repl;
                repl.reserve(static_cast<std::size_t>(distinct));
                for (int k = 0; k <= n_; ++k) {
                    if (!counts[k]) continue;
                    std::vector<int> sub;
                    sub.reserve(static_cast<std::size_t>(counts[k]));
                    for (int v : cells[c])
                        if (__builtin_popcountll(g_.row(v) & smask) == k) sub.push_back(v);
                    repl.push_back(std::move(sub));
                }
                cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
                cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c),
                             std::make_move_iterator(repl.begin()),
                             std::make_move_iterator(repl.end()));
                return true;
            }
        }
        return false;
    }

    void refine(Cells& cells) const {
        while (try_split(cells)) {}
    }

    // First non-singleton cell of minimum size. Depends only on the ordered
    // cell structure, which keeps the choice label-independent.
    static std::size_t target_cell(const Cells& cells) {
        std::size_t best = cells.size();
        std::size_t best_size = ~std::size_t{0};
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (cells[i].size() > 1 && cells[i].size() < best_size) {
                best = i;
                best_size = cells[i].size();
            }
        return best;
    }

    Perm leaf_perm(const Cells& cells) const {
        std::vector<int> img(static_cast<std::size_t>(n_));
        for (std::size_t pos = 0; pos < cells.size(); ++pos) img[cells[pos][0]] = static_cast<int>(pos);
        return Perm(std::move(img));
    }

    std::vector<std::uint64_t> relabeled_rows(const Perm& lab) const {
        std::vector<std::uint64_t> rows(static_cast<std::size_t>(n_), 0);
        for (auto [u, v] : g_.edges()) {
            const int pu = lab(u), pv = lab(v);
            rows[pu] |= 1ULL << pv;
            rows[pv] |= 1ULL << pu;
        }
        return rows;
    }

    void record_leaf(const Cells& cells) {
        Perm lab = leaf_perm(cells);
        std::vector<std::uint64_t> rows = relabeled_rows(lab);
        if (!have_first_) {
            have_first_ = true;
            first_perm_ = lab;
            first_rows_ = rows;
            best_perm_ = lab;
            best_rows_ = std::move(rows);
            return;
        }
        if (rows == first_rows_) {
            Perm sigma = lab.then(first_perm_.inverse());
            if (!sigma.is_identity()) auts_.push_back(std::move(sigma));
        }
        if (rows < best_rows_) {
            best_perm_ = lab;
            best_rows_ = std::move(rows);
        } else if (rows == best_rows_ && !(first_rows_ == best_rows_)) {
            Perm sigma = lab.then(best_perm_.inverse());
            if (!sigma.is_identity()) auts_.push_back(std::move(sigma));
        }
    }

    // Orbit partition of the subgroup generated by the automorphisms found so
    // far that fix every individualized vertex on the current path.
    std::vector<int> prefix_stabilizer_orbits(const std::vector<int>& prefix) const {
        std::vector<int> parent(static_cast<std::size_t>(n_));
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        for (const Perm& sigma : auts_) {
            bool fixes = true;
            for (int u : prefix)
                if (sigma(u) != u) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            for (int v = 0; v < n_; ++v) {
                const int a = find(v), b = find(sigma(v));
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }
        }
        for (int v = 0; v < n_; ++v) parent[v] = find(v);
        return parent;
    }

    void explore(const Cells& cells, std::vector<int>& prefix) {
        const std::size_t tgt = target_cell(cells);
        if (tgt == cells.size()) {
            record_leaf(cells);
            return;
        }
        std::vector<int> explored;
        for (int v : cells[tgt]) {
            if (!explored.empty()) {
                const std::vector<int> orbit = prefix_stabilizer_orbits(prefix);
                bool skip = false;
                for (int w : explored)
                    if (orbit[w] == orbit[v]) {
                        skip = true;
                        break;
                    }
                if (skip) continue;
            }
            Cells child;
            child.reserve(cells.size() + 1);
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (i != tgt) {
                    child.push_back(cells[i]);
                    continue;
                }
                child.push_back({v});
                std::vector<int> rest;
                rest.reserve(cells[i].size() - 1);
                for (int w : cells[i])
                    if (w != v) rest.push_back(w);
                child.push_back(std::move(rest));
            }
            refine(child);
            prefix.push_back(v);
            explore(child, prefix);
            prefix.pop_back();
            explored.push_back(v);
        }
    }

    const Graph& g_;
    int n_;
    std::vector<Perm> auts_;
    bool have_first_ = false;
    Perm first_perm_, best_perm_;
    std::vector<std::uint64_t> first_rows_, best_rows_;
};

} // namespace detail

/// A(G) = {pi : pi(E(G)) = E(G)}, as a fully enumerated PermutationGroup.
inline PermutationGroup automorphism_generators(const Graph& g, long bound = default_closure_bound) {
    auto result = detail::RefinementSearch::run(g);
    return PermutationGroup::from_generators(g.vertex_count(), std::move(result.generators), bound);
}

/// Canonical relabeling: canonical_labeling(g) == canonical_labeling(g
/// relabeled by any permutation).
inline Graph canonical_labeling(const Graph& g) {
    auto result = detail::RefinementSearch::run(g);
    return g.relabel(result.canon);
}

/// Canonical adjacency rows, for cheap dedup keys.
inline std::vector<std::uint64_t> canonical_rows(const Graph& g) {
    return detail::RefinementSearch::run(g).canon_rows;
}

inline bool is_isomorphic(const Graph& g, const Graph& h) {
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
    if (g.degree_sequence() != h.degree_sequence()) return false;
    return canonical_rows(g) == canonical_rows(h);
}

/// Every connected graph on n vertices, one canonical representative per
/// isomorphism class, ordered by edge count then adjacency. Sweeps all
/// 2^(n(n-1)/2) edge subsets, so n is capped where that stays tractable.
inline std::vector<Graph> connected_graphs_up_to_iso(int n) {
    if (n < 1 || n > 8)
        throw std::invalid_argument("connected_graphs_up_to_iso: supported for 1 <= n <= 8");
    std::vector<Edge> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    const int m = static_cast<int>(slots.size());

    std::set<std::vector<std::uint64_t>> seen;
    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (1ULL << m); ++mask) {
        if (__builtin_popcountll(mask) < n - 1) continue; // too few edges to connect
        std::vector<std::uint64_t> rows(n, 0);
        for (std::uint64_t rest = mask; rest;) {
            const int i = __builtin_ctzll(rest);
            rest &= rest - 1;
            rows[slots[i].first] |= 1ULL << slots[i].second;
            rows[slots[i].second] |= 1ULL << slots[i].first;
        }
        std::uint64_t reach = 1, frontier = 1;
        while (frontier) {
            std::uint64_t next = 0;
            for (std::uint64_t f = frontier; f;) {
                const int v = __builtin_ctzll(f);
                f &= f - 1;
                next |= rows[v];
            }
            frontier = next & ~reach;
            reach |= next;
        }
        if (reach != (n == 64 ? ~0ULL : (1ULL << n) - 1)) continue;

        std::vector<Edge> es;
        for (std::uint64_t rest = mask; rest;) {
            const int i = __builtin_ctzll(rest);
            rest &= rest - 1;
            es.push_back(slots[i]);
        }
        Graph canon = canonical_labeling(Graph(n, std::move(es)));
        std::vector<std::uint64_t> key(n);
        for (int v = 0; v < n; ++v) key[v] = canon.row(v);
        if (seen.insert(std::move(key)).second) out.push_back(std::move(canon));
    }
    std::sort(out.begin(), out.end(), [](const Graph& a, const Graph& b) {
        if (a.edge_count() != b.edge_count()) return a.edge_count() < b.edge_count();
        return a < b;
    });
    return out;
}

} // namespace fixsub

#endif // FIXSUB_AUTOMORPHISM_HPP
