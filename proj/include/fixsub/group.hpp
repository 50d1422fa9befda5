#ifndef FIXSUB_GROUP_HPP
#define FIXSUB_GROUP_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "fixsub/graph.hpp"
#include "fixsub/perm.hpp"

namespace fixsub {

/// Raised when a closure enumeration would exceed its element bound.
struct GroupOrderOverflow : std::runtime_error {
    explicit GroupOrderOverflow(long bound)
        : std::runtime_error("group closure exceeds enumeration bound of " + std::to_string(bound)) {}
};

constexpr long default_closure_bound = 10'000'000;

/// Full element set generated by `gens` (BFS closure from the identity).
/// Output is sorted lexicographically by image table.
inline std::vector<Perm> group_elements(int degree, const std::vector<Perm>& gens,
                                        long bound = default_closure_bound) {
    for (const Perm& g : gens)
        if (g.degree() != degree) throw std::invalid_argument("group_elements: degree mismatch");
    std::unordered_set<Perm, PermHash> seen;
    std::vector<Perm> queue{Perm::identity(degree)};
    seen.insert(queue[0]);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Perm cur = queue[head];
        for (const Perm& g : gens) {
            Perm next = cur.then(g);
            if (seen.insert(next).second) {
                if (static_cast<long>(seen.size()) > bound) throw GroupOrderOverflow(bound);
                queue.push_back(std::move(next));
            }
        }
    }
    std::sort(queue.begin(), queue.end());
    return queue;
}

inline long group_order(int degree, const std::vector<Perm>& gens,
                        long bound = default_closure_bound) {
    return static_cast<long>(group_elements(degree, gens, bound).size());
}

/// Permutation group given by generators, with its element set enumerated
/// eagerly (every group in scope has modest order).
class PermutationGroup {
public:
    static PermutationGroup from_generators(int degree, std::vector<Perm> gens,
                                            long bound = default_closure_bound) {
        PermutationGroup g;
        g.degree_ = degree;
        std::sort(gens.begin(), gens.end());
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        std::erase_if(gens, [](const Perm& p) { return p.is_identity(); });
        g.elements_ = group_elements(degree, gens, bound);
        g.generators_ = std::move(gens);
        return g;
    }

    int degree() const { return degree_; }
    const std::vector<Perm>& generators() const { return generators_; }
    const std::vector<Perm>& elements() const { return elements_; }
    long order() const { return static_cast<long>(elements_.size()); }

    bool contains(const Perm& p) const {
        return std::binary_search(elements_.begin(), elements_.end(), p);
    }

private:
    int degree_ = 0;
    std::vector<Perm> generators_;
    std::vector<Perm> elements_;
};

/// The dihedral group of order 2n acting on the 2n vertices of G(n,k):
/// rotation a_i -> a_{i+1}, b_i -> b_{i+1} and reflection a_i -> a_{-i},
/// b_i -> b_{-i}.
inline PermutationGroup gp_dihedral(int n) {
    if (n < 3) throw std::invalid_argument("gp_dihedral: need n >= 3");
    std::vector<int> rot(2 * n), refl(2 * n);
    for (int i = 0; i < n; ++i) {
        rot[i] = (i + 1) % n;
        rot[n + i] = n + (i + 1) % n;
        refl[i] = (n - i) % n;
        refl[n + i] = n + (n - i) % n;
    }
    return PermutationGroup::from_generators(2 * n, {Perm(std::move(rot)), Perm(std::move(refl))});
}

namespace detail {

/// Row masks of an edge set after applying sigma.
inline std::vector<std::uint64_t> permuted_rows(const Graph& g, const Perm& sigma) {
    std::vector<std::uint64_t> rows(g.vertex_count(), 0);
    for (auto [u, v] : g.edges()) {
        const int pu = sigma(u), pv = sigma(v);
        rows[pu] |= 1ULL << pv;
        rows[pv] |= 1ULL << pu;
    }
    return rows;
}

// sigma(E) ⊆ E suffices for sigma(E) = E: a bijection maps the finite edge
// set into itself iff onto itself.
inline bool preserves_edges(const Graph& g, const Perm& sigma) {
    for (auto [u, v] : g.edges())
        if (!g.adjacent(sigma(u), sigma(v))) return false;
    return true;
}

} // namespace detail

/// |{sigma in A : sigma(E(U)) = E(U)}|; equals |A(U) ∩ A(G)| when A = A(G).
inline long subgraph_stabilizer_order(const PermutationGroup& a, const SpanningSubgraph& u) {
    if (a.degree() != u.vertex_count())
        throw std::invalid_argument("subgraph_stabilizer_order: degree mismatch");
    long count = 0;
    for (const Perm& sigma : a.elements())
        if (detail::preserves_edges(u.graph(), sigma)) ++count;
    return count;
}

/// Orbit {sigma(E(U)) : sigma in A} as a sorted list of edge sets.
inline std::vector<std::vector<Edge>> subgraph_orbit(const PermutationGroup& a,
                                                     const SpanningSubgraph& u) {
    if (a.degree() != u.vertex_count())
        throw std::invalid_argument("subgraph_orbit: degree mismatch");
    std::set<std::vector<Edge>> images;
    for (const Perm& sigma : a.elements()) {
        std::vector<Edge> es;
        es.reserve(u.edges().size());
        for (auto [x, y] : u.edges()) {
            const int px = sigma(x), py = sigma(y);
            es.emplace_back(std::min(px, py), std::max(px, py));
        }
        std::sort(es.begin(), es.end());
        images.insert(std::move(es));
    }
    return {images.begin(), images.end()};
}

/// True iff every generator of `u_group` maps E(g) onto E(g).
inline bool is_aut_subgroup(const PermutationGroup& u_group, const Graph& g) {
    if (u_group.degree() != g.vertex_count())
        throw std::invalid_argument("is_aut_subgroup: degree mismatch");
    for (const Perm& sigma : u_group.generators())
        if (!detail::preserves_edges(g, sigma)) return false;
    return true;
}

} // namespace fixsub

#endif // FIXSUB_GROUP_HPP
