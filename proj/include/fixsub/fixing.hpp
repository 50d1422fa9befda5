#ifndef FIXSUB_FIXING_HPP
#define FIXSUB_FIXING_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fixsub/automorphism.hpp"
#include "fixsub/graph.hpp"
#include "fixsub/group.hpp"
#include "fixsub/hamilton.hpp"
#include "fixsub/perm.hpp"

namespace fixsub {

/// The three multiplicities attached to a spanning subgraph U of a host G,
/// plus the group orders they are built from:
///   s    — spanning subgraphs of G isomorphic to U
///   s0   — images of U under A(G), i.e. |A(G)| / |A(U) ∩ A(G)|
///   x    — graphs X ≅ G on the same vertex set with U ⊆ X
/// U is "fixing" when s == s0 (every copy of U inside G is an automorphic
/// image of U) and "strong fixing" when additionally A(U) ⊆ A(G); strong
/// fixing is equivalent to x == 1. The counts are tied together by the exact
/// identity |A(U)|·s == |A(G)|·x.
struct FixingReport {
    std::string label;
    long s = 0, s0 = 0, x = 0;
    long aut_g = 0, aut_u = 0, stab = 0;
    bool fixing = false, strong_fixing = false;
};

namespace detail {

inline bool is_spanning_cycle(const Graph& u) {
    const int n = u.vertex_count();
    if (n < 3 || static_cast<int>(u.edges().size()) != n) return false;
    for (int v = 0; v < n; ++v)
        if (u.degree(v) != 2) return false;
    return u.is_connected();
}

template <typename Fn>
void for_each_permutation(int n, Fn&& fn) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    do fn(img); while (std::next_permutation(img.begin(), img.end()));
}

inline std::vector<std::uint64_t> image_rows(const Graph& g, const std::vector<int>& img) {
    std::vector<std::uint64_t> rows(g.vertex_count(), 0);
    for (auto [u, v] : g.edges()) {
        rows[img[u]] |= 1ULL << img[v];
        rows[img[v]] |= 1ULL << img[u];
    }
    return rows;
}

inline constexpr int direct_oracle_max_n = 8;

} // namespace detail

/// Brute-force s: distinct images pi(U) contained in the host, over all n!
/// relabelings pi. Independent of the enumeration-based count.
inline long spanning_count_direct(const SpanningSubgraph& u) {
    const int n = u.vertex_count();
    if (n > detail::direct_oracle_max_n)
        throw std::invalid_argument("spanning_count_direct: exhaustive scan needs n <= 8");
    const Graph& host = u.host();
    std::set<std::vector<std::uint64_t>> images;
    detail::for_each_permutation(n, [&](const std::vector<int>& img) {
        auto rows = detail::image_rows(u.graph(), img);
        for (int v = 0; v < n; ++v)
            if (rows[v] & ~host.row(v)) return;
        images.insert(std::move(rows));
    });
    return static_cast<long>(images.size());
}

/// s(U;G). Spanning cycles are counted by Hamiltonian-cycle enumeration at
/// any feasible size; every other shape falls back to the exhaustive scan.
inline long spanning_subgraph_count(const SpanningSubgraph& u, int connectivity_stride = 1) {
    if (detail::is_spanning_cycle(u.graph()))
        return count_hamiltonian_cycles(u.host(), connectivity_stride);
    if (u.vertex_count() <= detail::direct_oracle_max_n) return spanning_count_direct(u);
    throw std::invalid_argument("spanning_subgraph_count: non-cycle U supported only for n <= 8");
}

/// s0(U;G) with A(G) supplied by the caller. Computes the orbit explicitly
/// and checks it against |A(G)| / |stabilizer|.
inline long similarity_count(const PermutationGroup& aut_host, const SpanningSubgraph& u) {
    const long stab = subgraph_stabilizer_order(aut_host, u);
    const long orbit = static_cast<long>(subgraph_orbit(aut_host, u).size());
    if (orbit * stab != aut_host.order())
        throw std::logic_error("similarity_count: orbit size times stabilizer order != group order");
    return orbit;
}

inline long similarity_count(const SpanningSubgraph& u) {
    return similarity_count(automorphism_generators(u.host()), u);
}

/// x(U;G) via the exact identity |A(U)|·s == |A(G)|·x. Non-divisibility can
/// only come from a bug upstream, so it is a hard error.
inline long extension_count(const SpanningSubgraph& u) {
    const long aut_u = automorphism_generators(u.graph()).order();
    const long aut_g = automorphism_generators(u.host()).order();
    const long s = spanning_subgraph_count(u);
    if ((aut_u * s) % aut_g != 0)
        throw std::logic_error("extension_count: |A(U)|*s not divisible by |A(G)|");
    return aut_u * s / aut_g;
}

namespace detail {

inline int bfs_distance(const std::vector<std::uint64_t>& rows, int from, int to) {
    std::uint64_t seen = 1ULL << from, frontier = seen;
    int dist = 0;
    while (frontier) {
        if (frontier >> to & 1) return dist;
        std::uint64_t next = 0;
        for (std::uint64_t f = frontier; f;) {
            const int v = __builtin_ctzll(f);
            f &= f - 1;
            next |= rows[v];
        }
        frontier = next & ~seen;
        seen |= next;
        ++dist;
    }
    return -1;
}

/// Completions of a spanning cycle to a copy of a cubic host: each vertex
/// needs exactly one chord, so the chords form a perfect matching. Chords
/// that would close a cycle shorter than the host's girth are pruned (any
/// cycle of the final graph is already present when its last edge goes in),
/// and each leaf is kept only if isomorphic to the host. Distinct matchings
/// give distinct edge sets, so leaves are counted without deduplication.
class ChordCompletionCount {
public:
    ChordCompletionCount(const Graph& host, const Graph& cycle)
        : host_(host), n_(host.vertex_count()), min_cycle_(girth(host).value_or(3)) {
        rows_.resize(n_, 0);
        for (auto [a, b] : cycle.edges()) {
            rows_[a] |= 1ULL << b;
            rows_[b] |= 1ULL << a;
        }
    }

    long run() {
        recurse();
        return count_;
    }

private:
    void recurse() {
        int u = -1;
        for (int v = 0; v < n_; ++v)
            if (__builtin_popcountll(rows_[v]) == 2) { u = v; break; }
        if (u < 0) {
            std::vector<Edge> es;
            for (int a = 0; a < n_; ++a)
                for (std::uint64_t r = rows_[a] & ~((2ULL << a) - 1); r;) {
                    const int b = __builtin_ctzll(r);
                    r &= r - 1;
                    es.emplace_back(a, b);
                }
            if (is_isomorphic(Graph(n_, std::move(es)), host_)) ++count_;
            return;
        }
        for (int v = u + 1; v < n_; ++v) {
            if (__builtin_popcountll(rows_[v]) != 2 || (rows_[u] >> v & 1)) continue;
            if (bfs_distance(rows_, u, v) + 1 < min_cycle_) continue;
            rows_[u] |= 1ULL << v;
            rows_[v] |= 1ULL << u;
            recurse();
            rows_[u] &= ~(1ULL << v);
            rows_[v] &= ~(1ULL << u);
        }
    }

    const Graph& host_;
    int n_;
    int min_cycle_;
    std::vector<std::uint64_t> rows_;
    long count_ = 0;
};

} // namespace detail

/// Brute-force x: distinct relabelings X of the host with U ⊆ X. Exhaustive
/// for n <= 8; past that, supported for a spanning cycle in a cubic host via
/// chord-completion search.
inline long extension_count_direct(const SpanningSubgraph& u) {
    const Graph& host = u.host();
    const int n = host.vertex_count();
    if (static_cast<long>(host.edges().size()) == static_cast<long>(n) * (n - 1) / 2)
        return 1; // complete host: every relabeling is the host itself
    if (n <= detail::direct_oracle_max_n) {
        std::set<std::vector<std::uint64_t>> images;
        detail::for_each_permutation(n, [&](const std::vector<int>& img) {
            auto rows = detail::image_rows(host, img);
            for (int v = 0; v < n; ++v)
                if (u.graph().row(v) & ~rows[v]) return;
            images.insert(std::move(rows));
        });
        return static_cast<long>(images.size());
    }
    bool cubic = true;
    for (int v = 0; v < n; ++v) cubic = cubic && host.degree(v) == 3;
    if (cubic && host.is_connected() && detail::is_spanning_cycle(u.graph()))
        return detail::ChordCompletionCount(host, u.graph()).run();
    throw std::invalid_argument("extension_count_direct: no exhaustive regime for this (U, host) size");
}

/// Full report for one spanning subgraph, with every internal identity
/// (orbit-stabilizer, count identity, strong-fixing <=> x == 1) re-checked.
inline FixingReport fixing_report(const SpanningSubgraph& u, std::string label = {}) {
    FixingReport r;
    r.label = std::move(label);
    const PermutationGroup aut_host = automorphism_generators(u.host());
    r.aut_g = aut_host.order();
    r.aut_u = automorphism_generators(u.graph()).order();
    r.stab = subgraph_stabilizer_order(aut_host, u);
    r.s0 = similarity_count(aut_host, u);
    r.s = spanning_subgraph_count(u);
    if (r.s < r.s0)
        throw std::logic_error("fixing_report: fewer copies of U than automorphic images");
    if ((r.aut_u * r.s) % r.aut_g != 0)
        throw std::logic_error("fixing_report: |A(U)|*s not divisible by |A(G)|");
    r.x = r.aut_u * r.s / r.aut_g;
    r.fixing = r.s == r.s0;
    r.strong_fixing = r.fixing && r.stab == r.aut_u;
    if (r.strong_fixing != (r.x == 1))
        throw std::logic_error("fixing_report: strong-fixing flag disagrees with x");
    return r;
}

/// The full symmetry group of a spanning cycle — rotations along it and
/// reflections of it — as permutations of the host's vertex labels.
inline PermutationGroup cycle_automorphisms(const HamCycle& c) {
    const auto& ord = c.order();
    const int n = c.length();
    std::vector<int> rot(n), refl(n);
    for (int i = 0; i < n; ++i) {
        rot[ord[i]] = ord[(i + 1) % n];
        refl[ord[i]] = ord[(n - i) % n];
    }
    return PermutationGroup::from_generators(n, {Perm(std::move(rot)), Perm(std::move(refl))});
}

/// Decomposition of a graph's Hamiltonian cycles into similarity classes
/// (orbits under A(G)). f_ham: the graph is Hamiltonian and all its cycles
/// form a single class — equivalently, every Hamiltonian cycle is a fixing
/// subgraph. f_star_ham: additionally a representative cycle's own symmetry
/// group sits inside A(G), making every Hamiltonian cycle strong fixing
/// (one representative per class suffices: strong fixing is preserved by
/// automorphic images).
struct HamOrbitReport {
    struct Orbit {
        long size = 0;
        long stab = 0;
        HamCycle representative;
        std::optional<std::string> signature; // rim signature, filled in for G(n,k) hosts
    };
    long cycles = 0;
    std::vector<Orbit> orbits;
    bool f_ham = false;
    bool f_star_ham = false;
};

/// Raw orbit decomposition of a graph's Hamiltonian cycles under A(G): the
/// sorted cycle list, the orbit id of every cycle, and per orbit its least
/// member plus an independently counted stabilizer (checked against the
/// orbit size via orbit-stabilizer).
struct CycleOrbits {
    std::vector<HamCycle> cycles;
    std::vector<int> orbit_of;        // cycle index -> orbit id
    std::vector<int> representative;  // orbit id -> cycle index of least member
    std::vector<long> size, stab;     // per orbit
    long aut_order = 1;
};

inline CycleOrbits decompose_cycle_orbits(const Graph& g, int connectivity_stride = 1) {
    CycleOrbits co;
    co.cycles = enumerate_hamiltonian_cycles(g, connectivity_stride);
    co.orbit_of.assign(co.cycles.size(), -1);
    if (co.cycles.empty()) return co;

    const PermutationGroup aut = automorphism_generators(g);
    co.aut_order = aut.order();
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < static_cast<int>(co.cycles.size()); ++i) index.emplace(co.cycles[i].order(), i);

    for (int i = 0; i < static_cast<int>(co.cycles.size()); ++i) {
        if (co.orbit_of[i] >= 0) continue;
        // cycles are sorted, so the first unassigned cycle is its orbit's
        // least member and serves as the representative.
        const int id = static_cast<int>(co.representative.size());
        std::set<int> orbit;
        long stab = 0;
        for (const Perm& sigma : aut.elements()) {
            const HamCycle image = co.cycles[i].relabel(g, sigma);
            const auto it = index.find(image.order());
            if (it == index.end())
                throw std::logic_error("decompose_cycle_orbits: automorphic image of a cycle is not a known cycle");
            orbit.insert(it->second);
            if (it->second == i) ++stab;
        }
        if (static_cast<long>(orbit.size()) * stab != aut.order())
            throw std::logic_error("decompose_cycle_orbits: orbit size times stabilizer order != group order");
        for (int j : orbit) co.orbit_of[j] = id;
        co.representative.push_back(i);
        co.size.push_back(static_cast<long>(orbit.size()));
        co.stab.push_back(stab);
    }
    return co;
}

inline HamOrbitReport ham_orbit_report(const Graph& g, int connectivity_stride = 1) {
    HamOrbitReport rep;
    CycleOrbits co = decompose_cycle_orbits(g, connectivity_stride);
    rep.cycles = static_cast<long>(co.cycles.size());
    if (co.cycles.empty()) return rep;
    for (std::size_t o = 0; o < co.representative.size(); ++o)
        rep.orbits.push_back({co.size[o], co.stab[o], co.cycles[co.representative[o]], std::nullopt});
    rep.f_ham = rep.orbits.size() == 1;
    rep.f_star_ham =
        rep.f_ham && is_aut_subgroup(cycle_automorphisms(rep.orbits[0].representative), g);
    return rep;
}

inline bool every_ham_cycle_fixing(const Graph& g) { return ham_orbit_report(g).f_ham; }
inline bool every_ham_cycle_strong_fixing(const Graph& g) { return ham_orbit_report(g).f_star_ham; }

/// Relabel g along the cycle c (its i-th vertex becomes i) and test whether
/// the result is a circulant; if so, return the symmetric difference set D
/// with i ~ j iff (i - j mod n) ∈ D. Whenever A(c) ⊆ A(g) this must succeed.
inline std::optional<std::set<int>> circulant_difference_set(const Graph& g, const HamCycle& c) {
    const int n = g.vertex_count();
    if (c.length() != n) throw std::invalid_argument("circulant_difference_set: size mismatch");
    for (int i = 0; i < n; ++i)
        if (!g.adjacent(c.order()[i], c.order()[(i + 1) % n]))
            throw std::invalid_argument("circulant_difference_set: cycle does not lie in the graph");
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[c.order()[i]] = i;
    const Graph relabeled = g.relabel(Perm(std::move(pos)));
    std::set<int> diffs;
    for (auto [u, v] : relabeled.edges()) {
        diffs.insert(v - u);
        diffs.insert(n - (v - u));
    }
    if (relabeled == make_circulant(n, diffs)) return diffs;
    return std::nullopt;
}

/// For U strong fixing in the host and U ⊆ K ⊆ host: any such middle graph K
/// must itself be strong fixing (x(K) == 1 and A(K) inside the host's
/// group). Returns whether that conclusion holds; false means a bug.
inline bool sandwich_check(const SpanningSubgraph& u, const SpanningSubgraph& k) {
    if (!(u.host() == k.host())) throw std::invalid_argument("sandwich_check: different hosts");
    for (auto [a, b] : u.graph().edges())
        if (!k.graph().adjacent(a, b))
            throw std::invalid_argument("sandwich_check: U is not contained in K");
    if (!fixing_report(u).strong_fixing)
        throw std::invalid_argument("sandwich_check: U is not a strong fixing subgraph of the host");
    return extension_count(k) == 1 &&
           is_aut_subgroup(automorphism_generators(k.graph()), k.host());
}

} // namespace fixsub

#endif // FIXSUB_FIXING_HPP
