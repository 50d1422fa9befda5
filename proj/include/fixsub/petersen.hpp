#ifndef FIXSUB_PETERSEN_HPP
#define FIXSUB_PETERSEN_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fixsub/fixing.hpp"
#include "fixsub/graph.hpp"
#include "fixsub/hamilton.hpp"

namespace fixsub {

/// The cyclic sequence of rim-path lengths of a Hamiltonian cycle in G(n,k):
/// the cycle meets the rim in disjoint paths of n1, ..., nr edges taken in
/// order round the rim. Stored canonically as the lexicographically least
/// sequence over all rotations and reversals, so dihedral images of a cycle
/// share one signature. A cycle using no rim edge would get the empty
/// signature (no such cycle can exist: every outer vertex has one spoke and
/// two rim neighbours, forcing it onto a rim path — kept representable for
/// totality).
class RimSignature {
public:
    RimSignature() = default;
    explicit RimSignature(std::vector<int> lengths) : lengths_(std::move(lengths)) {
        for (int x : lengths_)
            if (x < 1) throw std::invalid_argument("RimSignature: lengths must be positive");
        canonicalize();
    }

    const std::vector<int>& lengths() const { return lengths_; }
    int segments() const { return static_cast<int>(lengths_.size()); }
    bool empty() const { return lengths_.empty(); }

    /// Comma-separated lengths in canonical order, e.g. "1,1,1,2,2".
    std::string to_string() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < lengths_.size(); ++i) {
            if (i) os << ',';
            os << lengths_[i];
        }
        return os.str();
    }

    static RimSignature parse(const std::string& text) {
        if (text.empty()) return RimSignature();
        std::vector<int> lens;
        std::istringstream is(text);
        std::string part;
        while (std::getline(is, part, ',')) lens.push_back(std::stoi(part));
        return RimSignature(std::move(lens));
    }

    bool operator==(const RimSignature& o) const { return lengths_ == o.lengths_; }
    bool operator!=(const RimSignature& o) const { return lengths_ != o.lengths_; }
    bool operator<(const RimSignature& o) const { return lengths_ < o.lengths_; }

private:
    void canonicalize() {
        const int r = static_cast<int>(lengths_.size());
        if (r <= 1) return;
        std::vector<int> best;
        std::vector<int> cur = lengths_;
        for (int dir = 0; dir < 2; ++dir) {
            for (int s = 0; s < r; ++s) {
                std::vector<int> rot(cur.begin() + s, cur.end());
                rot.insert(rot.end(), cur.begin(), cur.begin() + s);
                if (best.empty() || rot < best) best = std::move(rot);
            }
            std::reverse(cur.begin(), cur.end());
        }
        lengths_ = std::move(best);
    }

    std::vector<int> lengths_;
};

/// Signature of a Hamiltonian cycle of G(n,k) (outer vertices 0..n-1, so the
/// rim edges are {i, i+1 mod n}). Only n is needed; the inner step plays no
/// role in reading off the rim.
inline RimSignature rim_signature(const HamCycle& c, int n) {
    if (c.length() != 2 * n)
        throw std::invalid_argument("rim_signature: cycle does not span a 2n-vertex graph");
    std::vector<char> used(n, 0);
    int total = 0;
    for (auto [u, v] : c.edges()) {
        if (v >= n) continue;
        if (v - u == 1) used[u] = 1, ++total;
        else if (u == 0 && v == n - 1) used[n - 1] = 1, ++total;
    }
    if (total == 0) return RimSignature();
    if (total == n)
        throw std::logic_error("rim_signature: spanning cycle cannot contain the whole rim");
    int start = 0;
    while (!(used[start] && !used[(start + n - 1) % n])) ++start;
    std::vector<int> lens;
    int run = 0;
    for (int step = 0; step < n; ++step) {
        if (used[(start + step) % n]) ++run;
        else if (run) lens.push_back(run), run = 0;
    }
    if (run) lens.push_back(run);
    return RimSignature(std::move(lens));
}

/// All Hamiltonian cycles of G(n,k) whose rim signature canonicalizes to sig.
inline std::vector<HamCycle> cycles_with_signature(int n, int k, const RimSignature& sig,
                                                   int connectivity_stride = 1) {
    std::vector<HamCycle> out;
    for (HamCycle& c : enumerate_hamiltonian_cycles(make_generalized_petersen(n, k), connectivity_stride))
        if (rim_signature(c, n) == sig) out.push_back(std::move(c));
    return out;
}

/// One similarity class of Hamiltonian cycles of G(n,k): its size, the
/// stabilizer order of its least member, that member, and the set of rim
/// signatures occurring across the class. The set is a singleton whenever
/// A(G) is the dihedral rim symmetry group; the exceptional graphs with
/// larger groups can mix signatures inside one class.
struct SimilarityClass {
    long size = 0;
    long stab = 0;
    HamCycle representative;
    std::set<RimSignature> signatures;
};

inline std::vector<SimilarityClass> similarity_classes(int n, int k, int connectivity_stride = 1) {
    const Graph g = make_generalized_petersen(n, k);
    const CycleOrbits co = decompose_cycle_orbits(g, connectivity_stride);
    std::vector<SimilarityClass> out;
    out.reserve(co.representative.size());
    for (std::size_t o = 0; o < co.representative.size(); ++o)
        out.push_back({co.size[o], co.stab[o], co.cycles[co.representative[o]], {}});
    for (std::size_t i = 0; i < co.cycles.size(); ++i)
        out[co.orbit_of[i]].signatures.insert(rim_signature(co.cycles[i], n));
    return out;
}

/// ham_orbit_report for G(n,k) with each orbit annotated by its
/// representative's rim signature.
inline HamOrbitReport rim_annotated_report(int n, int k, int connectivity_stride = 1) {
    HamOrbitReport rep = ham_orbit_report(make_generalized_petersen(n, k), connectivity_stride);
    for (auto& orbit : rep.orbits)
        orbit.signature = rim_signature(orbit.representative, n).to_string();
    return rep;
}

/// One witness signature (k, 1, 1, ..., 1) for G(n,2) with even n, together
/// with how many Hamiltonian cycles realize it.
struct Gp2Witness {
    int k = 0;
    RimSignature signature;
    long realizations = 0;
};

/// For even n (n != 10): the witness family over admissible k — k ≡ n−3
/// (mod 4) and k not a multiple of 3, except that k = 3 is admitted
/// tentatively and judged by realization (its admissibility is exactly
/// whether G(n,2) contains such a cycle). Every rim path of a Hamiltonian
/// cycle covers its length + 1 outer vertices, so a signature with segment
/// sum S and r segments needs S + r = n; for (k, 1^(r-1)) that forces
/// r = (n-k+1)/2, which is integral precisely on the admissible parity.
/// Distinct realized k are dissimilar whenever A(G(n,2)) is dihedral, giving
/// at least two similarity classes.
inline std::vector<Gp2Witness> gp2_even_witnesses(int n, int connectivity_stride = 1) {
    if (n < 6 || n % 2 != 0 || n == 10)
        throw std::invalid_argument("gp2_even_witnesses: need even n >= 6, n != 10");
    std::vector<Gp2Witness> out;
    for (int k = 1; k < n; ++k) {
        if (((k - (n - 3)) % 4 + 4) % 4 != 0) continue;
        if (k % 3 == 0 && k != 3) continue;
        const int r = (n - k + 1) / 2;
        if (r < 1 || k + (r - 1) + r != n) continue;
        std::vector<int> lens(r, 1);
        lens[0] = k;
        out.push_back({k, RimSignature(std::move(lens)), 0});
    }
    const auto cycles = enumerate_hamiltonian_cycles(make_generalized_petersen(n, 2), connectivity_stride);
    for (const HamCycle& c : cycles) {
        const RimSignature s = rim_signature(c, n);
        for (auto& w : out)
            if (w.signature == s) ++w.realizations;
    }
    return out;
}

/// Two rim signatures of G(n,3) realized by dissimilar Hamiltonian cycles,
/// when such a pair exists (pair == nullopt means all cycles form a single
/// similarity class). Candidates come from a fixed case table on n; entries
/// whose formulas degenerate for small n are dropped with a note, and if the
/// surviving table entries do not yield a dissimilar pair the search falls
/// back to all realized signatures in deterministic order.
struct Gp3Witnesses {
    std::optional<std::pair<RimSignature, RimSignature>> pair;
    std::string note;
};

inline Gp3Witnesses gp3_witness_pair(int n, int connectivity_stride = 1) {
    if (n < 7 || n == 8 || n == 10)
        throw std::invalid_argument("gp3_witness_pair: need n >= 7, n not 8 or 10");

    Gp3Witnesses result;
    std::vector<RimSignature> table;
    auto run_of = [](int value, int count, std::vector<int> tail) {
        std::vector<int> lens(count, value);
        lens.insert(lens.end(), tail.begin(), tail.end());
        return RimSignature(std::move(lens));
    };
    if (n % 2 == 0) {
        table.push_back(run_of(1, n / 2, {}));
        if (n % 4 == 0) {
            if (n % 3 == 0) table.push_back(run_of(2, (n - 6) / 3, {1, 1, 1}));
            else table.push_back(run_of(3, n / 4, {}));
        } else {
            const int t = (n - 6) / 4;
            if (t >= 1) table.push_back(run_of(3, t, {1, 1, 1}));
            else result.note += "three-segment table entry degenerates (t < 1); ";
        }
    } else if (n % 3 == 2) {
        if (n - 13 >= 1) table.push_back(RimSignature({n - 13, 1, 1, 4, 2}));
        else result.note += "long-segment table entry degenerates (n1 = n-13 < 1); ";
        const int t = (n - 8) / 3;
        if (t >= 1) table.push_back(run_of(2, t, {1, 1, 1, 1}));
        else result.note += "two-segment table entry degenerates (t < 1); ";
    } else {
        if (n - 5 >= 1) table.push_back(RimSignature({n - 5, 1, 1}));
        if (n - 11 >= 1) table.push_back(RimSignature({n - 11, 2, 2, 1, 1}));
        else result.note += "second table entry degenerates (n1 = n-11 < 1); ";
    }

    const auto classes = similarity_classes(n, 3, connectivity_stride);
    std::map<RimSignature, std::set<int>> orbits_of;
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (const RimSignature& s : classes[i].signatures) orbits_of[s].insert(static_cast<int>(i));

    std::vector<RimSignature> pool;
    for (const RimSignature& s : table)
        if (orbits_of.count(s)) pool.push_back(s);
        else if (!s.empty()) result.note += "table signature " + s.to_string() + " is not realized; ";
    for (const auto& [s, ids] : orbits_of)
        if (std::find(pool.begin(), pool.end(), s) == pool.end()) pool.push_back(s);

    for (std::size_t a = 0; a < pool.size(); ++a)
        for (std::size_t b = a + 1; b < pool.size(); ++b) {
            const auto& oa = orbits_of.at(pool[a]);
            const auto& ob = orbits_of.at(pool[b]);
            const bool disjoint = std::none_of(oa.begin(), oa.end(),
                                               [&](int id) { return ob.count(id) > 0; });
            if (disjoint) {
                if (a >= table.size() || b >= table.size())
                    result.note += "fell back beyond the case table; ";
                result.pair = {pool[a], pool[b]};
                return result;
            }
        }
    result.note += "all hamiltonian cycles are mutually similar; no dissimilar pair exists";
    return result;
}

/// Expected Hamiltonicity of G(n,k) for the inner steps the library reasons
/// about: k = 1 and k = 3 always Hamiltonian, k = 2 exactly when
/// n mod 6 != 5. Used as the expected value against enumeration.
inline bool expected_hamiltonicity(int n, int k) {
    if (k != 1 && k != 2 && k != 3)
        throw std::invalid_argument("expected_hamiltonicity: only k in {1,2,3} is tabulated");
    if (n < 3 || 2 * k >= n) throw std::invalid_argument("expected_hamiltonicity: invalid (n,k)");
    if (k == 2) return n % 6 != 5;
    return true;
}

} // namespace fixsub

#endif // FIXSUB_PETERSEN_HPP
