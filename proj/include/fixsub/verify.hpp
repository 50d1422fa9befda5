#pragma once

// Named verification suites.  Each suite compiles a claims table — rows with
// an identifier, an expected value, and a recipe for computing the actual
// value — and evaluates it, optionally across worker threads.  Rows whose
// expectation is left open are emitted as report-only.  Row order is fixed
// by sorting on claim_id, so two runs (at any --jobs value) produce the same
// rows in the same order.
//
// The expected values are embedded verbatim; when a row fails, the rendered
// output quotes the claim text carried in its note, so a failing run names
// the assertion it contradicts rather than just a mismatched number.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "fixsub/automorphism.hpp"
#include "fixsub/fixing.hpp"
#include "fixsub/graph6.hpp"
#include "fixsub/hamilton.hpp"
#include "fixsub/petersen.hpp"
#include "fixsub/verify_result.hpp"

namespace fixsub {

/// Bad invocation (unknown suite, flag that does not apply, range outside the
/// documented feasibility window).  The CLI maps this to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct VerifyOptions {
    int jobs = 1;
    bool slow = false;                         // unlocks the n = 7 exhaustive row
    std::optional<std::pair<int, int>> range;  // inclusive n-window, clipped per row family
    std::optional<int> k;                      // restrict a suite to one inner step
};

namespace detail {

inline std::string fmt_bool(bool b) { return b ? "true" : "false"; }

inline std::string fmt_distribution(const std::map<int, long>& d) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (auto [key, value] : d) {
        if (!first) os << ',';
        first = false;
        os << key << ':' << value;
    }
    os << '}';
    return os.str();
}

inline std::string pad2(int n) {
    std::string s = std::to_string(n);
    return s.size() < 2 ? "0" + s : s;
}

inline void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < count;) fn(i);
    };
    const int workers =
        static_cast<int>(std::min<std::size_t>(std::max(jobs, 1), std::max<std::size_t>(count, 1)));
    if (workers <= 1) {
        worker();
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

/// One row of a claims table before evaluation.
struct ClaimTask {
    std::string claim_id;
    std::optional<std::string> expected;
    std::string note;
    std::function<std::string()> compute;
};

inline std::vector<VerificationResult> run_tasks(std::vector<ClaimTask> tasks, int jobs) {
    std::vector<VerificationResult> out(tasks.size());
    parallel_for(tasks.size(), jobs, [&](std::size_t i) {
        const auto t0 = std::chrono::steady_clock::now();
        std::string computed;
        try {
            computed = tasks[i].compute();
        } catch (const std::exception& e) {
            computed = std::string("error: ") + e.what();
        }
        const auto elapsed = std::chrono::steady_clock::now() - t0;
        out[i] = make_result(
            tasks[i].claim_id, tasks[i].expected, std::move(computed),
            std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count());
        out[i].note = tasks[i].note;
    });
    std::sort(out.begin(), out.end(),
              [](const VerificationResult& a, const VerificationResult& b) {
                  return a.claim_id < b.claim_id;
              });
    for (std::size_t i = 1; i < out.size(); ++i)
        if (out[i].claim_id == out[i - 1].claim_id)
            throw std::logic_error("run_tasks: duplicate claim id " + out[i].claim_id);
    return out;
}

/// Clip a row family's natural window [lo, hi] to the user's --range.
inline std::pair<int, int> clip(const VerifyOptions& o, int lo, int hi) {
    if (o.range) {
        lo = std::max(lo, o.range->first);
        hi = std::min(hi, o.range->second);
    }
    return {lo, hi};
}

inline void reject_range_and_k(const VerifyOptions& o, const std::string& suite) {
    if (o.range) throw UsageError(suite + ": --range does not apply to this suite");
    if (o.k) throw UsageError(suite + ": --k does not apply to this suite");
}

// -- heawood ----------------------------------------------------------------

inline std::vector<VerificationResult> suite_heawood(const VerifyOptions& o) {
    reject_range_and_k(o, "heawood");
    const auto cycle = [] {
        const Graph h = heawood();
        std::vector<int> rim(14);
        for (int i = 0; i < 14; ++i) rim[i] = i;
        return HamCycle(h, rim);
    };
    const auto sub = [cycle] { return cycle().as_spanning_subgraph(heawood()); };

    std::vector<ClaimTask> tasks;
    tasks.push_back({"heawood.aut-order", "336", "the Heawood graph has 336 automorphisms",
                     [] { return std::to_string(automorphism_generators(heawood()).order()); }});
    tasks.push_back({"heawood.girth", "6", "the Heawood graph is a (3,6)-cage",
                     [] { return std::to_string(girth(heawood()).value_or(-1)); }});
    tasks.push_back({"heawood.cycle-count", "24",
                     "the Heawood graph has exactly 24 hamiltonian cycles",
                     [] { return std::to_string(count_hamiltonian_cycles(heawood())); }});
    tasks.push_back({"heawood.cycle-aut-order", "28",
                     "a 14-cycle has 28 automorphisms (the dihedral group)", [cycle] {
                         return std::to_string(cycle_automorphisms(cycle()).order());
                     }});
    tasks.push_back({"heawood.cycle-stabilizer", "14",
                     "exactly 14 of the cycle's 28 symmetries extend to the host", [sub] {
                         return std::to_string(subgraph_stabilizer_order(
                             automorphism_generators(heawood()), sub()));
                     }});
    tasks.push_back({"heawood.subgraph-count", "24",
                     "every spanning 14-cycle of the Heawood graph is hamiltonian",
                     [sub] { return std::to_string(spanning_subgraph_count(sub())); }});
    tasks.push_back({"heawood.similarity-count", "24",
                     "the 24 hamiltonian cycles form a single similarity class",
                     [sub] { return std::to_string(similarity_count(sub())); }});
    tasks.push_back({"heawood.extension-count", "2",
                     "a 14-cycle extends to the Heawood graph in exactly 2 ways",
                     [sub] { return std::to_string(extension_count(sub())); }});
    tasks.push_back({"heawood.extension-count-direct", "2",
                     "chord-completion search confirms the 2 extensions",
                     [sub] { return std::to_string(extension_count_direct(sub())); }});
    tasks.push_back({"heawood.p-distribution", "{1:2,2:7,3:7,4:7,14:1}",
                     "longest-common-path statistic p over the other 23 cycles", [cycle] {
                         return fmt_distribution(p_distribution(heawood(), cycle()));
                     }});
    tasks.push_back({"heawood.fixing", "true", "the hamiltonian cycle is a fixing subgraph",
                     [sub] { return fmt_bool(fixing_report(sub()).fixing); }});
    tasks.push_back({"heawood.strong-fixing", "false",
                     "the cycle is not strongly fixing (half its symmetries are lost)",
                     [sub] { return fmt_bool(fixing_report(sub()).strong_fixing); }});
    tasks.push_back({"heawood.f-ham", "true",
                     "every hamiltonian cycle of the Heawood graph is fixing",
                     [] { return fmt_bool(every_ham_cycle_fixing(heawood())); }});
    tasks.push_back({"heawood.f-star-ham", "false",
                     "not every hamiltonian cycle is strongly fixing",
                     [] { return fmt_bool(every_ham_cycle_strong_fixing(heawood())); }});
    return run_tasks(std::move(tasks), o.jobs);
}

// -- cage8 ------------------------------------------------------------------

inline std::vector<VerificationResult> suite_cage8(const VerifyOptions& o) {
    reject_range_and_k(o, "cage8");
    const auto first_cycle_sub = [] {
        const Graph g = tutte_8cage();
        return enumerate_hamiltonian_cycles(g).front().as_spanning_subgraph(g);
    };

    std::vector<ClaimTask> tasks;
    tasks.push_back({"cage8.aut-order", "1440", "the Tutte 8-cage has 1440 automorphisms",
                     [] { return std::to_string(automorphism_generators(tutte_8cage()).order()); }});
    tasks.push_back({"cage8.girth", "8", "the Tutte 8-cage is a (3,8)-cage",
                     [] { return std::to_string(girth(tutte_8cage()).value_or(-1)); }});
    tasks.push_back({"cage8.cycle-count", "144",
                     "the 8-cage has exactly 144 hamiltonian cycles",
                     [] { return std::to_string(count_hamiltonian_cycles(tutte_8cage())); }});
    tasks.push_back({"cage8.cycle-stabilizer", "10",
                     "each cycle keeps 10 of its symmetries inside the host group",
                     [first_cycle_sub] {
                         return std::to_string(subgraph_stabilizer_order(
                             automorphism_generators(tutte_8cage()), first_cycle_sub()));
                     }});
    tasks.push_back({"cage8.similarity-count", "144",
                     "all 144 cycles are mutually similar (one orbit of size 1440/10)",
                     [first_cycle_sub] { return std::to_string(similarity_count(first_cycle_sub())); }});
    tasks.push_back({"cage8.extension-count", "6",
                     "a 30-cycle extends to the 8-cage in exactly 6 ways (60*144/1440)",
                     [first_cycle_sub] { return std::to_string(extension_count(first_cycle_sub())); }});
    tasks.push_back({"cage8.f-ham", "true", "every hamiltonian cycle of the 8-cage is fixing",
                     [] { return fmt_bool(every_ham_cycle_fixing(tutte_8cage())); }});
    tasks.push_back({"cage8.f-star-ham", "false",
                     "the 8-cage's cycles are fixing but not strongly fixing",
                     [] { return fmt_bool(every_ham_cycle_strong_fixing(tutte_8cage())); }});
    return run_tasks(std::move(tasks), o.jobs);
}

// -- thm1: the counting identity on random instances -------------------------

inline std::vector<VerificationResult> suite_thm1(const VerifyOptions& o) {
    reject_range_and_k(o, "thm1");
    constexpr int pair_total = 500;

    // Deterministic instance stream: the RNG is consumed sequentially here,
    // before any parallel work, so --jobs cannot change which pairs we test.
    std::mt19937 rng(271828183u);
    std::vector<SpanningSubgraph> cases;
    cases.reserve(pair_total);
    while (static_cast<int>(cases.size()) < pair_total) {
        const int n = 3 + static_cast<int>(rng() % 5);  // hosts on 3..7 vertices
        std::vector<Edge> host_edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() & 1u) host_edges.emplace_back(u, v);
        Graph host(n, std::move(host_edges));
        if (!host.is_connected()) continue;
        std::vector<Edge> kept;
        for (auto e : host.edges())
            if (rng() & 1u) kept.push_back(e);
        cases.emplace_back(host, std::move(kept));
    }

    struct Outcome {
        bool identity = false, agree = false, strong_iff = false;
        std::string tag;
    };
    std::vector<Outcome> outcomes(cases.size());
    const auto t0 = std::chrono::steady_clock::now();
    parallel_for(cases.size(), o.jobs, [&](std::size_t i) {
        const SpanningSubgraph& u = cases[i];
        Outcome& r = outcomes[i];
        r.tag = "pair #" + std::to_string(i) + " host=" + encode_graph6(u.host()) +
                " |E(U)|=" + std::to_string(u.edges().size());
        try {
            const long aut_u = automorphism_generators(u.graph()).order();
            const long aut_g = automorphism_generators(u.host()).order();
            const long s_direct = spanning_count_direct(u);
            const long x_direct = extension_count_direct(u);
            r.identity = aut_u * s_direct == aut_g * x_direct;
            r.agree = spanning_subgraph_count(u) == s_direct && extension_count(u) == x_direct;
            r.strong_iff = fixing_report(u).strong_fixing == (x_direct == 1);
        } catch (const std::exception& e) {
            r.tag += std::string(" error: ") + e.what();
        }
    });
    const long elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                std::chrono::steady_clock::now() - t0)
                                .count();

    const auto tally = [&](bool Outcome::* field) {
        int ok = 0;
        std::string first;
        for (const Outcome& r : outcomes) {
            if (r.*field)
                ++ok;
            else if (first.empty())
                first = r.tag;
        }
        std::string s = std::to_string(ok) + "/" + std::to_string(outcomes.size());
        if (!first.empty()) s += "; first violation at " + first;
        return s;
    };

    const std::string all = std::to_string(pair_total) + "/" + std::to_string(pair_total);
    std::vector<VerificationResult> rows;
    rows.push_back(make_result("thm1.counting-identity", all, tally(&Outcome::identity),
                               elapsed_ms));
    rows.back().note = "|A(U)| * s(U;G) = |A(G)| * x(U;G), both counts by exhaustive oracle";
    rows.push_back(make_result("thm1.extension-agreement", all, tally(&Outcome::agree),
                               elapsed_ms));
    rows.back().note = "orbit-formula s and x agree with the exhaustive oracles";
    rows.push_back(make_result("thm1.strong-iff-unique-extension", all,
                               tally(&Outcome::strong_iff), elapsed_ms));
    rows.back().note = "U is strongly fixing precisely when it extends to G in one way";
    std::sort(rows.begin(), rows.end(),
              [](const VerificationResult& a, const VerificationResult& b) {
                  return a.claim_id < b.claim_id;
              });
    return rows;
}

// -- thm6: exhaustive classification on few vertices --------------------------

inline std::vector<VerificationResult> suite_thm6(const VerifyOptions& o) {
    if (o.k) throw UsageError("thm6: --k does not apply to this suite");
    int lo = 3, hi = o.slow ? 7 : 6;
    if (o.range) {
        lo = o.range->first;
        hi = o.range->second;
        if (lo < 3) throw UsageError("thm6: graphs on fewer than 3 vertices have no cycles");
        if (hi > 7)
            throw UsageError("thm6: exhaustive search beyond n = 7 is infeasible "
                             "(2^(n(n-1)/2) labeled graphs)");
        if (hi == 7 && !o.slow)
            throw UsageError("thm6: n = 7 sweeps 2^21 labeled graphs; pass --slow to allow it");
        if (lo > hi) throw UsageError("thm6: empty range");
    }

    // Connected graphs up to isomorphism, a classical sequence; checks the
    // census machinery itself before the classification rows rely on it.
    static const std::map<int, long> census_expected = {{3, 2}, {4, 6}, {5, 21}, {6, 112}, {7, 853}};

    std::vector<ClaimTask> tasks;
    for (int n = lo; n <= hi; ++n) {
        tasks.push_back({"thm6.n=" + pad2(n) + ".census",
                         std::to_string(census_expected.at(n)),
                         "number of connected graphs on " + std::to_string(n) +
                             " vertices up to isomorphism",
                         [n] { return std::to_string(connected_graphs_up_to_iso(n).size()); }});
        tasks.push_back(
            {"thm6.n=" + pad2(n) + ".members",
             [n] {
                 std::set<std::string> expect;
                 expect.insert(encode_graph6(canonical_labeling(make_cycle(n))));
                 expect.insert(encode_graph6(canonical_labeling(make_complete(n))));
                 if (n % 2 == 0)
                     expect.insert(
                         encode_graph6(canonical_labeling(make_complete_bipartite(n / 2, n / 2))));
                 std::string joined;
                 for (const std::string& g6 : expect) {
                     if (!joined.empty()) joined += ",";
                     joined += g6;
                 }
                 return joined;
             }(),
             "the only graphs all of whose hamiltonian cycles are strongly fixing are "
             "the cycle, the complete graph, and the balanced complete bipartite graph",
             [n] {
                 std::set<std::string> members;
                 for (const Graph& g : connected_graphs_up_to_iso(n))
                     if (every_ham_cycle_strong_fixing(g))
                         members.insert(encode_graph6(canonical_labeling(g)));
                 std::string joined;
                 for (const std::string& g6 : members) {
                     if (!joined.empty()) joined += ",";
                     joined += g6;
                 }
                 return joined;
             }});
    }
    return run_tasks(std::move(tasks), o.jobs);
}

// -- thm7: prisms and G(n,2) ---------------------------------------------------

inline std::vector<VerificationResult> suite_thm7(const VerifyOptions& o) {
    if (o.range && (o.range->first < 3 || o.range->second > 20))
        throw UsageError("thm7: supported window is 3..20 "
                         "(cycle enumeration beyond G(20,2) is untested here)");
    if (o.k && *o.k != 1 && *o.k != 2)
        throw UsageError("thm7: --k must be 1 or 2 for this suite");
    const bool want_k1 = !o.k || *o.k == 1;
    const bool want_k2 = !o.k || *o.k == 2;

    std::vector<ClaimTask> tasks;

    if (want_k1) {
        const auto [lo, hi] = clip(o, 3, 14);
        for (int n = std::max(lo, 3); n <= hi; ++n) {
            tasks.push_back({"thm7.n=" + pad2(n) + ".k=1.f-ham",
                             fmt_bool(n % 2 == 1 || n == 4),
                             "every hamiltonian cycle of the prism G(n,1) is fixing "
                             "exactly for odd n and n = 4",
                             [n] {
                                 return fmt_bool(every_ham_cycle_fixing(
                                     make_generalized_petersen(n, 1)));
                             }});
        }
    }

    if (want_k2) {
        {
            const auto [lo, hi] = clip(o, 5, 16);
            for (int n = lo; n <= hi; ++n) {
                std::optional<std::string> expected;
                if (n == 10)
                    expected = "120";
                else if (n != 5)
                    expected = std::to_string(2 * n);
                tasks.push_back({"thm7.n=" + pad2(n) + ".k=2.aut-order", expected,
                                 "A(G(n,2)) is the dihedral group of order 2n except at "
                                 "n = 5 and n = 10",
                                 [n] {
                                     return std::to_string(automorphism_generators(
                                                               make_generalized_petersen(n, 2))
                                                               .order());
                                 }});
            }
        }
        const auto [lo, hi] = clip(o, 6, 20);
        for (int n = lo; n <= hi; ++n) {
            tasks.push_back({"thm7.n=" + pad2(n) + ".k=2.hamiltonian", fmt_bool(n % 6 != 5),
                             "G(n,2) is hamiltonian exactly when n is not congruent to 5 mod 6",
                             [n] {
                                 return fmt_bool(is_hamiltonian(make_generalized_petersen(n, 2)));
                             }});
            tasks.push_back({"thm7.n=" + pad2(n) + ".k=2.f-ham",
                             fmt_bool(n % 6 == 1 || n % 6 == 3 || n == 10),
                             "every hamiltonian cycle of G(n,2) is fixing if and only if "
                             "n = 1, 3 (mod 6) or n = 10",
                             [n] {
                                 return fmt_bool(every_ham_cycle_fixing(
                                     make_generalized_petersen(n, 2)));
                             }});
            if (n % 2 == 1 && (n % 6 == 1 || n % 6 == 3)) {
                std::vector<int> lens;
                if (n % 6 == 1) {
                    lens.assign(2, 1);
                    lens.insert(lens.end(), (n - 4) / 3, 2);
                } else {
                    lens.assign(n / 3, 2);
                }
                tasks.push_back(
                    {"thm7.n=" + pad2(n) + ".k=2.signature", RimSignature(lens).to_string(),
                     n % 6 == 1
                         ? "for n = 1 (mod 6) every cycle's rim paths have length 2 except "
                           "exactly two of length 1"
                         : "for n = 3 (mod 6) every cycle's rim paths have length 2",
                     [n] {
                         std::set<std::string> sigs;
                         const Graph g = make_generalized_petersen(n, 2);
                         for (const HamCycle& c : enumerate_hamiltonian_cycles(g))
                             sigs.insert(rim_signature(c, n).to_string());
                         std::string joined;
                         for (const std::string& s : sigs) {
                             if (!joined.empty()) joined += "|";
                             joined += s;
                         }
                         return joined;
                     }});
            }
            if (n % 2 == 0 && n != 10) {
                tasks.push_back(
                    {"thm7.n=" + pad2(n) + ".k=2.witnesses", "ok",
                     "for even n the admissible one-long-path signatures are realized and "
                     "pairwise dissimilar, so G(n,2) has at least two similarity classes",
                     [n]() -> std::string {
                         const auto ws = gp2_even_witnesses(n);
                         for (const Gp2Witness& w : ws)
                             if (w.realizations == 0)
                                 return "unrealized signature at k=" + std::to_string(w.k);
                         if (ws.size() < 2)
                             return "degenerate: a single admissible signature; "
                                    "dissimilarity cannot be exhibited";
                         const auto classes = similarity_classes(n, 2);
                         std::set<int> seen;
                         for (const Gp2Witness& w : ws) {
                             std::set<int> mine;
                             for (std::size_t c = 0; c < classes.size(); ++c)
                                 if (classes[c].signatures.count(w.signature)) {
                                     if (seen.count(static_cast<int>(c)))
                                         return "witness signatures share a similarity class";
                                     mine.insert(static_cast<int>(c));
                                 }
                             if (mine.empty()) return "unrealized signature at k=" + std::to_string(w.k);
                             seen.insert(mine.begin(), mine.end());
                         }
                         return "ok";
                     }});
                tasks.push_back({"thm7.n=" + pad2(n) + ".k=2.witness-detail", std::nullopt,
                                 "realized witness signatures and their multiplicities",
                                 [n] {
                                     std::string out;
                                     for (const Gp2Witness& w : gp2_even_witnesses(n)) {
                                         if (!out.empty()) out += "; ";
                                         out += "k=" + std::to_string(w.k) + " sig=[" +
                                                w.signature.to_string() + "] x" +
                                                std::to_string(w.realizations);
                                     }
                                     return out.empty() ? std::string("none admissible") : out;
                                 }});
            }
        }
    }
    if (tasks.empty()) throw UsageError("thm7: empty range");
    return run_tasks(std::move(tasks), o.jobs);
}

// -- thm8: G(n,3) ---------------------------------------------------------------

inline std::vector<VerificationResult> suite_thm8(const VerifyOptions& o) {
    int lo = 7, hi = 16;
    if (o.range) {
        lo = o.range->first;
        hi = o.range->second;
        if (lo < 7) throw UsageError("thm8: G(n,3) needs n >= 7");
        if (hi > 16)
            throw UsageError("thm8: supported window is 7..16 "
                             "(witness tables and enumeration are untested beyond)");
        if (lo > hi) throw UsageError("thm8: empty range");
    }
    if (o.k && *o.k != 3) throw UsageError("thm8: this suite is G(n,3) only; --k must be 3");

    std::vector<ClaimTask> tasks;
    for (int n = lo; n <= hi; ++n) {
        const std::string base = "thm8.n=" + pad2(n) + ".k=3.";
        const bool exceptional = n == 8 || n == 10;
        tasks.push_back({base + "f-ham",
                         exceptional ? std::optional<std::string>{} : fmt_bool(false),
                         exceptional
                             ? "membership of this very symmetric graph is left open; "
                               "computed for the record"
                             : "some pair of hamiltonian cycles of G(n,3) is dissimilar, "
                               "so not every cycle is fixing",
                         [n] {
                             return fmt_bool(
                                 every_ham_cycle_fixing(make_generalized_petersen(n, 3)));
                         }});
        tasks.push_back({base + "orbit-report", std::nullopt,
                         "cycle count, similarity classes, and group order",
                         [n] {
                             const auto co =
                                 decompose_cycle_orbits(make_generalized_petersen(n, 3));
                             return "cycles=" + std::to_string(co.cycles.size()) +
                                    " orbits=" + std::to_string(co.representative.size()) +
                                    " aut=" + std::to_string(co.aut_order);
                         }});
        if (exceptional) continue;
        tasks.push_back({base + "hamiltonian", fmt_bool(true), "G(n,3) is hamiltonian for n >= 7",
                         [n] {
                             return fmt_bool(is_hamiltonian(make_generalized_petersen(n, 3)));
                         }});
        tasks.push_back(
            {base + "witness-pair", "dissimilar pair realized",
             "two rim signatures from the case table are both realized and lie in "
             "different similarity classes",
             [n] {
                 const Gp3Witnesses w = gp3_witness_pair(n);
                 if (!w.pair) return "no dissimilar pair: " + w.note;
                 const auto classes = similarity_classes(n, 3);
                 std::set<int> a, b;
                 for (std::size_t c = 0; c < classes.size(); ++c) {
                     if (classes[c].signatures.count(w.pair->first)) a.insert(static_cast<int>(c));
                     if (classes[c].signatures.count(w.pair->second)) b.insert(static_cast<int>(c));
                 }
                 if (a.empty() || b.empty()) return std::string("witness signature unrealized");
                 for (int c : a)
                     if (b.count(c)) return std::string("pair lies in a common similarity class");
                 return std::string("dissimilar pair realized");
             }});
        tasks.push_back({base + "witness-detail", std::nullopt,
                         "the witness signatures (or why none exist)",
                         [n] {
                             const Gp3Witnesses w = gp3_witness_pair(n);
                             std::string out;
                             if (w.pair)
                                 out = "[" + w.pair->first.to_string() + "] vs [" +
                                       w.pair->second.to_string() + "]";
                             if (!w.note.empty()) {
                                 if (!out.empty()) out += "; ";
                                 out += w.note;
                             }
                             return out;
                         }});
    }
    return run_tasks(std::move(tasks), o.jobs);
}

// -- exceptional ---------------------------------------------------------------

inline std::vector<VerificationResult> suite_exceptional(const VerifyOptions& o) {
    reject_range_and_k(o, "exceptional");
    const auto orbit_summary = [](const Graph& g) {
        const CycleOrbits co = decompose_cycle_orbits(g);
        return "fHam=" + fmt_bool(co.representative.size() == 1) +
               " cycles=" + std::to_string(co.cycles.size()) +
               " orbits=" + std::to_string(co.representative.size()) +
               " aut=" + std::to_string(co.aut_order);
    };

    std::vector<ClaimTask> tasks;
    tasks.push_back({"exceptional.gp-04-1.f-ham", "true",
                     "the cube G(4,1) is the even prism whose cycles are all fixing",
                     [] { return fmt_bool(every_ham_cycle_fixing(make_generalized_petersen(4, 1))); }});
    tasks.push_back({"exceptional.gp-08-3.report", std::nullopt,
                     "Moebius-Kantor graph; membership not asserted, computed for the record",
                     [orbit_summary] { return orbit_summary(make_generalized_petersen(8, 3)); }});
    tasks.push_back({"exceptional.gp-10-2.f-ham", "true",
                     "the dodecahedron's 30 hamiltonian cycles form a single class",
                     [] { return fmt_bool(every_ham_cycle_fixing(make_generalized_petersen(10, 2))); }});
    tasks.push_back({"exceptional.gp-10-3.report", std::nullopt,
                     "Desargues graph; membership not asserted, computed for the record",
                     [orbit_summary] { return orbit_summary(make_generalized_petersen(10, 3)); }});
    tasks.push_back({"exceptional.gp-12-5.report", std::nullopt,
                     "Nauru graph; membership not asserted, computed for the record",
                     [orbit_summary] { return orbit_summary(make_generalized_petersen(12, 5)); }});
    tasks.push_back({"exceptional.gp-24-5.report", std::nullopt,
                     "the largest of the very symmetric G(n,k); computed for the record",
                     [orbit_summary] { return orbit_summary(make_generalized_petersen(24, 5)); }});
    tasks.push_back({"exceptional.line-k33.f-ham", "false",
                     "the line graph of K(3,3) has dissimilar hamiltonian cycles",
                     [] { return fmt_bool(every_ham_cycle_fixing(line_graph(make_complete_bipartite(3, 3)))); }});
    tasks.push_back({"exceptional.line-k33.report", std::nullopt,
                     "orbit structure behind the non-membership",
                     [orbit_summary] { return orbit_summary(line_graph(make_complete_bipartite(3, 3))); }});
    return run_tasks(std::move(tasks), o.jobs);
}

}  // namespace detail

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"thm1",    "thm6",  "thm7",       "thm8",
                                                   "heawood", "cage8", "exceptional"};
    return names;
}

inline std::vector<VerificationResult> verify_suite(const std::string& suite,
                                                    const VerifyOptions& options = {}) {
    if (suite == "thm1") return detail::suite_thm1(options);
    if (suite == "thm6") return detail::suite_thm6(options);
    if (suite == "thm7") return detail::suite_thm7(options);
    if (suite == "thm8") return detail::suite_thm8(options);
    if (suite == "heawood") return detail::suite_heawood(options);
    if (suite == "cage8") return detail::suite_cage8(options);
    if (suite == "exceptional") return detail::suite_exceptional(options);
    std::string all;
    for (const std::string& s : suite_names()) all += (all.empty() ? "" : "|") + s;
    throw UsageError("unknown suite '" + suite + "' (expected " + all + ")");
}

inline bool all_passed(const std::vector<VerificationResult>& rows) {
    for (const VerificationResult& r : rows)
        if (r.status == ClaimStatus::fail) return false;
    return true;
}

/// Human-oriented rendering: one aligned line per row, and for failures a
/// second line quoting the claim the computation contradicts.
inline std::string render_text(const std::vector<VerificationResult>& rows) {
    std::size_t width = 0;
    for (const VerificationResult& r : rows) width = std::max(width, r.claim_id.size());
    std::ostringstream os;
    for (const VerificationResult& r : rows) {
        os << (r.status == ClaimStatus::pass          ? "pass       "
               : r.status == ClaimStatus::report_only ? "report-only"
                                                      : "FAIL       ")
           << "  " << r.claim_id << std::string(width - r.claim_id.size(), ' ') << "  ";
        if (r.expected)
            os << "expected=" << *r.expected << " computed=" << r.computed;
        else
            os << "computed=" << r.computed;
        os << " (" << r.runtime_ms << " ms)\n";
        if (r.status == ClaimStatus::fail && !r.note.empty())
            os << "            ^ contradicts: " << r.note << "\n";
    }
    return os.str();
}

}  // namespace fixsub
