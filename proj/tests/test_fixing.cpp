#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "fixsub/automorphism.hpp"
#include "fixsub/fixing.hpp"
#include "fixsub/graph.hpp"

using namespace fixsub;

namespace {
SpanningSubgraph rim_cycle_sub(const Graph& g) {
    std::vector<int> order(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i) order[i] = i;
    return HamCycle(g, order).as_spanning_subgraph(g);
}
}  // namespace

TEST_CASE("Heawood cycle report", "[fixing]") {
    const FixingReport r = fixing_report(rim_cycle_sub(heawood()), "heawood-rim");
    REQUIRE(r.label == "heawood-rim");
    REQUIRE(r.s == 24);
    REQUIRE(r.s0 == 24);
    REQUIRE(r.x == 2);
    REQUIRE(r.aut_g == 336);
    REQUIRE(r.aut_u == 28);
    REQUIRE(r.stab == 14);
    REQUIRE(r.fixing);
    REQUIRE_FALSE(r.strong_fixing);
    // the exact identity behind the x column
    REQUIRE(r.aut_u * r.s == r.aut_g * r.x);
}

TEST_CASE("cube cycle report", "[fixing]") {
    const Graph cube = make_generalized_petersen(4, 1);
    const auto cycles = enumerate_hamiltonian_cycles(cube);
    REQUIRE(cycles.size() == 6);
    const FixingReport r = fixing_report(cycles.front().as_spanning_subgraph(cube));
    REQUIRE(r.s == 6);
    REQUIRE(r.s0 == 6);
    REQUIRE(r.x == 2);
    REQUIRE(r.aut_g == 48);
    REQUIRE(r.aut_u == 16);
    REQUIRE(r.stab == 8);
    REQUIRE(r.fixing);
    REQUIRE_FALSE(r.strong_fixing);
}

TEST_CASE("strong fixing cycles", "[fixing]") {
    for (const Graph& g : {make_complete(4), make_complete(7), make_complete_bipartite(3, 3),
                           make_cycle(7)}) {
        const auto cycles = enumerate_hamiltonian_cycles(g);
        REQUIRE_FALSE(cycles.empty());
        const FixingReport r = fixing_report(cycles.front().as_spanning_subgraph(g));
        REQUIRE(r.fixing);
        REQUIRE(r.strong_fixing);
        REQUIRE(r.x == 1);
    }
}

TEST_CASE("direct oracles agree with the formula path", "[fixing]") {
    std::mt19937 rng(2024);
    int done = 0;
    while (done < 80) {
        const int n = 3 + static_cast<int>(rng() % 5);
        std::vector<Edge> host_edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() & 1u) host_edges.emplace_back(u, v);
        const Graph host(n, std::move(host_edges));
        if (!host.is_connected()) continue;
        std::vector<Edge> kept;
        for (auto e : host.edges())
            if (rng() & 1u) kept.push_back(e);
        const SpanningSubgraph u(host, kept);

        const long s_direct = spanning_count_direct(u);
        const long x_direct = extension_count_direct(u);
        const long aut_u = automorphism_generators(u.graph()).order();
        const long aut_g = automorphism_generators(host).order();
        REQUIRE(aut_u * s_direct == aut_g * x_direct);
        REQUIRE(spanning_subgraph_count(u) == s_direct);
        REQUIRE(extension_count(u) == x_direct);
        ++done;
    }
}

TEST_CASE("chord completion extension oracle", "[fixing]") {
    REQUIRE(extension_count_direct(rim_cycle_sub(heawood())) == 2);

    // complete hosts admit exactly one extension
    const Graph k6 = make_complete(6);
    const SpanningSubgraph c6(k6, make_cycle(6).edges());
    REQUIRE(extension_count_direct(c6) == 1);

    // oversized non-cubic non-complete hosts have no exhaustive regime
    const Graph big = make_circulant(12, {1, 2, 3});
    REQUIRE_THROWS_AS(extension_count_direct(SpanningSubgraph(big, make_cycle(12).edges())),
                      std::invalid_argument);
}

TEST_CASE("similarity count equals group order over stabilizer", "[fixing]") {
    const Graph g = tutte_8cage();
    const auto cycles = enumerate_hamiltonian_cycles(g);
    const PermutationGroup aut = automorphism_generators(g);
    const SpanningSubgraph u = cycles.front().as_spanning_subgraph(g);
    REQUIRE(similarity_count(aut, u) == 144);
    REQUIRE(subgraph_stabilizer_order(aut, u) == 10);
    REQUIRE(aut.order() == 1440);
}

TEST_CASE("orbit decomposition of named graphs", "[fixing]") {
    SECTION("hexagonal prism splits in two classes") {
        const HamOrbitReport rep = ham_orbit_report(make_generalized_petersen(6, 1));
        REQUIRE(rep.cycles == 8);
        REQUIRE(rep.orbits.size() == 2);
        REQUIRE_FALSE(rep.f_ham);
        REQUIRE_FALSE(rep.f_star_ham);
    }
    SECTION("dodecahedron is a single class") {
        const HamOrbitReport rep = ham_orbit_report(make_generalized_petersen(10, 2));
        REQUIRE(rep.cycles == 30);
        REQUIRE(rep.orbits.size() == 1);
        REQUIRE(rep.orbits[0].stab == 4);
        REQUIRE(rep.f_ham);
        REQUIRE_FALSE(rep.f_star_ham);
    }
    SECTION("G(12,3) frozen class structure") {
        const CycleOrbits co = decompose_cycle_orbits(make_generalized_petersen(12, 3));
        REQUIRE(co.cycles.size() == 68);
        REQUIRE(co.aut_order == 24);
        std::multiset<long> sizes(co.size.begin(), co.size.end());
        REQUIRE(sizes == std::multiset<long>{2, 6, 12, 12, 12, 24});
        for (std::size_t o = 0; o < co.size.size(); ++o)
            REQUIRE(co.size[o] * co.stab[o] == co.aut_order);
    }
    SECTION("line graph of K33 is not in the single-class family") {
        const HamOrbitReport rep = ham_orbit_report(line_graph(make_complete_bipartite(3, 3)));
        REQUIRE(rep.cycles == 48);
        REQUIRE(rep.orbits.size() == 2);
        REQUIRE_FALSE(rep.f_ham);
    }
}

TEST_CASE("exhaustive strong-fixing classification on small orders", "[fixing]") {
    for (int n = 3; n <= 6; ++n) {
        std::set<Graph> expected;
        expected.insert(canonical_labeling(make_cycle(n)));
        expected.insert(canonical_labeling(make_complete(n)));
        if (n % 2 == 0)
            expected.insert(canonical_labeling(make_complete_bipartite(n / 2, n / 2)));
        std::set<Graph> found;
        for (const Graph& g : connected_graphs_up_to_iso(n))
            if (every_ham_cycle_strong_fixing(g)) found.insert(g);
        REQUIRE(found == expected);
    }
}

TEST_CASE("circulant recognition along a cycle", "[fixing]") {
    const Graph k33 = make_complete_bipartite(3, 3);
    const HamCycle c(k33, {0, 3, 1, 4, 2, 5});
    const auto d = circulant_difference_set(k33, c);
    REQUIRE(d.has_value());
    REQUIRE(*d == std::set<int>{1, 3, 5});

    const Graph k5 = make_complete(5);
    const auto d5 = circulant_difference_set(k5, HamCycle(k5, {0, 1, 2, 3, 4}));
    REQUIRE(d5.has_value());
    REQUIRE(*d5 == std::set<int>{1, 2, 3, 4});

    // the Heawood graph is not circulant along its rim
    const Graph h = heawood();
    std::vector<int> rim(14);
    for (int i = 0; i < 14; ++i) rim[i] = i;
    REQUIRE_FALSE(circulant_difference_set(h, HamCycle(h, rim)).has_value());
}

TEST_CASE("middles between a strong cycle and its host stay strong", "[fixing]") {
    const Graph k33 = make_complete_bipartite(3, 3);
    const HamCycle c(k33, {0, 3, 1, 4, 2, 5});
    const SpanningSubgraph u = c.as_spanning_subgraph(k33);

    std::vector<Edge> extras;
    for (auto e : k33.edges())
        if (!c.contains_edge(e.first, e.second)) extras.push_back(e);
    REQUIRE(extras.size() == 3);

    for (unsigned mask = 0; mask < 8; ++mask) {
        std::vector<Edge> mid = u.edges();
        for (int b = 0; b < 3; ++b)
            if (mask >> b & 1) mid.push_back(extras[b]);
        REQUIRE(sandwich_check(u, SpanningSubgraph(k33, mid)));
    }

    // preconditions
    REQUIRE_THROWS_AS(sandwich_check(u, SpanningSubgraph(k33, {{0, 3}})),
                      std::invalid_argument);  // U not inside K
    const SpanningSubgraph weak = rim_cycle_sub(heawood());
    REQUIRE_THROWS_AS(sandwich_check(weak, weak), std::invalid_argument);  // U not strong
}
