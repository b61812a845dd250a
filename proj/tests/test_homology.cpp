#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "rp3link/construction.hpp"
#include "rp3link/signing.hpp"

using namespace rp3link;

namespace {

EdgeSigning random_signing(const Graph& g, std::mt19937& rng) {
    std::vector<std::uint8_t> signs(g.edge_count());
    for (auto& b : signs) b = rng() & 1;
    return EdgeSigning(g, std::move(signs));
}

// full vector of triangle classes, used as a switching-class fingerprint
std::vector<int> triangle_fingerprint(const EdgeSigning& s) {
    std::vector<int> out;
    for (const auto& t : enumerate_triangles(s.graph)) out.push_back(cycle_class(s, t));
    return out;
}

}  // namespace

TEST_CASE("cycle classes of the linkless K6 signing") {
    EdgeSigning fig = linkless_k6_signing();
    CHECK(fig.negative_count() == 6);
    const Graph& g = fig.graph;
    CHECK(cycle_class(fig, make_cycle(g, {"1", "2", "3"})) == 1);
    CHECK(cycle_class(fig, make_cycle(g, {"4", "5", "6"})) == 0);
    CHECK(cycle_class(fig, make_cycle(g, {"1", "4", "6"})) == 1);

    auto tris = enumerate_triangles(g);
    int ones = 0;
    for (const auto& t : tris) ones += cycle_class(fig, t);
    CHECK(ones == 10);

    // every disjoint pair has exactly one 1-homologous member
    for (auto [i, j] : disjoint_cycle_pairs(tris))
        CHECK(cycle_class(fig, tris[i]) + cycle_class(fig, tris[j]) == 1);
}

TEST_CASE("even subgraph classes") {
    EdgeSigning fig = linkless_k6_signing();
    const Graph& g = fig.graph;
    CHECK(even_subgraph_class(fig, {}) == 0);

    // symmetric difference of (1,2,3) and (1,2,4): edges (1,3),(2,3),(1,4),(2,4),
    // three of which are negative; agrees with XOR of the two triangle classes
    std::vector<int> sym{
        g.edge_index_checked(g.vertex("1"), g.vertex("3")),
        g.edge_index_checked(g.vertex("2"), g.vertex("3")),
        g.edge_index_checked(g.vertex("1"), g.vertex("4")),
        g.edge_index_checked(g.vertex("2"), g.vertex("4")),
    };
    CHECK(even_subgraph_class(fig, sym) ==
          (cycle_class(fig, make_cycle(g, {"1", "2", "3"})) ^
           cycle_class(fig, make_cycle(g, {"1", "2", "4"}))));
    CHECK(even_subgraph_class(fig, sym) == 1);

    // additivity over symmetric differences of random cycles
    std::mt19937 rng(414243);
    Graph k7 = Graph::complete(7);
    auto cycles = enumerate_cycles(k7, 7);
    for (int it = 0; it < 200; ++it) {
        EdgeSigning s = random_signing(k7, rng);
        const Cycle& a = cycles[rng() % cycles.size()];
        const Cycle& b = cycles[rng() % cycles.size()];
        std::uint64_t sym_mask = a.edge_mask() ^ b.edge_mask();
        std::vector<int> edges;
        for (int e = 0; e < k7.edge_count(); ++e)
            if (sym_mask >> e & 1) edges.push_back(e);
        CHECK(even_subgraph_class(s, edges) == (cycle_class(s, a) ^ cycle_class(s, b)));
    }

    std::vector<int> odd{0};
    CHECK_THROWS_AS(even_subgraph_class(fig, odd), structure_error);
}

TEST_CASE("switching") {
    Graph k4 = Graph::complete(4);
    EdgeSigning plus = EdgeSigning::all_plus(k4);
    EdgeSigning sw = switch_vertex(plus, 0);
    CHECK(sw.negative_count() == 3);
    for (const auto& t : enumerate_triangles(k4)) CHECK(cycle_class(sw, t) == 0);

    CHECK(switch_vertex(sw, 0) == plus);

    // switching at every vertex once restores the signing
    EdgeSigning fig = linkless_k6_signing();
    EdgeSigning all = fig;
    for (int v = 0; v < 6; ++v) all = switch_vertex(all, v);
    CHECK(all == fig);

    CHECK_THROWS_AS(switch_vertex(fig, 17), label_error);
}

TEST_CASE("switching invariance of cycle classes") {
    std::mt19937 rng(99);
    for (const Graph& g : {Graph::complete(6), Graph::complete(7)}) {
        auto cycles = enumerate_cycles(g, g.vertex_count());
        for (int it = 0; it < 500; ++it) {
            EdgeSigning s = random_signing(g, rng);
            int v = static_cast<int>(rng() % g.vertex_count());
            const Cycle& c = cycles[rng() % cycles.size()];
            CHECK(cycle_class(s, c) == cycle_class(switch_vertex(s, v), c));
        }
    }
}

TEST_CASE("same_class") {
    Graph k4 = Graph::complete(4);
    EdgeSigning plus = EdgeSigning::all_plus(k4);
    CHECK(same_class(plus, switch_vertex(plus, 2)));

    EdgeSigning one_neg = EdgeSigning::from_negative_edges(k4, {{"1", "2"}});
    CHECK(!same_class(plus, one_neg));

    std::mt19937 rng(7);
    Graph k6 = Graph::complete(6);
    for (int it = 0; it < 100; ++it) {
        EdgeSigning s = random_signing(k6, rng);
        EdgeSigning t = s;
        for (int k = 0; k < 5; ++k) t = switch_vertex(t, static_cast<int>(rng() % 6));
        CHECK(same_class(s, t));
        CHECK(triangle_fingerprint(s) == triangle_fingerprint(t));
    }
}

TEST_CASE("canonical signing") {
    Graph k6 = Graph::complete(6);
    EdgeSigning plus = EdgeSigning::all_plus(k6);
    CHECK(canonical_signing(plus, CanonicalMode::Switching) == plus);

    std::mt19937 rng(20240601);
    for (int it = 0; it < 50; ++it) {
        EdgeSigning s = random_signing(k6, rng);
        EdgeSigning c = canonical_signing(s, CanonicalMode::Switching);
        CHECK(same_class(c, s));
        CHECK(canonical_signing(c, CanonicalMode::Switching) == c);  // idempotent
        int v = static_cast<int>(rng() % 6);
        CHECK(canonical_signing(switch_vertex(s, v), CanonicalMode::Switching) == c);
    }

    // switching-canonical forms over all 2^15 signings of K6: 2^10 of them
    std::set<std::vector<std::uint8_t>> forms;
    for (std::uint32_t bits = 0; bits < (1u << 15); ++bits) {
        std::vector<std::uint8_t> signs(15);
        for (int e = 0; e < 15; ++e) signs[e] = (bits >> e) & 1;
        forms.insert(canonical_signing(EdgeSigning(k6, std::move(signs)),
                                       CanonicalMode::Switching)
                         .signs);
    }
    CHECK(forms.size() == 1024);
}

TEST_CASE("class enumeration") {
    // K4: 2^(6-4+1) = 8 classes; oracle buckets all 64 signings
    Graph k4 = Graph::complete(4);
    std::set<std::vector<int>> buckets;
    for (std::uint32_t bits = 0; bits < 64; ++bits) {
        std::vector<std::uint8_t> signs(6);
        for (int e = 0; e < 6; ++e) signs[e] = (bits >> e) & 1;
        buckets.insert(triangle_fingerprint(EdgeSigning(k4, std::move(signs))));
    }
    CHECK(buckets.size() == 8);

    ClassEnumeration en(k4);
    CHECK(en.count() == 8);
    std::set<std::vector<int>> reps;
    for (std::uint64_t i = 0; i < en.count(); ++i)
        reps.insert(triangle_fingerprint(en.representative(i)));
    CHECK(reps == buckets);  // pairwise distinct classes covering everything

    CHECK(ClassEnumeration(Graph::complete(6)).count() == 1024);

    Graph tree({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}});
    CHECK(ClassEnumeration(tree).count() == 1);

    // every random signing matches exactly one representative
    std::mt19937 rng(5150);
    Graph k5 = Graph::complete(5);
    ClassEnumeration en5(k5);
    for (int it = 0; it < 40; ++it) {
        EdgeSigning s = random_signing(k5, rng);
        int matches = 0;
        for (std::uint64_t i = 0; i < en5.count(); ++i)
            if (same_class(s, en5.representative(i))) matches++;
        CHECK(matches == 1);
    }
}

TEST_CASE("k4 one-homologous counts") {
    Graph k4 = Graph::complete(4);
    CHECK(k4_one_hom_count(EdgeSigning::all_plus(k4), {0, 1, 2, 3}) == 0);
    CHECK(k4_one_hom_count(EdgeSigning::from_negative_edges(k4, {{"1", "2"}}), {0, 1, 2, 3}) ==
          2);

    EdgeSigning fig = linkless_k6_signing();
    CHECK(k4_one_hom_count(fig, fig.graph.vertex_ids({"1", "2", "3", "4"})) == 2);

    // the count is even for all 64 signings of K4
    for (std::uint32_t bits = 0; bits < 64; ++bits) {
        std::vector<std::uint8_t> signs(6);
        for (int e = 0; e < 6; ++e) signs[e] = (bits >> e) & 1;
        int c = k4_one_hom_count(EdgeSigning(k4, std::move(signs)), {0, 1, 2, 3});
        CHECK((c == 0 || c == 2 || c == 4));
    }

    Graph k6 = Graph::complete(6);
    CHECK_THROWS_AS(
        k4_one_hom_count(EdgeSigning::all_plus(Graph({"1", "2", "3", "4"},
                                                     {{"1", "2"}, {"2", "3"}, {"3", "4"}})),
                         {0, 1, 2, 3}),
        structure_error);
    (void)k6;
}

TEST_CASE("component zero detection") {
    Construction u = build_construction("union:k4,k4");
    EdgeSigning s = EdgeSigning::from_negative_edges(u.graph, {{"1:1", "1:2"}});
    auto comps = u.graph.components();
    REQUIRE(comps.size() == 2);
    CHECK(!component_all_zero(s, comps[0]));
    CHECK(component_all_zero(s, comps[1]));
    // switching does not change the verdict
    EdgeSigning sw = switch_vertex(s, u.graph.vertex("1:3"));
    CHECK(!component_all_zero(sw, comps[0]));
}
