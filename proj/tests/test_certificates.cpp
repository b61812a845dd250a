#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rp3link/construction.hpp"
#include "rp3link/rules.hpp"
#include "rp3link/search.hpp"

using namespace rp3link;

namespace {

// K10 carrying the linkless K6 signing on {1..6} with chosen connector fans:
// fan[i] = sign of every edge from vertex i+1 to {7,8,9,10}; edges inside
// {7,8,9,10} are +.
EdgeSigning k10_case(const std::array<int, 6>& fan) {
    Graph g = Graph::complete(10);
    std::vector<std::uint8_t> signs(g.edge_count(), 0);
    EdgeSigning fig = linkless_k6_signing();
    for (int e = 0; e < fig.graph.edge_count(); ++e) {
        auto [a, b] = fig.graph.edge(e);
        signs[g.edge_index_checked(g.vertex(fig.graph.label(a)),
                                   g.vertex(fig.graph.label(b)))] = fig.signs[e];
    }
    for (int i = 0; i < 6; ++i)
        for (int k = 6; k < 10; ++k) signs[g.edge_index_checked(i, k)] = fan[i] ? 1 : 0;
    return EdgeSigning(g, std::move(signs));
}

}  // namespace

TEST_CASE("disjoint one-homologous pairs") {
    EdgeSigning fig = linkless_k6_signing();
    auto tris = enumerate_triangles(fig.graph);
    CHECK(disjoint_one_hom_pairs(fig, tris).empty());

    Graph k6 = Graph::complete(6);
    EdgeSigning two = EdgeSigning::from_negative_edges(k6, {{"1", "2"}, {"4", "5"}});
    auto pairs = disjoint_one_hom_pairs(two, enumerate_triangles(k6));
    bool found = false;
    for (const auto& p : pairs)
        if (p.c1 == make_cycle(k6, {"1", "2", "3"}) && p.c2 == make_cycle(k6, {"4", "5", "6"}))
            found = true;
    CHECK(found);

    CHECK(disjoint_one_hom_pairs(EdgeSigning::all_plus(k6), enumerate_triangles(k6)).empty());
}

TEST_CASE("disjoint one-homologous triples") {
    // all-+ fans: (1,4,7),(2,5,8),(3,6,9) is a triple
    EdgeSigning s = k10_case({0, 0, 0, 0, 0, 0});
    const Graph& g = s.graph;
    auto tris = enumerate_triangles(g);
    auto triples = disjoint_one_hom_triples(s, tris);
    bool found = false;
    for (const auto& t : triples)
        if (t.c1 == make_cycle(g, {"1", "4", "7"}) && t.c2 == make_cycle(g, {"2", "5", "8"}) &&
            t.c3 == make_cycle(g, {"3", "6", "9"}))
            found = true;
    CHECK(found);

    Graph k10 = Graph::complete(10);
    CHECK(disjoint_one_hom_triples(EdgeSigning::all_plus(k10), enumerate_triangles(k10)).empty());

    // K9 as three triangles with one - edge each
    Graph k9 = Graph::complete(9);
    EdgeSigning nine =
        EdgeSigning::from_negative_edges(k9, {{"1", "2"}, {"4", "5"}, {"7", "8"}});
    auto t9 = disjoint_one_hom_triples(nine, enumerate_triangles(k9));
    CHECK(!t9.empty());
}

TEST_CASE("zero-homologous K4 certificates") {
    Graph k6 = Graph::complete(6);
    CHECK(zero_hom_k4_links(EdgeSigning::all_plus(k6)).size() == 15);
    CHECK(zero_hom_k4_links(linkless_k6_signing()).empty());

    // K6 on {1,2,4,5,6,10} with an all-0 K4 {4,5,6,10}: build the K10 context
    // with the linkless K6 signs on {1..6} and + fans, then negate fan edges
    // at 1 and 2 so only that K6's K4 shows up among {1,2,4,5,6,10}
    EdgeSigning s = k10_case({0, 0, 0, 0, 0, 0});
    const Graph& g = s.graph;
    auto certs = zero_hom_k4_links(s);
    bool found = false;
    for (const auto& z : certs)
        if (z.k6_vertices == g.vertex_ids({"1", "2", "4", "5", "6", "10"}) &&
            z.k4_vertices == g.vertex_ids({"4", "5", "6", "10"}))
            found = true;
    CHECK(found);
}

TEST_CASE("composition rule rows") {
    // all-+ fans plus a single negative edge (7,8): (7,8,9) becomes
    // 1-homologous while the K6 part keeps its linkless signs
    EdgeSigning s = k10_case({0, 0, 0, 0, 0, 0});
    const Graph& g = s.graph;
    s.signs[g.edge_index_checked(g.vertex("7"), g.vertex("8"))] = 1;
    ClassEval classes = eval_from_signing(s);

    // a known-pair row with a shared-edge witness
    auto pair = std::make_pair(make_cycle(g, {"1", "2", "4"}), make_cycle(g, {"5", "6", "10"}));
    Cycle witness = make_cycle(g, {"1", "2", "3"});
    Cycle external = make_cycle(g, {"7", "8", "9"});
    int member = -1;
    IntersectionType how{};
    auto fail = ll_row_failure(g, classes, pair, witness, external,
                               LinkReason::BothOneHomologous, &member, &how);
    CHECK(!fail);
    CHECK(member == 0);
    CHECK(how == IntersectionType::SimplePath);

    // witness equal to one pair member is the chain form
    auto pair2 = std::make_pair(make_cycle(g, {"1", "4", "7"}), make_cycle(g, {"8", "9", "10"}));
    fail = ll_row_failure(g, classes, pair2, pair2.first, make_cycle(g, {"3", "5", "6"}),
                          LinkReason::BothOneHomologous, &member, &how);
    CHECK(!fail);
    CHECK(how == IntersectionType::Identical);

    // (5,6,10) is 0-homologous here: rejected as a witness for this pair
    fail = ll_row_failure(g, classes, pair, pair.second, external,
                          LinkReason::BothOneHomologous);
    REQUIRE(fail.has_value());
    CHECK(fail->find("not 1-homologous") != std::string::npos);
}

TEST_CASE("ll_compose over a zero-hom K4 source") {
    EdgeSigning s = k10_case({0, 0, 0, 0, 0, 0});
    const Graph& g = s.graph;
    s.signs[g.edge_index_checked(g.vertex("7"), g.vertex("8"))] = 1;  // (7,8,9) 1-homologous

    LinkSource source = LinkSource::zero_hom_k4(g.vertex_ids({"1", "2", "4", "5", "6", "10"}),
                                                g.vertex_ids({"4", "5", "6", "10"}));
    auto pairs = source.candidate_pairs(g);
    REQUIRE(pairs.size() == 10);

    // the ten published witnesses, in pair enumeration order
    std::vector<std::vector<std::string>> wit{
        {"1", "2", "3"}, {"1", "2", "3"}, {"1", "2", "3"}, {"1", "2", "3"}, {"1", "3", "5"},
        {"1", "4", "6"}, {"2", "5", "6"}, {"1", "3", "5"}, {"1", "3", "5"}, {"2", "4", "5"}};
    std::vector<Cycle> witnesses;
    for (const auto& w : wit) witnesses.push_back(make_cycle(g, w));

    auto result = ll_compose(g, eval_from_signing(s), source, make_cycle(g, {"7", "8", "9"}),
                             LinkReason::BothOneHomologous, witnesses);
    REQUIRE(std::holds_alternative<Certificate>(result));
    const auto& cert = std::get<Certificate>(result);
    REQUIRE(std::holds_alternative<CertLLComposition>(cert));
    const auto& ll = std::get<CertLLComposition>(cert);
    CHECK(ll.rows.size() == 10);
    CHECK(ll.rows[5].how == "identical");  // (1,4,6) is its own witness
    CHECK(ll.rows[6].how == "identical");  // (2,5,6) likewise

    // the 0-homologous (5,6,10) is rejected as a witness, naming the pair
    std::vector<Cycle> bad = witnesses;
    bad[0] = make_cycle(g, {"5", "6", "10"});
    auto failed = ll_compose(g, eval_from_signing(s), source, make_cycle(g, {"7", "8", "9"}),
                             LinkReason::BothOneHomologous, bad);
    REQUIRE(std::holds_alternative<Violation>(failed));
    CHECK(std::get<Violation>(failed).note.find("(1,2,4)") != std::string::npos);
    CHECK(std::get<Violation>(failed).note.find("not 1-homologous") != std::string::npos);
}

TEST_CASE("linkless K6 conditions") {
    CHECK(linkless_k6_check(linkless_k6_signing()).empty());

    Graph k6 = Graph::complete(6);
    auto plus_violations = linkless_k6_check(EdgeSigning::all_plus(k6));
    bool has_zero_pair = false, has_zero_k4 = false, has_one_pair = false;
    for (const auto& v : plus_violations) {
        if (v.rule == "disjoint-zero-pair") has_zero_pair = true;
        if (v.rule == "zero-hom-k4") has_zero_k4 = true;
        if (v.rule == "disjoint-one-pair") has_one_pair = true;
    }
    CHECK(has_zero_pair);
    CHECK(has_zero_k4);
    CHECK(!has_one_pair);

    auto two = linkless_k6_check(EdgeSigning::from_negative_edges(k6, {{"1", "2"}, {"4", "5"}}));
    bool found = false;
    for (const auto& v : two)
        if (v.rule == "disjoint-one-pair") found = true;
    CHECK(found);

    CHECK_THROWS_AS(linkless_k6_check(EdgeSigning::all_plus(Graph::complete(5))),
                    structure_error);
}

TEST_CASE("find_triple_link_certificate") {
    // the all-+ fan case finds the direct triple
    EdgeSigning s = k10_case({0, 0, 0, 0, 0, 0});
    FindResult r = find_triple_link_certificate(s, {3});
    REQUIRE(r.certificate.has_value());
    CHECK(std::holds_alternative<CertDisjointOneTriple>(*r.certificate));

    // negative controls: all-+ K9 and K10 are silent
    for (int n : {9, 10}) {
        FindResult nf = find_triple_link_certificate(EdgeSigning::all_plus(Graph::complete(n)));
        CHECK(!nf.certificate.has_value());
        CHECK(nf.silent_reason == "no 1-homologous cycles");
    }
}

TEST_CASE("certificates are switching invariant") {
    std::mt19937 rng(2718);
    Graph k7 = Graph::complete(7);
    for (int it = 0; it < 25; ++it) {
        std::vector<std::uint8_t> signs(k7.edge_count());
        for (auto& b : signs) b = rng() & 1;
        EdgeSigning s(k7, signs);
        int v = static_cast<int>(rng() % 7);
        FindResult a = find_triple_link_certificate(s, {5});
        FindResult b = find_triple_link_certificate(switch_vertex(s, v), {5});
        CHECK(a.certificate.has_value() == b.certificate.has_value());
        if (a.certificate && b.certificate) {
            CHECK(std::string(certificate_kind(*a.certificate)) ==
                  certificate_kind(*b.certificate));
            CHECK(describe(*a.certificate, k7) == describe(*b.certificate, k7));
        }
    }
}

TEST_CASE("monotonicity in the cycle-length cap") {
    std::mt19937 rng(31337);
    Graph k7 = Graph::complete(7);
    for (int it = 0; it < 15; ++it) {
        std::vector<std::uint8_t> signs(k7.edge_count());
        for (auto& b : signs) b = rng() & 1;
        EdgeSigning s(k7, signs);
        FindResult small = find_triple_link_certificate(s, {3});
        FindResult large = find_triple_link_certificate(s, {6});
        if (small.certificate) CHECK(large.certificate.has_value());
    }
}
