#include "rp3link/rules.hpp"

#include <algorithm>

namespace rp3link {

ClassEval eval_from_signing(const EdgeSigning& s) {
    return [&s](const Cycle& c) -> std::optional<Z2> { return cycle_class(s, c); };
}

ClassEval eval_from_constraints(const SignConstraints& sigma) {
    return [&sigma](const Cycle& c) -> std::optional<Z2> { return sigma.eval_cycle(c); };
}

std::vector<CertDisjointOnePair> disjoint_one_hom_pairs(const EdgeSigning& s,
                                                        const std::vector<Cycle>& cycles) {
    std::vector<CertDisjointOnePair> out;
    std::vector<char> one(cycles.size());
    for (std::size_t i = 0; i < cycles.size(); ++i) one[i] = cycle_class(s, cycles[i]) == 1;
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        if (!one[i]) continue;
        for (std::size_t j = i + 1; j < cycles.size(); ++j)
            if (one[j] && cycles[i].disjoint(cycles[j])) out.push_back({cycles[i], cycles[j]});
    }
    return out;
}

std::vector<CertDisjointOneTriple> disjoint_one_hom_triples(const EdgeSigning& s,
                                                            const std::vector<Cycle>& cycles) {
    std::vector<CertDisjointOneTriple> out;
    std::vector<char> one(cycles.size());
    for (std::size_t i = 0; i < cycles.size(); ++i) one[i] = cycle_class(s, cycles[i]) == 1;
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        if (!one[i]) continue;
        for (std::size_t j = i + 1; j < cycles.size(); ++j) {
            if (!one[j] || !cycles[i].disjoint(cycles[j])) continue;
            for (std::size_t k = j + 1; k < cycles.size(); ++k)
                if (one[k] && cycles[i].disjoint(cycles[k]) && cycles[j].disjoint(cycles[k]))
                    out.push_back({cycles[i], cycles[j], cycles[k]});
        }
    }
    return out;
}

std::vector<CertZeroHomK4InK6> zero_hom_k4_links(const EdgeSigning& s) {
    const Graph& g = s.graph;
    const int n = g.vertex_count();
    std::vector<CertZeroHomK4InK6> out;

    std::vector<int> six;
    auto k6_scan = [&](auto&& self, int next) -> void {
        if (six.size() == 6) {
            std::uint32_t mask = 0;
            for (int v : six) mask |= (1u << v);
            if (!g.is_complete_on(mask)) return;
            // every induced K4 inside with all triangles 0-homologous
            for (int a = 0; a < 6; ++a)
                for (int b = a + 1; b < 6; ++b)
                    for (int c = b + 1; c < 6; ++c)
                        for (int d = c + 1; d < 6; ++d) {
                            std::vector<int> k4{six[a], six[b], six[c], six[d]};
                            if (k4_one_hom_count(s, k4) == 0)
                                out.push_back({six, k4});
                        }
            return;
        }
        for (int v = next; v < n; ++v) {
            six.push_back(v);
            self(self, v + 1);
            six.pop_back();
        }
    };
    k6_scan(k6_scan, 0);
    return out;
}

std::optional<std::string> ll_row_failure(const Graph& g, const ClassEval& classes,
                                          const std::pair<Cycle, Cycle>& pair,
                                          const Cycle& witness, const Cycle& external,
                                          LinkReason second_reason, int* ca_member_out,
                                          IntersectionType* how_out) {
    if (second_reason == LinkReason::BothOneHomologous) {
        auto wc = classes(witness);
        if (!wc) return "witness class undetermined";
        if (*wc != 1) return "witness " + witness.to_string(g) + " is not 1-homologous";
    }
    if (!witness.disjoint(external) && !(witness == external))
        return "witness meets the external cycle";
    if (witness == external) return "witness equals the external cycle";

    std::string last = "witness meets neither pair member admissibly";
    for (int m = 0; m < 2; ++m) {
        const Cycle& ca = m == 0 ? pair.first : pair.second;
        const Cycle& cb = m == 0 ? pair.second : pair.first;
        Intersection is = intersection_type(g, witness, ca);
        if (is.type != IntersectionType::SingleVertex && is.type != IntersectionType::SimplePath &&
            is.type != IntersectionType::Identical)
            continue;
        if (!witness.disjoint(cb)) {
            last = "witness meets both pair members";
            continue;
        }
        if (!external.disjoint(cb)) {
            last = "external cycle meets pair member " + cb.to_string(g);
            continue;
        }
        if (!external.disjoint(ca)) {
            last = "external cycle meets pair member " + ca.to_string(g);
            continue;
        }
        if (ca_member_out) *ca_member_out = m;
        if (how_out) *how_out = is.type;
        return std::nullopt;
    }
    return last;
}

std::variant<Certificate, Violation> ll_compose(const Graph& g, const ClassEval& classes,
                                                const LinkSource& source, const Cycle& external,
                                                LinkReason second_reason,
                                                const std::vector<Cycle>& witnesses,
                                                const std::string& second_assumption) {
    auto pairs = source.candidate_pairs(g);
    if (witnesses.size() != pairs.size())
        throw structure_error("witness count does not match candidate pair count");

    if (second_reason == LinkReason::Assumed) {
        // the assumption grants one specific linked pair (W, external); every
        // row must use that W
        for (const Cycle& w : witnesses)
            if (!(w == witnesses.front()))
                return Violation{"ll-composition",
                                 "assumed second link requires one fixed witness cycle",
                                 {w}};
    }
    if (second_reason == LinkReason::BothOneHomologous) {
        auto xc = classes(external);
        if (!xc)
            return Violation{"ll-composition", "external cycle class undetermined", {external}};
        if (*xc != 1)
            return Violation{"ll-composition",
                             "external cycle " + external.to_string(g) + " is not 1-homologous",
                             {external}};
    }

    CertLLComposition cert;
    cert.source = source;
    cert.external = external;
    cert.second_reason = second_reason;
    cert.second_assumption = second_assumption;

    for (std::size_t i = 0; i < pairs.size(); ++i) {
        int ca_member = -1;
        IntersectionType how{};
        auto fail = ll_row_failure(g, classes, pairs[i], witnesses[i], external, second_reason,
                                   &ca_member, &how);
        if (fail)
            return Violation{"ll-composition",
                             "pair " + pairs[i].first.to_string(g) + " " +
                                 pairs[i].second.to_string(g) + ": " + *fail,
                             {pairs[i].first, pairs[i].second, witnesses[i]}};
        cert.rows.push_back(
            {pairs[i].first, pairs[i].second, witnesses[i], ca_member, to_string(how)});
    }

    // single known pair with an identical witness: report the chain directly
    if (source.kind == LinkSource::Kind::KnownPair && cert.rows.size() == 1 &&
        cert.rows[0].how == std::string("identical")) {
        CertThreeChain chain;
        chain.end1 = external;
        chain.middle = cert.rows[0].ca_member == 0 ? cert.rows[0].a : cert.rows[0].b;
        chain.end2 = cert.rows[0].ca_member == 0 ? cert.rows[0].b : cert.rows[0].a;
        chain.left_reason = second_reason;
        chain.left_assumption = second_assumption;
        chain.right_reason = source.reason;
        chain.right_assumption = source.assumption;
        return Certificate{chain};
    }
    return Certificate{cert};
}

std::vector<Violation> linkless_k6_check(const EdgeSigning& s) {
    const Graph& g = s.graph;
    if (g.vertex_count() != 6 || g.edge_count() != 15)
        throw structure_error("linkless_k6_check requires a K6");

    std::vector<Violation> out;
    auto tris = enumerate_triangles(g);
    for (auto [i, j] : disjoint_cycle_pairs(tris)) {
        Z2 a = cycle_class(s, tris[i]), b = cycle_class(s, tris[j]);
        if (a == 1 && b == 1)
            out.push_back({"disjoint-one-pair",
                           "both " + tris[i].to_string(g) + " and " + tris[j].to_string(g) +
                               " are 1-homologous",
                           {tris[i], tris[j]}});
        if (a == 0 && b == 0)
            out.push_back({"disjoint-zero-pair",
                           "both " + tris[i].to_string(g) + " and " + tris[j].to_string(g) +
                               " are 0-homologous",
                           {tris[i], tris[j]}});
    }
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b)
            for (int c = b + 1; c < 6; ++c)
                for (int d = c + 1; d < 6; ++d) {
                    int count = k4_one_hom_count(s, {a, b, c, d});
                    if (count == 0)
                        out.push_back({"zero-hom-k4",
                                       "K4 {" + g.label(a) + "," + g.label(b) + "," + g.label(c) +
                                           "," + g.label(d) + "} is all 0-homologous",
                                       {}});
                }
    return out;
}

}  // namespace rp3link
