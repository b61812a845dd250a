#include "rp3link/search.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace rp3link {

namespace {

// Composition phase shared by the pair-seeded and K4-seeded searches: try to
// complete the source with an external cycle and per-pair witnesses drawn
// from the 1-homologous cycles, in enumeration order.
std::optional<Certificate> try_compose(const Graph& g, const ClassEval& classes,
                                       const LinkSource& source,
                                       const std::vector<Cycle>& one_hom) {
    auto pairs = source.candidate_pairs(g);
    for (const Cycle& external : one_hom) {
        bool external_ok = true;
        std::vector<Cycle> witnesses;
        for (const auto& pair : pairs) {
            if (!external.disjoint(pair.first) || !external.disjoint(pair.second)) {
                external_ok = false;
                break;
            }
            bool found = false;
            for (const Cycle& w : one_hom) {
                if (!ll_row_failure(g, classes, pair, w, external,
                                    LinkReason::BothOneHomologous)) {
                    witnesses.push_back(w);
                    found = true;
                    break;
                }
            }
            if (!found) {
                external_ok = false;
                break;
            }
        }
        if (!external_ok) continue;
        auto result = ll_compose(g, classes, source, external,
                                 LinkReason::BothOneHomologous, witnesses);
        if (std::holds_alternative<Certificate>(result))
            return std::get<Certificate>(result);
    }
    return std::nullopt;
}

}  // namespace

FindResult find_triple_link_certificate(const EdgeSigning& s, const FindOptions& opt) {
    FindResult r;
    const Graph& g = s.graph;

    // coboundary shortcut: all fundamental cycles 0 means no 1-homologous cycle
    {
        bool any = false;
        for (const Cycle& c : cycle_basis(g).fundamental)
            if (cycle_class(s, c)) {
                any = true;
                break;
            }
        if (!any) {
            r.silent_reason = "no 1-homologous cycles";
            return r;
        }
    }

    std::vector<Cycle> cycles = enumerate_cycles(g, opt.max_cycle_len);
    r.cycles_scanned = static_cast<int>(cycles.size());
    std::vector<Cycle> one_hom;
    for (const Cycle& c : cycles)
        if (cycle_class(s, c) == 1) one_hom.push_back(c);
    r.one_hom_cycles = static_cast<int>(one_hom.size());
    if (one_hom.empty()) {
        r.silent_reason = "no 1-homologous cycles within the length cap";
        return r;
    }

    // disjoint 1-homologous pairs feed every remaining phase
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < one_hom.size(); ++i)
        for (std::size_t j = i + 1; j < one_hom.size(); ++j)
            if (one_hom[i].disjoint(one_hom[j]))
                pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
    if (pairs.empty()) {
        r.silent_reason = "no disjoint 1-homologous pair";
        return r;
    }

    // disjoint 1-homologous triples
    for (auto [i, j] : pairs)
        for (std::size_t k = j + 1; k < one_hom.size(); ++k)
            if (one_hom[i].disjoint(one_hom[k]) && one_hom[j].disjoint(one_hom[k])) {
                r.certificate = CertDisjointOneTriple{one_hom[i], one_hom[j], one_hom[k]};
                return r;
            }

    ClassEval classes = eval_from_signing(s);

    // compositions seeded by disjoint 1-homologous pairs
    for (auto [i, j] : pairs) {
        auto source =
            LinkSource::known_pair(one_hom[i], one_hom[j], LinkReason::BothOneHomologous);
        if (auto cert = try_compose(g, classes, source, one_hom)) {
            r.certificate = cert;
            return r;
        }
    }

    // compositions seeded by all-0 K4s inside K6s
    for (const auto& z : zero_hom_k4_links(s)) {
        auto source = LinkSource::zero_hom_k4(z.k6_vertices, z.k4_vertices);
        if (auto cert = try_compose(g, classes, source, one_hom)) {
            r.certificate = cert;
            return r;
        }
    }

    r.silent_reason = "no rule produced a certificate";
    return r;
}

namespace {

LinklessK6Report classify_passing(const Graph& k6, std::vector<EdgeSigning> passing,
                                  std::uint64_t visited) {
    LinklessK6Report rep;
    rep.classes_visited = visited;
    rep.passing_classes = passing.size();

    auto tris = enumerate_triangles(k6);
    auto pairs = disjoint_cycle_pairs(tris);
    for (const auto& s : passing) {
        int ones = 0;
        for (const auto& t : tris) ones += cycle_class(s, t);
        if (ones != 10) rep.every_pass_has_ten_one_hom = false;
        for (auto [i, j] : pairs)
            if (cycle_class(s, tris[i]) + cycle_class(s, tris[j]) != 1)
                rep.every_pass_one_per_pair = false;
    }

    std::set<std::vector<std::uint8_t>> orbits;
    for (const auto& s : passing)
        orbits.insert(canonical_signing(s, CanonicalMode::SwitchingAndAutomorphism).signs);
    rep.orbit_count = static_cast<int>(orbits.size());
    for (const auto& signs : orbits) rep.orbit_reps.emplace_back(k6, signs);

    auto fig = canonical_signing(linkless_k6_signing(), CanonicalMode::SwitchingAndAutomorphism);
    rep.contains_linkless_signing = orbits.count(fig.signs) != 0;
    return rep;
}

}  // namespace

LinklessK6Report search_linkless_k6() {
    Graph k6 = Graph::complete(6);
    ClassEnumeration en(k6);
    std::vector<EdgeSigning> passing;
    for (std::uint64_t i = 0; i < en.count(); ++i) {
        EdgeSigning s = en.representative(i);
        if (linkless_k6_check(s).empty()) passing.push_back(s);
    }
    return classify_passing(k6, std::move(passing), en.count());
}

LinklessK6Report search_linkless_k6_exhaustive() {
    Graph k6 = Graph::complete(6);
    std::vector<EdgeSigning> passing;
    std::set<std::vector<std::uint8_t>> seen_classes;
    for (std::uint32_t bits = 0; bits < (1u << 15); ++bits) {
        std::vector<std::uint8_t> signs(15, 0);
        for (int e = 0; e < 15; ++e) signs[e] = (bits >> e) & 1;
        EdgeSigning s(k6, std::move(signs));
        if (!linkless_k6_check(s).empty()) continue;
        EdgeSigning canon = canonical_signing(s, CanonicalMode::Switching);
        if (seen_classes.insert(canon.signs).second) passing.push_back(canon);
    }
    return classify_passing(k6, std::move(passing), 1u << 15);
}

bool axiom_dependent_silence(const Construction& c, const EdgeSigning& s) {
    for (const auto& part : c.parts)
        if (spatially_triple_linked_kind(part.kind) && component_all_zero(s, part.vertices))
            return true;
    return false;
}

CertFreeResult search_certificate_free(const Construction& c, const FindOptions& opt,
                                       std::uint64_t max_classes) {
    CertFreeResult out;
    ClassEnumeration en(c.graph);
    std::uint64_t limit = en.count();
    if (max_classes && max_classes < limit) limit = max_classes;

    FindOptions quick = opt;
    quick.max_cycle_len = 3;
    for (std::uint64_t i = 0; i < limit; ++i) {
        EdgeSigning s = en.representative(i);
        out.classes_visited++;
        // cheap triangle-level pass first; certificates only grow with the cap
        FindResult fast = find_triple_link_certificate(s, quick);
        if (fast.certificate) {
            out.certified++;
            continue;
        }
        FindResult full =
            opt.max_cycle_len > 3 ? find_triple_link_certificate(s, opt) : std::move(fast);
        if (full.certificate) {
            out.certified++;
            continue;
        }
        if (axiom_dependent_silence(c, s)) {
            out.axiom_dependent++;
            continue;
        }
        out.found = s;
        out.found_index = i;
        return out;
    }
    return out;
}

}  // namespace rp3link
