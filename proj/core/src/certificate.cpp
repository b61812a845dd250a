#include "rp3link/certificate.hpp"

#include <algorithm>
#include <set>

namespace rp3link {

const char* to_string(LinkReason r) {
    switch (r) {
        case LinkReason::BothOneHomologous: return "both-one-homologous";
        case LinkReason::Assumed: return "assumed";
    }
    return "?";
}

LinkSource LinkSource::known_pair(Cycle a, Cycle b, LinkReason r, std::string assumption) {
    LinkSource s;
    s.kind = Kind::KnownPair;
    s.c1 = std::move(a);
    s.c2 = std::move(b);
    s.reason = r;
    s.assumption = std::move(assumption);
    return s;
}

LinkSource LinkSource::zero_hom_k4(std::vector<int> k6, std::vector<int> k4) {
    LinkSource s;
    s.kind = Kind::ZeroHomK4InK6;
    std::sort(k6.begin(), k6.end());
    std::sort(k4.begin(), k4.end());
    s.k6_vertices = std::move(k6);
    s.k4_vertices = std::move(k4);
    return s;
}

std::vector<std::pair<Cycle, Cycle>> LinkSource::candidate_pairs(const Graph& g) const {
    if (kind == Kind::KnownPair) return {{c1, c2}};
    if (k6_vertices.size() != 6) throw structure_error("link source needs a 6-vertex set");
    std::set<int> k4set(k4_vertices.begin(), k4_vertices.end());
    for (int v : k4_vertices)
        if (!std::count(k6_vertices.begin(), k6_vertices.end(), v))
            throw structure_error("K4 is not inside the K6");

    // all disjoint triangle pairs of the K6, in lexicographic order
    std::vector<Cycle> tris;
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = i + 1; j < 6; ++j)
            for (std::size_t k = j + 1; k < 6; ++k)
                tris.emplace_back(
                    g, std::vector<int>{k6_vertices[i], k6_vertices[j], k6_vertices[k]});
    std::sort(tris.begin(), tris.end());
    std::vector<std::pair<Cycle, Cycle>> pairs;
    for (std::size_t i = 0; i < tris.size(); ++i)
        for (std::size_t j = i + 1; j < tris.size(); ++j)
            if (tris[i].disjoint(tris[j])) pairs.emplace_back(tris[i], tris[j]);
    return pairs;
}

const char* certificate_kind(const Certificate& c) {
    struct V {
        const char* operator()(const CertDisjointOnePair&) { return "disjoint-one-pair"; }
        const char* operator()(const CertDisjointOneTriple&) { return "disjoint-one-triple"; }
        const char* operator()(const CertZeroHomK4InK6&) { return "zero-hom-k4-in-k6"; }
        const char* operator()(const CertLLComposition&) { return "ll-composition"; }
        const char* operator()(const CertThreeChain&) { return "three-chain"; }
    };
    return std::visit(V{}, c);
}

std::vector<std::string> certificate_axioms(const Certificate& c) {
    struct V {
        std::vector<std::string> operator()(const CertDisjointOnePair&) {
            return {"one-hom-pair-link"};
        }
        std::vector<std::string> operator()(const CertDisjointOneTriple&) {
            return {"one-hom-pair-link"};
        }
        std::vector<std::string> operator()(const CertZeroHomK4InK6&) {
            return {"zero-hom-k4-linked-k6"};
        }
        std::vector<std::string> operator()(const CertLLComposition& l) {
            std::vector<std::string> out{"link-composition"};
            if (l.source.kind == LinkSource::Kind::ZeroHomK4InK6)
                out.push_back("zero-hom-k4-linked-k6");
            if (l.source.kind == LinkSource::Kind::KnownPair &&
                l.source.reason == LinkReason::BothOneHomologous)
                out.push_back("one-hom-pair-link");
            if (l.second_reason == LinkReason::BothOneHomologous)
                out.push_back("one-hom-pair-link");
            std::sort(out.begin(), out.end());
            out.erase(std::unique(out.begin(), out.end()), out.end());
            return out;
        }
        std::vector<std::string> operator()(const CertThreeChain& t) {
            std::vector<std::string> out{"link-composition"};
            if (t.left_reason == LinkReason::BothOneHomologous ||
                t.right_reason == LinkReason::BothOneHomologous)
                out.push_back("one-hom-pair-link");
            std::sort(out.begin(), out.end());
            return out;
        }
    };
    return std::visit(V{}, c);
}

std::string describe(const Certificate& c, const Graph& g) {
    struct V {
        const Graph& g;
        std::string operator()(const CertDisjointOnePair& p) {
            return "disjoint 1-homologous pair " + p.c1.to_string(g) + " " + p.c2.to_string(g);
        }
        std::string operator()(const CertDisjointOneTriple& t) {
            return "disjoint 1-homologous triple " + t.c1.to_string(g) + " " +
                   t.c2.to_string(g) + " " + t.c3.to_string(g);
        }
        std::string operator()(const CertZeroHomK4InK6& z) {
            std::string out = "all-0 K4 {";
            for (std::size_t i = 0; i < z.k4_vertices.size(); ++i)
                out += (i ? "," : "") + g.label(z.k4_vertices[i]);
            out += "} inside K6 {";
            for (std::size_t i = 0; i < z.k6_vertices.size(); ++i)
                out += (i ? "," : "") + g.label(z.k6_vertices[i]);
            return out + "}";
        }
        std::string operator()(const CertLLComposition& l) {
            std::string out = "composition over ";
            out += l.source.kind == LinkSource::Kind::KnownPair
                       ? "pair " + l.source.c1.to_string(g) + " " + l.source.c2.to_string(g)
                       : std::string("a forced K6 link");
            out += ", external " + l.external.to_string(g);
            return out;
        }
        std::string operator()(const CertThreeChain& t) {
            return "chain " + t.end1.to_string(g) + " - " + t.middle.to_string(g) + " - " +
                   t.end2.to_string(g);
        }
    };
    return std::visit(V{g}, c);
}

}  // namespace rp3link
