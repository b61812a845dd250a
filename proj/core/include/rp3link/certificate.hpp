#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rp3link/cycle.hpp"
#include "rp3link/graph.hpp"

namespace rp3link {

/// Why a pair of cycles is known to form a non-split link.
enum class LinkReason {
    BothOneHomologous,  // two disjoint 1-homologous cycles always link
    Assumed,            // granted by an axiom or an earlier proof step
};

const char* to_string(LinkReason r);

/// Two vertex-disjoint 1-homologous cycles: a non-split link.
struct CertDisjointOnePair {
    Cycle c1, c2;
};

/// Three pairwise vertex-disjoint 1-homologous cycles: a non-split
/// three-component link.
struct CertDisjointOneTriple {
    Cycle c1, c2, c3;
};

/// An induced K6 containing an induced K4 all of whose cycles are
/// 0-homologous. Such a K6 contains a link among its ten disjoint cycle
/// pairs; the certificate deliberately does not name which pair.
struct CertZeroHomK4InK6 {
    std::vector<int> k6_vertices;  // sorted ids
    std::vector<int> k4_vertices;  // sorted ids
};

/// Where the first linked pair of a composition comes from: a concrete known
/// pair, or a K6 forced to contain a link (every disjoint pair is then a
/// candidate and the composition must succeed for all of them).
struct LinkSource {
    enum class Kind { KnownPair, ZeroHomK4InK6 };
    Kind kind = Kind::KnownPair;

    // KnownPair
    Cycle c1, c2;
    LinkReason reason = LinkReason::BothOneHomologous;
    std::string assumption;  // label of the granting step, when reason == Assumed

    // ZeroHomK4InK6
    std::vector<int> k6_vertices;
    std::vector<int> k4_vertices;

    static LinkSource known_pair(Cycle a, Cycle b, LinkReason r, std::string assumption = "");
    static LinkSource zero_hom_k4(std::vector<int> k6, std::vector<int> k4);

    /// The candidate linked pairs implied by the source: the single known
    /// pair, or all ten disjoint triangle pairs of the K6.
    std::vector<std::pair<Cycle, Cycle>> candidate_pairs(const Graph& g) const;
};

/// A composition: for every candidate linked pair (Ca, Cb) there is a witness
/// cycle W meeting Ca in a vertex, a simple path, or all of Ca, while W, the
/// external cycle X, and Cb are pairwise vertex-disjoint (and X avoids Ca).
/// With lk(Ca,Cb) != 0 and lk(W,X) != 0 this yields a three-component link.
struct CertLLComposition {
    LinkSource source;
    Cycle external;
    LinkReason second_reason = LinkReason::BothOneHomologous;
    std::string second_assumption;
    struct Row {
        Cycle a, b;        // candidate pair as enumerated
        Cycle witness;     // W for this pair
        int ca_member;     // 0 if W meets a, 1 if W meets b
        std::string how;   // intersection type of W with the met member
    };
    std::vector<Row> rows;
};

/// Degenerate composition where the witness is one of the linked cycles
/// itself: middle is linked to both ends and the ends are disjoint.
struct CertThreeChain {
    Cycle end1, middle, end2;
    LinkReason left_reason = LinkReason::BothOneHomologous;   // end1 - middle
    LinkReason right_reason = LinkReason::BothOneHomologous;  // middle - end2
    std::string left_assumption, right_assumption;
};

using Certificate = std::variant<CertDisjointOnePair, CertDisjointOneTriple, CertZeroHomK4InK6,
                                 CertLLComposition, CertThreeChain>;

/// A failed rule application, reproducible from (graph, signing) plus the
/// recorded cycles.
struct Violation {
    std::string rule;
    std::string note;
    std::vector<Cycle> cycles;
};

const char* certificate_kind(const Certificate& c);

/// Topological facts a certificate kind rests on, as stable identifiers used
/// in replay reports.
std::vector<std::string> certificate_axioms(const Certificate& c);

std::string describe(const Certificate& c, const Graph& g);

}  // namespace rp3link
