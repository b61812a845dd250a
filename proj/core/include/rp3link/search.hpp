#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rp3link/certificate.hpp"
#include "rp3link/construction.hpp"
#include "rp3link/rules.hpp"
#include "rp3link/signing.hpp"

namespace rp3link {

struct FindOptions {
    int max_cycle_len = 7;  // length cap for candidate cycles in searches
};

/// Outcome of the triple-link rule search. not-found means the rule set is
/// silent, never that the class is triple-linkless.
struct FindResult {
    std::optional<Certificate> certificate;
    std::string silent_reason;  // set when no certificate was found
    int cycles_scanned = 0;
    int one_hom_cycles = 0;
};

/// Deterministic first-hit search: disjoint 1-homologous triples first, then
/// compositions seeded by disjoint 1-homologous pairs, then compositions
/// seeded by all-0 K4s inside K6s. Witnesses and externals are scanned over
/// all 1-homologous cycles up to max_cycle_len in enumeration order.
FindResult find_triple_link_certificate(const EdgeSigning& s, const FindOptions& opt = {});

/// Classification of the K6 switching classes by the linklessness conditions.
struct LinklessK6Report {
    std::uint64_t classes_visited = 0;
    std::uint64_t passing_classes = 0;
    int orbit_count = 0;                      // under Aut(K6) x switching
    std::vector<EdgeSigning> orbit_reps;      // canonical forms
    bool contains_linkless_signing = false;   // linkless_k6_signing in a passing orbit
    bool every_pass_has_ten_one_hom = true;
    bool every_pass_one_per_pair = true;
};

LinklessK6Report search_linkless_k6();

/// Same classification computed from all 2^15 raw signings; used as an oracle
/// against the class-mode search.
LinklessK6Report search_linkless_k6_exhaustive();

/// Scan of switching classes for one on which the triple-link rule set is
/// silent. Classes where every cycle of a part is 0-homologous and the part's
/// construction is known intrinsically triple-linked in 3-space are counted
/// as axiom-dependent, not silent.
struct CertFreeResult {
    std::optional<EdgeSigning> found;
    std::uint64_t found_index = 0;
    std::uint64_t classes_visited = 0;
    std::uint64_t axiom_dependent = 0;
    std::uint64_t certified = 0;
};

CertFreeResult search_certificate_free(const Construction& c, const FindOptions& opt = {},
                                       std::uint64_t max_classes = 0);

/// True when the silent outcome is covered by a spatial axiom: some part is
/// all-0-homologous and its construction kind is known intrinsically
/// triple-linked in 3-space.
bool axiom_dependent_silence(const Construction& c, const EdgeSigning& s);

}  // namespace rp3link
